# Copyright 2026 The pylsa authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import collections
from weakref import WeakValueDictionary

from pylsa.constants import modes
from pylsa.minilang.nodes import FUNCTION_KINDS
from pylsa.dsl.program import TOP, BOTTOM, NEWALLOC, NOALLOC

# Dictionary: keys: instruction names, values: Instruction classes (from below)
by_name = WeakValueDictionary()

MOVE = 'move'
WRITE = 'write'
VERDICT = 'verdict'


class InstructionMeta(type):
    """
    Meta class for instructions. Registers every concrete instruction under its name and
    numbers them in declaration order, which is the total order used for tie-breaking.
    """
    _declared = 0

    def __new__(mcs, name, bases, attrs):
        instruction = super(InstructionMeta, mcs).__new__(mcs, name, bases, attrs)
        if attrs.get('category') is None:
            # Abstract base class
            return instruction
        instruction.order = InstructionMeta._declared
        InstructionMeta._declared += 1
        by_name[name] = instruction
        return instruction

    def __repr__(cls):
        return cls.__name__

    def __lt__(cls, other):
        return cls.order < other.order


class Instruction(object, metaclass=InstructionMeta):
    """Base class of all analysis instructions; instructions are used as classes, never instantiated"""
    category = None
    weight = 1

    @classmethod
    def inspects(cls, state):
        """Nodes other than the current position whose contents decide the outcome"""
        return ()


class Move(Instruction):
    """Moves change the current position (and for GoToCaller the call trace)"""

    @classmethod
    def move(cls, state):
        raise NotImplementedError()


class Write(Instruction):
    """Writes observe the current position and append one token to the context"""

    @classmethod
    def write(cls, state):
        raise NotImplementedError()


def _goto(state, node_id):
    return state._replace(pos=BOTTOM if node_id is None else node_id)


def _scan(ast, node_id, attribute):
    """Same-scope nodes before node_id, nearest first, up to and including the first one whose
    kind or value equals the one of node_id"""
    wanted = getattr(ast[node_id], attribute)
    if wanted is None:
        return
    scope = ast.scope(node_id)
    for candidate in range(node_id - 1, -1, -1):
        if ast.scope(candidate) != scope:
            continue
        yield candidate
        if getattr(ast[candidate], attribute) == wanted:
            return


def previous_match(ast, node_id, attribute):
    """Most recent node before node_id in the same function (or top level) whose kind or
    value equals the one of node_id; None if there is none"""
    for candidate in _scan(ast, node_id, attribute):
        if getattr(ast[candidate], attribute) == getattr(ast[node_id], attribute):
            return candidate
    return None


def compared_nodes(ast, node_id, attribute):
    """Every node :func:`previous_match` looks at, the match included"""
    return tuple(_scan(ast, node_id, attribute))


# Moves, in declaration order

class Up(Move):
    category = MOVE

    @classmethod
    def move(cls, state):
        return _goto(state, state.ast.parent(state.pos))


class Left(Move):
    category = MOVE

    @classmethod
    def move(cls, state):
        return _goto(state, state.ast.sibling(state.pos, -1))


class Right(Move):
    category = MOVE

    @classmethod
    def move(cls, state):
        return _goto(state, state.ast.sibling(state.pos, 1))


class DownFirst(Move):
    category = MOVE

    @classmethod
    def move(cls, state):
        children = state.ast.children(state.pos)
        return _goto(state, children[0] if children else None)


class DownLast(Move):
    category = MOVE

    @classmethod
    def move(cls, state):
        children = state.ast.children(state.pos)
        return _goto(state, children[-1] if children else None)


class Top(Move):
    category = MOVE

    @classmethod
    def move(cls, state):
        return state._replace(pos=TOP)


class GoToGlobal(Move):
    category = MOVE

    @classmethod
    def move(cls, state):
        return state._replace(pos=state.ast.global_node)


class GoToUndef(Move):
    category = MOVE

    @classmethod
    def move(cls, state):
        return state._replace(pos=state.ast.undefined_node)


class GoToNull(Move):
    category = MOVE

    @classmethod
    def move(cls, state):
        return state._replace(pos=state.ast.null_node)


class GoToThis(Move):
    category = MOVE

    @classmethod
    def move(cls, state):
        return state._replace(pos=state.ast.this_node)


class UpUntilFunc(Move):
    category = MOVE

    @classmethod
    def move(cls, state):
        ast = state.ast
        for ancestor in ast.ancestors(state.pos):
            parent = ast.parent(ancestor)
            if parent is None or ast.kind(parent) in FUNCTION_KINDS:
                return state._replace(pos=ancestor)
        return state


class GoToCaller(Move):
    category = MOVE

    @classmethod
    def move(cls, state):
        if not state.call_trace:
            return state._replace(pos=BOTTOM)
        return state._replace(pos=state.call_trace[-1], call_trace=state.call_trace[:-1])


class PrevNodeValue(Move):
    category = MOVE

    @classmethod
    def move(cls, state):
        return _goto(state, previous_match(state.ast, state.pos, 'value'))

    @classmethod
    def inspects(cls, state):
        return compared_nodes(state.ast, state.pos, 'value')


class PrevNodeType(Move):
    category = MOVE

    @classmethod
    def move(cls, state):
        return _goto(state, previous_match(state.ast, state.pos, 'kind'))

    @classmethod
    def inspects(cls, state):
        return compared_nodes(state.ast, state.pos, 'kind')


# Writes

class WriteValue(Write):
    category = WRITE
    weight = 2

    @classmethod
    def write(cls, state):
        value = state.ast.value(state.pos)
        return 0 if value is None else value


class WritePos(Write):
    category = WRITE
    weight = 2

    @classmethod
    def write(cls, state):
        return state.ast.position(state.pos)


class WriteType(Write):
    category = WRITE

    @classmethod
    def write(cls, state):
        return state.ast.kind(state.pos)


class HasLeft(Write):
    category = WRITE

    @classmethod
    def write(cls, state):
        return int(state.ast.sibling(state.pos, -1) is not None)


class HasRight(Write):
    category = WRITE

    @classmethod
    def write(cls, state):
        return int(state.ast.sibling(state.pos, 1) is not None)


class HasChild(Write):
    category = WRITE

    @classmethod
    def write(cls, state):
        return int(bool(state.ast.children(state.pos)))


class HasCaller(Write):
    category = WRITE

    @classmethod
    def write(cls, state):
        return int(bool(state.call_trace))


class HasPrevNodeValue(Write):
    category = WRITE

    @classmethod
    def write(cls, state):
        return int(previous_match(state.ast, state.pos, 'value') is not None)

    @classmethod
    def inspects(cls, state):
        return compared_nodes(state.ast, state.pos, 'value')


# Allocation verdicts, only valid as a whole leaf action

class NewAlloc(Instruction):
    category = VERDICT
    result = NEWALLOC


class NoAlloc(Instruction):
    category = VERDICT
    result = NOALLOC


Language = collections.namedtuple('Language', 'name, moves, writes, leaves')

POINTSTO = Language(
    'pointsto',
    (Up, Left, Right, DownFirst, DownLast, Top, GoToGlobal, GoToUndef, GoToNull, GoToThis,
     UpUntilFunc, GoToCaller),
    (WriteValue, WritePos, WriteType, HasLeft, HasRight, HasChild, HasCaller),
    ())

ALLOCATION = Language(
    'alloc',
    (Up, Left, Right, DownFirst, DownLast, Top, PrevNodeValue, PrevNodeType),
    (WriteValue, WritePos, WriteType, HasLeft, HasRight, HasChild, HasPrevNodeValue),
    ((NewAlloc,), (NoAlloc,), (Top,)))


def language_for(mode):
    return ALLOCATION if mode == modes.ALLOC else POINTSTO


def lex_key(instructions):
    return tuple(instruction.order for instruction in instructions)
