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

from pylsa.exceptions import ProgramError

NODE = 'Node'

LatticeResult = collections.namedtuple('LatticeResult', 'kind, node')

TOP = LatticeResult('Top', None)
BOTTOM = LatticeResult('Bottom', None)
NEWALLOC = LatticeResult('NewAlloc', None)
NOALLOC = LatticeResult('NoAlloc', None)


def node_result(node_id):
    return LatticeResult(NODE, node_id)


def leq(lower, upper):
    """Lattice order: Bottom below everything, everything below Top, other elements incomparable"""
    return lower == BOTTOM or upper == TOP or lower == upper


def format_result(result):
    if result.kind == NODE:
        return u'%d' % result.node
    return result.kind.upper()


class Leaf(collections.namedtuple('Leaf', 'action')):
    __slots__ = ()
    __tracing_attrs__ = ('action',)

    def __new__(cls, action=()):
        return super(Leaf, cls).__new__(cls, tuple(action))


class Branch(collections.namedtuple('Branch', 'guard, expected, then, otherwise')):
    """if guard yields exactly the expected context then ``then`` else ``otherwise``"""
    __slots__ = ()
    __tracing_attrs__ = ('guard', 'expected', 'then', 'otherwise')

    def __new__(cls, guard, expected, then, otherwise):
        guard = tuple(guard)
        if not any(instruction.category == 'write' for instruction in guard):
            raise ProgramError('Branch guard %r contains no write instruction' % (guard,))
        return super(Branch, cls).__new__(cls, guard, tuple(expected), then, otherwise)


def iter_instructions(program):
    """All instructions of guards and leaf actions, depth first"""
    stack = [program]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            for instruction in node.action:
                yield instruction
        else:
            for instruction in node.guard:
                yield instruction
            stack.append(node.otherwise)
            stack.append(node.then)
