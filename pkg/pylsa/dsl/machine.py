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

from pylsa.dsl.program import Leaf, node_result
from pylsa.dsl.instructions import WRITE, VERDICT

ExecState = collections.namedtuple('ExecState', 'ast, pos, ctx, call_trace, trace')


def initial_state(ast, node_id, call_trace=(), trace=None):
    return ExecState(ast, node_id, (), tuple(call_trace), trace)


def failed(state):
    return not isinstance(state.pos, int)


def mv(move, state):
    return move.move(state)


def wr(write, state):
    return write.write(state)


def run_sequence(instructions, state, reads=None):
    """Execute instructions left to right.

    Writes append to the context, moves change the position. Once a move fails
    (position Top or Bottom) the remaining instructions are dropped.
    Visited positions, and the nodes an instruction compares against, are appended to
    ``reads`` when given.
    """
    for instruction in instructions:
        category = instruction.category
        if reads is not None and category != VERDICT:
            reads.extend(instruction.inspects(state))
        if category == WRITE:
            state = state._replace(ctx=state.ctx + (wr(instruction, state),))
            continue
        if category == VERDICT:
            return state._replace(pos=instruction.result)
        state = mv(instruction, state)
        if failed(state):
            return state
        if reads is not None:
            reads.append(state.pos)
    return state


def exec_guard(guard, state, reads=None):
    """Run a guard from state with an empty context and return the collected context"""
    return run_sequence(guard, state._replace(ctx=()), reads).ctx


def exec_program(program, ast, node_id, call_trace=(), trace=None):
    """Run an analysis program at node_id.

    :returns: tuple (LatticeResult, read_set) where read_set lists the visited and compared
              node ids in order of their first visit, starting with node_id
    """
    start = initial_state(ast, node_id, call_trace, trace)
    reads = [node_id]
    while not isinstance(program, Leaf):
        if exec_guard(program.guard, start, reads) == program.expected:
            program = program.then
        else:
            program = program.otherwise
    final = run_sequence(program.action, start, reads)
    if failed(final):
        result = final.pos
    else:
        result = node_result(final.pos)
    return result, tuple(collections.OrderedDict.fromkeys(reads))


def run(program, ast, node_id, call_trace=(), trace=None):
    return exec_program(program, ast, node_id, call_trace, trace)[0]

