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

import logging
import collections

import numpy as np

from pylsa.constants import DEFAULT_LEARNING_OPTIONS
from pylsa.constants.general import COST_PRECISION
from pylsa.exceptions import EmptyVector, InvalidDataset
from pylsa.minilang.nodes import NodeKind
from pylsa.dataset import Correctness, check_correct, cost, r
from pylsa.dsl.instructions import Top, language_for, lex_key
from pylsa.dsl.machine import initial_state, mv, wr, failed, exec_guard
from pylsa.dsl.program import Leaf, Branch, node_result, iter_instructions

logger = logging.getLogger('pylsa')
debug = logger.debug

APPROXIMATION = Leaf((Top,))


class CandidateSpace(collections.namedtuple(
        'CandidateSpace', 'action_bound, guard_bound, value_top_k, lam, ig_tolerance, language')):
    """Bounds of the enumerated program space.

    ``guard_bound`` counts the final write, so a guard has at most guard_bound - 1 moves.
    """
    __slots__ = ()

    @classmethod
    def for_mode(cls, mode, **options):
        values = dict(DEFAULT_LEARNING_OPTIONS)
        values.update((key, value) for key, value in options.items() if key in values)
        return cls(values['action_bound'], values['guard_bound'], values['value_top_k'],
                   values['lambda'], values['ig_tolerance'], language_for(mode))


def entropy(w):
    """Shannon entropy in bits of the class distribution of w"""
    w = np.asarray(w)
    if w.size == 0:
        raise EmptyVector('Entropy of an empty vector is undefined')
    _, counts = np.unique(w, return_counts=True)
    probabilities = counts / float(w.size)
    return float(0.0 - np.sum(probabilities * np.log2(probabilities)))


def split_gain(w, mask):
    """Information gain of splitting w by the boolean mask; an empty side contributes 0"""
    w = np.asarray(w)
    mask = np.asarray(mask, dtype=bool)
    gain = entropy(w)
    for side in (w[mask], w[~mask]):
        if side.size:
            gain -= side.size / float(w.size) * entropy(side)
    return gain


def info_gain(dataset, action, condition):
    """Gain of splitting dataset by condition = (guard, expected context) on the r vector of action"""
    examples = list(dataset)
    w = _r_vector(Leaf(action), examples)
    guard, expected = condition
    mask = [_run_guard(guard, example) == tuple(expected) for example in examples]
    return split_gain(w, mask)


def omega(program):
    """Program size; WritePos and WriteValue count double"""
    return sum(instruction.weight for instruction in iter_instructions(program))


def cost_reg(dataset, program, lam):
    return cost(dataset, program) + lam * omega(program)


def _r_vector(program, examples):
    return np.array([r(example, program) for example in examples], dtype=int)


def _run_guard(guard, example):
    return exec_guard(guard, initial_state(example.ast, example.node, example.call_trace))


class _Frontier(object):
    """Per-example execution states of one instruction prefix"""
    __slots__ = ('prefix', 'states')

    def __init__(self, prefix, states):
        self.prefix = prefix
        self.states = states

    @classmethod
    def start(cls, examples):
        return cls((), tuple(initial_state(e.ast, e.node, e.call_trace) for e in examples))

    def extend(self, move):
        return _Frontier(self.prefix + (move,),
                         tuple(s if failed(s) else mv(move, s) for s in self.states))

    def signature(self):
        return tuple((s.pos, s.call_trace) for s in self.states)

    def all_failed(self):
        return all(failed(s) for s in self.states)


def _enumerate_prefixes(examples, moves, bound):
    """Breadth first, lexicographic within each length; prefixes reaching an already seen
    state vector or failing on every example are not extended"""
    layer = [_Frontier.start(examples)]
    seen = set([layer[0].signature()])
    for length in range(bound + 1):
        next_layer = []
        for frontier in layer:
            yield frontier
            if length == bound or frontier.all_failed():
                continue
            for move in moves:
                extended = frontier.extend(move)
                signature = extended.signature()
                if signature in seen:
                    continue
                seen.add(signature)
                next_layer.append(extended)
        layer = next_layer


def _action_cost(states, examples):
    total = 0
    for state, example in zip(states, examples):
        result = state.pos if failed(state) else node_result(state.pos)
        if check_correct(result, example) is not Correctness.PRECISE:
            total += 1
    return total


def gen_action(dataset, space):
    """Best leaf action for the examples under regularized cost.

    Ties are broken by smaller size, then by the instruction order.
    """
    examples = list(dataset)
    language = space.language
    candidates = []
    if language.leaves:
        for action in language.leaves:
            leaf = Leaf(action)
            candidates.append((cost(examples, leaf), leaf))
    else:
        moves = tuple(move for move in language.moves if move is not Top)
        for frontier in _enumerate_prefixes(examples, moves, space.action_bound):
            candidates.append((_action_cost(frontier.states, examples), Leaf(frontier.prefix)))
        candidates.append((len(examples), APPROXIMATION))

    def rank(candidate):
        action_cost, leaf = candidate
        size = omega(leaf)
        return round(action_cost + space.lam * size, COST_PRECISION), size, lex_key(leaf.action)

    best_cost, best = min(candidates, key=rank)
    debug('Best action %r of %d candidates has cost %d on %d examples', best.action, len(candidates),
          best_cost, len(examples))
    return best.action


def _token_key(token):
    if isinstance(token, NodeKind):
        return 0, token.value
    if isinstance(token, int):
        return 1, token
    return 2, token


def _context_key(context):
    return tuple(_token_key(token) for token in context)


def gen_branch(action, dataset, space):
    """Guard and expected context with maximal information gain on the r vector of action.

    :returns: (guard, expected) or None when no candidate gains more than the tolerance
    """
    examples = list(dataset)
    w = _r_vector(Leaf(action), examples)
    if entropy(w) <= space.ig_tolerance:
        return None

    language = space.language
    moves = tuple(move for move in language.moves if move is not Top)
    best_key, best = None, None
    for frontier in _enumerate_prefixes(examples, moves, space.guard_bound - 1):
        if frontier.all_failed():
            continue
        for write in language.writes:
            guard = frontier.prefix + (write,)
            contexts = [() if failed(s) else (wr(write, s),) for s in frontier.states]
            counter = collections.Counter(contexts)
            if len(counter) < 2:
                continue
            size = sum(instruction.weight for instruction in guard)
            for expected, _ in counter.most_common(space.value_top_k):
                gain = split_gain(w, [context == expected for context in contexts])
                key = (-gain, size, lex_key(guard), _context_key(expected))
                if best_key is None or key < best_key:
                    best_key, best = key, (guard, expected)

    if best is None or -best_key[0] <= space.ig_tolerance:
        return None
    debug('Best guard %r = %r with information gain %.6f', best[0], best[1], -best_key[0])
    return best


def synthesize(dataset, space):
    """Learn a decision tree program that is correct on every example of dataset.

    Leaves are the best actions of their example subsets; where no guard separates
    imprecise examples any further the subtree falls back to Top.

    :raises: pylsa.exceptions.InvalidDataset on an empty or mixed mode dataset
    """
    examples = list(dataset)
    if not examples:
        raise InvalidDataset('Cannot learn from an empty dataset')
    found = set(example.mode for example in examples)
    if len(found) > 1:
        raise InvalidDataset('Dataset mixes analysis modes %s' % ', '.join(sorted(found)))
    return _learn(examples, space)


def _learn(examples, space):
    action = gen_action(examples, space)
    leaf = Leaf(action)
    if cost(examples, leaf) == 0:
        return leaf
    condition = gen_branch(action, examples, space)
    if condition is None:
        debug('No informative guard for %d examples, approximating with Top', len(examples))
        return APPROXIMATION
    guard, expected = condition
    selected, rest = [], []
    for example in examples:
        (selected if _run_guard(guard, example) == expected else rest).append(example)
    return Branch(guard, expected, _learn(selected, space), _learn(rest, space))
