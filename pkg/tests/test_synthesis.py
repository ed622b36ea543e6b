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

import math
import random
import itertools
import collections

import pytest

from pylsa.constants import modes
from pylsa.dataset import Dataset, cost, examples_of, is_correct_on
from pylsa.dsl import Leaf, Branch, POINTSTO, ALLOCATION, render_program, exec_guard, initial_state
from pylsa.dsl.instructions import Up, Right, Top, GoToGlobal, GoToCaller, DownLast, Left, WritePos, \
    WriteType, NewAlloc, NoAlloc
from pylsa.exceptions import EmptyVector, InvalidDataset
from pylsa.minilang import parse, NodeKind
from pylsa.synthesis import APPROXIMATION, CandidateSpace, entropy, split_gain, info_gain, omega, cost_reg, \
    gen_action, gen_branch, synthesize

ASSIGN_RULE = Branch((WritePos, Up, WriteType), (1, NodeKind.Assignment), Leaf((Right,)), Leaf((Top,)))

FILTER_TEMPLATE = u'''function f(v) {
  return v;
}
var dat = [1];
dat.filter(f%s);'''


@pytest.fixture()
def var_dataset(running_example):
    return Dataset(examples_of(running_example, modes.POINTSTO_VAR))


@pytest.fixture()
def this_dataset():
    asts = [parse(FILTER_TEMPLATE % receiver) for receiver in (u'', u', 42')]
    return Dataset.from_programs(asts, modes.POINTSTO_THIS)


@pytest.fixture()
def pointsto_space():
    return CandidateSpace.for_mode(modes.POINTSTO_VAR)


@pytest.mark.parametrize("w,expected", [
    ([0, 0, 1, 1], 1.0),
    ([0, 0, 0], 0.0),
    ([1], 0.0),
    ([0, 1, 1, 1], 0.8112781244591328),
    ([0, 1, 2, 3], 2.0),
])
def test_entropy(w, expected):
    assert entropy(w) == pytest.approx(expected, abs=1e-12)


def test_entropy_of_empty_vector():
    with pytest.raises(EmptyVector):
        entropy([])


def _naive_entropy(w):
    counts = collections.Counter(w)
    return -sum(c / len(w) * math.log2(c / len(w)) for c in counts.values())


def test_entropy_matches_counting():
    rng = random.Random(7)
    for _ in range(200):
        w = [rng.randint(0, 3) for _ in range(rng.randint(1, 50))]
        assert entropy(w) == pytest.approx(_naive_entropy(w), abs=1e-9)


@pytest.mark.parametrize("w,mask,expected", [
    ([0, 0, 1, 1], [True, True, False, False], 1.0),
    ([0, 0, 1, 1], [True, True, True, True], 0.0),
    ([0, 0, 1, 1], [True, False, True, False], 0.0),
    ([0, 1, 1, 1], [True, False, False, False], 0.8112781244591328),
])
def test_split_gain(w, mask, expected):
    assert split_gain(w, mask) == pytest.approx(expected, abs=1e-12)


def test_info_gain(this_dataset):
    separating = ((GoToCaller, DownLast, Left, WriteType), (NodeKind.Argument,))
    useless = ((WriteType,), (NodeKind.FunctionDeclaration,))
    assert info_gain(this_dataset, (), separating) == pytest.approx(1.0)
    assert info_gain(this_dataset, (), useless) == pytest.approx(0.0)


def test_omega():
    assert omega(Leaf(())) == 0
    assert omega(Leaf((Top,))) == 1
    assert omega(Leaf((Up, Right))) == 2
    assert omega(ASSIGN_RULE) == 6


def test_cost_reg(var_dataset):
    assert cost_reg(var_dataset, ASSIGN_RULE, 0.01) == pytest.approx(0.06)
    assert cost_reg(var_dataset, Leaf((Top,)), 0.01) == pytest.approx(1.01)
    assert cost_reg(var_dataset, Leaf((Top,)), 0.0) == 1


def test_candidate_space_for_mode():
    space = CandidateSpace.for_mode(modes.ALLOC, action_bound=3, budget=7)
    assert space.action_bound == 3
    assert space.guard_bound == 6
    assert space.lam == 0.01
    assert space.language is ALLOCATION
    assert CandidateSpace.for_mode(modes.POINTSTO_THIS, **{'lambda': 0.5}).lam == 0.5
    assert CandidateSpace.for_mode(modes.POINTSTO_THIS).language is POINTSTO


def test_gen_action_running_example(var_dataset, pointsto_space):
    assert gen_action(var_dataset, pointsto_space) == (Right,)


def test_gen_action_prefers_empty_action_on_ties(this_dataset, pointsto_space):
    assert gen_action(this_dataset, pointsto_space) == ()


def test_gen_action_is_optimal(this_dataset, pointsto_space):
    space = pointsto_space._replace(action_bound=2)
    moves = [move for move in POINTSTO.moves if move is not Top]
    candidates = [APPROXIMATION] + [Leaf(sequence) for length in range(3)
                                    for sequence in itertools.product(moves, repeat=length)]
    best = min(cost_reg(this_dataset, leaf, space.lam) for leaf in candidates)
    assert cost_reg(this_dataset, Leaf(gen_action(this_dataset, space)), space.lam) == pytest.approx(best)


def test_gen_branch_without_impurity(var_dataset, pointsto_space):
    assert gen_branch((Right,), var_dataset, pointsto_space) is None


def test_gen_branch_separates_receivers(this_dataset, pointsto_space):
    guard, expected = gen_branch((), this_dataset, pointsto_space)
    assert guard[-1].category == 'write'
    assert info_gain(this_dataset, (), (guard, expected)) == pytest.approx(1.0)


def test_gen_branch_is_greedy_optimal(this_dataset, pointsto_space):
    space = pointsto_space._replace(guard_bound=3)
    moves = [move for move in POINTSTO.moves if move is not Top]
    best = 0.0
    for length in range(3):
        for prefix in itertools.product(moves, repeat=length):
            for write in POINTSTO.writes:
                guard = prefix + (write,)
                for example in this_dataset:
                    context = exec_guard(guard, initial_state(example.ast, example.node, example.call_trace))
                    best = max(best, info_gain(this_dataset, (), (guard, context)))
    condition = gen_branch((), this_dataset, space)
    if best == 0.0:
        assert condition is None
    else:
        assert info_gain(this_dataset, (), condition) == pytest.approx(best)


def test_synthesize_running_example(var_dataset, pointsto_space):
    assert synthesize(var_dataset, pointsto_space) == Leaf((Right,))


def test_synthesize_receivers(this_dataset, pointsto_space):
    program = synthesize(this_dataset, pointsto_space)
    assert isinstance(program, Branch)
    assert set([program.then.action, program.otherwise.action]) == set([(), (GoToGlobal,)])
    assert cost(this_dataset, program) == 0


def test_synthesize_falls_back_to_top(this_dataset, pointsto_space):
    program = synthesize(this_dataset, pointsto_space._replace(ig_tolerance=2.0))
    assert program == APPROXIMATION
    assert is_correct_on(this_dataset, program)


def test_synthesize_allocation_sites():
    space = CandidateSpace.for_mode(modes.ALLOC)
    fresh = Dataset(examples_of(parse(u'var a = {};\nvar b = {};'), modes.ALLOC))
    assert synthesize(fresh, space) == Leaf((NewAlloc,))

    mixed = Dataset(examples_of(parse(u'var a = {};\nvar b = a;'), modes.ALLOC))
    program = synthesize(mixed, space)
    assert program == Branch((WriteType,), (NodeKind.Identifier,), Leaf((NoAlloc,)), Leaf((NewAlloc,)))
    assert render_program(program, ALLOCATION) == u'IF [WriteType] = [Identifier] THEN NOALLOC ELSE NEWALLOC'


def test_synthesize_rejects_bad_datasets(var_dataset, pointsto_space):
    with pytest.raises(InvalidDataset):
        synthesize(Dataset(), pointsto_space)
    alloc = examples_of(parse(u'var obj = {};'), modes.ALLOC)
    with pytest.raises(InvalidDataset):
        synthesize(Dataset(list(var_dataset) + alloc), pointsto_space)


def test_synthesize_is_deterministic(this_dataset, pointsto_space):
    assert synthesize(this_dataset, pointsto_space) == synthesize(this_dataset.copy(), pointsto_space)
