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

import json

import pytest

from pylsa.constants import modes
from pylsa.dataset import Correctness, Dataset, Label, check_correct, cost, evaluate, examples_of, \
    extract_examples, is_correct_on, outcome_counts, r
from pylsa.dsl import Leaf, Branch, TOP, BOTTOM, NEWALLOC, NOALLOC, node_result
from pylsa.dsl.instructions import Up, Left, Right, DownLast, Top, GoToCaller, GoToGlobal, WritePos, \
    WriteType
from pylsa.exceptions import DataError, InvalidDataset
from pylsa.minilang import parse, interpret, NodeKind

ASSIGN_RULE = Branch((WritePos, Up, WriteType), (1, NodeKind.Assignment), Leaf((Right,)), Leaf((Top,)))

# 0 Program, 1 function f, 2 v, 3 block, 4 return, 5 v, 6 var dat, 7 [1], 8 1, 9 statement,
# 10 call, 11 dat.filter, 12 dat, 13 filter, 14 argument f, 15 f, 16 argument, 17 receiver
FILTER_TEMPLATE = u'''function f(v) {
  return v;
}
var dat = [1];
dat.filter(f%s);'''

RUNNING_EXAMPLE_LINE = (u'{"source": "var b = {};\\na = b;", "node": 4, "calltrace": [], '
                        u'"label": {"self": false, "accept": [2, 5]}, "mode": "pointsto-var"}')


@pytest.fixture()
def var_example(running_example):
    return examples_of(running_example, modes.POINTSTO_VAR)[0]


def test_running_example_query(running_example):
    examples = extract_examples(running_example, interpret(running_example), modes.POINTSTO_VAR)
    assert len(examples) == 1
    example = examples[0]
    assert (example.node, example.call_trace, example.mode) == (4, (), modes.POINTSTO_VAR)
    assert example.label.accept == (2, 5)
    assert example.label.self_ok is False
    assert example.label.is_alloc is None


def test_running_example_has_no_this_queries(running_example):
    assert examples_of(running_example, modes.POINTSTO_THIS) == []


def test_empty_program_has_no_queries():
    ast = parse(u'')
    for mode in modes.ALL:
        assert examples_of(ast, mode) == []


def test_unknown_mode(running_example):
    with pytest.raises(DataError):
        examples_of(running_example, 'pointsto-everything')


def test_this_query_without_receiver():
    ast = parse(FILTER_TEMPLATE % u'')
    examples = examples_of(ast, modes.POINTSTO_THIS)
    assert len(examples) == 1
    example = examples[0]
    assert (example.node, example.call_trace) == (1, (10,))
    assert example.label.accept == (ast.global_node, ast.this_node)
    assert not example.label.self_ok


def test_this_query_with_boxed_receiver():
    ast = parse(FILTER_TEMPLATE % u', 42')
    example = examples_of(ast, modes.POINTSTO_THIS)[0]
    assert example.label.self_ok
    assert example.label.accept == ()
    assert check_correct(node_result(1), example) is Correctness.PRECISE
    assert check_correct(node_result(ast.global_node), example) is Correctness.UNSOUND


def test_this_query_with_object_receiver():
    ast = parse(FILTER_TEMPLATE % u', dat')
    example = examples_of(ast, modes.POINTSTO_THIS)[0]
    assert example.label.accept == (7, 12, 16, 17)
    assert evaluate(Leaf((GoToCaller, DownLast)), example) == (Correctness.PRECISE, (1, 10, 16))
    assert evaluate(Leaf((GoToGlobal,)), example)[0] is Correctness.UNSOUND


def test_var_queries_in_functions():
    # 0 Program, 1 function g, 2 block, 3 x = 1, 4 x, 5 1, 6 statement, 7 g(), 8 g
    ast = parse(u'function g() {\n  x = 1;\n}\ng();')
    example = examples_of(ast, modes.POINTSTO_VAR)[0]
    assert (example.node, example.call_trace) == (4, (7,))
    assert example.label.accept == (5,)


def test_var_queries_are_assignment_targets():
    # 0 Program, 1 var b, 2 {}, 3 a = b, 4 a, 5 b, 6 c = a, 7 c, 8 a
    ast = parse(u'var b = {};\na = b;\nc = a;')
    assert [e.node for e in examples_of(ast, modes.POINTSTO_VAR)] == [4, 7]


def test_alloc_labels():
    # 0 Program, 1 var obj, 2 {}, 3 var obj2, 4 new, 5 Object, 6 argument, 7 obj
    ast = parse(u'var obj = {};\nvar obj2 = new Object(obj);')
    examples = examples_of(ast, modes.ALLOC)
    assert [(e.node, e.label.is_alloc) for e in examples] == [
        (2, True), (5, False), (7, False), (6, False), (4, False)]


def test_alloc_labels_of_fresh_literal():
    # 0 Program, 1 var x, 2 new, 3 Object, 4 argument, 5 {}
    ast = parse(u'var x = new Object({});')
    labels = dict((e.node, e.label.is_alloc) for e in examples_of(ast, modes.ALLOC))
    assert labels == {3: False, 5: True, 4: False, 2: False}


def test_alloc_labels_are_per_activation():
    # 0 Program, 1 function id, 2 o, 3 block, 4 return, 5 o, 6 var a, 7 {}, 8 var b, 9 id(a), 10 id,
    # 11 argument, 12 a
    ast = parse(u'function id(o) {\n  return o;\n}\nvar a = {};\nvar b = id(a);')
    labels = dict((e.node, e.label.is_alloc) for e in examples_of(ast, modes.ALLOC))
    assert labels[7] is True
    assert labels[12] is False
    # the argument object is new to the callee activation at its parameter
    assert labels[2] is True
    assert labels[5] is False
    assert labels[9] is False


def test_alloc_labels_of_preexisting_objects_in_functions():
    ast = parse(u'function f() {\n  var x = null;\n  var y = undefined;\n  var z = {};\n  return global;\n}\nf();')
    body = ast.subtree(1)
    labels = dict((ast.describe(e.node), e.label.is_alloc)
                  for e in examples_of(ast, modes.ALLOC) if e.node in body)
    assert labels == {
        u'LiteralNull:null': False,
        u'Identifier:undefined': False,
        u'ObjectExpression': True,
        u'Identifier:global': False,
    }


def test_check_correct_pointsto(var_example):
    assert check_correct(TOP, var_example) is Correctness.SOUND_APPROX
    assert check_correct(node_result(2), var_example) is Correctness.PRECISE
    assert check_correct(node_result(5), var_example) is Correctness.PRECISE
    assert check_correct(node_result(1), var_example) is Correctness.UNSOUND
    assert check_correct(node_result(4), var_example) is Correctness.UNSOUND
    assert check_correct(BOTTOM, var_example) is Correctness.UNSOUND
    assert check_correct(NEWALLOC, var_example) is Correctness.UNSOUND


def test_check_correct_alloc():
    ast = parse(u'var obj = {};')
    example = examples_of(ast, modes.ALLOC)[0]
    assert example.label.is_alloc
    assert check_correct(NEWALLOC, example) is Correctness.PRECISE
    assert check_correct(NOALLOC, example) is Correctness.UNSOUND
    assert check_correct(TOP, example) is Correctness.SOUND_APPROX
    assert check_correct(node_result(2), example) is Correctness.UNSOUND


def test_cost(var_example):
    dataset = Dataset([var_example])
    assert r(var_example, Leaf((Right,))) == 0
    assert r(var_example, Leaf((Top,))) == 1
    assert r(var_example, Leaf((Left,))) == 1
    assert cost(dataset, ASSIGN_RULE) == 0
    assert cost(dataset, Leaf((Top,))) == 1


def test_correctness(var_example):
    dataset = Dataset([var_example])
    assert is_correct_on(Dataset(), Leaf((Left,)))
    assert is_correct_on(dataset, Leaf((Top,)))
    assert is_correct_on(dataset, ASSIGN_RULE)
    assert not is_correct_on(dataset, Leaf((Left,)))
    assert list(outcome_counts(dataset, Leaf((Top,))).items()) == [
        (Correctness.PRECISE, 0), (Correctness.SOUND_APPROX, 1), (Correctness.UNSOUND, 0)]


def test_dataset_deduplicates(var_example):
    dataset = Dataset()
    assert dataset.add(var_example)
    assert not dataset.add(var_example)
    assert dataset.extend([var_example, var_example]) == 0
    assert len(dataset) == 1
    assert var_example in dataset
    assert list(dataset) == [var_example]
    assert dataset[0] is var_example


def test_dataset_copy_is_independent(var_example):
    dataset = Dataset([var_example])
    copy = dataset.copy()
    other = examples_of(parse(u'var b = {};\nvar c = 1;\na = b;'), modes.POINTSTO_VAR)[0]
    copy.add(other)
    assert len(dataset) == 1 and len(copy) == 2
    assert copy != dataset
    assert copy.programs() == [var_example.ast, other.ast]


def test_dataset_mode(var_example):
    assert Dataset().mode is None
    assert Dataset([var_example]).mode == modes.POINTSTO_VAR
    alloc = examples_of(parse(u'var obj = {};'), modes.ALLOC)[0]
    with pytest.raises(InvalidDataset):
        Dataset([var_example, alloc]).mode


def test_dumps(var_example):
    assert Dataset([var_example]).dumps() == RUNNING_EXAMPLE_LINE + u'\n'


def test_label_json():
    assert Label.pointsto(3, [5, 2, 5]).to_json() == {'self': False, 'accept': [2, 5]}
    assert Label.pointsto(3, []).to_json() == {'self': True, 'accept': []}
    assert Label.alloc(0).to_json() == {'alloc': False}


def test_load_and_verify(tmpdir):
    asts = [parse(FILTER_TEMPLATE % receiver) for receiver in (u'', u', 42', u', dat')]
    dataset = Dataset.from_programs(asts, modes.POINTSTO_THIS)
    assert len(dataset) == 3
    path = tmpdir.join('dataset.jsonl')
    dataset.dump(str(path))
    loaded = Dataset.load(str(path))
    assert loaded == dataset
    assert all(a.label.same_truth(b.label) for a, b in zip(loaded, dataset))


def _record(**changes):
    record = json.loads(RUNNING_EXAMPLE_LINE)
    record.update(changes)
    return json.dumps(record)


@pytest.mark.parametrize("line", [
    u'not json',
    u'{"source": "a = b;"}',
    _record(mode='pointsto-everything'),
    _record(source='var b = ;'),
    _record(node=5),
    _record(calltrace=[3]),
    _record(label={'self': False, 'accept': [2]}),
    _record(label={'alloc': True}),
    RUNNING_EXAMPLE_LINE + u'\n' + RUNNING_EXAMPLE_LINE,
])
def test_loads_rejects(line):
    with pytest.raises(DataError):
        Dataset.loads(line)


def test_load_missing_file(tmpdir):
    with pytest.raises(DataError):
        Dataset.load(str(tmpdir.join('missing.jsonl')))


def test_faulting_program_uses_trace_prefix():
    # the assignment happens before the fault
    ast = parse(u'var b = {};\na = b;\nmissing();')
    examples = examples_of(ast, modes.POINTSTO_VAR)
    assert [(e.node, e.label.accept) for e in examples] == [(4, (2, 5))]
