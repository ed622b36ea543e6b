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

import pytest

from pylsa.constants import event_kinds
from pylsa.exceptions import RuntimeError
from pylsa.minilang import parse, interpret, collect_trace, TraceEvent
from pylsa.minilang.interpreter import GLOBAL_FUNCTIONS, ARRAY_METHODS, Interpreter, format_number

BOOT_EVENTS = 7 + len(GLOBAL_FUNCTIONS) + len(ARRAY_METHODS)

FILTER_TEMPLATE = u'''function f(v) {
  return v;
}
var dat = [1, 2];
dat.filter(f%s);'''


def reads_of(trace, obj_id):
    return [event.at for event in trace.reads() if event.obj_id == obj_id]


def test_boot_sequence(running_example):
    ast = running_example
    trace = interpret(ast)
    assert list(trace)[:7] == [
        TraceEvent(event_kinds.ALLOC, 0, ast.global_node, ()),
        TraceEvent(event_kinds.OBJECT_READ, 0, ast.global_node, ()),
        TraceEvent(event_kinds.ALLOC, 1, ast.undefined_node, ()),
        TraceEvent(event_kinds.OBJECT_READ, 1, ast.undefined_node, ()),
        TraceEvent(event_kinds.ALLOC, 2, ast.null_node, ()),
        TraceEvent(event_kinds.OBJECT_READ, 2, ast.null_node, ()),
        TraceEvent(event_kinds.OBJECT_READ, 0, ast.this_node, ()),
    ]
    assert all(event.kind == event_kinds.ALLOC and event.at == ast.global_node
               for event in list(trace)[7:BOOT_EVENTS])


def test_running_example_trace(running_example):
    trace = interpret(running_example)
    program_events = list(trace)[BOOT_EVENTS:]
    literal = program_events[0]
    assert (literal.kind, literal.at) == (event_kinds.ALLOC, 2)
    assert program_events[1:] == [
        TraceEvent(event_kinds.OBJECT_READ, literal.obj_id, 2, ()),
        TraceEvent(event_kinds.OBJECT_READ, literal.obj_id, 5, ()),
        TraceEvent(event_kinds.OBJECT_READ, literal.obj_id, 4, ()),
    ]


def test_interpretation_is_deterministic():
    ast = parse(FILTER_TEMPLATE % u', 42')
    assert interpret(ast) == interpret(ast)
    assert interpret(ast).dump() == interpret(parse(FILTER_TEMPLATE % u', 42')).dump()


def test_call_events():
    ast = parse(FILTER_TEMPLATE % u'')
    trace = interpret(ast)
    enters = trace.of_kind(event_kinds.METHOD_ENTER)
    exits = trace.of_kind(event_kinds.METHOD_EXIT)
    this_reads = trace.of_kind(event_kinds.THIS_READ)
    param_reads = trace.of_kind(event_kinds.PARAM_READ)
    call_site = 11
    assert [event.at for event in enters] == [call_site, call_site]
    assert len(exits) == 2
    assert [(event.at, event.call_trace) for event in this_reads] == [(1, (call_site,))] * 2
    assert [(event.at, event.call_trace) for event in param_reads] == [(2, (call_site,))] * 2

    events = list(trace)
    first_enter = events.index(enters[0])
    assert events[first_enter + 1] == this_reads[0]
    assert events[first_enter + 2] == param_reads[0]


def test_filter_without_receiver_binds_global():
    ast = parse(FILTER_TEMPLATE % u'')
    trace = interpret(ast)
    global_id = trace[0].obj_id
    assert set(event.obj_id for event in trace.of_kind(event_kinds.THIS_READ)) == {global_id}


@pytest.mark.parametrize("receiver", [u', null', u', undefined'])
def test_filter_with_nullish_receiver_binds_global(receiver):
    trace = interpret(parse(FILTER_TEMPLATE % receiver))
    global_id = trace[0].obj_id
    assert set(event.obj_id for event in trace.of_kind(event_kinds.THIS_READ)) == {global_id}


@pytest.mark.parametrize("receiver", [u', 42', u', "s"', u', true'])
def test_filter_boxes_primitive_receiver(receiver):
    ast = parse(FILTER_TEMPLATE % receiver)
    trace = interpret(ast)
    this_reads = trace.of_kind(event_kinds.THIS_READ)
    boxed = this_reads[0].obj_id
    assert set(event.obj_id for event in this_reads) == {boxed}

    events = list(trace)
    allocation = [event for event in events if event.kind == event_kinds.ALLOC and event.obj_id == boxed]
    assert allocation == [TraceEvent(event_kinds.ALLOC, boxed, 11, ())]
    before = events[:events.index(this_reads[0])]
    assert [event for event in before if event.obj_id == boxed] == allocation


def test_filter_with_object_receiver():
    ast = parse(FILTER_TEMPLATE % u', dat')
    trace = interpret(ast)
    this_read = trace.of_kind(event_kinds.THIS_READ)[0]
    array_alloc = [event for event in trace.of_kind(event_kinds.ALLOC) if event.at == 7]
    assert this_read.obj_id == array_alloc[0].obj_id
    assert reads_of(trace, this_read.obj_id)[:4] == [7, 13, 18, 17]


def test_call_builtin_binds_receiver():
    ast = parse(u'function f() {\n  return this;\n}\nvar o = {};\ncall(f, o);')
    trace = interpret(ast)
    this_read = trace.of_kind(event_kinds.THIS_READ)[0]
    literal = [event for event in trace.of_kind(event_kinds.ALLOC) if event.at == 6][0]
    assert this_read.obj_id == literal.obj_id


def test_method_call_binds_receiver():
    ast = parse(u'var o = {m: function () {\n  return 1;\n}};\no.m();')
    trace = interpret(ast)
    this_read = trace.of_kind(event_kinds.THIS_READ)[0]
    literal = [event for event in trace.of_kind(event_kinds.ALLOC) if event.at == 2][0]
    assert this_read.obj_id == literal.obj_id


def test_constructor_receives_fresh_object():
    ast = parse(u'function P() {\n  this.x = 1;\n}\nvar p = new P();\nq = p;')
    trace = interpret(ast)
    this_read = trace.of_kind(event_kinds.THIS_READ)[0]
    fresh = [event for event in trace.of_kind(event_kinds.ALLOC) if event.obj_id == this_read.obj_id]
    assert [event.at for event in fresh] == [9]
    assert ast.kind(9).value == 'NewExpression'
    assert reads_of(trace, this_read.obj_id)[-1] == 12


def test_uncaught_error_keeps_trace_prefix():
    ast = parse(u'var x = 1;\nx();')
    with pytest.raises(RuntimeError) as excinfo:
        interpret(ast)
    error = excinfo.value
    assert error.node == 4
    assert 'not a function' in str(error)
    assert len(error.trace) == BOOT_EVENTS + 3
    assert collect_trace(ast) == error.trace


def test_try_catch_recovers():
    ast = parse(u'try {\n  missing;\n} catch (e) {\n  caught = e;\n}')
    trace = interpret(ast)
    param = 6
    assert ast.value(param) == 'e'
    error_alloc = [event for event in trace.of_kind(event_kinds.ALLOC) if event.at == param]
    assert len(error_alloc) == 1
    assert reads_of(trace, error_alloc[0].obj_id) == [param, 10, 9]


def test_call_depth_limit():
    ast = parse(u'function f() {\n  return f();\n}\nf();')
    with pytest.raises(RuntimeError) as excinfo:
        interpret(ast, max_call_depth=8)
    prefix = excinfo.value.trace
    assert 'call depth' in str(excinfo.value)
    assert len(prefix.of_kind(event_kinds.METHOD_ENTER)) == 8
    assert len(prefix.of_kind(event_kinds.METHOD_EXIT)) == 8


def test_step_limit(running_example):
    with pytest.raises(RuntimeError) as excinfo:
        interpret(running_example, max_steps=1)
    assert 'step limit' in str(excinfo.value)


def test_try_does_not_catch_resource_limits():
    ast = parse(u'function f() {\n  return f();\n}\ntry {\n  f();\n} catch (e) {}')
    with pytest.raises(RuntimeError):
        interpret(ast, max_call_depth=4)


@pytest.mark.parametrize("source,expected", [
    (u'var x = 1 + 2;', 3.0),
    (u'var x = "a" + 1;', 'a1'),
    (u'var x = 7 % 4;', 3.0),
    (u'var x = 1 / 0;', float('inf')),
    (u'var x = typeof null;', 'object'),
    (u'var x = typeof f;\nfunction f() {}', 'function'),
    (u'var x = null == undefined;', True),
    (u'var x = null === undefined;', False),
    (u'var x = [1, 2, 3].slice(1).length;', 2.0),
    (u'var x = [1, 2, 3].some(function (v) {\n  return v > 2;\n});', True),
    (u'var x = [1, 2, 3].find(function (v) {\n  return v > 1;\n});', 2.0),
    (u'var x = !"";', True),
    (u'var x = 0 || "d";', 'd'),
])
def test_values(source, expected):
    ast = parse(source + u'\nresult = x;')
    trace = interpret(ast)
    target = [node.id for node in ast.nodes if node.value == 'result'][0]
    # the value assigned to ``result`` is read at its target last
    final = [event for event in trace.reads() if event.at == target][-1]
    interpreter = Interpreter(ast)
    interpreter.run()
    value = interpreter.global_scope.names['result']
    assert value.obj_id == final.obj_id
    assert value.data == expected


@pytest.mark.parametrize("number,text", [
    (3.0, '3'),
    (-1.0, '-1'),
    (2.5, '2.5'),
    (float('nan'), 'NaN'),
    (float('-inf'), '-Infinity'),
])
def test_format_number(number, text):
    assert format_number(number) == text


def test_dump_format(running_example):
    lines = interpret(running_example).dump().splitlines()
    assert lines[0] == u'Alloc 0 6'
    assert lines[6] == u'ObjectRead 0 9'
    assert lines[-1].startswith(u'ObjectRead ') and lines[-1].endswith(u' 4')


def test_dump_with_call_trace():
    trace = interpret(parse(FILTER_TEMPLATE % u''))
    lines = trace.dump().splitlines()
    assert u'MethodEnter - 11' in lines
    assert u'MethodExit - -' in lines
    assert [line for line in lines if line.startswith(u'ThisRead')][0] == u'ThisRead 0 1 11'
