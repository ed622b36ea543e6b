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

import os
import glob

import pytest

from pylsa.cli import CORPUS_DIR
from pylsa.minilang import parse, render, render_node

CORPUS_FILES = sorted(glob.glob(os.path.join(CORPUS_DIR, '*', '*.mini')))


@pytest.mark.parametrize("source", [
    u'var b = {};\na = b;',
    u'var o = {a: 1, b: "x"};',
    u'function f(x) {\n  return x;\n}',
    u'var g = function (x) {\n  return this;\n};',
    u'x = (a + b) * -c;',
    u'if (x) {\n  y = 1;\n} else {}',
    u'if (x) {} else if (y) {\n  z = [1, 2];\n}',
    u'try {\n  f();\n} catch (e) {}',
    u'({}).x;',
    u'new (f())();',
    u'var p = new lib.Point(1, "a");',
    u'var s = "say \\"hi\\"";',
    u'typeof x;',
    u'o["k"] = null;',
    u'return;',
])
def test_canonical_source_is_stable(source):
    assert render(parse(source)) == source


def test_render_normalizes_layout():
    assert render(parse(u'var   b={} ;a=b; // done')) == u'var b = {};\na = b;'


@pytest.mark.parametrize("path", CORPUS_FILES, ids=os.path.basename)
def test_corpus_round_trip(path):
    with open(path, encoding='utf-8') as handle:
        ast = parse(handle.read())
    assert parse(render(ast)) == ast


def test_source_is_cached(running_example):
    assert running_example.source == u'var b = {};\na = b;'
    assert running_example.source is running_example.source


def test_render_node(running_example):
    assert render_node(running_example, 2) == u'{}'
    assert render_node(running_example, 3) == u'a = b;'
    assert render_node(running_example, 5) == u'b'
    assert render_node(running_example, 9) == u'<this>'
    assert render_node(running_example, 0) == u'var b = {};\na = b;'
