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

import io
import sys

import pylsa
from pylsa.lib.stringlib import shorten

# Longest program excerpt written for traced examples
SOURCE_WIDTH = 60


def trace(trace_obj):
    """Print recursive trace of given learner object to stderr
    :param trace_obj: either an analysis program, an example, or a counter-example report
    """
    if pylsa.tracing:
        tr = TraceLogger().trace(trace_obj)
        print(tr, file=sys.stderr)
        return tr


def _is_traceable(value):
    return hasattr(value, '__tracing_attrs__')


def _is_record(value):
    return isinstance(value, tuple) and hasattr(value, '_fields')


class TraceLogger(object):
    """Indented dump of analysis programs, examples and oracle reports.

    Objects list the attributes to dump in ``__tracing_attrs__``. Nested traceable objects
    and plain namedtuples are expanded, sequences are written one element per line.
    """
    _indent_incr = 4

    def __init__(self):
        self._indent_level = 0
        self._indent_level_is_first = {0: True}
        self._buffer = io.StringIO()

    def trace(self, trace_obj):
        self.writeln(u'%s = ' % trace_obj.__class__.__name__)
        self.incr('{')
        source = getattr(trace_obj, 'source', None)
        if isinstance(source, str):
            self.writeln(u'source = %r' % shorten(source, SOURCE_WIDTH))
        for attr_name in trace_obj.__tracing_attrs__:
            self._attribute(attr_name, getattr(trace_obj, attr_name))
        self.decr('}')
        return self.getvalue()

    def _attribute(self, name, value):
        if _is_traceable(value):
            self._block(name, lambda: self.trace(value))
        elif _is_record(value):
            self._block(name, lambda: self._record(value))
        elif isinstance(value, (list, tuple)) and value:
            self._block(name, lambda: self._sequence(value))
        elif isinstance(value, (list, tuple)):
            self.writeln(u'%s = []' % (name,))
        else:
            self.writeln(u'%s = %r' % (name, value))

    def _block(self, name, write_body):
        self.writeln(u'%s = ' % (name,))
        self.incr('[')
        write_body()
        self.decr(']')

    def _record(self, record):
        for field, value in zip(record._fields, record):
            self.writeln(u'%s = %r' % (field, value))

    def _sequence(self, elements):
        for element in elements:
            if _is_traceable(element):
                self.trace(element)
            else:
                self.writeln(u'%r' % (element,))

    def incr(self, brace):
        self._buffer.write(u'%s\n' % brace)
        self._indent_level += self._indent_incr
        self._indent_level_is_first[self._indent_level] = True

    def decr(self, brace):
        assert self._indent_level > 0, 'Indentation level cannot be decremented any further'
        self._buffer.write(u'\n')
        self._indent_level -= self._indent_incr
        self._buffer.write(u' ' * self._indent_level)
        self._buffer.write(brace)

    def writeln(self, line):
        if self._indent_level_is_first[self._indent_level]:
            self._indent_level_is_first[self._indent_level] = False
        else:
            self._buffer.write(u',\n')
        self._buffer.write(u' ' * self._indent_level)
        self._buffer.write(line)

    def getvalue(self):
        return self._buffer.getvalue()
