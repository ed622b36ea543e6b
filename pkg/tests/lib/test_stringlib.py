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

from pylsa.lib.stringlib import quote, unquote, shorten


def test_quote():
    """Test that quotes, backslashes and line breaks are escaped"""
    assert quote(u'say "hi"\n') == u'"say \\"hi\\"\\n"'
    assert quote(u'a\\b') == u'"a\\\\b"'


def test_unquote():
    """Test reverting of quote, for single and double quoted literals"""
    assert unquote(u'"say \\"hi\\"\\n"') == u'say "hi"\n'
    assert unquote(u"'it\\'s'") == u"it's"
    assert unquote(u'"a\\tb"') == u'a\tb'


def test_shorten():
    """Test plain shorten function without truncation"""
    assert shorten(u'var b = {};\n  a = b;') == u'var b = {}; a = b;'


def test_shorten_truncates():
    """Test shortening to 8 characters"""
    assert shorten(u'var b = {};\na = b;', n=8) == u'var b = ...'
