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

import re

_ESCAPES = {
    '\\': '\\\\',
    '"': '\\"',
    '\n': '\\n',
    '\t': '\\t',
    '\r': '\\r',
}
_UNESCAPES = {'n': '\n', 't': '\t', 'r': '\r'}
_ESCAPE_RE = re.compile(r'\\(.)', re.DOTALL)
_WHITESPACE_RE = re.compile(r'\s+')


def quote(text):
    """Quote given text as a double quoted string literal
    Input like
        say "hi"
    becomes
        "say \\"hi\\""
    """
    return u'"%s"' % u''.join(_ESCAPES.get(char, char) for char in text)


def unquote(literal):
    """Revert quoting - strip the surrounding quotes (single or double) and resolve escapes
    Input like
        "a\\tb"
    becomes
        'a<TAB>b'
    """
    body = literal[1:-1]
    return _ESCAPE_RE.sub(lambda m: _UNESCAPES.get(m.group(1), m.group(1)), body)


def shorten(text, n=-1):
    """Collapse white space of given source text into single blanks for one-line display
    :param text: source text
    :param n: If n is a positive integer then shorten the output of this function to n characters.

    With n=8 input like
        'var b = {};\\na = b;'
    becomes
        'var b = ...'
    """
    flat = _WHITESPACE_RE.sub(u' ', text).strip()
    if 0 < n < len(flat):
        return flat[:n] + u'...'
    return flat
