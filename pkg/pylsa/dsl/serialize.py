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

from pylsa.exceptions import SyntaxError, ProgramError
from pylsa.lib.stringlib import quote, unquote
from pylsa.minilang.nodes import NodeKind
from pylsa.dsl import instructions
from pylsa.dsl.instructions import NewAlloc, NoAlloc, Top, VERDICT
from pylsa.dsl.program import Leaf, Branch

_TOKEN_RE = re.compile(r'''
    (?P<ws>\s+)
  | (?P<punct>[\[\]=])
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<number>\d+)
  | (?P<word>[A-Za-z_][A-Za-z0-9_]*)
''', re.VERBOSE)

_KEYWORD_LEAVES = {
    'NEWALLOC': (NewAlloc,),
    'NOALLOC': (NoAlloc,),
    'TOP': (Top,),
}

_INDENT = u'  '


def _tokenize(text):
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if match is None:
            raise _error(text, position, 'Unexpected character %r' % text[position])
        if match.lastgroup != 'ws':
            tokens.append((match.lastgroup, match.group(), position))
        position = match.end()
    tokens.append(('eof', u'', len(text)))
    return tokens


def _error(text, position, message):
    line = text.count('\n', 0, position) + 1
    column = position - (text.rfind('\n', 0, position) + 1) + 1
    return SyntaxError(message, line, column)


class _ProgramParser(object):

    def __init__(self, text, language):
        self.text = text
        self.language = language
        self.tokens = _tokenize(text)
        self.index = 0

    def fail(self, message):
        return _error(self.text, self.tokens[self.index][2], message)

    def next(self):
        token = self.tokens[self.index]
        if token[0] != 'eof':
            self.index += 1
        return token

    def expect(self, text):
        group, found, _ = self.tokens[self.index]
        if found != text or group == 'string':
            raise self.fail('Expected %r, found %r' % (text, found or 'end of input'))
        return self.next()

    def parse(self):
        program = self.program()
        if self.tokens[self.index][0] != 'eof':
            raise self.fail('Trailing input %r' % self.tokens[self.index][1])
        return program

    def program(self):
        group, word, _ = self.tokens[self.index]
        if group == 'word' and word in _KEYWORD_LEAVES:
            self.next()
            return Leaf(_KEYWORD_LEAVES[word])
        if word == 'DO':
            self.next()
            return Leaf(self.instructions())
        if word == 'IF':
            self.next()
            guard = self.instructions()
            if not any(instruction.category == instructions.WRITE for instruction in guard):
                raise self.fail('Guard must contain a write instruction')
            self.expect('=')
            expected = self.context()
            self.expect('THEN')
            then = self.program()
            self.expect('ELSE')
            otherwise = self.program()
            try:
                return Branch(guard, expected, then, otherwise)
            except ProgramError as e:
                raise self.fail(str(e))
        raise self.fail('Expected DO, IF, NEWALLOC, NOALLOC or TOP, found %r' % (word or 'end of input'))

    def instructions(self):
        self.expect('[')
        sequence = []
        while self.tokens[self.index][1] != ']' or self.tokens[self.index][0] == 'string':
            group, word, _ = self.tokens[self.index]
            instruction = instructions.by_name.get(word) if group == 'word' else None
            if instruction is None:
                raise self.fail('Unknown instruction %r' % (word or 'end of input'))
            if instruction.category == VERDICT:
                raise self.fail('%s is only valid as a whole leaf' % word)
            if self.language is not None and \
                    instruction not in self.language.moves and instruction not in self.language.writes:
                raise self.fail('%s is not part of the %s language' % (word, self.language.name))
            sequence.append(instruction)
            self.next()
        self.expect(']')
        return tuple(sequence)

    def context(self):
        self.expect('[')
        tokens = []
        while True:
            group, word, _ = self.tokens[self.index]
            if group == 'punct' and word == ']':
                break
            if group == 'string':
                tokens.append(unquote(word))
            elif group == 'number':
                tokens.append(int(word))
            elif group == 'word' and word in NodeKind.__members__:
                tokens.append(NodeKind[word])
            else:
                raise self.fail('Invalid context token %r' % (word or 'end of input'))
            self.next()
        self.expect(']')
        return tuple(tokens)


def parse_program(text, language=None):
    """Parse the textual form of an analysis program.

    :param text: program text, e.g. ``IF [WritePos Up WriteType] = [1 Assignment] THEN DO [Right] ELSE DO [Top]``
    :param language: optional instruction language the program must stay within
    :raises: pylsa.exceptions.SyntaxError on malformed text
    """
    return _ProgramParser(text, language).parse()


def render_token(token):
    if isinstance(token, NodeKind):
        return token.value
    if isinstance(token, int):
        return u'%d' % token
    return quote(token)


def _render_sequence(sequence):
    return u'[%s]' % u' '.join(instruction.__name__ for instruction in sequence)


def _render_leaf(leaf, language):
    if leaf.action == (NewAlloc,):
        return u'NEWALLOC'
    if leaf.action == (NoAlloc,):
        return u'NOALLOC'
    if leaf.action == (Top,) and language is instructions.ALLOCATION:
        return u'TOP'
    return u'DO %s' % _render_sequence(leaf.action)


def render_program(program, language=None, pretty=False, level=0):
    """Canonical text of an analysis program; ``pretty`` puts branches on indented lines"""
    if isinstance(program, Leaf):
        return _render_leaf(program, language)
    head = u'IF %s = [%s]' % (_render_sequence(program.guard),
                              u' '.join(render_token(token) for token in program.expected))
    then = render_program(program.then, language, pretty, level + 1)
    otherwise = render_program(program.otherwise, language, pretty, level + 1)
    if not pretty:
        return u'%s THEN %s ELSE %s' % (head, then, otherwise)
    pad = u'\n' + _INDENT * (level + 1)
    return u'%s%sTHEN %s%sELSE %s' % (head, pad, then, pad, otherwise)
