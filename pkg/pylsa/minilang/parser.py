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
import collections

from pylsa.exceptions import SyntaxError
from pylsa.lib.stringlib import unquote
from pylsa.minilang.nodes import Ast, NodeKind, proto

Token = collections.namedtuple('Token', 'type, text, line, column')

NUMBER = 'number'
STRING = 'string'
NAME = 'name'
KEYWORD = 'keyword'
PUNCT = 'punct'
EOF = 'eof'

KEYWORDS = frozenset(['var', 'function', 'return', 'if', 'else', 'try', 'catch', 'new', 'this',
                      'true', 'false', 'null', 'typeof'])

_TOKEN_RE = re.compile(r'''
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>//[^\n]*)
  | (?P<number>\d+(?:\.\d+)?)
  | (?P<string>"(?:[^"\\\n]|\\.)*"|'(?:[^'\\\n]|\\.)*')
  | (?P<name>[A-Za-z_$][A-Za-z0-9_$]*)
  | (?P<punct>===|!==|==|!=|<=|>=|&&|\|\||[{}()\[\];,.:=<>+\-*/%!])
''', re.VERBOSE)

# Binary operators by increasing binding strength
_BINARY_LEVELS = (
    ('||',),
    ('&&',),
    ('==', '!=', '===', '!=='),
    ('<', '>', '<=', '>='),
    ('+', '-'),
    ('*', '/', '%'),
)
_UNARY_OPERATORS = ('!', '-', 'typeof')


def tokenize(source):
    tokens = []
    line, line_start = 1, 0
    position = 0
    while position < len(source):
        match = _TOKEN_RE.match(source, position)
        column = position - line_start + 1
        if match is None:
            raise SyntaxError('Unexpected character %r' % source[position], line, column)
        group = match.lastgroup
        text = match.group(group)
        if group == NAME and text in KEYWORDS:
            group = KEYWORD
        if group not in ('ws', 'comment'):
            tokens.append(Token(group, text, line, column))
        newlines = text.count('\n')
        if newlines:
            line += newlines
            line_start = position + text.rindex('\n') + 1
        position = match.end()
    tokens.append(Token(EOF, '', line, position - line_start + 1))
    return tokens


class Parser(object):
    """Recursive descent parser producing a Program proto"""

    def __init__(self, source):
        self.tokens = tokenize(source)
        self.index = 0

    # token helpers

    def peek(self, offset=0):
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def advance(self):
        token = self.tokens[self.index]
        if token.type != EOF:
            self.index += 1
        return token

    def check(self, text, offset=0):
        token = self.peek(offset)
        return token.type in (PUNCT, KEYWORD) and token.text == text

    def accept(self, text):
        if self.check(text):
            return self.advance()
        return None

    def expect(self, text):
        if not self.check(text):
            self.fail('expected %r' % text)
        return self.advance()

    def expect_name(self):
        token = self.peek()
        if token.type != NAME:
            self.fail('expected identifier')
        return self.advance().text

    def fail(self, what):
        token = self.peek()
        found = 'end of input' if token.type == EOF else repr(token.text)
        raise SyntaxError('Unexpected %s, %s' % (found, what), token.line, token.column)

    # statements

    def program(self):
        statements = []
        while self.peek().type != EOF:
            statements.append(self.statement())
        return proto(NodeKind.Program, None, *statements)

    def statement(self):
        if self.check('var'):
            return self.var_declaration()
        if self.check('function'):
            return self.function_declaration()
        if self.check('return'):
            self.advance()
            if self.accept(';'):
                return proto(NodeKind.ReturnStatement)
            value = self.expression()
            self.expect(';')
            return proto(NodeKind.ReturnStatement, None, value)
        if self.check('if'):
            return self.if_statement()
        if self.check('try'):
            return self.try_statement()
        if self.check('{'):
            return self.block()

        expression = self.expression()
        if self.accept('='):
            if expression.kind not in (NodeKind.Identifier, NodeKind.MemberExpression):
                self.fail('invalid assignment target')
            value = self.expression()
            self.expect(';')
            return proto(NodeKind.Assignment, None, expression, value)
        self.expect(';')
        return proto(NodeKind.ExpressionStatement, None, expression)

    def var_declaration(self):
        self.expect('var')
        name = self.expect_name()
        if self.accept('='):
            init = self.expression()
            self.expect(';')
            return proto(NodeKind.VarDeclaration, name, init)
        self.expect(';')
        return proto(NodeKind.VarDeclaration, name)

    def function_declaration(self):
        self.expect('function')
        name = self.expect_name()
        params, body = self.function_rest()
        return proto(NodeKind.FunctionDeclaration, name, *(params + [body]))

    def function_rest(self):
        self.expect('(')
        params = []
        if not self.check(')'):
            params.append(proto(NodeKind.Parameter, self.expect_name()))
            while self.accept(','):
                params.append(proto(NodeKind.Parameter, self.expect_name()))
        self.expect(')')
        return params, self.block()

    def if_statement(self):
        self.expect('if')
        self.expect('(')
        test = self.expression()
        self.expect(')')
        consequent = self.block()
        if self.accept('else'):
            alternate = self.if_statement() if self.check('if') else self.block()
            return proto(NodeKind.IfStatement, None, test, consequent, alternate)
        return proto(NodeKind.IfStatement, None, test, consequent)

    def try_statement(self):
        self.expect('try')
        block = self.block()
        self.expect('catch')
        self.expect('(')
        param = proto(NodeKind.Parameter, self.expect_name())
        self.expect(')')
        handler = proto(NodeKind.CatchClause, None, param, self.block())
        return proto(NodeKind.TryStatement, None, block, handler)

    def block(self):
        self.expect('{')
        statements = []
        while not self.check('}'):
            if self.peek().type == EOF:
                self.fail("expected '}'")
            statements.append(self.statement())
        self.expect('}')
        return proto(NodeKind.BlockStatement, None, *statements)

    # expressions

    def expression(self):
        return self.binary(0)

    def binary(self, level):
        if level == len(_BINARY_LEVELS):
            return self.unary()
        left = self.binary(level + 1)
        while self.peek().type == PUNCT and self.peek().text in _BINARY_LEVELS[level]:
            operator = self.advance().text
            right = self.binary(level + 1)
            left = proto(NodeKind.BinaryExpression, operator, left, right)
        return left

    def unary(self):
        token = self.peek()
        if token.type in (PUNCT, KEYWORD) and token.text in _UNARY_OPERATORS:
            self.advance()
            return proto(NodeKind.UnaryExpression, token.text, self.unary())
        return self.postfix(self.primary())

    def postfix(self, expression, allow_calls=True):
        while True:
            if self.accept('.'):
                name = proto(NodeKind.Identifier, self.expect_name())
                expression = proto(NodeKind.MemberExpression, '.', expression, name)
            elif self.accept('['):
                key = self.expression()
                self.expect(']')
                expression = proto(NodeKind.MemberExpression, '[]', expression, key)
            elif allow_calls and self.check('('):
                expression = proto(NodeKind.CallExpression, None, expression, *self.arguments())
            else:
                return expression

    def arguments(self):
        self.expect('(')
        args = []
        if not self.check(')'):
            args.append(proto(NodeKind.Argument, None, self.expression()))
            while self.accept(','):
                args.append(proto(NodeKind.Argument, None, self.expression()))
        self.expect(')')
        return args

    def primary(self):
        token = self.peek()
        if token.type == NUMBER:
            self.advance()
            return proto(NodeKind.LiteralNumber, token.text)
        if token.type == STRING:
            self.advance()
            return proto(NodeKind.LiteralString, unquote(token.text))
        if token.type == NAME:
            self.advance()
            return proto(NodeKind.Identifier, token.text)
        if self.check('true') or self.check('false'):
            self.advance()
            return proto(NodeKind.LiteralBoolean, token.text)
        if self.accept('null'):
            return proto(NodeKind.LiteralNull, 'null')
        if self.accept('this'):
            return proto(NodeKind.ThisExpression)
        if self.accept('('):
            expression = self.expression()
            self.expect(')')
            return expression
        if self.check('{'):
            return self.object_literal()
        if self.accept('['):
            elements = []
            if not self.check(']'):
                elements.append(self.expression())
                while self.accept(','):
                    elements.append(self.expression())
            self.expect(']')
            return proto(NodeKind.ArrayExpression, None, *elements)
        if self.accept('function'):
            name = self.expect_name() if self.peek().type == NAME else None
            params, body = self.function_rest()
            return proto(NodeKind.FunctionExpression, name, *(params + [body]))
        if self.accept('new'):
            callee = self.postfix(self.primary(), allow_calls=False)
            args = self.arguments() if self.check('(') else []
            return proto(NodeKind.NewExpression, None, callee, *args)
        self.fail('expected expression')

    def object_literal(self):
        self.expect('{')
        properties = []
        if not self.check('}'):
            properties.append(self.property())
            while self.accept(','):
                properties.append(self.property())
        self.expect('}')
        return proto(NodeKind.ObjectExpression, None, *properties)

    def property(self):
        key = self.expect_name()
        self.expect(':')
        return proto(NodeKind.Identifier, key, self.expression())


def parse(source):
    """Parse MiniJS source text into an :class:`Ast`.

    :param source: program text
    :returns: Ast with pre-order node ids and the distinguished nodes appended
    :raises: pylsa.exceptions.SyntaxError carrying line and column
    """
    ast, _ = Ast.build(Parser(source).program())
    return ast
