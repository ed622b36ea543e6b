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

from pylsa.exceptions import InternalError
from pylsa.lib.stringlib import quote
from pylsa.minilang.nodes import NodeKind, STATEMENT_PARENTS

INDENT = u'  '

# Expressions that can be followed by ".name", "[key]" or "(args)" without parentheses
_POSTFIX_SAFE = frozenset([NodeKind.Identifier, NodeKind.MemberExpression, NodeKind.CallExpression,
                           NodeKind.ThisExpression, NodeKind.LiteralString, NodeKind.ArrayExpression])

_STATEMENT_KINDS = frozenset([NodeKind.VarDeclaration, NodeKind.Assignment, NodeKind.ExpressionStatement,
                              NodeKind.FunctionDeclaration, NodeKind.ReturnStatement, NodeKind.IfStatement,
                              NodeKind.TryStatement, NodeKind.BlockStatement])


class Printer(object):

    def __init__(self, ast):
        self.ast = ast

    def program(self):
        return u'\n'.join(self.statement(child, 0) for child in self.ast.root.children
                          if not self.ast[child].synthetic)

    def statement(self, node_id, depth):
        node = self.ast[node_id]
        pad = INDENT * depth
        kind = node.kind
        if kind is NodeKind.VarDeclaration:
            if node.children:
                return u'%svar %s = %s;' % (pad, node.value, self.expression(node.children[0], depth))
            return u'%svar %s;' % (pad, node.value)
        if kind is NodeKind.Assignment:
            target, value = node.children
            return u'%s%s = %s;' % (pad, self.expression(target, depth), self.expression(value, depth))
        if kind is NodeKind.ExpressionStatement:
            child = node.children[0]
            text = self.expression(child, depth)
            if self.ast.kind(child) in (NodeKind.FunctionExpression, NodeKind.ObjectExpression):
                text = u'(%s)' % text
            return u'%s%s;' % (pad, text)
        if kind is NodeKind.ReturnStatement:
            if node.children:
                return u'%sreturn %s;' % (pad, self.expression(node.children[0], depth))
            return u'%sreturn;' % pad
        if kind is NodeKind.FunctionDeclaration:
            return pad + self.function(node, depth)
        if kind is NodeKind.IfStatement:
            return pad + self.if_statement(node, depth)
        if kind is NodeKind.TryStatement:
            block, handler = node.children
            return u'%stry %s %s' % (pad, self.block(block, depth), self.catch_clause(handler, depth))
        if kind is NodeKind.BlockStatement:
            return pad + self.block(node_id, depth)
        raise InternalError('Cannot render %s as a statement' % kind)

    def if_statement(self, node, depth):
        text = u'if (%s) %s' % (self.expression(node.children[0], depth), self.block(node.children[1], depth))
        if len(node.children) == 3:
            alternate = self.ast[node.children[2]]
            if alternate.kind is NodeKind.IfStatement:
                text += u' else ' + self.if_statement(alternate, depth)
            else:
                text += u' else ' + self.block(alternate.id, depth)
        return text

    def catch_clause(self, node_id, depth):
        param, body = self.ast.children(node_id)
        return u'catch (%s) %s' % (self.ast.value(param), self.block(body, depth))

    def block(self, node_id, depth):
        children = self.ast.children(node_id)
        if not children:
            return u'{}'
        inner = u'\n'.join(self.statement(child, depth + 1) for child in children)
        return u'{\n%s\n%s}' % (inner, INDENT * depth)

    def function(self, node, depth):
        params = u', '.join(self.ast.value(p) for p in node.children[:-1])
        name = u' %s' % node.value if node.value else u' '
        return u'function%s(%s) %s' % (name, params, self.block(node.children[-1], depth))

    def arguments(self, node_ids, depth):
        return u', '.join(self.expression(a, depth) for a in node_ids)

    def operand(self, node_id, depth):
        text = self.expression(node_id, depth)
        if self.ast.kind(node_id) in _POSTFIX_SAFE:
            return text
        return u'(%s)' % text

    def constructor(self, node_id, depth):
        text = self.expression(node_id, depth)
        if self._call_free(node_id):
            return text
        return u'(%s)' % text

    def _call_free(self, node_id):
        node = self.ast[node_id]
        if node.kind in (NodeKind.Identifier, NodeKind.ThisExpression):
            return True
        if node.kind is NodeKind.MemberExpression:
            return self._call_free(node.children[0])
        return False

    def expression(self, node_id, depth):
        node = self.ast[node_id]
        kind = node.kind
        if kind is NodeKind.Identifier:
            return node.value
        if kind is NodeKind.LiteralString:
            return quote(node.value)
        if kind in (NodeKind.LiteralNumber, NodeKind.LiteralBoolean, NodeKind.LiteralNull):
            return node.value
        if kind is NodeKind.ThisExpression:
            return u'this'
        if kind is NodeKind.ObjectExpression:
            return u'{%s}' % u', '.join(u'%s: %s' % (self.ast.value(key), self.expression(self.ast.children(key)[0], depth))
                                        for key in node.children)
        if kind is NodeKind.ArrayExpression:
            return u'[%s]' % self.arguments(node.children, depth)
        if kind is NodeKind.MemberExpression:
            target, key = node.children
            if node.value == '.':
                return u'%s.%s' % (self.operand(target, depth), self.ast.value(key))
            return u'%s[%s]' % (self.operand(target, depth), self.expression(key, depth))
        if kind is NodeKind.CallExpression:
            return u'%s(%s)' % (self.operand(node.children[0], depth), self.arguments(node.children[1:], depth))
        if kind is NodeKind.NewExpression:
            return u'new %s(%s)' % (self.constructor(node.children[0], depth),
                                    self.arguments(node.children[1:], depth))
        if kind is NodeKind.Argument:
            return self.expression(node.children[0], depth)
        if kind is NodeKind.FunctionExpression:
            return self.function(node, depth)
        if kind is NodeKind.UnaryExpression:
            child = node.children[0]
            text = self.expression(child, depth)
            if self.ast.kind(child) in (NodeKind.BinaryExpression, NodeKind.UnaryExpression):
                text = u'(%s)' % text
            if node.value.isalpha():
                return u'%s %s' % (node.value, text)
            return node.value + text
        if kind is NodeKind.BinaryExpression:
            left, right = [self._binary_operand(child, depth) for child in node.children]
            return u'%s %s %s' % (left, node.value, right)
        raise InternalError('Cannot render %s as an expression' % kind)

    def _binary_operand(self, node_id, depth):
        text = self.expression(node_id, depth)
        if self.ast.kind(node_id) is NodeKind.BinaryExpression:
            return u'(%s)' % text
        return text

    def node(self, node_id):
        node = self.ast[node_id]
        if node.synthetic:
            return u'<%s>' % node.synthetic
        if node.kind is NodeKind.Program:
            return self.program()
        if node.kind is NodeKind.Parameter:
            return node.value
        if node.kind is NodeKind.CatchClause:
            return self.catch_clause(node_id, 0)
        if node.kind is NodeKind.Identifier and node.children:
            return u'%s: %s' % (node.value, self.expression(node.children[0], 0))
        parent = self.ast.parent(node_id)
        if node.kind in _STATEMENT_KINDS and (parent is None or self.ast.kind(parent) in STATEMENT_PARENTS
                                             or node.kind is NodeKind.BlockStatement
                                             or node.kind is NodeKind.IfStatement):
            return self.statement(node_id, 0)
        return self.expression(node_id, 0)


def render(ast):
    """Canonical source text of an Ast; parse(render(ast)) rebuilds the same tree"""
    return Printer(ast).program()


def render_node(ast, node_id):
    return Printer(ast).node(node_id)
