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

import collections
from enum import Enum

from pylsa.exceptions import InternalError


class NodeKind(Enum):
    Program = 'Program'
    VarDeclaration = 'VarDeclaration'
    Assignment = 'Assignment'
    Identifier = 'Identifier'
    LiteralNumber = 'LiteralNumber'
    LiteralString = 'LiteralString'
    LiteralBoolean = 'LiteralBoolean'
    LiteralNull = 'LiteralNull'
    ObjectExpression = 'ObjectExpression'
    ArrayExpression = 'ArrayExpression'
    NewExpression = 'NewExpression'
    CallExpression = 'CallExpression'
    MemberExpression = 'MemberExpression'
    FunctionDeclaration = 'FunctionDeclaration'
    FunctionExpression = 'FunctionExpression'
    Parameter = 'Parameter'
    Argument = 'Argument'
    ReturnStatement = 'ReturnStatement'
    ExpressionStatement = 'ExpressionStatement'
    IfStatement = 'IfStatement'
    TryStatement = 'TryStatement'
    CatchClause = 'CatchClause'
    ThisExpression = 'ThisExpression'
    BlockStatement = 'BlockStatement'
    UnaryExpression = 'UnaryExpression'
    BinaryExpression = 'BinaryExpression'

    def __repr__(self):
        return self.value


FUNCTION_KINDS = frozenset([NodeKind.FunctionDeclaration, NodeKind.FunctionExpression])
LITERAL_KINDS = frozenset([NodeKind.LiteralNumber, NodeKind.LiteralString, NodeKind.LiteralBoolean,
                           NodeKind.LiteralNull])
STATEMENT_PARENTS = frozenset([NodeKind.Program, NodeKind.BlockStatement])

# Roles of the distinguished nodes appended to every Program, in order
GLOBAL = 'global'
UNDEFINED = 'undefined'
NULL = 'null'
THIS = 'this'
SYNTHETIC_ROLES = (GLOBAL, UNDEFINED, NULL, THIS)

_SYNTHETIC_SHAPES = {
    GLOBAL: (NodeKind.Identifier, 'global'),
    UNDEFINED: (NodeKind.Identifier, 'undefined'),
    NULL: (NodeKind.LiteralNull, 'null'),
    THIS: (NodeKind.ThisExpression, None),
}


Node = collections.namedtuple('Node', 'id, kind, value, children, parent, synthetic')

# Builder form of a tree: nested, immutable, without ids. ``origin`` remembers the id a
# node had in the tree it was taken from so that ids can be transported across edits.
Proto = collections.namedtuple('Proto', 'kind, value, children, origin, synthetic')
Proto.__new__.__defaults__ = (None, (), None, None)


def proto(kind, value=None, *children):
    return Proto(kind, value, tuple(children))


class Ast(object):
    """Immutable MiniJS syntax tree with dense pre-order node ids.

    The root Program node always carries four distinguished leaves as its final
    children (global object, undefined, null and the top-level ``this``).
    Use :meth:`build` to create instances.
    """

    def __init__(self, nodes):
        self.nodes = tuple(nodes)
        self._special = {}
        for node in self.nodes:
            if node.synthetic:
                self._special[node.synthetic] = node.id
        if set(self._special) != set(SYNTHETIC_ROLES):
            raise InternalError('Program is missing distinguished nodes')
        self._scopes = None
        self._source = None
        self._hash = None

    @classmethod
    def build(cls, program):
        """Assign pre-order ids to a Program proto.

        :param program: Proto of kind Program; distinguished children are (re)appended
        :returns: tuple (ast, mapping) where mapping takes origin ids to new ids
        """
        if program.kind is not NodeKind.Program:
            raise InternalError('Tree root must be a Program, got %s' % program.kind)
        regular = [child for child in program.children if not child.synthetic]
        previous = dict((child.synthetic, child.origin) for child in program.children if child.synthetic)
        synthetic = []
        for role in SYNTHETIC_ROLES:
            kind, value = _SYNTHETIC_SHAPES[role]
            synthetic.append(Proto(kind, value, (), previous.get(role), role))
        root = program._replace(children=tuple(regular + synthetic))

        nodes = []
        mapping = {}
        stack = [(root, None)]
        pending_children = {}
        while stack:
            item, parent = stack.pop()
            node_id = len(nodes)
            nodes.append(None)
            if item.origin is not None:
                mapping[item.origin] = node_id
            pending_children[node_id] = []
            if parent is not None:
                pending_children[parent].append(node_id)
            nodes[node_id] = (item, parent)
            for child in reversed(item.children):
                stack.append((child, node_id))

        frozen = [Node(node_id, item.kind, item.value, tuple(pending_children[node_id]), parent,
                       item.synthetic)
                  for node_id, (item, parent) in enumerate(nodes)]
        return cls(frozen), mapping

    def __len__(self):
        return len(self.nodes)

    def __getitem__(self, node_id):
        return self.nodes[node_id]

    def __contains__(self, node_id):
        return isinstance(node_id, int) and 0 <= node_id < len(self.nodes)

    def __eq__(self, other):
        if not isinstance(other, Ast):
            return NotImplemented
        return self.nodes == other.nodes

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.nodes)
        return self._hash

    @property
    def root(self):
        return self.nodes[0]

    @property
    def global_node(self):
        return self._special[GLOBAL]

    @property
    def undefined_node(self):
        return self._special[UNDEFINED]

    @property
    def null_node(self):
        return self._special[NULL]

    @property
    def this_node(self):
        return self._special[THIS]

    @property
    def source(self):
        """Canonical source text of this tree (computed once)"""
        if self._source is None:
            from pylsa.minilang.printer import render
            self._source = render(self)
        return self._source

    def kind(self, node_id):
        return self.nodes[node_id].kind

    def value(self, node_id):
        return self.nodes[node_id].value

    def parent(self, node_id):
        return self.nodes[node_id].parent

    def children(self, node_id):
        return self.nodes[node_id].children

    def position(self, node_id):
        """1-based index of the node among its parent's children, 0 for the root"""
        parent = self.nodes[node_id].parent
        if parent is None:
            return 0
        return self.nodes[parent].children.index(node_id) + 1

    def sibling(self, node_id, offset):
        parent = self.nodes[node_id].parent
        if parent is None:
            return None
        siblings = self.nodes[parent].children
        index = siblings.index(node_id) + offset
        if 0 <= index < len(siblings):
            return siblings[index]
        return None

    def ancestors(self, node_id):
        parent = self.nodes[node_id].parent
        while parent is not None:
            yield parent
            parent = self.nodes[parent].parent

    def subtree(self, node_id):
        """All ids of the subtree rooted at node_id (pre-order is contiguous)"""
        last = self.nodes[node_id]
        while last.children:
            last = self.nodes[last.children[-1]]
        return range(node_id, last.id + 1)

    def scope(self, node_id):
        """Id of the innermost enclosing function node, None at top level"""
        if self._scopes is None:
            scopes = []
            for node in self.nodes:
                if node.parent is None:
                    scopes.append(None)
                elif self.nodes[node.parent].kind in FUNCTION_KINDS:
                    scopes.append(node.parent)
                else:
                    scopes.append(scopes[node.parent])
            self._scopes = scopes
        return self._scopes[node_id]

    def enclosing_statement(self, node_id):
        """Nearest ancestor-or-self that sits directly in a Program or block, None for the root"""
        current = node_id
        while current is not None:
            parent = self.nodes[current].parent
            if parent is not None and self.nodes[parent].kind in STATEMENT_PARENTS:
                return current
            current = parent
        return None

    def is_assignment_target(self, node_id):
        node = self.nodes[node_id]
        if node.parent is None:
            return False
        parent = self.nodes[node.parent]
        return parent.kind is NodeKind.Assignment and parent.children[0] == node_id

    def is_property_name(self, node_id):
        """True for the name part of ``o.name`` and for object literal keys"""
        node = self.nodes[node_id]
        if node.parent is None:
            return False
        parent = self.nodes[node.parent]
        if parent.kind is NodeKind.MemberExpression:
            return parent.value == '.' and parent.children[1] == node_id
        return parent.kind is NodeKind.ObjectExpression

    def describe(self, node_id):
        node = self.nodes[node_id]
        if node.value is None:
            return node.kind.value
        return u'%s:%s' % (node.kind.value, node.value)
