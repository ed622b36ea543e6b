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

import logging
import collections

from pylsa.constants import mutation_kinds
from pylsa.minilang.interpreter import GLOBAL_FUNCTIONS, format_number
from pylsa.minilang.nodes import Ast, NodeKind, Proto, proto, FUNCTION_KINDS, LITERAL_KINDS
from pylsa.minilang.parser import KEYWORDS

logger = logging.getLogger('pylsa')
debug = logger.debug

Mutation = collections.namedtuple('Mutation', 'kind, site, payload')

# A mutated program plus the transport of old node ids to new ones
Mutant = collections.namedtuple('Mutant', 'mutation, ast, mapping')

RESERVED_NAMES = frozenset(GLOBAL_FUNCTIONS) | frozenset(['global', 'undefined']) | KEYWORDS

_DECLARING_KINDS = (NodeKind.VarDeclaration, NodeKind.Parameter, NodeKind.FunctionDeclaration)


def _copy(ast, node_id, edit):
    """Proto copy of the subtree at node_id with origins set; ``edit(node, children)`` may return
    a replacement proto built from the already copied children"""
    node = ast[node_id]
    children = [_copy(ast, child, edit) for child in node.children]
    replacement = edit(node, children)
    if replacement is not None:
        return replacement
    return Proto(node.kind, node.value, tuple(children), node.id, node.synthetic)


def _keep(node, children):
    return None


def _mutant(kind, site, payload, program):
    ast, mapping = Ast.build(program)
    return Mutant(Mutation(kind, site, payload), ast, mapping)


def _with_children(node, children):
    return Proto(node.kind, node.value, tuple(children), node.id, node.synthetic)


def insert_before(ast, statement, new_statement):
    """Program proto with new_statement placed in front of statement; None inserts at the
    start of the program"""
    parent = 0 if statement is None else ast.parent(statement)

    def edit(node, children):
        if node.id != parent:
            return None
        index = 0 if statement is None else node.children.index(statement)
        children.insert(index, new_statement)
        return _with_children(node, children)

    return _copy(ast, 0, edit)


def replace_node(ast, node_id, replacement):
    def edit(node, children):
        if node.id == node_id:
            return replacement
        return None

    return _copy(ast, 0, edit)


def rename(ast, old, new):
    """Consistently rename every binding and use of a variable or function name"""
    def edit(node, children):
        if node.value != old:
            return None
        if node.kind in _DECLARING_KINDS or node.kind is NodeKind.FunctionExpression or \
                (node.kind is NodeKind.Identifier and not ast.is_property_name(node.id) and not node.synthetic):
            return Proto(node.kind, new, tuple(children), node.id, node.synthetic)
        return None

    return _copy(ast, 0, edit)


def used_names(ast):
    return set(node.value for node in ast.nodes if isinstance(node.value, str))


def fresh_name(ast, prefix, taken=()):
    used = used_names(ast) | set(taken)
    index = 0
    while '%s%d' % (prefix, index) in used:
        index += 1
    return '%s%d' % (prefix, index)


def visible_names(ast, node_id):
    """Variable, parameter and function names bound in the scopes enclosing node_id, in
    declaration order; variables only once declared before node_id, and not inside their own
    initializer"""
    scopes = set([None])
    function = ast.scope(node_id)
    while function is not None:
        scopes.add(function)
        function = ast.scope(function)
    names = collections.OrderedDict()
    for node in ast.nodes:
        if node.synthetic or node.value in RESERVED_NAMES or node.value is None:
            continue
        if node.kind is NodeKind.VarDeclaration:
            visible = node.id < node_id and node_id not in ast.subtree(node.id) and \
                ast.scope(node.id) in scopes
        elif node.kind is NodeKind.FunctionDeclaration:
            visible = ast.scope(node.id) in scopes
        elif node.kind is NodeKind.Parameter:
            visible = node.parent in scopes and ast.kind(node.parent) in FUNCTION_KINDS
        else:
            visible = False
        if visible:
            names[node.value] = None
    return list(names)


def _statement_subtree(ast, site):
    statement = ast.enclosing_statement(site)
    if statement is None:
        return ()
    return ast.subtree(statement)


def _referenced_names(ast, site):
    names = collections.OrderedDict()
    for node_id in _statement_subtree(ast, site):
        node = ast[node_id]
        if node.value in RESERVED_NAMES or node.value is None:
            continue
        if node.kind in _DECLARING_KINDS or \
                (node.kind is NodeKind.Identifier and not ast.is_property_name(node_id)):
            names[node.value] = None
    return list(names)


def _function_names(ast):
    return set(node.value for node in ast.nodes if node.kind is NodeKind.FunctionDeclaration)


def _number(text):
    return proto(NodeKind.LiteralNumber, text)


def _dead_block(*statements):
    return proto(NodeKind.IfStatement, None, proto(NodeKind.LiteralBoolean, 'false'),
                 proto(NodeKind.BlockStatement, None, *statements))


# Semantics preserving mutations

def add_dead_code(ast, site):
    statement = ast.enclosing_statement(site)
    name = fresh_name(ast, 'v')
    yield mutation_kinds.ADD_DEAD_CODE, 'var %s' % name, insert_before(
        ast, statement, _dead_block(proto(NodeKind.VarDeclaration, name, _number('1'))))
    recent = visible_names(ast, site)[-3:]
    for target in recent:
        for source in recent:
            if target == source:
                continue
            assignment = proto(NodeKind.Assignment, None, proto(NodeKind.Identifier, target),
                               proto(NodeKind.Identifier, source))
            yield mutation_kinds.ADD_DEAD_CODE, '%s = %s' % (target, source), insert_before(
                ast, statement, _dead_block(assignment))


def rename_names(ast, site):
    functions = _function_names(ast)
    names = _referenced_names(ast, site)
    scope = ast.scope(site)
    if scope is not None and ast.kind(scope) is NodeKind.FunctionDeclaration and ast.value(scope) not in names:
        names.append(ast.value(scope))
    for name in names:
        kind = mutation_kinds.RENAME_USER_FUNCTION if name in functions else mutation_kinds.RENAME_VARIABLE
        new = fresh_name(ast, 'f' if name in functions else 'r')
        yield kind, '%s -> %s' % (name, new), rename(ast, name, new)


def add_side_effect_free_expr(ast, site):
    statement = ast.enclosing_statement(site)
    name = fresh_name(ast, 'v')
    for init in (_number('1'), proto(NodeKind.LiteralString, 's')):
        yield mutation_kinds.ADD_SIDE_EFFECT_FREE_EXPR, 'var %s' % name, insert_before(
            ast, statement, proto(NodeKind.VarDeclaration, name, init))


# Global jumps

def _constant_variants(node):
    if node.kind is NodeKind.LiteralNumber:
        variants = [_number('0'), _number('1'), proto(NodeKind.UnaryExpression, '-', _number('1')),
                    _number('42'), _number(format_number(float(node.value) + 1))]
        return [v for v in variants if v.kind is not NodeKind.LiteralNumber or v.value != node.value]
    if node.kind is NodeKind.LiteralString:
        variants = [proto(NodeKind.LiteralString, ''), proto(NodeKind.LiteralString, 'x' + node.value)]
        return [v for v in variants if v.value != node.value]
    if node.kind is NodeKind.LiteralBoolean:
        return [proto(NodeKind.LiteralBoolean, 'false' if node.value == 'true' else 'true')]
    return []


def change_constant(ast, site):
    for node_id in _statement_subtree(ast, site):
        node = ast[node_id]
        if node.kind not in LITERAL_KINDS:
            continue
        for variant in _constant_variants(node):
            replacement = variant._replace(origin=node_id)
            yield mutation_kinds.CHANGE_CONSTANT, '%d: %s' % (node_id, variant.value), \
                replace_node(ast, node_id, replacement)


def _argument_pool(ast, node_id):
    pool = [proto(NodeKind.Identifier, name) for name in visible_names(ast, node_id)]
    pool.extend([proto(NodeKind.ThisExpression), proto(NodeKind.ObjectExpression), _number('42'),
                 proto(NodeKind.LiteralString, 's'), proto(NodeKind.LiteralNull, 'null'),
                 proto(NodeKind.Identifier, 'undefined')])
    return [proto(NodeKind.Argument, None, value) for value in pool]


def _describe(value):
    return value.value if value.value is not None else value.kind.value


def add_method_argument(ast, site):
    for node_id in _statement_subtree(ast, site):
        node = ast[node_id]
        if node.kind not in (NodeKind.CallExpression, NodeKind.NewExpression):
            continue
        pool = _argument_pool(ast, node_id)
        arguments = node.children[1:]

        for argument in pool:
            def append(current, children, argument=argument):
                if current.id != node_id:
                    return None
                return _with_children(current, children + [argument])
            yield mutation_kinds.ADD_METHOD_ARGUMENT, '%d: +%s' % (node_id, _describe(argument.children[0])), \
                _copy(ast, 0, append)

        if len(arguments) >= 2:
            last = arguments[-1]
            for argument in pool:
                yield mutation_kinds.ADD_METHOD_ARGUMENT, '%d: %s' % (node_id, _describe(argument.children[0])), \
                    replace_node(ast, last, argument._replace(origin=last))


def add_method_parameter(ast, site):
    function = site if ast.kind(site) in FUNCTION_KINDS else ast.scope(site)
    if function is None:
        return
    name = fresh_name(ast, 'p')

    def edit(node, children):
        if node.id != function:
            return None
        children.insert(len(children) - 1, proto(NodeKind.Parameter, name))
        return _with_children(node, children)

    yield mutation_kinds.ADD_METHOD_PARAMETER, '%d: %s' % (function, name), _copy(ast, 0, edit)


EMA_MUTATORS = (add_dead_code, rename_names, add_side_effect_free_expr)
GLOBAL_JUMP_MUTATORS = (change_constant, add_method_argument, add_method_parameter)


def _mutants(ast, site, mutators):
    if site not in ast or ast[site].synthetic:
        return []
    mutants = []
    sources = set([ast.source])
    for mutator in mutators:
        for kind, payload, program in mutator(ast, site):
            mutant = _mutant(kind, site, payload, program)
            if mutant.ast.source in sources:
                continue
            sources.add(mutant.ast.source)
            mutants.append(mutant)
    debug('Generated %d mutants at node %d', len(mutants), site)
    return mutants


def ema_mutants(ast, site):
    """Semantics preserving mutants around site, in a fixed order"""
    return _mutants(ast, site, EMA_MUTATORS)


def global_jump_mutants(ast, site):
    return _mutants(ast, site, GLOBAL_JUMP_MUTATORS)


def all_mutants(ast, site):
    return ema_mutants(ast, site) + global_jump_mutants(ast, site)


def mutate_ema(ast, site):
    return [mutant.ast for mutant in ema_mutants(ast, site)]


def mutate_gj(ast, site):
    return [mutant.ast for mutant in global_jump_mutants(ast, site)]
