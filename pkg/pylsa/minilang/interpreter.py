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

import math
import logging
import collections

from pylsa.constants import event_kinds
from pylsa.constants.general import MAX_CALL_DEPTH, MAX_STEPS
from pylsa.exceptions import RuntimeError, InternalError
from pylsa.minilang.nodes import NodeKind
from pylsa.minilang.trace import Trace, TraceEvent

logger = logging.getLogger('pylsa')
debug = logger.debug

GLOBAL_FUNCTIONS = ('call', 'apply', 'Object', 'Number', 'String', 'Boolean', 'Array', 'print')
ARRAY_METHODS = ('map', 'filter', 'forEach', 'some', 'every', 'find', 'push', 'slice')

PRIMITIVE_KINDS = frozenset(['number', 'string', 'boolean'])
OBJECT_KINDS = frozenset(['object', 'array', 'function', 'builtin'])

Closure = collections.namedtuple('Closure', 'node, scope')


class Value(object):
    """A MiniJS runtime value; every value, primitives included, carries an object id"""
    __slots__ = ('obj_id', 'kind', 'data', 'props')

    def __init__(self, obj_id, kind, data=None):
        self.obj_id = obj_id
        self.kind = kind
        self.data = data
        self.props = {} if kind in OBJECT_KINDS else None

    def is_object(self):
        return self.kind in OBJECT_KINDS

    def is_primitive(self):
        return self.kind in PRIMITIVE_KINDS

    def __repr__(self):
        return '<%s #%d %r>' % (self.kind, self.obj_id, self.data)


class Scope(object):
    __slots__ = ('names', 'parent', 'this')

    def __init__(self, parent, this):
        self.names = {}
        self.parent = parent
        self.this = this

    def declare(self, name, value):
        self.names[name] = value

    def resolve(self, name):
        scope = self
        while scope is not None:
            if name in scope.names:
                return scope
            scope = scope.parent
        return None


class _Return(Exception):

    def __init__(self, value):
        super(_Return, self).__init__()
        self.value = value


class _Throw(Exception):
    """A MiniJS level error, catchable by try/catch"""

    def __init__(self, message, node):
        super(_Throw, self).__init__(message)
        self.message = message
        self.node = node


class _Abort(_Throw):
    """Resource limit hit; never caught by MiniJS code"""


def truthy(value):
    kind = value.kind
    if kind in ('undefined', 'null'):
        return False
    if kind == 'boolean':
        return value.data
    if kind == 'number':
        return value.data != 0 and not math.isnan(value.data)
    if kind == 'string':
        return value.data != ''
    return True


def to_number(value):
    kind = value.kind
    if kind == 'number':
        return value.data
    if kind == 'boolean':
        return 1.0 if value.data else 0.0
    if kind == 'null':
        return 0.0
    if kind == 'string':
        text = value.data.strip()
        if not text:
            return 0.0
        try:
            return float(text)
        except ValueError:
            return float('nan')
    return float('nan')


def format_number(number):
    if math.isnan(number):
        return 'NaN'
    if math.isinf(number):
        return 'Infinity' if number > 0 else '-Infinity'
    if number == int(number):
        return '%d' % number
    return repr(number)


def to_string(value):
    kind = value.kind
    if kind == 'string':
        return value.data
    if kind == 'number':
        return format_number(value.data)
    if kind == 'boolean':
        return 'true' if value.data else 'false'
    if kind in ('null', 'undefined'):
        return kind
    if kind == 'array':
        return ','.join(to_string(e) for e in value.data)
    if kind in ('function', 'builtin'):
        return 'function'
    return '[object Object]'


def type_of(value):
    kind = value.kind
    if kind == 'null':
        return 'object'
    if kind == 'builtin':
        return 'function'
    if kind in ('undefined', 'number', 'string', 'boolean', 'function'):
        return kind
    return 'object'


def strict_equals(left, right):
    if left.is_primitive() and right.is_primitive():
        return left.kind == right.kind and left.data == right.data
    return left.obj_id == right.obj_id


def loose_equals(left, right):
    nullish = ('null', 'undefined')
    if left.kind in nullish or right.kind in nullish:
        return left.kind in nullish and right.kind in nullish
    if left.is_primitive() and right.is_primitive() and left.kind != right.kind:
        return to_number(left) == to_number(right)
    return strict_equals(left, right)


def _index(key):
    if key.isdigit():
        return int(key)
    return None


class Interpreter(object):
    """Instrumented tree walking interpreter for MiniJS.

    Every evaluated expression records an ObjectRead of its value at the expression's
    node; assignments record the stored value at the assignment target. Function entries
    record MethodEnter, one ThisRead at the function node and one ParamRead per parameter.
    """

    def __init__(self, ast, max_call_depth=MAX_CALL_DEPTH, max_steps=MAX_STEPS):
        self.ast = ast
        self.max_call_depth = max_call_depth
        self.max_steps = max_steps
        self.events = []
        self.call_trace = []
        self.steps = 0
        self._next_obj_id = 0

    def run(self):
        try:
            self._boot()
            program = [child for child in self.ast.root.children if not self.ast[child].synthetic]
            self._hoist(program, self.global_scope)
            self._exec_statements(program, self.global_scope)
        except _Return:
            pass
        except _Throw as e:
            prefix = Trace(self.events)
            if isinstance(e, _Abort):
                raise RuntimeError(e.message, e.node, prefix)
            raise RuntimeError('Uncaught error: %s' % e.message, e.node, prefix)
        debug('Interpreted program of %d nodes: %d events, %d steps', len(self.ast), len(self.events),
              self.steps)
        return Trace(self.events)

    # instrumentation

    def _alloc(self, kind, at, data=None):
        value = Value(self._next_obj_id, kind, data)
        self._next_obj_id += 1
        self.events.append(TraceEvent(event_kinds.ALLOC, value.obj_id, at, ()))
        return value

    def _read(self, value, at):
        self.events.append(TraceEvent(event_kinds.OBJECT_READ, value.obj_id, at, ()))
        return value

    def _step(self, node_id):
        self.steps += 1
        if self.steps > self.max_steps:
            raise _Abort('step limit of %d exceeded' % self.max_steps, node_id)

    def _boot(self):
        ast = self.ast
        self.global_object = self._read(self._alloc('object', ast.global_node), ast.global_node)
        self.undefined = self._read(self._alloc('undefined', ast.undefined_node), ast.undefined_node)
        self.null = self._read(self._alloc('null', ast.null_node), ast.null_node)
        self._read(self.global_object, ast.this_node)

        self.global_scope = Scope(None, self.global_object)
        self.global_scope.declare('global', self.global_object)
        self.global_scope.declare('undefined', self.undefined)
        for name in GLOBAL_FUNCTIONS:
            self.global_scope.declare(name, self._alloc('builtin', ast.global_node, name))
        self.array_methods = collections.OrderedDict(
            (name, self._alloc('builtin', ast.global_node, name)) for name in ARRAY_METHODS)

    # statements

    def _hoist(self, statements, scope):
        for node_id in statements:
            node = self.ast[node_id]
            if node.kind is NodeKind.FunctionDeclaration:
                scope.declare(node.value, self._alloc('function', node_id, Closure(node_id, scope)))
            elif node.kind in (NodeKind.BlockStatement, NodeKind.IfStatement, NodeKind.TryStatement,
                               NodeKind.CatchClause):
                self._hoist(node.children, scope)

    def _exec_statements(self, statements, scope):
        for node_id in statements:
            self._exec(node_id, scope)

    def _exec(self, node_id, scope):
        self._step(node_id)
        node = self.ast[node_id]
        kind = node.kind
        if kind is NodeKind.VarDeclaration:
            value = self._eval(node.children[0], scope) if node.children else self.undefined
            scope.declare(node.value, value)
        elif kind is NodeKind.Assignment:
            self._assign(node, scope)
        elif kind is NodeKind.ExpressionStatement:
            self._eval(node.children[0], scope)
        elif kind is NodeKind.FunctionDeclaration:
            pass
        elif kind is NodeKind.ReturnStatement:
            raise _Return(self._eval(node.children[0], scope) if node.children else self.undefined)
        elif kind is NodeKind.IfStatement:
            if truthy(self._eval(node.children[0], scope)):
                self._exec(node.children[1], scope)
            elif len(node.children) == 3:
                self._exec(node.children[2], scope)
        elif kind is NodeKind.BlockStatement:
            self._exec_statements(node.children, scope)
        elif kind is NodeKind.TryStatement:
            block, handler = node.children
            try:
                self._exec(block, scope)
            except _Abort:
                raise
            except _Throw as thrown:
                param, body = self.ast.children(handler)
                error = self._alloc('object', param, thrown.message)
                scope.declare(self.ast.value(param), self._read(error, param))
                self._exec(body, scope)
        else:
            raise InternalError('Unexpected statement %s' % kind)

    def _assign(self, node, scope):
        target, source = node.children
        target_node = self.ast[target]
        if target_node.kind is NodeKind.Identifier:
            value = self._eval(source, scope)
            owner = scope.resolve(target_node.value) or self.global_scope
            owner.declare(target_node.value, value)
        else:
            obj = self._eval(target_node.children[0], scope)
            key = self._property_key(target_node, scope)
            value = self._eval(source, scope)
            self._set_property(obj, key, value, target)
        self._read(value, target)

    # expressions

    def _eval(self, node_id, scope):
        self._step(node_id)
        return self._read(self._evaluate(self.ast[node_id], scope), node_id)

    def _evaluate(self, node, scope):
        kind = node.kind
        node_id = node.id
        if kind is NodeKind.Identifier:
            owner = scope.resolve(node.value)
            if owner is None:
                raise _Throw('%s is not defined' % node.value, node_id)
            return owner.names[node.value]
        if kind is NodeKind.LiteralNumber:
            return self._alloc('number', node_id, float(node.value))
        if kind is NodeKind.LiteralString:
            return self._alloc('string', node_id, node.value)
        if kind is NodeKind.LiteralBoolean:
            return self._alloc('boolean', node_id, node.value == 'true')
        if kind is NodeKind.LiteralNull:
            return self.null
        if kind is NodeKind.ThisExpression:
            return scope.this
        if kind is NodeKind.ObjectExpression:
            obj = self._alloc('object', node_id)
            for key in node.children:
                obj.props[self.ast.value(key)] = self._eval(self.ast.children(key)[0], scope)
            return obj
        if kind is NodeKind.ArrayExpression:
            array = self._alloc('array', node_id, [])
            for element in node.children:
                array.data.append(self._eval(element, scope))
            return array
        if kind is NodeKind.FunctionExpression:
            return self._alloc('function', node_id, Closure(node_id, scope))
        if kind is NodeKind.Argument:
            return self._eval(node.children[0], scope)
        if kind is NodeKind.MemberExpression:
            obj = self._eval(node.children[0], scope)
            return self._get_property(obj, self._property_key(node, scope), node_id)
        if kind is NodeKind.CallExpression:
            function, receiver = self._callee(node.children[0], scope)
            args = [self._eval(arg, scope) for arg in node.children[1:]]
            return self._call(function, receiver, args, node_id)
        if kind is NodeKind.NewExpression:
            function = self._eval(node.children[0], scope)
            args = [self._eval(arg, scope) for arg in node.children[1:]]
            return self._construct(function, args, node_id)
        if kind is NodeKind.UnaryExpression:
            return self._unary(node, scope)
        if kind is NodeKind.BinaryExpression:
            return self._binary(node, scope)
        raise InternalError('Unexpected expression %s' % kind)

    def _unary(self, node, scope):
        operand = self._eval(node.children[0], scope)
        if node.value == '!':
            return self._alloc('boolean', node.id, not truthy(operand))
        if node.value == '-':
            return self._alloc('number', node.id, -to_number(operand))
        return self._alloc('string', node.id, type_of(operand))

    def _binary(self, node, scope):
        operator = node.value
        left = self._eval(node.children[0], scope)
        if operator == '&&':
            return self._eval(node.children[1], scope) if truthy(left) else left
        if operator == '||':
            return left if truthy(left) else self._eval(node.children[1], scope)
        right = self._eval(node.children[1], scope)
        if operator == '+':
            if left.kind == 'string' or right.kind == 'string':
                return self._alloc('string', node.id, to_string(left) + to_string(right))
            return self._alloc('number', node.id, to_number(left) + to_number(right))
        if operator in ('-', '*', '/', '%'):
            return self._alloc('number', node.id, _arithmetic(operator, to_number(left), to_number(right)))
        if operator in ('==', '!=', '===', '!=='):
            equal = strict_equals(left, right) if len(operator) == 3 else loose_equals(left, right)
            return self._alloc('boolean', node.id, equal if operator[0] == '=' else not equal)
        if left.kind == 'string' and right.kind == 'string':
            a, b = left.data, right.data
        else:
            a, b = to_number(left), to_number(right)
            if math.isnan(a) or math.isnan(b):
                return self._alloc('boolean', node.id, False)
        result = {'<': a < b, '>': a > b, '<=': a <= b, '>=': a >= b}[operator]
        return self._alloc('boolean', node.id, result)

    def _property_key(self, member, scope):
        if member.value == '.':
            return self.ast.value(member.children[1])
        key = self._eval(member.children[1], scope)
        return to_string(key)

    def _get_property(self, obj, key, at):
        if obj.kind in ('undefined', 'null'):
            raise _Throw("cannot read property '%s' of %s" % (key, obj.kind), at)
        if obj.kind == 'array':
            if key == 'length':
                return self._alloc('number', at, float(len(obj.data)))
            index = _index(key)
            if index is not None:
                return obj.data[index] if index < len(obj.data) else self.undefined
            if key in self.array_methods:
                return self.array_methods[key]
        if obj.kind == 'string' and key == 'length':
            return self._alloc('number', at, float(len(obj.data)))
        if obj.props is None:
            return self.undefined
        return obj.props.get(key, self.undefined)

    def _set_property(self, obj, key, value, at):
        if obj.kind in ('undefined', 'null'):
            raise _Throw("cannot set property '%s' of %s" % (key, obj.kind), at)
        if obj.kind == 'array':
            index = _index(key)
            if index is not None:
                while len(obj.data) <= index:
                    obj.data.append(self.undefined)
                obj.data[index] = value
                return
        if obj.props is not None:
            obj.props[key] = value

    # calls

    def _callee(self, node_id, scope):
        node = self.ast[node_id]
        if node.kind is not NodeKind.MemberExpression:
            return self._eval(node_id, scope), None
        self._step(node_id)
        receiver = self._eval(node.children[0], scope)
        function = self._get_property(receiver, self._property_key(node, scope), node_id)
        return self._read(function, node_id), receiver

    def _call(self, function, this, args, site):
        if function.kind == 'builtin':
            return getattr(self, '_builtin_%s' % function.data)(this, args, site)
        if function.kind != 'function':
            raise _Throw('%s is not a function' % type_of(function), site)
        return self._invoke(function, self.global_object if this is None else this, args, site)

    def _invoke(self, function, this, args, site):
        if len(self.call_trace) >= self.max_call_depth:
            raise _Abort('maximum call depth of %d exceeded' % self.max_call_depth, site)
        closure = function.data
        node = self.ast[closure.node]
        self.call_trace.append(site)
        self.events.append(TraceEvent(event_kinds.METHOD_ENTER, None, site, ()))
        try:
            scope = Scope(closure.scope, this)
            call_trace = tuple(self.call_trace)
            self.events.append(TraceEvent(event_kinds.THIS_READ, this.obj_id, closure.node, call_trace))
            for index, param in enumerate(node.children[:-1]):
                value = args[index] if index < len(args) else self.undefined
                scope.declare(self.ast.value(param), value)
                self.events.append(TraceEvent(event_kinds.PARAM_READ, value.obj_id, param, call_trace))
            body = self.ast.children(node.children[-1])
            self._hoist(body, scope)
            try:
                self._exec_statements(body, scope)
            except _Return as ret:
                return ret.value
            return self.undefined
        finally:
            self.events.append(TraceEvent(event_kinds.METHOD_EXIT, None, None, ()))
            self.call_trace.pop()

    def _construct(self, function, args, site):
        if function.kind == 'builtin':
            constructor = getattr(self, '_construct_%s' % function.data, None)
            if constructor is None:
                raise _Throw('%s is not a constructor' % function.data, site)
            return constructor(args, site)
        if function.kind != 'function':
            raise _Throw('%s is not a constructor' % type_of(function), site)
        instance = self._alloc('object', site)
        result = self._invoke(function, instance, args, site)
        return result if result.is_object() else instance

    def _box(self, value, site):
        return self._alloc('object', site, value.data if value is not None and value.is_primitive() else None)

    def _bind_this(self, args, index, site):
        """Receiver for callbacks: absent, null and undefined bind the global object,
        primitives are boxed into a fresh object"""
        if index >= len(args) or args[index].kind in ('undefined', 'null'):
            return self.global_object
        if args[index].is_primitive():
            return self._box(args[index], site)
        return args[index]

    def _argument(self, args, index):
        return args[index] if index < len(args) else self.undefined

    # builtins

    def _builtin_call(self, this, args, site):
        function = self._argument(args, 0)
        return self._call(function, self._bind_this(args, 1, site), args[2:], site)

    def _builtin_apply(self, this, args, site):
        function = self._argument(args, 0)
        spread = self._argument(args, 2)
        arguments = list(spread.data) if spread.kind == 'array' else []
        return self._call(function, self._bind_this(args, 1, site), arguments, site)

    def _builtin_Object(self, this, args, site):
        return self._construct_Object(args, site)

    def _construct_Object(self, args, site):
        value = args[0] if args else None
        if value is not None and value.is_object():
            return value
        return self._box(value, site)

    def _builtin_Number(self, this, args, site):
        return self._alloc('number', site, to_number(args[0]) if args else 0.0)

    def _construct_Number(self, args, site):
        return self._box(self._builtin_Number(None, args, site), site)

    def _builtin_String(self, this, args, site):
        return self._alloc('string', site, to_string(args[0]) if args else '')

    def _construct_String(self, args, site):
        return self._box(self._builtin_String(None, args, site), site)

    def _builtin_Boolean(self, this, args, site):
        return self._alloc('boolean', site, truthy(args[0]) if args else False)

    def _construct_Boolean(self, args, site):
        return self._box(self._builtin_Boolean(None, args, site), site)

    def _builtin_Array(self, this, args, site):
        return self._alloc('array', site, list(args))

    def _construct_Array(self, args, site):
        return self._builtin_Array(None, args, site)

    def _builtin_print(self, this, args, site):
        debug('print: %s', ' '.join(to_string(arg) for arg in args))
        return self.undefined

    def _receiver_array(self, this, site):
        if this is None or this.kind != 'array':
            raise _Throw('array method called on a non-array', site)
        return this

    def _each(self, this, args, site):
        array = self._receiver_array(this, site)
        callback = self._argument(args, 0)
        if callback.kind not in ('function', 'builtin'):
            raise _Throw('%s is not a function' % type_of(callback), site)
        receiver = self._bind_this(args, 1, site)
        for index, element in enumerate(list(array.data)):
            position = self._alloc('number', site, float(index))
            yield element, self._call(callback, receiver, [element, position, array], site)

    def _builtin_map(self, this, args, site):
        results = [result for _, result in self._each(this, args, site)]
        return self._alloc('array', site, results)

    def _builtin_filter(self, this, args, site):
        kept = [element for element, result in self._each(this, args, site) if truthy(result)]
        return self._alloc('array', site, kept)

    def _builtin_forEach(self, this, args, site):
        for _ in self._each(this, args, site):
            pass
        return self.undefined

    def _builtin_some(self, this, args, site):
        found = False
        for _, result in self._each(this, args, site):
            if truthy(result):
                found = True
                break
        return self._alloc('boolean', site, found)

    def _builtin_every(self, this, args, site):
        holds = True
        for _, result in self._each(this, args, site):
            if not truthy(result):
                holds = False
                break
        return self._alloc('boolean', site, holds)

    def _builtin_find(self, this, args, site):
        for element, result in self._each(this, args, site):
            if truthy(result):
                return element
        return self.undefined

    def _builtin_push(self, this, args, site):
        array = self._receiver_array(this, site)
        array.data.extend(args)
        return self._alloc('number', site, float(len(array.data)))

    def _builtin_slice(self, this, args, site):
        array = self._receiver_array(this, site)
        length = len(array.data)
        start = _clamp(to_number(args[0]), length) if args else 0
        end = _clamp(to_number(args[1]), length) if len(args) > 1 else length
        return self._alloc('array', site, array.data[start:end])


def _clamp(number, length):
    if math.isnan(number):
        return 0
    index = int(number)
    if index < 0:
        index = max(length + index, 0)
    return min(index, length)


def _arithmetic(operator, a, b):
    if operator == '-':
        return a - b
    if operator == '*':
        return a * b
    if operator == '/':
        if b == 0:
            if a == 0 or math.isnan(a):
                return float('nan')
            return math.copysign(float('inf'), a) * math.copysign(1.0, b)
        return a / b
    if b == 0 or math.isinf(a):
        return float('nan')
    return math.fmod(a, b)


def interpret(ast, max_call_depth=MAX_CALL_DEPTH, max_steps=MAX_STEPS):
    """Run a MiniJS program and return its instrumentation trace.

    :raises: pylsa.exceptions.RuntimeError on an uncaught fault, with the trace prefix attached
    """
    return Interpreter(ast, max_call_depth, max_steps).run()


def collect_trace(ast, max_call_depth=MAX_CALL_DEPTH, max_steps=MAX_STEPS):
    """Like :func:`interpret` but falls back to the trace prefix of a faulting program"""
    try:
        return interpret(ast, max_call_depth, max_steps)
    except RuntimeError as e:
        logger.warning('Program faulted at node %s (%s), using trace prefix of %d events',
                       e.node, e, len(e.trace))
        return e.trace
