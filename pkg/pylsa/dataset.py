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

import json
import logging
import collections
from enum import Enum
from functools import lru_cache

from pylsa.constants import event_kinds, modes
from pylsa.constants.general import MAX_CALL_DEPTH, MAX_STEPS
from pylsa.exceptions import DataError, InvalidDataset, SyntaxError
from pylsa.minilang import parse, collect_trace
from pylsa.minilang.nodes import NodeKind
from pylsa.dsl.machine import exec_program
from pylsa.dsl.program import NODE, TOP

logger = logging.getLogger('pylsa')
debug = logger.debug


class Correctness(Enum):
    PRECISE = 'precise'
    SOUND_APPROX = 'sound-approx'
    UNSOUND = 'unsound'


class Label(collections.namedtuple('Label', 'obj_id, self_ok, accept, is_alloc')):
    """Ground truth of one query.

    Points-to labels name the object read at the query (``obj_id``) and the nodes where it was
    read before (``accept``); ``self_ok`` is set when there are none. Allocation labels only
    carry ``is_alloc``.
    """
    __slots__ = ()

    @classmethod
    def pointsto(cls, obj_id, accept):
        accept = tuple(sorted(set(accept)))
        return cls(obj_id, not accept, accept, None)

    @classmethod
    def alloc(cls, is_alloc, obj_id=None):
        return cls(obj_id, None, None, bool(is_alloc))

    def to_json(self):
        if self.is_alloc is not None:
            return {'alloc': self.is_alloc}
        return {'self': self.self_ok, 'accept': list(self.accept)}

    def same_truth(self, other):
        """Compare labels ignoring object identities"""
        return (self.self_ok, self.accept, self.is_alloc) == (other.self_ok, other.accept, other.is_alloc)


class Example(collections.namedtuple('Example', 'ast, node, call_trace, label, mode')):
    __slots__ = ()
    __tracing_attrs__ = ('node', 'call_trace', 'label', 'mode')

    @property
    def source(self):
        return self.ast.source

    @property
    def key(self):
        return self.ast.source, self.node, self.call_trace

    def to_json(self):
        return collections.OrderedDict([
            ('source', self.source),
            ('node', self.node),
            ('calltrace', list(self.call_trace)),
            ('label', self.label.to_json()),
            ('mode', self.mode),
        ])


@lru_cache(maxsize=4096)
def trace_of(ast, max_call_depth=MAX_CALL_DEPTH, max_steps=MAX_STEPS):
    """Ground truth trace of a program; faulting programs contribute their trace prefix"""
    return collect_trace(ast, max_call_depth, max_steps)


def _is_alloc_candidate(ast, node_id):
    node = ast[node_id]
    return not (node.synthetic or node.kind is NodeKind.ThisExpression or ast.is_property_name(node_id))


def extract_examples(ast, trace, mode):
    """Label the queries of one program run.

    pointsto-this: every function entry (ThisRead).
    pointsto-var: every identifier assigned by an assignment statement.
    alloc: the first read at every expression node, labeled allocating iff the object was
    not seen before within the same function activation. Objects that exist before the
    program starts (global, undefined, null, builtins) are never allocating.
    """
    if mode not in modes.ALL:
        raise DataError('Unknown analysis mode %r' % mode)
    examples = []
    seen_keys = set()
    read_at = collections.defaultdict(list)
    call_stack = []
    frames = [set()]
    preexisting = set()
    alloc_nodes = set()

    for event in trace:
        kind = event.kind
        if kind == event_kinds.METHOD_ENTER:
            call_stack.append(event.at)
            frames.append(set())
            continue
        if kind == event_kinds.METHOD_EXIT:
            call_stack.pop()
            frames.pop()
            continue
        if kind == event_kinds.ALLOC:
            if ast[event.at].synthetic:
                preexisting.add(event.obj_id)
            continue
        if kind not in event_kinds.READS:
            continue

        example = None
        if mode == modes.POINTSTO_THIS:
            if kind == event_kinds.THIS_READ:
                example = Example(ast, event.at, event.call_trace,
                                  Label.pointsto(event.obj_id, read_at[event.obj_id]), mode)
        elif mode == modes.POINTSTO_VAR:
            if kind == event_kinds.OBJECT_READ and ast.is_assignment_target(event.at) and \
                    ast.kind(event.at) is NodeKind.Identifier:
                example = Example(ast, event.at, tuple(call_stack),
                                  Label.pointsto(event.obj_id, read_at[event.obj_id]), mode)
        elif kind != event_kinds.THIS_READ and event.at not in alloc_nodes and \
                _is_alloc_candidate(ast, event.at):
            alloc_nodes.add(event.at)
            fresh = event.obj_id not in frames[-1] and event.obj_id not in preexisting
            example = Example(ast, event.at, (), Label.alloc(fresh, event.obj_id), mode)

        read_at[event.obj_id].append(event.at)
        frames[-1].add(event.obj_id)
        if example is not None and example.key not in seen_keys:
            seen_keys.add(example.key)
            examples.append(example)
    return examples


def examples_of(ast, mode, max_call_depth=MAX_CALL_DEPTH, max_steps=MAX_STEPS):
    return extract_examples(ast, trace_of(ast, max_call_depth, max_steps), mode)


def check_correct(result, example):
    """Judge an analysis result against the ground truth of an example"""
    if result == TOP:
        return Correctness.SOUND_APPROX
    label = example.label
    if example.mode == modes.ALLOC:
        if result.kind in ('NewAlloc', 'NoAlloc') and (result.kind == 'NewAlloc') == label.is_alloc:
            return Correctness.PRECISE
        return Correctness.UNSOUND
    if result.kind != NODE:
        return Correctness.UNSOUND
    if result.node == example.node:
        return Correctness.PRECISE if label.self_ok else Correctness.UNSOUND
    return Correctness.PRECISE if result.node in label.accept else Correctness.UNSOUND


def evaluate(program, example):
    """Run program on the query of example, return (Correctness, read set)"""
    result, reads = exec_program(program, example.ast, example.node, example.call_trace)
    return check_correct(result, example), reads


def r(example, program):
    return 0 if evaluate(program, example)[0] is Correctness.PRECISE else 1


def cost(dataset, program):
    return sum(r(example, program) for example in dataset)


def is_correct_on(dataset, program):
    return all(evaluate(program, example)[0] is not Correctness.UNSOUND for example in dataset)


def outcome_counts(dataset, program):
    counts = collections.Counter(evaluate(program, example)[0] for example in dataset)
    return collections.OrderedDict((c, counts[c]) for c in Correctness)


class Dataset(object):
    """Ordered collection of examples without duplicate (source, node, call trace) queries"""

    def __init__(self, examples=()):
        self.examples = []
        self._keys = set()
        self.extend(examples)

    def add(self, example):
        """Append example unless its query is already present; return whether it was added"""
        key = example.key
        if key in self._keys:
            return False
        self._keys.add(key)
        self.examples.append(example)
        return True

    def extend(self, examples):
        return sum(1 for example in examples if self.add(example))

    def copy(self):
        return Dataset(self.examples)

    def __len__(self):
        return len(self.examples)

    def __iter__(self):
        return iter(self.examples)

    def __getitem__(self, index):
        return self.examples[index]

    def __contains__(self, example):
        return example.key in self._keys

    def __eq__(self, other):
        if not isinstance(other, Dataset):
            return NotImplemented
        return self.examples == other.examples

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    @property
    def mode(self):
        """The analysis mode shared by all examples, None when empty"""
        found = set(example.mode for example in self.examples)
        if len(found) > 1:
            raise InvalidDataset('Dataset mixes analysis modes %s' % ', '.join(sorted(found)))
        return found.pop() if found else None

    def programs(self):
        """Distinct programs in order of first appearance"""
        return list(collections.OrderedDict((example.ast, None) for example in self.examples))

    @classmethod
    def from_programs(cls, asts, mode, max_call_depth=MAX_CALL_DEPTH, max_steps=MAX_STEPS):
        dataset = cls()
        for ast in asts:
            dataset.extend(examples_of(ast, mode, max_call_depth, max_steps))
        debug('Extracted %d %s examples from %d programs', len(dataset), mode, len(asts))
        return dataset

    def dumps(self):
        return u''.join(u'%s\n' % json.dumps(example.to_json(), ensure_ascii=False)
                        for example in self.examples)

    def dump(self, path):
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(self.dumps())

    @classmethod
    def loads(cls, text, source='<string>', max_call_depth=MAX_CALL_DEPTH, max_steps=MAX_STEPS):
        """Read JSON lines, recompute traces and check every stored label against them"""
        dataset = cls()
        asts = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            where = '%s:%d' % (source, lineno)
            try:
                record = json.loads(line)
                program, node = record['source'], record['node']
                call_trace, label, mode = tuple(record['calltrace']), record['label'], record['mode']
            except (ValueError, KeyError, TypeError) as e:
                raise DataError('%s: malformed dataset record (%s)' % (where, e))
            if mode not in modes.ALL:
                raise DataError('%s: unknown analysis mode %r' % (where, mode))
            if program not in asts:
                try:
                    asts[program] = parse(program)
                except SyntaxError as e:
                    raise DataError('%s: %s' % (where, e))
            ast = asts[program]
            truth = dict((example.key[1:], example)
                         for example in examples_of(ast, mode, max_call_depth, max_steps))
            example = truth.get((node, call_trace))
            if example is None:
                raise DataError('%s: node %r with call trace %r is not a %s query of its program'
                                % (where, node, list(call_trace), mode))
            if example.label.to_json() != label:
                raise DataError('%s: stored label %r does not match the program trace %r'
                                % (where, label, example.label.to_json()))
            if not dataset.add(example):
                raise DataError('%s: duplicate query' % where)
        return dataset

    @classmethod
    def load(cls, path, max_call_depth=MAX_CALL_DEPTH, max_steps=MAX_STEPS):
        try:
            with open(path, encoding='utf-8') as handle:
                text = handle.read()
        except (IOError, OSError) as e:
            raise DataError('Could not read dataset %s: %s' % (path, e))
        return cls.loads(text, path, max_call_depth, max_steps)
