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

import random
import logging
import itertools
import collections
from concurrent.futures import ThreadPoolExecutor

from pylsa.constants import DEFAULT_ORACLE_OPTIONS, mutation_kinds
from pylsa.dataset import Correctness, evaluate, examples_of
from pylsa.dsl.machine import exec_program, run
from pylsa.dsl.program import NODE, node_result
from pylsa.oracle.mutations import all_mutants

logger = logging.getLogger('pylsa')
debug = logger.debug

# Candidates handed to the worker pool per round, per worker
CHUNK_SIZE = 8


class CounterExampleReport(collections.namedtuple(
        'CounterExampleReport', 'example, violation, candidates_tried, mutation')):
    __slots__ = ()
    __tracing_attrs__ = ('example', 'violation', 'candidates_tried', 'mutation')


def read_positions(program, example):
    """Nodes the analysis looks at while answering the query of example, in visiting order"""
    return exec_program(program, example.ast, example.node, example.call_trace)[1]


def transport_query(example, mapping):
    node = mapping.get(example.node)
    call_trace = tuple(mapping.get(site) for site in example.call_trace)
    if node is None or None in call_trace:
        return None
    return node, call_trace


def transport_result(result, mapping):
    if result.kind != NODE:
        return result
    node = mapping.get(result.node)
    return None if node is None else node_result(node)


def check_mutant(program, originals, dataset, mutant, mode):
    """First violation a mutant exposes.

    :param originals: examples of the program the mutant was derived from
    :returns: tuple (violation kind, example) or None
    """
    fresh = examples_of(mutant.ast, mode)
    if mutant.mutation.kind in mutation_kinds.EMA:
        by_query = dict(((e.node, e.call_trace), e) for e in fresh)
        for original in originals:
            query = transport_query(original, mutant.mapping)
            if query is None:
                continue
            expected = transport_result(run(program, original.ast, original.node, original.call_trace),
                                        mutant.mapping)
            if run(program, mutant.ast, *query) == expected:
                continue
            candidate = by_query.get(query)
            if candidate is not None and candidate not in dataset:
                return mutation_kinds.EMA_VIOLATION, candidate
    for candidate in fresh:
        if candidate in dataset:
            continue
        if evaluate(program, candidate)[0] is Correctness.UNSOUND:
            return mutation_kinds.DATASET_VIOLATION, candidate
    return None


def _examples_by_program(dataset):
    grouped = collections.OrderedDict()
    for example in dataset:
        grouped.setdefault(example.ast, []).append(example)
    return grouped


def guided_sites(program, dataset):
    """Mutation sites: nodes read by the analysis on the dataset first, then all others"""
    grouped = _examples_by_program(dataset)
    read = collections.OrderedDict()
    for ast, examples in grouped.items():
        for example in examples:
            for node_id in read_positions(program, example):
                if not ast[node_id].synthetic:
                    read[(ast, node_id)] = None
    for site in read:
        yield site
    for ast in grouped:
        for node in ast.nodes:
            if not node.synthetic and (ast, node.id) not in read:
                yield ast, node.id


def _candidates(sites):
    for ast, site in sites:
        for mutant in all_mutants(ast, site):
            yield ast, mutant


def _random_sites(dataset, rng):
    programs = dataset.programs()
    while True:
        ast = rng.choice(programs)
        yield ast, rng.choice([node.id for node in ast.nodes if not node.synthetic])


def _search(program, dataset, candidates, budget, jobs):
    mode = dataset.mode
    grouped = _examples_by_program(dataset)
    stream = itertools.islice(candidates, budget)

    def check(candidate):
        ast, mutant = candidate
        return check_mutant(program, grouped[ast], dataset, mutant, mode)

    executor = ThreadPoolExecutor(max_workers=jobs) if jobs > 1 else None
    tried = 0
    try:
        while True:
            chunk = list(itertools.islice(stream, max(jobs, 1) * CHUNK_SIZE))
            if not chunk:
                break
            outcomes = executor.map(check, chunk) if executor is not None else map(check, chunk)
            for candidate, found in zip(chunk, outcomes):
                tried += 1
                if found is not None:
                    violation, example = found
                    debug('Counter-example (%s) after %d candidates: %s', violation, tried,
                          candidate[1].mutation)
                    return CounterExampleReport(example, violation, tried, candidate[1].mutation)
    finally:
        if executor is not None:
            executor.shutdown(wait=True)
    debug('No counter-example within %d candidates', tried)
    return None


def find_counterexample(program, dataset, budget=DEFAULT_ORACLE_OPTIONS['budget'], jobs=1):
    """Search mutants of the dataset programs for a query the analysis gets wrong.

    Sites the analysis reads are mutated first. Each mutant program counts as one candidate;
    the search gives up after ``budget`` candidates. With ``jobs`` > 1 candidates are checked
    concurrently but the first counter-example in candidate order is returned.
    """
    return _search(program, dataset, _candidates(guided_sites(program, dataset)), budget, jobs)


def blackbox_counterexample(program, dataset, budget=DEFAULT_ORACLE_OPTIONS['budget'], jobs=1,
                            seed=DEFAULT_ORACLE_OPTIONS['seed']):
    """Like :func:`find_counterexample` but mutating uniformly random programs and sites"""
    if not len(dataset):
        return None
    rng = random.Random(seed)
    return _search(program, dataset, _candidates(_random_sites(dataset, rng)), budget, jobs)


def expand_dataset(dataset, limit=None):
    """Dataset extended by the examples of every mutant of every dataset program.

    :param limit: optional maximum number of mutant programs to add
    """
    mode = dataset.mode
    expanded = dataset.copy()
    seen = set(ast.source for ast in dataset.programs())
    added = 0
    for ast in dataset.programs():
        for node in ast.nodes:
            if node.synthetic:
                continue
            for mutant in all_mutants(ast, node.id):
                if limit is not None and added >= limit:
                    return expanded
                if mutant.ast.source in seen:
                    continue
                seen.add(mutant.ast.source)
                expanded.extend(examples_of(mutant.ast, mode))
                added += 1
    debug('Expanded dataset by %d mutant programs to %d examples', added, len(expanded))
    return expanded

