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

from pylsa.constants import DEFAULT_ORACLE_OPTIONS
from pylsa.exceptions import InvalidDataset
from pylsa.lib.tracing import trace
from pylsa.synthesis import synthesize
from pylsa.oracle.search import find_counterexample

logger = logging.getLogger('pylsa')
debug = logger.debug

LearnResult = collections.namedtuple('LearnResult', 'program, dataset, converged, iterations, log')


def log_entry(iteration, report):
    return collections.OrderedDict([
        ('iter', iteration),
        ('violation', report.violation),
        ('candidatesTried', report.candidates_tried),
        ('source', report.example.source),
    ])


def dump_log(log):
    return u''.join(u'%s\n' % json.dumps(entry, ensure_ascii=False) for entry in log)


def learn_loop(seed_dataset, space, max_iters=DEFAULT_ORACLE_OPTIONS['max_iters'],
               budget=DEFAULT_ORACLE_OPTIONS['budget'], jobs=1, batch=1, oracle=None):
    """Alternate synthesis and counter-example search until the oracle finds nothing.

    :param oracle: counter-example search, defaults to :func:`find_counterexample`
    :returns: LearnResult; ``converged`` is False when max_iters refinements were used up
    :raises: pylsa.exceptions.InvalidDataset for an empty or mixed mode seed dataset
    """
    if not len(seed_dataset):
        raise InvalidDataset('Cannot learn from an empty dataset')
    oracle = oracle or find_counterexample
    dataset = seed_dataset.copy()
    program = synthesize(dataset, space)
    log = []
    iterations = 0
    while iterations < max_iters:
        reports = []
        for _ in range(batch):
            report = oracle(program, dataset, budget, jobs=jobs)
            if report is None:
                break
            trace(report)
            dataset.add(report.example)
            reports.append(report)
        if not reports:
            logger.info('Converged after %d refinements with %d examples', iterations, len(dataset))
            return LearnResult(program, dataset, True, iterations, log)
        iterations += 1
        log.extend(log_entry(iterations, report) for report in reports)
        debug('Iteration %d: %d counter-examples, dataset now %d examples', iterations, len(reports),
              len(dataset))
        program = synthesize(dataset, space)
    logger.warning('No convergence within %d refinements', max_iters)
    return LearnResult(program, dataset, False, iterations, log)
