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

import os
import sys
import glob
import logging
import argparse
import functools
import collections

from pylsa.config import default_options, from_ini, validate_options
from pylsa.constants import DEFAULT_LEARNING_OPTIONS, exit_codes, modes
from pylsa.constants.general import BLACKBOX_ORACLE, ORACLES
from pylsa.exceptions import ConfigError, DataError, InvalidDataset, RuntimeError, SyntaxError
from pylsa.lib.stringlib import shorten
from pylsa.minilang import parse, interpret, render_node
from pylsa.dataset import Correctness, Dataset, outcome_counts
from pylsa.dsl import language_for, parse_program, render_program, run, format_result
from pylsa.dsl.program import NODE
from pylsa.synthesis import CandidateSpace
from pylsa.oracle import learn_loop, dump_log, all_mutants, expand_dataset, blackbox_counterexample

logger = logging.getLogger('pylsa')

CORPUS_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'corpus')

PROGRAM_FILE = 'analysis.dsl'
DATASET_FILE = 'dataset.jsonl'
LOG_FILE = 'counterexamples.jsonl'

RunConfig = collections.namedtuple('RunConfig', 'mode, corpus, out, options')

# Flags that override config file options
_OPTION_FLAGS = ('seed', 'oracle', 'budget', 'max_iters', 'jobs')


class _Failure(Exception):

    def __init__(self, status, message):
        super(_Failure, self).__init__(message)
        self.status = status


def _version():
    path = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'VERSION')
    try:
        with open(path) as handle:
            return handle.read().strip()
    except (IOError, OSError):
        return 'unknown'


def _positive_int(value):
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError('expected integer, got: %r' % value)
    if number <= 0:
        raise argparse.ArgumentTypeError('expected a positive integer, got: %d' % number)
    return number


def _nonnegative_int(value):
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError('expected integer, got: %r' % value)
    if number < 0:
        raise argparse.ArgumentTypeError('expected a non-negative integer, got: %d' % number)
    return number


def _node_ids(value):
    try:
        return tuple(int(part) for part in value.split(',') if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError('expected comma separated node ids, got: %r' % value)


def _add_run_options(parser, learning=False):
    parser.add_argument('--mode', choices=modes.ALL, help='analysis to learn or apply')
    parser.add_argument('--config', metavar='FILE', help='key=value file with learning parameters')
    if learning:
        parser.add_argument('--corpus', metavar='DIR', help='directory of .mini programs '
                                                            '(default: bundled corpus of the mode)')
        parser.add_argument('--out', metavar='DIR', help='output directory')
        parser.add_argument('--seed', type=_nonnegative_int, help='random seed of the blackbox oracle')
        parser.add_argument('--oracle', choices=ORACLES, help='counter-example search (default: guided)')
        parser.add_argument('--budget', type=_positive_int, help='candidate programs per oracle call')
        parser.add_argument('--max-iters', dest='max_iters', type=_nonnegative_int,
                            help='maximal number of refinements')
        parser.add_argument('--jobs', type=_positive_int, help='parallel oracle workers')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='pylsa',
        description='Learn static analysis rules for MiniJS programs from examples.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + _version())
    parser.add_argument('-v', '--verbose', action='count', default=0, help='more logging output')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    learn = commands.add_parser('learn', help='learn an analysis with counter-example refinement')
    _add_run_options(learn, learning=True)

    analyze = commands.add_parser('analyze', help='apply a learned analysis to one query')
    analyze.add_argument('program', help='MiniJS source file')
    analyze.add_argument('analysis', help='.dsl file')
    analyze.add_argument('node', type=int, help='query node id')
    analyze.add_argument('--calltrace', type=_node_ids, default=(), help='call sites, oldest first')
    _add_run_options(analyze)

    trace = commands.add_parser('trace', help='dump the instrumentation trace of a program')
    trace.add_argument('program', help='MiniJS source file')

    mutate = commands.add_parser('mutate', help='dump the mutants of a program')
    mutate.add_argument('program', help='MiniJS source file')
    mutate.add_argument('--site', type=int, help='mutate around this node only')

    evaluate = commands.add_parser('eval', help='score a learned analysis on a dataset')
    evaluate.add_argument('analysis', help='.dsl file')
    evaluate.add_argument('dataset', help='JSON lines dataset')
    _add_run_options(evaluate)

    build = commands.add_parser('dataset-build', help='extract a labeled dataset from a corpus')
    _add_run_options(build, learning=True)
    build.add_argument('--mutants', type=_nonnegative_int, default=0,
                       help='also add the examples of up to N mutant programs')
    return parser


def make_config(args):
    """Merge defaults, config file and command line flags into a RunConfig"""
    options = default_options()
    if getattr(args, 'config', None):
        options.update(from_ini(args.config))
    for flag in _OPTION_FLAGS:
        value = getattr(args, flag, None)
        if value is not None:
            options[flag] = value
    if getattr(args, 'mode', None):
        options['mode'] = args.mode
    options.setdefault('mode', modes.POINTSTO_THIS)
    if getattr(args, 'corpus', None):
        options['corpus'] = args.corpus
    if getattr(args, 'out', None):
        options['out'] = args.out
    validate_options(options)
    mode = options['mode']
    corpus = options.get('corpus') or os.path.join(CORPUS_DIR, modes.DEFAULT_CORPUS[mode])
    return RunConfig(mode, corpus, options.get('out'), options)


def _read(path):
    try:
        with open(path, encoding='utf-8') as handle:
            return handle.read()
    except (IOError, OSError) as e:
        raise _Failure(exit_codes.IO_ERROR, 'Could not read %s: %s' % (path, e))


def _write(directory, name, text):
    try:
        if not os.path.isdir(directory):
            os.makedirs(directory)
        with open(os.path.join(directory, name), 'w', encoding='utf-8') as handle:
            handle.write(text)
    except (IOError, OSError) as e:
        raise _Failure(exit_codes.IO_ERROR, 'Could not write %s: %s' % (name, e))


def _parse_file(path):
    try:
        return parse(_read(path))
    except SyntaxError as e:
        raise _Failure(exit_codes.IO_ERROR, '%s: %s' % (path, e))


def _load_analysis(path, mode):
    try:
        return parse_program(_read(path), language_for(mode))
    except SyntaxError as e:
        raise _Failure(exit_codes.IO_ERROR, '%s: %s' % (path, e))


def load_corpus(directory):
    """Parse all .mini files of directory in file name order"""
    if not os.path.isdir(directory):
        raise _Failure(exit_codes.CONFIG_ERROR, 'Corpus directory %s does not exist' % directory)
    paths = sorted(glob.glob(os.path.join(directory, '*.mini')))
    if not paths:
        raise _Failure(exit_codes.CONFIG_ERROR, 'Corpus directory %s contains no .mini files' % directory)
    return [_parse_file(path) for path in paths]


def _corpus_dataset(config):
    asts = load_corpus(config.corpus)
    dataset = Dataset.from_programs(asts, config.mode, config.options['max_call_depth'],
                                    config.options['max_steps'])
    if not len(dataset):
        raise _Failure(exit_codes.CONFIG_ERROR, 'Corpus %s yields no %s examples' % (config.corpus, config.mode))
    return dataset


def run_learn(config):
    dataset = _corpus_dataset(config)
    options = config.options
    learning = dict((key, options[key]) for key in DEFAULT_LEARNING_OPTIONS)
    space = CandidateSpace.for_mode(config.mode, **learning)
    oracle = None
    if options['oracle'] == BLACKBOX_ORACLE:
        oracle = functools.partial(blackbox_counterexample, seed=options['seed'])
    result = learn_loop(dataset, space, max_iters=options['max_iters'], budget=options['budget'],
                        jobs=options['jobs'], batch=options['batch'], oracle=oracle)
    text = render_program(result.program, space.language, pretty=True)
    if config.out:
        _write(config.out, PROGRAM_FILE, text + u'\n')
        _write(config.out, DATASET_FILE, result.dataset.dumps())
        _write(config.out, LOG_FILE, dump_log(result.log))
    print(text)
    print(u'# %s after %d refinements, %d examples' % ('converged' if result.converged else 'NOT converged',
                                                      result.iterations, len(result.dataset)))
    return exit_codes.OK if result.converged else exit_codes.NOT_CONVERGED


def run_analyze(config, program_path, analysis_path, node_id, call_trace=()):
    ast = _parse_file(program_path)
    program = _load_analysis(analysis_path, config.mode)
    for site in (node_id,) + tuple(call_trace):
        if site not in ast:
            raise _Failure(exit_codes.NODE_OUT_OF_RANGE,
                           'Node %d out of range, %s has nodes 0..%d' % (site, program_path, len(ast) - 1))
    result = run(program, ast, node_id, call_trace)
    if result.kind == NODE:
        print(u'%s\t%s\t%s' % (format_result(result), ast.describe(result.node),
                               shorten(render_node(ast, result.node), 60)))
    else:
        print(format_result(result))
    return exit_codes.OK


def run_eval(config, analysis_path, dataset_path):
    try:
        dataset = Dataset.load(dataset_path, config.options['max_call_depth'], config.options['max_steps'])
        mode = dataset.mode or config.mode
    except (DataError, InvalidDataset) as e:
        raise _Failure(exit_codes.IO_ERROR, str(e))
    program = _load_analysis(analysis_path, mode)
    counts = outcome_counts(dataset, program)
    total = len(dataset)
    for outcome, count in counts.items():
        share = 100.0 * count / total if total else 0.0
        print(u'%-13s %6d  %6.2f%%' % (outcome.value, count, share))
    return exit_codes.OK if counts[Correctness.UNSOUND] == 0 else exit_codes.UNSOUND


def run_trace(program_path):
    ast = _parse_file(program_path)
    try:
        print(interpret(ast).dump())
    except RuntimeError as e:
        print(e.trace.dump())
        raise _Failure(exit_codes.IO_ERROR, '%s: node %s: %s' % (program_path, e.node, e))
    return exit_codes.OK


def run_mutate(program_path, site=None):
    ast = _parse_file(program_path)
    if site is not None and site not in ast:
        raise _Failure(exit_codes.NODE_OUT_OF_RANGE, 'Node %d out of range' % site)
    sites = [site] if site is not None else [node.id for node in ast.nodes if not node.synthetic]
    for node_id in sites:
        for mutant in all_mutants(ast, node_id):
            mutation = mutant.mutation
            print(u'// %s at %d: %s' % (mutation.kind, mutation.site, mutation.payload))
            print(mutant.ast.source)
            print()
    return exit_codes.OK


def run_dataset_build(config, mutants=0):
    dataset = _corpus_dataset(config)
    if mutants:
        dataset = expand_dataset(dataset, limit=mutants)
    if config.out:
        _write(config.out, DATASET_FILE, dataset.dumps())
    else:
        sys.stdout.write(dataset.dumps())
    logger.info('Dataset of %d %s examples', len(dataset), config.mode)
    return exit_codes.OK


def run_command(args):
    if args.command == 'trace':
        return run_trace(args.program)
    if args.command == 'mutate':
        return run_mutate(args.program, args.site)
    config = make_config(args)
    if args.command == 'learn':
        return run_learn(config)
    if args.command == 'analyze':
        return run_analyze(config, args.program, args.analysis, args.node, args.calltrace)
    if args.command == 'eval':
        return run_eval(config, args.analysis, args.dataset)
    return run_dataset_build(config, args.mutants)


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose > 1 else
                        logging.INFO if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        return run_command(args)
    except ConfigError as e:
        print(u'error: %s' % e, file=sys.stderr)
        return exit_codes.CONFIG_ERROR
    except InvalidDataset as e:
        print(u'error: %s' % e, file=sys.stderr)
        return exit_codes.CONFIG_ERROR
    except _Failure as e:
        print(u'error: %s' % e, file=sys.stderr)
        return e.status


if __name__ == '__main__':
    sys.exit(main())
