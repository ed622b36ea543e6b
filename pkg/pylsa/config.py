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
import logging
import configparser

from pylsa.constants import DEFAULT_LEARNING_OPTIONS, DEFAULT_ORACLE_OPTIONS, \
    DEFAULT_INTERPRETER_OPTIONS, modes
from pylsa.constants.general import ORACLES
from pylsa.exceptions import ConfigError

logger = logging.getLogger('pylsa')

DEFAULT_SECTION = 'pylsa'

_CONVERTERS = {
    'action_bound': int,
    'guard_bound': int,
    'value_top_k': int,
    'lambda': float,
    'ig_tolerance': float,
    'budget': int,
    'max_iters': int,
    'seed': int,
    'oracle': str,
    'jobs': int,
    'batch': int,
    'max_call_depth': int,
    'max_steps': int,
    'mode': str,
    'corpus': str,
    'out': str,
}


def default_options():
    options = {}
    options.update(DEFAULT_LEARNING_OPTIONS)
    options.update(DEFAULT_ORACLE_OPTIONS)
    options.update(DEFAULT_INTERPRETER_OPTIONS)
    return options


def from_ini(ini_file, section=None):
    """
    Read learning, oracle and interpreter parameters from a key=value file.
    :param ini_file: Name of the config file, e.g. 'learn.cfg'
    :param section: specify alternative section in the file. Sections 'pylsa' and 'learning'
                    are searched by default
    :return: dictionary with typed option values (only the keys found in the file)

    Example:
        action_bound = 4
        value_top_k = 10
        lambda = 0.01

    A section header is optional. For compatibility with shared ini files a 'pylsa_' prefix is
    allowed on keys, it will be removed automatically.
    """
    if not os.path.exists(ini_file):
        raise ConfigError('Could not find config file %s' % ini_file)
    with open(ini_file, encoding='utf-8') as handle:
        text = handle.read()
    return parse_options(text, section=section, source=ini_file)


def _read(text, source):
    cp = configparser.ConfigParser(interpolation=None)
    try:
        cp.read_string(text, source=source)
    except configparser.MissingSectionHeaderError:
        # plain key=value file without any section
        cp = configparser.ConfigParser(interpolation=None)
        try:
            cp.read_string('[%s]\n%s' % (DEFAULT_SECTION, text), source=source)
        except configparser.Error as e:
            raise ConfigError('Could not parse config %s: %s' % (source, e))
    except configparser.Error as e:
        raise ConfigError('Could not parse config %s: %s' % (source, e))
    return cp


def parse_options(text, section=None, source='<string>'):
    cp = _read(text, source)
    if not cp.sections():
        return {}
    if section:
        sec_list = [section]
    elif len(cp.sections()) == 1:
        sec_list = cp.sections()
    else:
        sec_list = [DEFAULT_SECTION, 'learning']

    for sec in sec_list:
        try:
            params = dict(cp.items(sec))
        except configparser.NoSectionError:
            continue
        break
    else:
        raise ConfigError('Could not guess which section to use for options from %s' % source)

    def rm_prefix(param):
        return param[6:] if param.startswith('pylsa_') else param

    options = {}
    for key, raw in params.items():
        key = rm_prefix(key)
        if key not in _CONVERTERS:
            logger.warning('Ignoring unknown option %r in %s', key, source)
            continue
        try:
            options[key] = _CONVERTERS[key](raw.strip())
        except ValueError:
            raise ConfigError('Invalid value %r for option %s in %s' % (raw, key, source))
    return options


def validate_options(options):
    """Check value ranges of a complete option dictionary, raise ConfigError on violation"""
    for key in ('action_bound', 'guard_bound', 'value_top_k', 'budget', 'jobs', 'batch',
                'max_call_depth', 'max_steps'):
        if key in options and options[key] <= 0:
            raise ConfigError('Option %s must be positive, got %r' % (key, options[key]))
    for key in ('lambda', 'ig_tolerance', 'max_iters'):
        if key in options and options[key] < 0:
            raise ConfigError('Option %s must not be negative, got %r' % (key, options[key]))
    mode = options.get('mode')
    if mode is not None and mode not in modes.ALL:
        raise ConfigError('Unknown analysis mode %r, expected one of %s' % (mode, ', '.join(modes.ALL)))
    oracle = options.get('oracle')
    if oracle is not None and oracle not in ORACLES:
        raise ConfigError('Unknown oracle %r, expected one of %s' % (oracle, ', '.join(ORACLES)))
    return options
