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

from pylsa.exceptions import *
from pylsa.config import from_ini, parse_options
from pylsa.minilang import parse, render, interpret
from pylsa.dsl import parse_program, render_program, exec_program
from pylsa.dataset import Dataset, Example, extract_examples, check_correct
from pylsa.synthesis import CandidateSpace, synthesize
from pylsa.oracle import find_counterexample, learn_loop

tracing = os.environ.get('PYLSA_TRACE', 'FALSE').upper() in ('TRUE', '1')
