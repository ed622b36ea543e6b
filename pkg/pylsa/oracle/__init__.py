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

from pylsa.oracle.mutations import Mutation, Mutant, mutate_ema, mutate_gj, ema_mutants, \
    global_jump_mutants, all_mutants
from pylsa.oracle.search import CounterExampleReport, read_positions, check_mutant, \
    find_counterexample, blackbox_counterexample, expand_dataset
from pylsa.oracle.loop import LearnResult, learn_loop, log_entry, dump_log
