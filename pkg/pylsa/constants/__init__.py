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

from pylsa.constants.general import MAX_CALL_DEPTH, MAX_STEPS, ACTION_BOUND, GUARD_BOUND, VALUE_TOP_K, \
    REGULARIZATION, IG_TOLERANCE, GUIDED_ORACLE

DEFAULT_LEARNING_OPTIONS = {
    "action_bound": ACTION_BOUND,
    "guard_bound": GUARD_BOUND,
    "value_top_k": VALUE_TOP_K,
    "lambda": REGULARIZATION,
    "ig_tolerance": IG_TOLERANCE,
}

DEFAULT_ORACLE_OPTIONS = {
    "budget": 5000,
    "max_iters": 100,
    "seed": 0,
    "oracle": GUIDED_ORACLE,
    "jobs": 1,
    "batch": 1,
}

DEFAULT_INTERPRETER_OPTIONS = {
    "max_call_depth": MAX_CALL_DEPTH,
    "max_steps": MAX_STEPS,
}
