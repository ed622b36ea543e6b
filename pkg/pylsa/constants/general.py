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

# Interpreter limits
MAX_CALL_DEPTH = 32
MAX_STEPS = 200000

# Learner
ACTION_BOUND = 5
GUARD_BOUND = 6
VALUE_TOP_K = 10
REGULARIZATION = 0.01
IG_TOLERANCE = 1e-12

# Digits kept when comparing regularized costs
COST_PRECISION = 9

# Counter-example searches selectable by the 'oracle' option
GUIDED_ORACLE = 'guided'
BLACKBOX_ORACLE = 'blackbox'
ORACLES = (GUIDED_ORACLE, BLACKBOX_ORACLE)
