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

# Program mutation kinds

# Equivalence modulo abstraction: the analysis result must not change
ADD_DEAD_CODE = 'AddDeadCode'
RENAME_VARIABLE = 'RenameVariable'
RENAME_USER_FUNCTION = 'RenameUserFunction'
ADD_SIDE_EFFECT_FREE_EXPR = 'AddSideEffectFreeExpr'

# Global jumps: may change program semantics
CHANGE_CONSTANT = 'ChangeConstant'
ADD_METHOD_ARGUMENT = 'AddMethodArgument'
ADD_METHOD_PARAMETER = 'AddMethodParameter'

EMA = (ADD_DEAD_CODE, RENAME_VARIABLE, RENAME_USER_FUNCTION, ADD_SIDE_EFFECT_FREE_EXPR)
GLOBAL_JUMP = (CHANGE_CONSTANT, ADD_METHOD_ARGUMENT, ADD_METHOD_PARAMETER)

# Counter-example violation kinds
EMA_VIOLATION = 'ema'
DATASET_VIOLATION = 'dataset'
