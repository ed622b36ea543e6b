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

# Analysis modes

POINTSTO_THIS = 'pointsto-this'
POINTSTO_VAR = 'pointsto-var'
ALLOC = 'alloc'

ALL = (POINTSTO_THIS, POINTSTO_VAR, ALLOC)
POINTSTO = (POINTSTO_THIS, POINTSTO_VAR)

# Bundled corpus scenario used when no corpus directory is given
DEFAULT_CORPUS = {
    POINTSTO_THIS: 'filter',
    POINTSTO_VAR: 'vars',
    ALLOC: 'alloc',
}
