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

from pylsa.dsl.instructions import by_name, Language, POINTSTO, ALLOCATION, language_for, lex_key
from pylsa.dsl.program import LatticeResult, Leaf, Branch, TOP, BOTTOM, NEWALLOC, NOALLOC, \
    node_result, leq, format_result
from pylsa.dsl.machine import ExecState, initial_state, mv, wr, exec_guard, exec_program, run
from pylsa.dsl.serialize import parse_program, render_program, render_token
