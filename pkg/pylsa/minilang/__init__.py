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

from pylsa.minilang.nodes import Ast, Node, NodeKind, Proto, proto
from pylsa.minilang.parser import parse
from pylsa.minilang.printer import render, render_node
from pylsa.minilang.trace import Trace, TraceEvent
from pylsa.minilang.interpreter import interpret, collect_trace
