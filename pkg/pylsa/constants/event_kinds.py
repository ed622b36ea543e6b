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

# Trace event kinds

OBJECT_READ = 'ObjectRead'
THIS_READ = 'ThisRead'
PARAM_READ = 'ParamRead'
METHOD_ENTER = 'MethodEnter'
METHOD_EXIT = 'MethodExit'
ALLOC = 'Alloc'

READS = (OBJECT_READ, THIS_READ, PARAM_READ)
ALL = (OBJECT_READ, THIS_READ, PARAM_READ, METHOD_ENTER, METHOD_EXIT, ALLOC)
