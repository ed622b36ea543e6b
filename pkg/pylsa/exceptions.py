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

class Error(Exception):
    pass


class InternalError(Error):
    pass


class SyntaxError(Error):
    """Malformed MiniJS source or malformed analysis program text"""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = '%s (line %s, column %s)' % (message, line, column)
        super(SyntaxError, self).__init__(message)
        self.line = line
        self.column = column


class RuntimeError(Error):
    """A MiniJS program faulted while being interpreted.

    The events recorded up to the fault are available as ``trace``.
    """

    def __init__(self, message, node=None, trace=None):
        super(RuntimeError, self).__init__(message)
        self.node = node
        self.trace = trace


class ProgramError(Error):
    pass


class DataError(Error):
    pass


class InvalidDataset(DataError):
    pass


class EmptyVector(DataError):
    pass


class ConfigError(Error):
    pass
