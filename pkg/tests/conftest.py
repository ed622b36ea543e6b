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

import pytest

from pylsa.minilang import parse

# var b = {};  a = b;
RUNNING_EXAMPLE = u'var b = {};\na = b;'


@pytest.fixture()
def running_example():
    return parse(RUNNING_EXAMPLE)


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "acceptance: slow end to end test over the bundled corpus"
    )


def pytest_addoption(parser):
    parser.addoption(
        "--no-acceptance",
        action="store_true",
        help="Specify this option to omit the slow acceptance tests"
    )


def pytest_runtest_setup(item):
    acceptance_marker = item.get_closest_marker("acceptance")

    if acceptance_marker is not None and item.config.getoption("--no-acceptance"):
        pytest.skip("Acceptance tests are omitted due to command line option")
