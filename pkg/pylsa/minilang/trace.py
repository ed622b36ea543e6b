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

import collections

from pylsa.constants import event_kinds

TraceEvent = collections.namedtuple('TraceEvent', 'kind, obj_id, at, call_trace')


class Trace(object):
    """Ordered, immutable sequence of instrumentation events of one program run"""

    def __init__(self, events=()):
        self.events = tuple(events)

    def __iter__(self):
        return iter(self.events)

    def __len__(self):
        return len(self.events)

    def __getitem__(self, index):
        return self.events[index]

    def __eq__(self, other):
        if not isinstance(other, Trace):
            return NotImplemented
        return self.events == other.events

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.events)

    def reads(self):
        return [event for event in self.events if event.kind in event_kinds.READS]

    def of_kind(self, kind):
        return [event for event in self.events if event.kind == kind]

    def dump(self):
        """Line oriented text form: ``EVENTKIND objId nodeId [callTrace...]``"""
        lines = []
        for event in self.events:
            fields = [event.kind,
                      u'-' if event.obj_id is None else u'%d' % event.obj_id,
                      u'-' if event.at is None else u'%d' % event.at]
            fields.extend(u'%d' % site for site in event.call_trace)
            lines.append(u' '.join(fields))
        return u'\n'.join(lines)
