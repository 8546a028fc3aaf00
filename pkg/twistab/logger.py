# Copyright 2026 twistab contributors
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

from twisted.python.failure import Failure


class LoggingRunner(object):
    """
    Runs twistab operations, timing and logging every one of them.

    :param log: A bound logger that has .msg() method
    :param clock: An ``IReactorTime`` provider; the reactor by default.
    """

    def __init__(self, log, clock=None):
        self._log = log
        if clock:
            self._clock = clock
        else:
            from twisted.internet import reactor
            self._clock = reactor

    def run(self, operation, f, *args, **kwargs):
        """
        Call ``f(*args, **kwargs)`` and log how it went as ``operation``.
        Exceptions are logged and re-raised unchanged.
        """
        start_seconds = self._clock.seconds()

        def record_time(**extra):
            seconds_taken = self._clock.seconds() - start_seconds
            if 'reason' in extra:
                self._log.msg('twistab operation failed', operation=operation,
                              seconds_taken=seconds_taken, **extra)
            else:
                self._log.msg('twistab operation executed successfully',
                              operation=operation,
                              seconds_taken=seconds_taken)

        try:
            result = f(*args, **kwargs)
        except Exception:
            record_time(reason=Failure())
            raise
        record_time()
        return result
