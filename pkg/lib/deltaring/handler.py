# -*- coding: utf-8 -*-
#
# This file is part of deltaring (https://github.com/deltaring/deltaring).
# Copyright (c) 2024-2026 The deltaring developers
# All rights reserved.
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions
# are met:
#
# 1. Redistributions of source code must retain the above copyright
#    notice, this list of conditions and the following disclaimer.
# 2. Redistributions in binary form must reproduce the above copyright
#    notice, this list of conditions and the following disclaimer in the
#    documentation and/or other materials provided with the distribution.
# 3. The name of the author may not be used to endorse or promote products
#    derived from this software without specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE AUTHOR ``AS IS'' AND ANY EXPRESS OR
# IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE IMPLIED WARRANTIES
# OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE DISCLAIMED.
# IN NO EVENT SHALL THE AUTHOR BE LIABLE FOR ANY DIRECT, INDIRECT,
# INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES (INCLUDING, BUT
# NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES; LOSS OF USE,
# DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER CAUSED AND ON ANY
# THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY, OR TORT
# (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE OF
# THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.


import datetime
import logging
import time
import traceback

import yaml

from .harness import TheoremReport, Instance, REFUSALS
from .reporters import ReporterBase

logger = logging.getLogger(__name__)


class EntryState(object):
    """One regression entry (or a precomputed report) on its way into a Report"""

    def __init__(self, cache_storage, entry, context):
        self.cache_storage = cache_storage
        self.entry = entry
        self.context = context
        self.verb = None
        self.report = None
        self.old_verdict = None
        self.timestamp = None
        self.exception = None
        self.traceback = None

    @classmethod
    def from_report(cls, report):
        state = cls(None, None, None)
        state.report = report
        return state

    @property
    def guid(self):
        return self.report.id if self.report is not None else self.entry.__kind__

    @property
    def verdict(self):
        if self.exception is not None:
            return 'error'
        return self.report.verdict

    @property
    def changed(self):
        return self.old_verdict is not None and self.old_verdict != self.verdict

    def load(self):
        if self.cache_storage is not None:
            self.old_verdict, self.timestamp, _ = self.cache_storage.load(self.guid)

    def save(self):
        if self.cache_storage is not None:
            summary = yaml.safe_dump({'instances': len(self.report.instances) if self.report else 0},
                                     default_flow_style=True).strip()
            self.cache_storage.save(self.guid, self.verdict, int(time.time()), summary)

    def process(self):
        logger.debug('Processing: %s', self.entry.__kind__)

        try:
            self.report = self.entry.report(self.context)
        except REFUSALS as e:
            logger.info('Entry %s refused: %s', self.entry.__kind__, e)
            self.report = TheoremReport(self.entry.__kind__, self.entry.statement,
                                        [Instance(self.entry.__kind__, 'refused', note=str(e))])
        except Exception as e:
            self.exception = e
            self.traceback = traceback.format_exc()
            self.report = TheoremReport(self.entry.__kind__, self.entry.statement,
                                        [Instance(self.entry.__kind__, 'error', note='%s: %s' % (type(e).__name__, e))])

        return self


class Report(object):
    def __init__(self, config):
        self.config = config

        self.states = []
        self.start = datetime.datetime.now()

    def _result(self, verb, state):
        if state.exception is not None:
            logger.debug('Got exception while processing %s', state.guid, exc_info=state.exception)

        state.verb = verb
        self.states.append(state)

    def confirmed(self, state):
        self._result('confirmed', state)

    def counterexample(self, state):
        self._result('counterexample', state)

    def divergence(self, state):
        self._result('divergence', state)

    def refused(self, state):
        self._result('refused', state)

    def error(self, state):
        self._result('error', state)

    def add(self, state):
        getattr(self, state.verdict)(state)
        return state

    def add_report(self, theorem_report):
        return self.add(EntryState.from_report(theorem_report))

    def verbs(self):
        return [state.verb for state in self.states]

    def exit_code(self):
        verbs = set(self.verbs())
        if 'error' in verbs:
            return 2
        if verbs & {'counterexample', 'divergence'}:
            return 1
        if 'refused' in verbs:
            return 3
        return 0

    def documents(self):
        return [state.report.to_dict() for state in self.states]

    def finish(self, kind='text'):
        duration = datetime.datetime.now() - self.start
        return ReporterBase.render(kind, self, duration)
