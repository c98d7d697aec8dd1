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


import itertools
import json
import logging

import yaml

import deltaring
from .util import TrackSubClasses, kind_documentation

logger = logging.getLogger(__name__)


class ReporterBase(object, metaclass=TrackSubClasses):
    __subclasses__ = {}

    def __init__(self, report, config, states, duration):
        self.report = report
        self.config = config
        self.states = states
        self.duration = duration

    def get_signature(self):
        return (
            '{pkgname} {version}, {copyright}'.format(pkgname=deltaring.pkgname,
                                                      version=deltaring.__version__,
                                                      copyright=deltaring.__copyright__),
            'Website: {url}'.format(url=deltaring.__url__),
            'checked {count} statements in {duration} seconds'.format(count=len(self.states),
                                                                      duration=self.duration.seconds),
        )

    @classmethod
    def reporter_documentation(cls):
        return kind_documentation(cls)

    @classmethod
    def render(cls, name, report, duration):
        try:
            subclass = cls.__subclasses__[name]
        except KeyError:
            raise ValueError('Unknown report format: {name}'.format(name=name))
        if not report.states:
            logger.warning('Nothing to report.')
        cfg = report.config.get('report', {}).get(name, {})
        return '\n'.join(subclass(report, cfg, report.states, duration).submit())

    def submit(self):
        raise NotImplementedError()


class TextReporter(ReporterBase):
    """Human-readable summary and per-statement details"""

    __kind__ = 'text'

    def submit(self):
        line_length = self.config.get('line_length', 75)
        show_details = self.config.get('details', True)
        show_footer = self.config.get('footer', True)

        summary = []
        details = []
        for state in self.states:
            summary_part, details_part = self._format_output(state, line_length)
            summary.extend(summary_part)
            details.extend(details_part)

        if summary:
            sep = (line_length * '=') or None
            yield from (part for part in itertools.chain(
                (sep,),
                ('%02d. %s' % (idx, line) for idx, line in enumerate(summary, 1)),
                (sep, ''),
            ) if part is not None)

        if show_details:
            yield from details

        if summary and show_footer:
            yield '-- '
            yield from self.get_signature()

    def _format_value(self, value):
        if isinstance(value, dict):
            return ', '.join('%s=%s' % (k, self._format_value(v)) for k, v in value.items())
        if isinstance(value, (list, tuple)):
            return '{%s}' % (','.join(self._format_value(v) for v in value),)
        return str(value)

    def _format_instance(self, instance):
        parts = ['%s: %s' % (instance['verdict'].upper(), instance['ring'])]
        if instance['params']:
            parts.append('with ' + self._format_value(instance['params']))
        lines = ['  ' + ' '.join(parts)]
        for key in ('witness', 'claimed', 'computed', 'note'):
            if instance[key] is not None:
                lines.append('    %s: %s' % (key, self._format_value(instance[key])))
        return lines

    def _format_output(self, state, line_length):
        document = state.report.to_dict()
        title = ': '.join((document['verdict'].upper(), document['id']))
        if state.changed:
            title += ' (was %s)' % (state.old_verdict,)

        sep = (line_length * '-') or None
        details_part = [sep, title, '  ' + document['statement'], '  evidence: ' + document['evidence'], sep]
        for instance in document['instances']:
            details_part.extend(self._format_instance(instance))
        details_part.extend((sep, '') if sep else ('',))
        return [title], [part for part in details_part if part is not None]


class YamlReporter(ReporterBase):
    """Machine-readable YAML document, one mapping per statement"""

    __kind__ = 'yaml'

    def submit(self):
        yield yaml.safe_dump(self.report.documents(), default_flow_style=False, sort_keys=False,
                             allow_unicode=True).rstrip('\n')


class JsonReporter(ReporterBase):
    """Machine-readable JSON document, one object per statement"""

    __kind__ = 'json'

    def submit(self):
        yield json.dumps(self.report.documents(), ensure_ascii=False, indent=self.config.get('indent', 2))
