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


import contextlib
import logging

logger = logging.getLogger(__name__)

DEFAULT_LIMITS = {
    # element-level operations refuse rings above this order
    'max_order': 4096,
    'lattice_cap': 2 ** 20,
    # ceiling for |R|^k, k the quantifier depth of a predicate
    'predicate_budget': 2 ** 32,
    'weakly_symmetric_max_order': 32,
    'search_budget': 2 ** 24,
    # None means (d + 1) * order
    'power_bound': None,
}


class Limits(object):
    """Process-wide computation limits, populated from the configuration file"""

    def __init__(self, **kwargs):
        self.update(**DEFAULT_LIMITS)
        self.update(**kwargs)

    def update(self, **kwargs):
        for key, value in kwargs.items():
            if key not in DEFAULT_LIMITS:
                raise ValueError('Unknown limit: %r' % (key,))
            setattr(self, key, value)

    def as_dict(self):
        return {key: getattr(self, key) for key in DEFAULT_LIMITS}

    @contextlib.contextmanager
    def override(self, **kwargs):
        saved = self.as_dict()
        self.update(**kwargs)
        try:
            yield self
        finally:
            self.update(**saved)

    def __repr__(self):
        return '<Limits %s>' % (' '.join('%s=%r' % item for item in self.as_dict().items()),)


limits = Limits()
