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


import logging

from .expr import Evaluator, parse_ring_expr
from .ring import OrderCapExceeded

logger = logging.getLogger(__name__)

# Upper order bound per tier; each tier includes the ones before it
TIERS = [
    ('small', 32),
    ('medium', 256),
    ('large', 1024),
    ('huge', None),
]

TIER_NAMES = [name for name, _ in TIERS]

# (expression, order): orders are declared so tiers can be selected without building anything
DEFAULT_ENTRIES = [
    ('Z2', 2),
    ('Z3', 3),
    ('Z4', 4),
    ('Z5', 5),
    ('Z6', 6),
    ('Z8', 8),
    ('Z12', 12),
    ('Z16', 16),
    ('prod(Z2,Z2)', 4),
    ('prod(Z2,Z4)', 8),
    ('prod(Z3,Z3)', 9),
    ('U(2,Z2)', 8),
    ('U(2,Z3)', 27),
    ('U(3,Z2)', 64),
    ('U(2,Z4)', 64),
    ('D(3,Z2)', 16),
    ('D(3,Z3)', 81),
    ('V(3,Z2)', 8),
    ('V(3,Z3)', 27),
    ('M(2,Z2)', 16),
    ('M(2,Z3)', 81),
    ('M(2,Z4)', 256),
    ('freealg16', 16),
    ('U(2,freealg16)', 4096),
    ('dorroh(Z2,sgT)', 8),
    ('dorroh(Z2,matT)', 8),
    ('sgring(Z2,LZ2)', 4),
    ('grpring(Z2,C2)', 4),
    ('grpring(Z3,C2)', 9),
    ('grpring(Z2,C3)', 8),
    ('H3(2,Z2)', 32),
    ('H3(4,Z4)', 1024),
    ('Hst(1,1,Z2)', 8),
    ('Hst(1,1,Z4)', 64),
    ('K(0,Z2)', 16),
    ('K(0,Z4)', 256),
    ('K(0,Z7)', 2401),
    ('S(Z4)', 8),
    ('S(U(2,Z2))', 32),
    ('corner(U(2,Z2),[[0,0],[0,1]])', 2),
    ('corner(M(2,Z4),[[1,0],[0,0]])', 4),
    ('quot(Z16,{2})', 2),
    ('quot(Z16,{4})', 4),
    ('quot(U(2,Z2),delta)', 2),
    ('quot(U(2,Z3),delta)', 3),
    ('quot(M(2,Z4),{[[2,0],[0,0]]})', 16),
    ('quot(freealg16,jacobson)', 8),
]


def tier_of(order):
    for name, bound in TIERS:
        if bound is None or order <= bound:
            return name


def tiers_up_to(tier, include_huge=False):
    if tier not in TIER_NAMES:
        raise ValueError('Unknown tier %r (known: %s)' % (tier, ', '.join(TIER_NAMES)))
    names = TIER_NAMES[:TIER_NAMES.index(tier) + 1]
    if include_huge and 'huge' not in names:
        names.append('huge')
    return names


class CatalogEntry(object):
    def __init__(self, text, order):
        self.expr = parse_ring_expr(text)
        self.text = str(self.expr)
        self.order = order
        self.tier = tier_of(order)

    def __repr__(self):
        return '<CatalogEntry %s order=%d tier=%s>' % (self.text, self.order, self.tier)


class Catalog(object):
    """Construction-driven list of concrete rings, built lazily through one evaluator"""

    def __init__(self, evaluator=None, tier='medium', include_huge=False, entries=None):
        self.evaluator = evaluator or Evaluator()
        self.tiers = tiers_up_to(tier, include_huge)
        self.all_entries = [CatalogEntry(text, order) for text, order in (entries or DEFAULT_ENTRIES)]

    def entries(self):
        return [entry for entry in self.all_entries if entry.tier in self.tiers]

    def build(self, entry):
        ring = self.evaluator.evaluate(entry.expr)
        if ring.order != entry.order:
            logger.warning('Catalog entry %s declared order %d, built order %d', entry.text, entry.order, ring.order)
        return ring

    def rings(self):
        """(expression text, ring) for every entry in the selected tiers that fits the order cap"""
        result = []
        for entry in self.entries():
            try:
                result.append((entry.text, self.build(entry)))
            except OrderCapExceeded as e:
                logger.info('Skipping %s: %s', entry.text, e)
        return result

    def ring(self, text):
        return self.evaluator.evaluate(text)
