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

import numpy as np

from .limits import limits
from .util import popcount
from .ring import (RingError, ElementSubset, RightIdeal, LeftIdeal, TwoSidedIdeal, cyclic_right_ideal,
                   cyclic_left_ideal, _subgroup_sum, idempotent_summands)

logger = logging.getLogger(__name__)


class LatticeExplosion(RingError):
    """The ideal lattice has more members than the configured cap"""

    def __init__(self, count, cap):
        RingError.__init__(self)
        self.count = count
        self.cap = cap

    def __str__(self):
        return 'Ideal lattice exceeds %d members (found %d so far)' % (self.cap, self.count)


SIDES = {
    'right': (cyclic_right_ideal, RightIdeal),
    'left': (cyclic_left_ideal, LeftIdeal),
}


class IdealLattice(object):
    """All one-sided ideals of a ring, with the flags the radicals are read from"""

    def __init__(self, ring, side, ideals, cyclics, cyclic_of, maximal):
        self.ring = ring
        self.side = side
        self.ideals = ideals
        self.cyclics = cyclics
        self.cyclic_of = cyclic_of
        self.masks = [I.mask for I in ideals]
        self.sizes = [len(I) for I in ideals]

        full = ring.full().mask
        self.zero_mask = 1 << ring.zero
        self.proper = [m != full for m in self.masks]
        self.maximal = maximal
        self.nonzero_cyclic_masks = [C.mask for C in cyclics if C.mask != self.zero_mask]
        self.minimal = [self._is_minimal(I) for I in ideals]
        self.essential = [self.meets_every_cyclic(m) for m in self.masks]

    def __len__(self):
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    def _is_minimal(self, I):
        members = I.indices[I.indices != self.ring.zero]
        if len(members) == 0:
            return False
        ids = self.cyclic_of[members]
        return bool((ids == ids[0]).all()) and self.cyclics[ids[0]].mask == I.mask

    def meets_every_cyclic(self, mask):
        return all((c & mask) != self.zero_mask for c in self.nonzero_cyclic_masks)

    def select(self, flags):
        return [I for I, flag in zip(self.ideals, flags) if flag]

    def maximal_ideals(self):
        return self.select(self.maximal)

    def minimal_ideals(self):
        return self.select(self.minimal)

    def essential_ideals(self):
        return self.select(self.essential)

    def contained_in(self, I):
        return [J for J in self.ideals if J.mask & ~I.mask == 0]


def _build_lattice(R, side, cap):
    cyclic, cls = SIDES[side]
    cyclics = []
    seen = {}
    cyclic_of = np.empty(R.order, dtype=np.int64)
    for x in range(R.order):
        C = cyclic(R, x)
        if C.mask not in seen:
            seen[C.mask] = len(cyclics)
            cyclics.append(C)
        cyclic_of[x] = seen[C.mask]
    gens = [C for C in cyclics if len(C) > 1]

    full = R.full().mask
    zero = R.zero_ideal()
    found = {zero.mask: cls(R, zero.bits)}
    maximal = {}
    worklist = [zero.mask]
    while worklist:
        mask = worklist.pop()
        I = found[mask]
        is_max = mask != full
        for g in gens:
            if g.mask & ~mask == 0:
                continue
            J = cls(R, _subgroup_sum(R, I.bits, g.bits))
            if J.mask != full:
                is_max = False
            if J.mask not in found:
                found[J.mask] = J
                worklist.append(J.mask)
                if len(found) > cap:
                    raise LatticeExplosion(len(found), cap)
        maximal[mask] = is_max

    ideals = sorted(found.values(), key=lambda I: (len(I), I.indices.tolist()))
    logger.debug('%s ideal lattice of %s: %d cyclic generators, %d ideals', side, R.name, len(gens), len(ideals))
    return IdealLattice(R, side, ideals, cyclics, cyclic_of, [maximal[I.mask] for I in ideals])


def ideal_lattice(R, side='right', cap=None):
    cap = limits.lattice_cap if cap is None else cap
    return R.cached(('lattice', side), lambda: _build_lattice(R, side, cap))


def all_right_ideals(R, cap=None):
    """Every right ideal of R, as sums of cyclic right ideals"""
    return ideal_lattice(R, 'right', cap)


def all_left_ideals(R, cap=None):
    return ideal_lattice(R, 'left', cap)


def is_essential(R, I, side='right'):
    """I meets every nonzero cyclic one-sided ideal"""
    return ideal_lattice(R, side).meets_every_cyclic(I.mask)


def maximal_right_ideals(R):
    return all_right_ideals(R).maximal_ideals()


def minimal_right_ideals(R):
    return all_right_ideals(R).minimal_ideals()


def maximal_left_ideals(R):
    return all_left_ideals(R).maximal_ideals()


def _intersection(R, ideals, cls):
    bits = np.ones(R.order, dtype=bool)
    for I in ideals:
        bits &= I.bits
    return cls(R, bits)


def _sum(R, ideals, cls):
    bits = R.zero_ideal().bits
    for I in ideals:
        bits = _subgroup_sum(R, bits, I.bits)
    return cls(R, bits)


def socle(R):
    """Soc(R_R): the sum of the minimal right ideals"""
    return R.cached('socle', lambda: _sum(R, minimal_right_ideals(R), TwoSidedIdeal))


def jacobson(R):
    """J(R): the intersection of the maximal right ideals (R itself when there are none)"""
    return R.cached('jacobson', lambda: _intersection(R, maximal_right_ideals(R), TwoSidedIdeal))


def delta(R):
    """δ(R): the intersection of the essential maximal right ideals, R when there are none"""
    def compute():
        L = all_right_ideals(R)
        chosen = [I for I, m, e in zip(L.ideals, L.maximal, L.essential) if m and e]
        return _intersection(R, chosen, TwoSidedIdeal)
    return R.cached('delta', compute)


def _sum_is_whole(R, size_a, size_b, size_meet):
    return size_a * size_b == R.order * size_meet


def delta_via_summand(R):
    """{x : xR + K = R forces K to be a direct summand, for every right ideal K}"""
    def compute():
        L = all_right_ideals(R)
        summands = idempotent_summands(R)
        csizes = [len(C) for C in L.cyclics]
        bad = np.zeros(len(L.cyclics), dtype=bool)
        for K, size in zip(L.ideals, L.sizes):
            if K.mask in summands:
                continue
            for c, C in enumerate(L.cyclics):
                if not bad[c] and _sum_is_whole(R, csizes[c], size, popcount(C.mask & K.mask)):
                    bad[c] = True
        return RightIdeal(R, ~bad[L.cyclic_of])
    return R.cached('delta-summand', compute)


def delta_via_socle_lift(R):
    """Preimage of J(R/Soc(R_R)) under the projection"""
    from .constructors import quotient

    def compute():
        Q = quotient(R, socle(R))
        return RightIdeal(R, jacobson(Q).bits[Q.projection])
    return R.cached('delta-socle', compute)


def delta_via_semisimple_complement(R):
    """{x : for every y, (1+xy)R ⊕ Y = R for some semisimple right ideal Y}

    Semisimple right ideals are exactly those inside Soc(R_R).
    """
    def compute():
        L = all_right_ideals(R)
        soc = socle(R).mask
        semisimple = [(Y.mask, size) for Y, size in zip(L.ideals, L.sizes) if Y.mask & ~soc == 0]
        ok = np.array([any(C.mask & m == L.zero_mask and len(C) * size == R.order for m, size in semisimple)
                       for C in L.cyclics])
        u = R.add[R.one, R.mul]
        return RightIdeal(R, ok[L.cyclic_of[u]].all(axis=1))
    return R.cached('delta-semisimple', compute)


ROUTES = [
    ('essential-maximal', delta),
    ('summand', delta_via_summand),
    ('socle-lift', delta_via_socle_lift),
    ('semisimple-complement', delta_via_semisimple_complement),
]


def delta_routes(R):
    """δ(R) by every route, in route order"""
    return [(name, func(R)) for name, func in ROUTES]


def routes_agree(R):
    results = [S for _, S in delta_routes(R)]
    return all(np.array_equal(S.bits, results[0].bits) for S in results[1:])


def is_delta_small(R, N):
    """N + K != R for every proper essential right ideal K"""
    L = all_right_ideals(R)
    n = len(N)
    for K, size, proper, essential in zip(L.ideals, L.sizes, L.proper, L.essential):
        if proper and essential and _sum_is_whole(R, n, size, popcount(N.mask & K.mask)):
            return False
    return True


def delta_of_right_ideal_as_module(R, I):
    """δ(I) for I viewed as a right R-module

    Intersection of the maximal submodules K of I with I/K singular, I itself when there are none.
    I/K is simple, so it is singular exactly when the annihilator of one element outside K is an
    essential right ideal of R.
    """
    L = all_right_ideals(R)
    below = [K for K in L.contained_in(I) if K.mask != I.mask]
    bits = I.bits.copy()
    for K in below:
        if any(K.mask & ~J.mask == 0 and K.mask != J.mask for J in below):
            continue
        x = int(np.flatnonzero(I.bits & ~K.bits)[0])
        annihilator = ElementSubset(R, K.bits[R.mul[x, :]])
        if L.meets_every_cyclic(annihilator.mask):
            bits &= K.bits
    return RightIdeal(R, bits)


def semiprime_witness(R, I):
    """First a with aRa ⊆ I but a ∉ I, or None"""
    elements = R.elements
    ara = R.mul[R.mul[elements[:, None], elements[None, :]], elements[:, None]]
    bad = I.bits[ara].all(axis=1) & ~I.bits
    hits = np.flatnonzero(bad)
    return int(hits[0]) if len(hits) else None


def is_semiprime_ideal(R, I):
    return semiprime_witness(R, I) is None
