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
from functools import reduce

import numpy as np

from .limits import limits
from .ring import RingError, ComplexityRefusal, nilpotent_elements

logger = logging.getLogger(__name__)


class NotAnAutomorphism(RingError):
    """A permutation of elements does not respect the ring operations"""
    ...


class RingAutomorphism(object):
    """A ring automorphism given as a permutation of element indices"""

    def __init__(self, ring, mapping, name=None):
        mapping = np.asarray(mapping, dtype=np.int64)
        R = ring
        if mapping.shape != (R.order,) or sorted(mapping.tolist()) != list(range(R.order)):
            raise NotAnAutomorphism('Map on %s is not a permutation of its elements' % (R.name,))
        for what, table in (('addition', R.add), ('multiplication', R.mul)):
            bad = np.argwhere(mapping[table] != table[mapping[:, None], mapping[None, :]])
            if len(bad):
                raise NotAnAutomorphism('Map does not preserve %s at (%s, %s)' % (what, R.label(bad[0][0]),
                                                                                  R.label(bad[0][1])))
        if R.unital and mapping[R.one] != R.one:
            raise NotAnAutomorphism('Map does not fix the identity of %s' % (R.name,))
        self.ring = ring
        self.mapping = mapping
        self.name = name or 'sigma'
        self._powers = [np.arange(R.order), mapping]

    def __repr__(self):
        return '<RingAutomorphism %s of %s>' % (self.name, self.ring.name)

    def power(self, i):
        """σ^i as an index array"""
        while len(self._powers) <= i:
            self._powers.append(self.mapping[self._powers[-1]])
        return self._powers[i]


def identity_automorphism(R):
    return RingAutomorphism(R, np.arange(R.order), 'id')


def swap_automorphism(R):
    """(x, y) -> (y, x) on a product of a ring with itself"""
    if R.parts is None or len(R.parts) != 2 or R.parts[0].name != R.parts[1].name:
        raise NotAnAutomorphism('%s is not a product of two copies of one ring' % (R.name,))
    n = R.parts[0].order
    return RingAutomorphism(R, R.coords[:, 1] * n + R.coords[:, 0], 'swap')


class SkewPolynomial(object):
    """Σ a_i x^i over R with x a = σ(a) x; coefficients lowest degree first, trailing zeros dropped"""

    def __init__(self, ring, sigma, coeffs):
        if sigma.ring is not ring:
            raise ValueError('Automorphism %r does not act on %s' % (sigma, ring.name))
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == ring.zero:
            coeffs.pop()
        self.ring = ring
        self.sigma = sigma
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_values(cls, ring, sigma, values):
        return cls(ring, sigma, [ring.index(v) for v in values])

    @property
    def degree(self):
        """Degree, or None for the zero polynomial"""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else self.ring.zero

    def _check(self, other):
        if other.ring is not self.ring or other.sigma is not self.sigma:
            raise ValueError('Polynomials live in different skew polynomial rings')

    def __eq__(self, other):
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        return other.ring is self.ring and other.sigma is self.sigma and other.coeffs == self.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        self._check(other)
        R = self.ring
        size = max(len(self.coeffs), len(other.coeffs))
        return SkewPolynomial(R, self.sigma, [R.plus(self.coefficient(i), other.coefficient(i)) for i in range(size)])

    def __mul__(self, other):
        return skew_mul(self, other)

    def __pow__(self, k):
        if k < 1:
            raise ValueError('Only positive powers, got %r' % (k,))
        return reduce(skew_mul, [self] * k)

    def labels(self):
        return [self.ring.label(c) for c in self.coeffs]

    def __str__(self):
        return '[%s]' % (', '.join(self.labels()),)

    def __repr__(self):
        return '<SkewPolynomial %s over %s, %s>' % (self, self.ring.name, self.sigma.name)


def skew_mul(f, g):
    """Coefficient k of fg is Σ_{i+j=k} a_i σ^i(b_j)"""
    f._check(g)
    R = f.ring
    if f.is_zero() or g.is_zero():
        return SkewPolynomial(R, f.sigma, [])
    out = [R.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        twisted = f.sigma.power(i)
        for j, b in enumerate(g.coeffs):
            out[i + j] = int(R.add[out[i + j], R.mul[a, twisted[b]]])
    return SkewPolynomial(R, f.sigma, out)


def default_power_bound(f):
    if limits.power_bound is not None:
        return limits.power_bound
    return ((f.degree or 0) + 1) * f.ring.order


def nilpotency_index_poly(f, max_power=None):
    """Least m <= max_power with f^m = 0, or None"""
    k = default_power_bound(f) if max_power is None else max_power
    if k < 1:
        raise ValueError('Power bound must be positive, got %r' % (k,))
    power = f
    for m in range(1, k + 1):
        if power.is_zero():
            return m
        power = skew_mul(power, f)
    return None


def is_nilpotent_poly(f, max_power=None):
    """f^m = 0 for some m <= max_power (default (deg f + 1)·|R|)"""
    return nilpotency_index_poly(f, max_power) is not None


def all_coefficient_vectors(R, d):
    """Every coefficient vector of length d + 1, in mixed-radix index order"""
    return np.indices([R.order] * (d + 1)).reshape(d + 1, -1).T.astype(np.int64)


def _poly_products(R, A, B):
    """Ordinary products of coefficient arrays, row by row (a single row of A broadcasts)"""
    width = A.shape[1] + B.shape[1] - 1
    out = np.full((len(B), width), R.zero, dtype=np.int64)
    for i in range(A.shape[1]):
        for j in range(B.shape[1]):
            out[:, i + j] = R.add[out[:, i + j], R.mul[A[:, i], B[:, j]]]
    return out


def _check_budget(what, cost, budget):
    budget = limits.search_budget if budget is None else budget
    if cost > budget:
        raise ComplexityRefusal(what, cost, budget)


def armendariz_witness(R, d, budget=None):
    """First (f, g, i, j) with fg = 0 in R[x] but a_i b_j != 0, degrees at most d; None if there is none"""
    polys = all_coefficient_vectors(R, d)
    _check_budget('Armendariz search on %s at degree %d' % (R.name, d), len(polys) ** 2, budget)
    sigma = identity_automorphism(R)
    M = R.mul
    for row in polys:
        products = _poly_products(R, row[None, :], polys)
        annihilates = (products == R.zero).all(axis=1)
        if not annihilates.any():
            continue
        cross = M[row[:, None, None], polys.T[None, :, :]] != R.zero
        hits = np.flatnonzero(annihilates & cross.any(axis=(0, 1)))
        if len(hits):
            g = polys[hits[0]]
            i, j = (int(x) for x in np.argwhere(cross[:, :, hits[0]])[0])
            logger.debug('Armendariz witness on %s: %r, %r', R.name, row.tolist(), g.tolist())
            return SkewPolynomial(R, sigma, row), SkewPolynomial(R, sigma, g), i, j
    return None


def poly_nilpotent_mismatch(R, d, budget=None):
    """First polynomial of degree <= d whose nilpotency (within d·|R| powers) disagrees with the
    nilpotency of all its coefficients, or None"""
    bound = limits.power_bound or max(1, d) * R.order
    polys = all_coefficient_vectors(R, d)
    _check_budget('nilpotent coefficient check on %s at degree %d' % (R.name, d), len(polys) * bound, budget)
    N = nilpotent_elements(R).bits
    power = polys.copy()
    nil = (power == R.zero).all(axis=1)
    for _ in range(bound - 1):
        power = _poly_products(R, power, polys)
        nil |= (power == R.zero).all(axis=1)
    bad = np.flatnonzero(nil != N[polys].all(axis=1))
    if len(bad) == 0:
        return None
    return SkewPolynomial(R, identity_automorphism(R), polys[bad[0]])


def poly_nilpotent_coefficient_check(R, d, budget=None):
    """For commutative R: f in R[x] of degree <= d is nilpotent iff every coefficient is"""
    if not (R.mul == R.mul.T).all():
        raise ValueError('%s is not commutative' % (R.name,))
    return poly_nilpotent_mismatch(R, d, budget) is None
