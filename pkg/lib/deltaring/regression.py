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


"""Regression entries: published statements about δ, J, Soc and Zhou e-reducedness, each checked
against brute-force computation on concrete rings

A universal statement can only be refuted by a finite catalog, so a confirmed entry is evidence and a
counterexample is definitive. Entries whose published value disagrees with the computed one for a
known reason (finite truncations, tensions between two published values) report a divergence that
carries both values.
"""

import logging
import threading

import numpy as np

from . import constructors as C
from .catalog import Catalog
from .harness import REFUSALS, Instance, TheoremReport, check_implication, verify_characterization
from .predicates import check, check_for_all_idempotents
from .radicals import (delta, delta_of_right_ideal_as_module, delta_routes, is_delta_small, minimal_right_ideals,
                       jacobson, maximal_right_ideals, semiprime_witness, socle)
from .ring import (ElementSubset, canonical, cyclic_right_ideal, idempotent_elements, is_left_ideal,
                   is_right_ideal, is_two_sided, nilpotent_elements, nonzero_idempotents, subset_sum)
from .skewpoly import (SkewPolynomial, all_coefficient_vectors, armendariz_witness, identity_automorphism,
                       is_nilpotent_poly, poly_nilpotent_coefficient_check, poly_nilpotent_mismatch,
                       swap_automorphism)
from .util import TrackSubClasses, kind_documentation
from .worker import run_entries

logger = logging.getLogger(__name__)

# Subsets larger than this are summarized by their size in reports
SHOW_LIMIT = 32


class RegressionContext(object):
    """Rings shared by all entries of one regression run"""

    def __init__(self, catalog=None, include_huge=None, max_workers=None):
        self.catalog = catalog if catalog is not None else Catalog()
        self.evaluator = self.catalog.evaluator
        self.small = Catalog(self.evaluator, tier='small')
        self.include_huge = 'huge' in self.catalog.tiers if include_huge is None else include_huge
        self.max_workers = max_workers
        self._lock = threading.Lock()
        self._cache = {}

    def ring(self, text):
        return self.evaluator.evaluate(text)

    def sweep(self, max_order=256):
        """Catalog expressions of the enabled tiers up to the given order"""
        return [entry.text for entry in self.catalog.entries() if entry.order <= max_order]

    def cached(self, key, func):
        with self._lock:
            if key not in self._cache:
                self._cache[key] = func()
            return self._cache[key]


def _show(S):
    if len(S) <= SHOW_LIMIT:
        return S.labels()
    return '%d elements' % (len(S),)


def _where(R, pred):
    """Elements of R whose structured value satisfies pred"""
    return ElementSubset(R, np.array([bool(pred(v)) for v in R.values], dtype=bool))


def _values(R, S):
    return {canonical(R.values[x]) for x in S}


def _compare(text, claimed, computed, mismatch='counterexample', params=None, note=None):
    if claimed == computed:
        return Instance(text, 'confirmed', params, computed=_show(computed), note=note)
    return Instance(text, mismatch, params, claimed=_show(claimed), computed=_show(computed), note=note)


def _outcome(text, ok, params=None, witness=None, note=None, mismatch='counterexample'):
    return Instance(text, 'confirmed' if ok else mismatch, params, witness=witness, note=note)


def _zhou(R, e, side='right'):
    return check('zhou_%s_e_reduced' % (side,), R, {'e': int(e)}, allow_zero_e=True).verdict


def _zhou_everywhere(R, side='right'):
    """Nonzero idempotents e for which R is not Zhou e-reduced on the given side"""
    return [int(e) for e in nonzero_idempotents(R) if not _zhou(R, e, side)]


def _over(context, texts, func):
    """Apply func(text, ring) to each expression; budget and cap errors refuse that ring only"""
    result = []
    for text in texts:
        try:
            out = func(text, context.ring(text))
        except REFUSALS as e:
            logger.info('Refused %s: %s', text, e)
            out = Instance(text, 'refused', note=str(e))
        if isinstance(out, Instance):
            result.append(out)
        elif out:
            result.extend(out)
    return result


class TheoremBase(object, metaclass=TrackSubClasses):
    """A statement checked by brute force over concrete rings"""

    __subclasses__ = {}

    statement = None

    @classmethod
    def theorem_documentation(cls):
        return kind_documentation(cls)

    def instances(self, context):
        raise NotImplementedError()

    def report(self, context):
        report = TheoremReport(self.__kind__, self.statement)
        for instance in self.instances(context):
            report.add(instance)
        logger.debug('%s: %s over %d instances', self.__kind__, report.verdict, len(report.instances))
        return report


# δ(R) and its laws

class DeltaRoutes(TheoremBase):
    """All characterizations of δ(R) give the same set"""

    __kind__ = 'delta-routes'
    statement = ('δ(R) equals the intersection of the essential maximal right ideals, the sum of the '
                 'δ-small right ideals, and the elements x with xR + K = R forcing K to be a summand')

    def instances(self, context):
        def one(text, R):
            routes = delta_routes(R)
            reference = routes[0][1]
            differing = [(name, S) for name, S in routes[1:] if S != reference]
            if differing:
                computed = {name: _show(S) for name, S in routes}
                return Instance(text, 'counterexample', computed=computed,
                                note='routes disagree: %s' % (', '.join(name for name, _ in differing),))
            return Instance(text, 'confirmed', computed=_show(reference), note='%d routes agree' % (len(routes),))
        return _over(context, context.sweep(), one)


class DeltaSmall(TheoremBase):
    """δ(R) is itself δ-small"""

    __kind__ = 'delta-small'
    statement = 'δ(R) + K ≠ R for every proper essential right ideal K of R'

    def instances(self, context):
        return _over(context, context.sweep(), lambda text, R: _outcome(text, is_delta_small(R, delta(R))))


class DeltaCorner(TheoremBase):
    """Corner law for δ"""

    __kind__ = 'delta-corner'
    statement = '(eRe) ∩ δ(R) = δ(eRe) = eδ(R)e for every idempotent e'

    def instances(self, context):
        def one(text, R):
            d = delta(R)
            result = []
            for e in nonzero_idempotents(R):
                S = C.corner(R, e)
                inner = R.subset(S.embedding[delta(S).indices])
                ede = R.subset(np.unique(R.mul[R.mul[e, d.indices], e]))
                meet = R.subset(S.embedding) & d
                params = {'e': R.label(e)}
                if inner == ede == meet:
                    result.append(Instance(text, 'confirmed', params, computed=_show(inner)))
                else:
                    result.append(Instance(text, 'counterexample', params, claimed=_show(ede),
                                           computed={'delta(eRe)': _show(inner), 'eRe ∩ delta(R)': _show(meet)}))
            return result
        return _over(context, context.sweep(64), one)


class DeltaProduct(TheoremBase):
    """δ of a direct product"""

    __kind__ = 'delta-product'
    statement = 'δ(R1 × R2) = δ(R1) × δ(R2)'

    FACTORS = [('Z2', 'Z4'), ('Z3', 'Z6'), ('Z4', 'U(2,Z2)'), ('Z2', 'M(2,Z2)')]

    def instances(self, context):
        def one(text, P):
            claimed = C.component_subset(P, [delta(F) for F in P.parts])
            return _compare(text, claimed, delta(P))
        return _over(context, ['prod(%s,%s)' % pair for pair in self.FACTORS], one)


class DeltaImage(TheoremBase):
    """Homomorphic images of δ"""

    __kind__ = 'delta-image'
    statement = 'f(δ(M)) ⊆ δ(N) for every homomorphism f: M → N, tested on R → R/Soc(R) and R → R/J(R)'

    def instances(self, context):
        def one(text, R):
            result = []
            for which, I in (('soc', socle(R)), ('jacobson', jacobson(R))):
                if len(I) == R.order:
                    continue
                Q = C.quotient(R, I)
                image = Q.subset(np.unique(Q.projection[delta(R).indices]))
                ok = image <= delta(Q)
                result.append(Instance(text, 'confirmed' if ok else 'counterexample', {'ideal': which},
                                       claimed=None if ok else _show(image), computed=_show(delta(Q))))
            return result
        return _over(context, context.sweep(64), one)


def _diagonal_zero(v):
    return all(v[i][i] == 0 for i in range(len(v)))


class TriangularTables(TheoremBase):
    """δ and N of triangular matrix rings over a division ring"""

    __kind__ = 'delta-triangular'
    statement = ('δ(U2(D)) = [[0,D],[0,D]], δ(U3(D)) = [[0,D,D],[0,0,D],[0,0,D]], and N(U_n(D)) is the '
                 'strictly upper triangular part')

    def instances(self, context):
        def one(text, R):
            claimed_delta = _where(R, lambda v: all(v[i][i] == 0 for i in range(len(v) - 1)))
            claimed_nil = _where(R, _diagonal_zero)
            return [_compare(text, claimed_delta, delta(R), params={'set': 'delta'}),
                    _compare(text, claimed_nil, nilpotent_elements(R), params={'set': 'N'})]
        return _over(context, ['U(2,Z2)', 'U(2,Z3)', 'U(3,Z2)'], one)


class MatrixDelta(TheoremBase):
    """δ of a full matrix ring"""

    __kind__ = 'delta-matrix'
    statement = 'δ(M_n(R)) = M_n(δ(R))'

    CASES = [('M(2,Z2)', 'Z2'), ('M(2,Z3)', 'Z3'), ('M(2,Z4)', 'Z4')]

    def instances(self, context):
        result = []
        for text, base in self.CASES:
            def one(text, R, base=base):
                F = context.ring(base)
                inside = _values(F, delta(F))
                claimed = _where(R, lambda v: all(canonical(x) in inside for row in v for x in row))
                return _compare(text, claimed, delta(R))
            result.extend(_over(context, [text], one))
        return result


class TriangularNilpotents(TheoremBase):
    """Nilpotents of triangular matrices over a non-reduced ring"""

    __kind__ = 'nilpotent-triangular'
    statement = 'N(U2(R)) = [[N(R),R],[0,N(R)]] and N(U3(R)) has N(R) on the diagonal and R above it'

    def instances(self, context):
        result = []
        for text, base in (('U(2,Z4)', 'Z4'), ('U(2,Z2)', 'Z2'), ('U(3,Z2)', 'Z2')):
            def one(text, R, base=base):
                F = context.ring(base)
                nil = _values(F, nilpotent_elements(F))
                claimed = _where(R, lambda v: all(canonical(v[i][i]) in nil for i in range(len(v))))
                return _compare(text, claimed, nilpotent_elements(R))
            result.extend(_over(context, [text], one))
        return result


class DeltaQuotient(TheoremBase):
    """δ does not vanish modulo itself"""

    __kind__ = 'delta-quotient'
    statement = 'For R = U2(F), R/δ(R) ≅ F and δ(R/δ(R)) = R/δ(R) ≠ 0'

    def instances(self, context):
        def one(text, R):
            Q = C.quotient(R, delta(R))
            F = R.parts[0] if R.parts else None
            field = check('division_ring', Q).verdict and check('commutative', Q).verdict
            ok = field and delta(Q) == Q.full() and not delta(Q).is_zero()
            return _outcome(text, ok, note='R/δ(R) has order %d%s' % (Q.order, '' if F is None else
                                                                      ', F has order %d' % (F.order,)))
        return _over(context, ['U(2,Z2)', 'U(2,Z3)'], one)


class DeltaSemiprime(TheoremBase):
    """δ(R) is a semiprime ideal"""

    __kind__ = 'delta-semiprime'
    statement = 'aRa ⊆ δ(R) implies a ∈ δ(R)'

    def instances(self, context):
        def one(text, R):
            a = semiprime_witness(R, delta(R))
            if a is None:
                return Instance(text, 'confirmed')
            return Instance(text, 'counterexample', witness={'a': R.label(a)})
        return _over(context, context.sweep(64), one)


class IdealDeltaInclusion(TheoremBase):
    """δ of an ideal viewed as a module"""

    __kind__ = 'ideal-delta-inclusion'
    statement = 'δ(I) ⊆ I ∩ δ(R) for every ideal I of R'

    def instances(self, context):
        def one(text, R):
            result = []
            seen = set()
            for which, I in (('jacobson', jacobson(R)), ('soc', socle(R)), ('delta', delta(R))):
                if I.mask in seen or I.is_zero():
                    continue
                seen.add(I.mask)
                dI = delta_of_right_ideal_as_module(R, I)
                meet = I & delta(R)
                ok = dI <= meet
                result.append(Instance(text, 'confirmed' if ok else 'counterexample', {'ideal': which},
                                       claimed=None if ok else _show(meet), computed=_show(dI)))
            return result
        return _over(context, context.sweep(64), one)


class IdealDeltaZ16(TheoremBase):
    """An essential ideal that is not maximal"""

    __kind__ = 'ideal-delta-z16'
    statement = ('In Z16 with I = 4Z16: δ(Z16) = 2Z16, δ(I) = 8Z16, so I ∩ δ(Z16) = I is not contained '
                 'in δ(I)')

    def instances(self, context):
        def one(text, R):
            I = R.subset([R.index(v) for v in (0, 4, 8, 12)])
            dI = delta_of_right_ideal_as_module(R, I)
            return [
                _compare(text, _where(R, lambda v: v % 2 == 0), delta(R), params={'set': 'delta(R)'}),
                _compare(text, _where(R, lambda v: v % 8 == 0), dI, params={'set': 'delta(I)'}),
                _outcome(text, (I & delta(R)) == I and not (I <= dI), {'set': 'I ∩ delta(R) ⊄ delta(I)'}),
            ]
        return _over(context, ['Z16'], one)


class IdealDeltaMaximal(TheoremBase):
    """Reverse inclusion for maximal ideals, compared with brute force"""

    __kind__ = 'ideal-delta-maximal'
    statement = 'δ(I) = I ∩ δ(R) when I is a maximal ideal of R'

    def instances(self, context):
        def one(text, R):
            result = []
            for I in maximal_right_ideals(R):
                if not is_two_sided(R, I):
                    continue
                dI = delta_of_right_ideal_as_module(R, I)
                meet = I & delta(R)
                result.append(_compare(text, meet, dI, params={'I': _show(I)},
                                       note=None if dI == meet else
                                       'an essential maximal ideal with a singular simple quotient'))
            return result
        return _over(context, ['Z4', 'Z6', 'Z8', 'Z16', 'U(2,Z2)', 'M(2,Z2)'], one)


# Dorroh extensions

def _dorroh_u2_m2(context):
    """D(U2(Z2), M2(Z2)) with U2(Z2) acting by matrix multiplication"""
    def build():
        U, M = context.ring('U(2,Z2)'), context.ring('M(2,Z2)')
        emb = np.array([M.index(v) for v in U.values], dtype=np.int64)
        algebra = C.BimoduleAlgebra(U, M, M.mul[emb, :], M.mul[:, emb], (M, emb, np.arange(M.order)),
                                    name='M(2,Z2)')
        return C.dorroh(U, algebra, name='dorroh(U(2,Z2),M(2,Z2))')
    return context.cached('dorroh-u2-m2', build)


def _over_dorroh(context, func):
    result = []
    for name, build in (('dorroh(Z2,sgT)', lambda: context.ring('dorroh(Z2,sgT)')),
                        ('dorroh(Z2,matT)', lambda: context.ring('dorroh(Z2,matT)')),
                        ('dorroh(U(2,Z2),M(2,Z2))', lambda: _dorroh_u2_m2(context))):
        try:
            out = func(name, build())
        except REFUSALS as e:
            out = Instance(name, 'refused', note=str(e))
        result.extend([out] if isinstance(out, Instance) else out)
    return result


def _envelope_sums(D):
    """a + t in the envelope for every (a, t) of D(R, T)"""
    U, base_map, algebra_map = D.algebra.envelope
    return U, U.add[base_map[D.coords[:, 0]], algebra_map[D.coords[:, 1]]]


class DorrohDeltaFormula(TheoremBase):
    """The published δ(D(R, T)) formula against brute force"""

    __kind__ = 'dorroh-delta-formula'
    statement = 'δ(D(R, T)) = δ(R) ⊕ T'

    def instances(self, context):
        def one(text, D):
            R, T = D.parts
            claimed = C.component_subset(D, [delta(R), T.full()])
            computed = delta(D)
            note = None
            if claimed != computed and computed == C.algebra_part(D):
                note = 'brute force gives 0 ⊕ T'
            elif claimed != computed:
                note = 'brute force differs'
            return _compare(text, claimed, computed, mismatch='divergence', note=note)
        return _over_dorroh(context, one)


class DorrohZ2Listing(TheoremBase):
    """The eight-element Dorroh extension of the left-zero semigroup ring"""

    __kind__ = 'dorroh-z2-listing'
    statement = ('D(Z2, T) = {(0,0), (1,0), (0,a), (0,b), (0,a+b), (1,a), (1,b), (1,a+b)} with '
                 'J = N = {(0,0), (0,a+b)} and δ = {(0,0), (0,a), (0,b), (0,a+b)}; it is Zhou e-reduced for '
                 'every idempotent e')

    ELEMENTS = ['(0,0)', '(1,0)', '(0,a)', '(0,b)', '(0,a+b)', '(1,a)', '(1,b)', '(1,a+b)']
    RADICAL = ['(0,0)', '(0,a+b)']
    DELTA = ['(0,0)', '(0,a)', '(0,b)', '(0,a+b)']
    RIGHT_IDEALS = [['(0,0)', '(0,a)'], ['(0,0)', '(0,b)'], ['(0,0)', '(0,a+b)'],
                    ['(0,0)', '(1,a)', '(1,b)', '(0,a+b)']]

    def _labels(self, text, what, claimed, computed):
        ok = sorted(claimed) == sorted(computed)
        return Instance(text, 'confirmed' if ok else 'counterexample', {'set': what},
                        claimed=None if ok else list(claimed), computed=list(computed))

    def instances(self, context):
        def one(text, D):
            result = [
                self._labels(text, 'elements', self.ELEMENTS, D.labels),
                self._labels(text, 'J', self.RADICAL, jacobson(D).labels()),
                self._labels(text, 'N', self.RADICAL, nilpotent_elements(D).labels()),
                self._labels(text, 'delta', self.DELTA, delta(D).labels()),
            ]
            for members in self.RIGHT_IDEALS:
                S = D.subset([D.index(x) for x in members])
                result.append(_outcome(text, is_right_ideal(D, S), {'right ideal': '{%s}' % (', '.join(members),)}))
            failing = [r for r in check_for_all_idempotents('zhou_e_reduced', D) if not r.verdict]
            result.append(_outcome(text, not failing, {'predicate': 'zhou_e_reduced'},
                                   witness=failing[0].witness_labels() if failing else None))
            return result
        return _over(context, ['dorroh(Z2,sgT)'], one)


class DorrohMatrixExample(TheoremBase):
    """A Dorroh extension by a four-element subring of M2(Z2)"""

    __kind__ = 'dorroh-matrix-example'
    statement = ('For T = {0, [[1,1],[1,1]], [[1,1],[0,0]], [[0,0],[1,1]]} ⊂ M2(Z2), D(R, T) is Zhou right '
                 'E-reduced for every idempotent E')

    def instances(self, context):
        result = []
        try:
            context.ring('dorroh(M(2,Z2),matT)')
        except C.ActionIncompatible as e:
            result.append(Instance('dorroh(M(2,Z2),matT)', 'refused',
                                   note='T is not an M2(Z2)-bimodule (%s); checked over Z2 instead' % (e,)))

        def one(text, D):
            failing = [r for r in check_for_all_idempotents('zhou_right_e_reduced', D) if not r.verdict]
            return _outcome(text, not failing, witness=failing[0].witness_labels() if failing else None)
        return result + _over(context, ['dorroh(Z2,matT)'], one)


class DorrohCharacterizations(TheoremBase):
    """Idempotents and nilpotents of D(R, T) through the envelope"""

    __kind__ = 'dorroh-characterizations'
    statement = ('(a, t) ∈ Id(D(R, T)) iff a ∈ Id(R) and (a + t)² = a + t; (a, t)ⁿ = 0 iff aⁿ = 0 and '
                 '(a + t)ⁿ = 0')

    def instances(self, context):
        def one(text, D):
            R = D.parts[0]
            U, sums = _envelope_sums(D)
            a = D.coords[:, 0]
            claimed_id = ElementSubset(D, idempotent_elements(R).bits[a] & idempotent_elements(U).bits[sums])
            result = [_compare(text, claimed_id, idempotent_elements(D), params={'set': 'Id'})]

            power_d, power_r, power_u = D.elements.copy(), a.copy(), sums.copy()
            for n in range(1, D.order + 1):
                bad = np.flatnonzero((power_d == D.zero) != ((power_r == R.zero) & (power_u == U.zero)))
                if len(bad):
                    result.append(Instance(text, 'counterexample', {'n': n}, witness={'(a,t)': D.label(bad[0])}))
                    break
                power_d, power_r, power_u = D.mul[power_d, D.elements], R.mul[power_r, a], U.mul[power_u, sums]
            else:
                result.append(Instance(text, 'confirmed', {'n': '1..%d' % (D.order,)},
                                       computed=_show(nilpotent_elements(D))))
            return result
        return _over_dorroh(context, one)


class DorrohParts(TheoremBase):
    """The two canonical pieces of a Dorroh extension"""

    __kind__ = 'dorroh-parts'
    statement = '{(r, 0)} is a subring of D(R, T) isomorphic to R and {(0, t)} is an ideal with D(R, T)/T ≅ R'

    def instances(self, context):
        def one(text, D):
            R = D.parts[0]
            B, T = C.base_part(D), C.algebra_part(D)
            idx = B.indices
            closed = bool(B.bits[D.add[np.ix_(idx, idx)]].all() and B.bits[D.mul[np.ix_(idx, idx)]].all())
            quotient_order = C.quotient(D, T).order
            return [_outcome(text, closed and len(B) == R.order, {'part': '(r,0)'}),
                    _outcome(text, is_two_sided(D, T) and quotient_order == R.order, {'part': '(0,t)'})]
        return _over_dorroh(context, one)


class DorrohTheorem(TheoremBase):
    """Zhou reducedness of a Dorroh extension and of its pieces"""

    __kind__ = 'dorroh-theorem'
    statement = ('For E = (e, f) ∈ Id(D(R, T)) with f ∈ Id(T): R is Zhou right e-reduced and T is Zhou right '
                 'f-reduced iff D(R, T) is Zhou right E-reduced')

    def instances(self, context):
        def one(text, D):
            R, T = D.parts
            idempotents_t = idempotent_elements(T)
            tested = 0
            for E in nonzero_idempotents(D):
                e, f = (int(x) for x in D.coords[E])
                if f not in idempotents_t:
                    continue
                tested += 1
                pieces = _zhou(R, e) and _zhou(T, f)
                whole = _zhou(D, E)
                if pieces != whole:
                    return Instance(text, 'counterexample', {'E': D.label(E)},
                                    claimed=pieces, computed=whole)
            return Instance(text, 'confirmed', note='%d idempotents E' % (tested,))
        return _over_dorroh(context, one)


# Zhou e-reducedness

class ZhouTrivialParameters(TheoremBase):
    """e = 0 and e = 1"""

    __kind__ = 'zhou-trivial-parameters'
    statement = 'Every ring is Zhou right 0-reduced, and R is Zhou right 1-reduced iff N(R) ⊆ δ(R)'

    def instances(self, context):
        def one(text, R):
            zero = _zhou(R, R.zero)
            one_reduced = _zhou(R, R.one)
            bridge = check('n_in_delta', R).verdict
            return _outcome(text, zero and one_reduced == bridge)
        return _over(context, context.sweep(), one)


class ImplicationEntry(TheoremBase):
    premise = None
    conclusion = None

    def instances(self, context):
        return check_implication(self.premise, self.conclusion, catalog=context.small,
                                 max_workers=context.max_workers).instances


class CentralSemicommutativeSource(ImplicationEntry):
    __kind__ = 'source-central-semicommutative'
    statement = 'Every central semicommutative ring is Zhou e-reduced'
    premise, conclusion = 'central_semicommutative', 'zhou_e_reduced'


class ESemicommutativeSource(ImplicationEntry):
    __kind__ = 'source-e-semicommutative'
    statement = 'Every right e-semicommutative ring is Zhou right e-reduced'
    premise, conclusion = 'e_semicommutative_right', 'zhou_right_e_reduced'


class OneReducedSource(TheoremBase):
    __kind__ = 'source-one-reduced'
    statement = 'Every Zhou right 1-reduced ring is Zhou right e-reduced'

    def instances(self, context):
        def one(text, R):
            if not _zhou(R, R.one):
                return Instance(text, 'confirmed', note='premise fails')
            failing = _zhou_everywhere(R)
            if failing:
                return Instance(text, 'counterexample', {'e': R.label(failing[0])})
            return Instance(text, 'confirmed')
        return _over(context, [entry.text for entry in context.small.entries()], one)


class SemisimpleSource(ImplicationEntry):
    __kind__ = 'source-semisimple'
    statement = 'Every semisimple ring is Zhou e-reduced'
    premise, conclusion = 'semisimple', 'zhou_e_reduced'


class WeaklySymmetricSource(ImplicationEntry):
    __kind__ = 'source-weakly-symmetric'
    statement = 'Every weakly symmetric ring is Zhou e-reduced'
    premise, conclusion = 'weakly_symmetric', 'zhou_e_reduced'


class WeakSymmetricSource(ImplicationEntry):
    __kind__ = 'source-weak-symmetric'
    statement = 'Every weak symmetric ring is Zhou e-reduced'
    premise, conclusion = 'weak_symmetric', 'zhou_e_reduced'


class JReducedSource(ImplicationEntry):
    __kind__ = 'source-j-reduced'
    statement = 'Every J-reduced ring is Zhou e-reduced'
    premise, conclusion = 'j_reduced', 'zhou_e_reduced'


class QuasiDuoOneReduced(ImplicationEntry):
    __kind__ = 'quasi-duo-one-reduced'
    statement = 'Every right quasi-duo ring is Zhou right 1-reduced'
    premise, conclusion = 'right_quasi_duo', 'zhou_right_e_reduced@1'


class QuasiDuoEReduced(ImplicationEntry):
    __kind__ = 'quasi-duo-e-reduced'
    statement = 'Every right quasi-duo ring is Zhou right e-reduced'
    premise, conclusion = 'right_quasi_duo', 'zhou_right_e_reduced'


class SimpleQuasiDuo(TheoremBase):
    __kind__ = 'simple-quasi-duo'
    statement = 'Every simple quasi-duo ring is a division ring'

    def instances(self, context):
        def one(text, R):
            if not (check('simple', R).verdict and check('right_quasi_duo', R).verdict
                    and check('left_quasi_duo', R).verdict):
                return Instance(text, 'confirmed', note='premise fails')
            return _outcome(text, check('division_ring', R).verdict)
        return _over(context, context.sweep(), one)


class QuasiDuoQuotientReduced(TheoremBase):
    __kind__ = 'quasi-duo-delta-reduced'
    statement = 'If R is quasi-duo then R/δ(R) is reduced'

    def instances(self, context):
        def one(text, R):
            if not (check('right_quasi_duo', R).verdict and check('left_quasi_duo', R).verdict):
                return Instance(text, 'confirmed', note='premise fails')
            result = check('delta_reduced', R)
            return _outcome(text, result.verdict, witness=result.witness_labels())
        return _over(context, context.sweep(), one)


class NotQuasiDuo(TheoremBase):
    """Zhou e-reducedness is strictly weaker than quasi-duo"""

    __kind__ = 'not-quasi-duo'
    statement = 'For a division ring D and n ≥ 2, M_n(D) is Zhou right e-reduced but not quasi-duo'

    def instances(self, context):
        def one(text, R):
            return _outcome(text, not _zhou_everywhere(R) and not check('right_quasi_duo', R).verdict)
        return _over(context, ['M(2,Z2)', 'M(2,Z3)'], one)


class MatrixFieldExample(TheoremBase):
    __kind__ = 'matrix-field-example'
    statement = ('M_n(F) is Zhou right e-reduced, but neither central semicommutative nor e-semicommutative '
                 'for some e')

    def instances(self, context):
        def one(text, R):
            failing = [e for e in nonzero_idempotents(R)
                       if not check('e_semicommutative_right', R, {'e': int(e)}).verdict]
            ok = not _zhou_everywhere(R) and not check('central_semicommutative', R).verdict and bool(failing)
            return _outcome(text, ok, witness={'e': R.label(failing[0])} if failing else None)
        return _over(context, ['M(2,Z2)', 'M(2,Z3)'], one)


class ReducedMatrixFamilies(TheoremBase):
    __kind__ = 'reduced-matrix-families'
    statement = 'For a reduced ring R, U_n(R), D_n(R) and V_n(R) are Zhou right e-reduced for every e'

    RINGS = ['U(2,Z2)', 'U(2,Z3)', 'U(3,Z2)', 'D(3,Z2)', 'D(3,Z3)', 'V(3,Z2)', 'V(3,Z3)']

    def instances(self, context):
        def one(text, R):
            failing = _zhou_everywhere(R)
            return _outcome(text, not failing, witness={'e': R.label(failing[0])} if failing else None)
        return _over(context, self.RINGS, one)


class TriangularOneSided(TheoremBase):
    __kind__ = 'triangular-one-sided'
    statement = ('In U2(F), I = {[[0,a],[0,a]]} is a right ideal that is not a left ideal, L = {[[a,a],[0,0]]} '
                 'is a left ideal that is not a right ideal, and U2(F) is Zhou e-reduced for every e')

    def instances(self, context):
        def one(text, R):
            I = _where(R, lambda v: v[0][0] == 0 and v[0][1] == v[1][1])
            L = _where(R, lambda v: v[0][0] == v[0][1] and v[1][1] == 0)
            failing = [r for r in check_for_all_idempotents('zhou_e_reduced', R) if not r.verdict]
            return [_outcome(text, is_right_ideal(R, I) and not is_left_ideal(R, I), {'set': 'I'}),
                    _outcome(text, is_left_ideal(R, L) and not is_right_ideal(R, L), {'set': 'L'}),
                    _outcome(text, not failing, {'predicate': 'zhou_e_reduced'})]
        return _over(context, ['U(2,Z2)', 'U(2,Z3)'], one)


class PairSubringDelta(TheoremBase):
    __kind__ = 'pair-subring-delta'
    statement = 'For S = {(r, s) ∈ R × R : r - s ∈ δ(R)}, δ(S) = {(r, s) ∈ δ(R) × δ(R) : r - s ∈ δ(R)}'

    RINGS = ['Z2', 'Z4', 'Z6', 'U(2,Z2)', 'U(2,Z3)']

    def instances(self, context):
        def one(text, R):
            S = C.pair_subring_S(R)
            d = delta(R).bits
            claimed = ElementSubset(S, d[S.coords[:, 0]] & d[S.coords[:, 1]])
            return _compare('S(%s)' % (text,), claimed, delta(S))
        return _over(context, self.RINGS, one)


class PairSubringTheorem(TheoremBase):
    __kind__ = 'pair-subring-theorem'
    statement = 'R is Zhou right e-reduced iff S = {(r, s) : r - s ∈ δ(R)} is Zhou right (e, e)-reduced'

    def instances(self, context):
        def one(text, R):
            S = C.pair_subring_S(R)
            for e in nonzero_idempotents(R):
                ee = S.index((R.values[e], R.values[e]))
                if _zhou(R, e) != _zhou(S, ee):
                    return Instance(text, 'counterexample', {'e': R.label(e)},
                                    claimed=_zhou(R, e), computed=_zhou(S, ee))
            return Instance(text, 'confirmed')
        return _over(context, PairSubringDelta.RINGS, one)


class FiniteProduct(TheoremBase):
    __kind__ = 'finite-product'
    statement = 'Each R_i is Zhou right e_i-reduced iff R1 × R2 is Zhou right (e_1, e_2)-reduced'

    FACTORS = [('Z2', 'Z4'), ('Z4', 'U(2,Z2)'), ('U(2,Z2)', 'U(2,Z2)'), ('Z2', 'M(2,Z2)')]

    def instances(self, context):
        def one(text, P):
            R1, R2 = P.parts
            lookup = {(int(a), int(b)): i for i, (a, b) in enumerate(P.coords)}
            z1 = {int(e): _zhou(R1, e) for e in idempotent_elements(R1)}
            z2 = {int(e): _zhou(R2, e) for e in idempotent_elements(R2)}
            for e1 in z1:
                for e2 in z2:
                    if e1 == R1.zero and e2 == R2.zero:
                        continue
                    E = lookup[(e1, e2)]
                    if (z1[e1] and z2[e2]) != _zhou(P, E):
                        return Instance(text, 'counterexample', {'e': P.label(E)})
            return Instance(text, 'confirmed', note='%d idempotent pairs' % (len(z1) * len(z2) - 1,))
        return _over(context, ['prod(%s,%s)' % pair for pair in self.FACTORS], one)


class NilIdealQuotient(TheoremBase):
    __kind__ = 'nil-ideal-quotient'
    statement = 'If I is a nil ideal and R is Zhou right e-reduced, then R/I is Zhou right (e + I)-reduced'

    def instances(self, context):
        def one(text, R):
            I = jacobson(R)
            if I.is_zero():
                return Instance(text, 'confirmed', note='J(R) = 0')
            Q = C.quotient(R, I)
            for e in nonzero_idempotents(R):
                if _zhou(R, e) and not _zhou(Q, Q.projection[e]):
                    return Instance(text, 'counterexample', {'e': R.label(e), 'I': 'J(R)'})
            return Instance(text, 'confirmed', {'I': 'J(R)'})
        return _over(context, context.sweep(64), one)


class IdealAsRing(TheoremBase):
    __kind__ = 'ideal-as-ring'
    statement = ('If e = e² ∈ I, δ(I) = I ∩ δ(R) and R is Zhou right e-reduced, then N(I)e ⊆ δ(I)')

    def instances(self, context):
        def one(text, R):
            nil = nilpotent_elements(R).bits
            held = 0
            for which, I in (('soc', socle(R)), ('delta', delta(R)), ('jacobson', jacobson(R))):
                dI = delta_of_right_ideal_as_module(R, I)
                if dI != I & delta(R):
                    continue
                members = np.flatnonzero(nil & I.bits)
                for e in nonzero_idempotents(R):
                    if e not in I or not _zhou(R, e):
                        continue
                    held += 1
                    if not dI.bits[R.mul[members, e]].all():
                        return Instance(text, 'counterexample', {'I': which, 'e': R.label(e)})
            return Instance(text, 'confirmed', note='hypotheses held %d times' % (held,))
        return _over(context, context.sweep(32), one)


class CornerPropositions(TheoremBase):
    __kind__ = 'corner-propositions'
    statement = ('If R is Zhou right e-reduced then eRe is Zhou right f-reduced for every f ∈ Id(eRe), and '
                 'fRf is Zhou right e-reduced whenever f ∈ Id(R) and e ∈ Id(fRf)')

    def instances(self, context):
        def one(text, R):
            idempotents = nonzero_idempotents(R)
            reduced = {int(e): _zhou(R, e) for e in idempotents}
            corners = {int(f): C.corner(R, f) for f in idempotents}
            for e in idempotents:
                if not reduced[e]:
                    continue
                S = corners[e]
                failing = _zhou_everywhere(S)
                if failing:
                    return Instance(text, 'counterexample', {'e': R.label(e)},
                                    witness={'f': S.label(failing[0])})
                for f in idempotents:
                    S = corners[f]
                    hits = np.flatnonzero(S.embedding == e)
                    if len(hits) and not _zhou(S, hits[0]):
                        return Instance(text, 'counterexample', {'e': R.label(e), 'f': R.label(f)})
            return Instance(text, 'confirmed')
        return _over(context, context.sweep(64), one)


class CornerPastingCounterexample(TheoremBase):
    __kind__ = 'corner-pasting-counterexample'
    statement = ('In M2(Z4) with e = [[0,0],[3,1]], a = [[0,1],[0,0]] and f = [[1,0],[0,0]], both fRf and '
                 '(1-f)R(1-f) are ≅ Z4 and Zhou right g-reduced for every g, but ae = [[3,1],[0,0]] ∉ δ(R)')

    def instances(self, context):
        def one(text, R):
            e = R.index([[0, 0], [3, 1]])
            a = R.index([[0, 1], [0, 0]])
            f = R.index([[1, 0], [0, 0]])
            ae = R.times(a, e)
            corners = [C.corner(R, f), C.corner(R, R.minus(R.one, f))]
            result = [
                _outcome(text, e in idempotent_elements(R) and a in nilpotent_elements(R), {'part': 'e, a'}),
                _outcome(text, canonical(R.value(ae)) == canonical([[3, 1], [0, 0]]) and ae not in delta(R),
                         {'part': 'ae ∉ delta(R)'}, witness={'ae': R.label(ae)}),
                _compare(text, _where(R, lambda v: all(x % 2 == 0 for row in v for x in row)), delta(R),
                         params={'set': 'delta(R) = M2(2Z4)'}),
                _outcome(text, all(S.order == 4 and not _zhou_everywhere(S) for S in corners), {'part': 'corners'}),
            ]
            report = check('zhou_right_e_reduced', R, {'e': e})
            result.append(_outcome(text, not report.verdict, {'e': R.label(e)}, witness=report.witness_labels()))
            return result
        return _over(context, ['M(2,Z4)'], one)


# Group rings

class Maschke(TheoremBase):
    __kind__ = 'maschke'
    statement = 'If char F does not divide |G| then FG is semisimple, δ(FG) = FG and FG is Zhou right e-reduced'

    RINGS = ['grpring(Z3,C2)', 'grpring(Z2,C3)', 'grpring(Z5,C2)', 'grpring(Z3,C4)', 'grpring(Z3,V4)']

    def instances(self, context):
        def one(text, R):
            return _outcome(text, check('semisimple', R).verdict and delta(R) == R.full() and not _zhou_everywhere(R))
        return _over(context, self.RINGS, one)


class NonMaschke(TheoremBase):
    __kind__ = 'non-maschke'
    statement = 'If char F divides |G| then δ(FG) ≠ FG'

    RINGS = ['grpring(Z2,C2)', 'grpring(Z2,C4)', 'grpring(Z2,V4)', 'grpring(Z3,C3)']

    def instances(self, context):
        def one(text, R):
            return Instance(text, 'confirmed' if delta(R) != R.full() else 'counterexample', computed=_show(delta(R)))
        return _over(context, self.RINGS, one)


# Polynomial rings

class PolynomialIdempotent(TheoremBase):
    __kind__ = 'polynomial-idempotent'
    statement = ('Over R = U2(Z2), A = e11 + e12·x is idempotent in R[x], e11 is not central, e12·x is a nonzero '
                 'nilpotent, and R[x] is not Armendariz')

    def instances(self, context):
        def one(text, R):
            sigma = identity_automorphism(R)
            e11, e12 = R.index([[1, 0], [0, 0]]), R.index([[0, 1], [0, 0]])
            A = SkewPolynomial(R, sigma, [e11, e12])
            N = SkewPolynomial(R, sigma, [R.zero, e12])
            E, B = SkewPolynomial(R, sigma, [e11]), SkewPolynomial(R, sigma, [e12])
            witness = armendariz_witness(R, 1)
            return [
                _outcome(text, A * A == A, {'part': 'A² = A'}, witness={'A': str(A)}),
                _outcome(text, E * B != B * E, {'part': 'e11 not central'}),
                _outcome(text, not N.is_zero() and (N * N).is_zero(), {'part': 'e12·x nilpotent'}),
                _outcome(text, witness is not None, {'part': 'not Armendariz'},
                         witness=None if witness is None else {'f': str(witness[0]), 'g': str(witness[1])}),
            ]
        return _over(context, ['U(2,Z2)'], one)


class ArmendarizReduced(TheoremBase):
    __kind__ = 'armendariz-reduced'
    statement = 'Reduced rings and Z_n are Armendariz: fg = 0 in R[x] forces a_i b_j = 0'

    def instances(self, context):
        def one(text, R):
            witness = armendariz_witness(R, 1)
            return _outcome(text, witness is None, {'degree': 1},
                            witness=None if witness is None else {'f': str(witness[0]), 'g': str(witness[1])})
        return _over(context, ['Z2', 'Z4', 'Z6', 'prod(Z2,Z2)'], one)


class SwapSquareZero(TheoremBase):
    __kind__ = 'swap-square-zero'
    statement = ('In (Z3 × Z3)[x; swap], f = (1,0)x + (1,-1)x² + (0,-1)x³ satisfies f² = 0 although (1,-1) is '
                 'not nilpotent')

    def instances(self, context):
        def one(text, R):
            sigma = swap_automorphism(R)
            f = SkewPolynomial.from_values(R, sigma, [(0, 0), (1, 0), (1, 2), (0, 2)])
            coefficient = f.coefficient(2)
            ok = (f * f).is_zero() and coefficient not in nilpotent_elements(R)
            return _outcome(text, ok, witness={'f': str(f)})
        return _over(context, ['prod(Z3,Z3)'], one)


class SwapNilpotents(TheoremBase):
    """Nilpotent polynomials in the swap-twisted ring over Z2 × Z2"""

    __kind__ = 'swap-nilpotents'
    statement = ('In (Z2 × Z2)[x; swap], ((1,0)x)² = ((0,1)x)² = 0, (1,1)x(0,1) = (1,0)x, (1,1)x(1,0) = (0,1)x, '
                 'and f is nilpotent iff its constant term is 0')

    DEGREE = 2

    def instances(self, context):
        def one(text, R):
            sigma = swap_automorphism(R)

            def poly(*values):
                return SkewPolynomial.from_values(R, sigma, values)

            identities = (poly((0, 0), (1, 0)) ** 2).is_zero() and (poly((0, 0), (0, 1)) ** 2).is_zero() and \
                poly((0, 0), (1, 1)) * poly((0, 1)) == poly((0, 0), (1, 0)) and \
                poly((0, 0), (1, 1)) * poly((1, 0)) == poly((0, 0), (0, 1))
            rows = all_coefficient_vectors(R, self.DEGREE)
            nil = np.array([is_nilpotent_poly(SkewPolynomial(R, sigma, row)) for row in rows], dtype=bool)
            constant_zero = rows[:, 0] == R.zero
            forward = np.flatnonzero(nil & ~constant_zero)
            converse = np.flatnonzero(constant_zero & ~nil)
            result = [_outcome(text, identities, {'part': 'identities'}),
                      _outcome(text, not len(forward), {'part': 'nilpotent ⇒ a0 = 0'})]
            if len(converse):
                f = SkewPolynomial(R, sigma, rows[converse[0]])
                result.append(Instance(text, 'counterexample', {'part': 'a0 = 0 ⇒ nilpotent', 'degree': self.DEGREE},
                                       witness={'f': str(f)}, claimed=True, computed=False,
                                       note='%d of %d polynomials with zero constant term are not nilpotent'
                                       % (len(converse), int(constant_zero.sum()))))
            else:
                result.append(Instance(text, 'confirmed', {'part': 'a0 = 0 ⇒ nilpotent', 'degree': self.DEGREE}))
            return result
        return _over(context, ['prod(Z2,Z2)'], one)


class CommutativePolynomialNilpotents(TheoremBase):
    __kind__ = 'commutative-polynomial-nilpotents'
    statement = 'For commutative R, N(R[x]) = N(R)[x] and N(R) ⊆ δ(R), so R[x] is Zhou e-reduced'

    CASES = [('Z4', 2), ('Z8', 1), ('prod(Z2,Z4)', 1), ('Z12', 1)]

    def instances(self, context):
        result = []
        for text, d in self.CASES:
            result.extend(_over(context, [text], lambda text, R, d=d: _outcome(
                text, poly_nilpotent_coefficient_check(R, d), {'degree': d})))

        def bridge(text, R):
            if not check('commutative', R).verdict:
                return None
            return _outcome(text, check('n_in_delta', R).verdict, {'part': 'N(R) ⊆ delta(R)'})
        return result + _over(context, context.sweep(), bridge)


class ReducedPolynomials(TheoremBase):
    __kind__ = 'reduced-polynomials'
    statement = 'For reduced R, N(R) = 0 and R[x] has no nonzero nilpotents'

    def instances(self, context):
        def one(text, R):
            if not check('reduced', R).verdict:
                return None
            return _outcome(text, nilpotent_elements(R).is_zero() and poly_nilpotent_mismatch(R, 1) is None,
                            {'degree': 1})
        return _over(context, context.sweep(27), one)


# Subrings of matrix rings

def _characterizations(context, lemma_ids, rings):
    result = []
    for text in rings:
        for lemma_id in lemma_ids:
            try:
                R = context.ring(text)
            except REFUSALS as e:
                result.append(Instance(text, 'refused', note=str(e)))
                continue
            for instance in verify_characterization(lemma_id, R).instances:
                instance.params = dict(instance.params, lemma=lemma_id)
                result.append(instance)
    return result


class H3Nilpotent(TheoremBase):
    __kind__ = 'h3-nilpotent'
    statement = 'N(H3(Z, R)) = {[[0,a,b],[0,c,d],[0,0,0]] : c ∈ N(R)}, checked on the truncation H3(Z_m, R)'

    def instances(self, context):
        return _characterizations(context, ['H3-nilpotent'], ['Z2', 'Z4'])


class H3DeltaFormula(TheoremBase):
    __kind__ = 'h3-delta-formula'
    statement = ('δ(H3(Z, R)) = [[0,R,R],[0,0,R],[0,0,0]] for simple R and [[0,R,R],[0,δ(R),R],[0,0,0]] '
                 'otherwise')

    def instances(self, context):
        def one(text, H):
            R = H.parts[1]
            if check('simple', R).verdict:
                claimed = _where(H, lambda v: v[0][0] == 0 and v[1][1] == 0)
            else:
                inside = _values(R, delta(R))
                claimed = _where(H, lambda v: v[0][0] == 0 and canonical(v[1][1]) in inside)
            return _compare(text, claimed, delta(H), mismatch='divergence',
                            note='Z truncated to Z_%d' % (H.parts[0].order,))
        return _over(context, ['H3(2,Z2)', 'H3(4,Z4)'], one)


class H3Theorem(TheoremBase):
    __kind__ = 'h3-theorem'
    statement = ('H3(Z, Z2) is Zhou right and left E-reduced for every E; H3(Z, M2(Z2)) is not for '
                 'E = [[0,0,0],[0,I,I],[0,0,0]]; H3(Z, Z4) is Zhou right and left E-reduced for '
                 'E = [[0,1,0],[0,1,0],[0,0,0]]')

    def instances(self, context):
        def every(text, H):
            failing = [r for r in check_for_all_idempotents('zhou_e_reduced', H) if not r.verdict]
            return _outcome(text, not failing, {'E': 'every'}, mismatch='divergence',
                            witness=failing[0].witness_labels() if failing else None,
                            note='Z truncated to Z_%d' % (H.parts[0].order,))

        def some(text, H):
            E = H.index([[0, 1, 0], [0, 1, 0], [0, 0, 0]])
            ok = E in idempotent_elements(H) and _zhou(H, E, 'right') and _zhou(H, E, 'left')
            return _outcome(text, ok, {'E': H.label(E)}, mismatch='divergence',
                            note='Z truncated to Z_%d' % (H.parts[0].order,))

        # M2(Z2) entries put the 2 x 2 case beyond the order cap unless it is raised
        return _over(context, ['H3(2,Z2)'], every) + \
            _over(context, ['H3(2,M(2,Z2))'], self._not_reduced) + \
            _over(context, ['H3(4,Z4)'], some)

    def _not_reduced(self, text, H):
        R = H.parts[1]
        E = H.index([[0, [[0, 0], [0, 0]], [[0, 0], [0, 0]]], [0, [[1, 0], [0, 1]], [[1, 0], [0, 1]]], [0, 0, 0]])
        report = check('zhou_right_e_reduced', H, {'e': E})
        return _outcome(text, not report.verdict, {'E': H.label(E)}, witness=report.witness_labels(),
                        note='over %s' % (R.name,))


class H11Lemma(TheoremBase):
    __kind__ = 'h11-lemma'
    statement = ('A = [[a,0,0],[c,d,f],[0,0,g]] ∈ H(1,1)(R) is nilpotent, in δ, or idempotent iff a, d and g '
                 'are')

    def instances(self, context):
        return _characterizations(context, ['H11-nilpotent', 'H11-delta', 'H11-idempotent'], ['Z2', 'Z3', 'Z4'])


class H11Theorem(TheoremBase):
    __kind__ = 'h11-theorem'
    statement = 'R is Zhou right e-reduced for every e iff H(1,1)(R) is Zhou right E-reduced for every E'

    def instances(self, context):
        return _over(context, ['Z2', 'Z3', 'Z4', 'U(2,Z2)'], lambda text, R: _equivalent(
            text, R, C.hst(R.one, R.one, R)))


def _equivalent(text, R, X):
    base, built = not _zhou_everywhere(R), not _zhou_everywhere(X)
    return Instance(text, 'confirmed' if base == built else 'counterexample', {'construction': X.name},
                    claimed=None if base == built else base, computed=None if base == built else built)


class K0Lemma(TheoremBase):
    __kind__ = 'k0-lemma'
    statement = ('A = [[a,x],[y,b]] ∈ K0(R) is nilpotent iff a, b are, is in δ iff a, b are, and A idempotent '
                 'implies a, b idempotent')

    def instances(self, context):
        return _characterizations(context, ['K0-nilpotent', 'K0-delta', 'K0-idempotent'], ['Z2', 'Z3', 'Z4'])


class K0Theorem(TheoremBase):
    __kind__ = 'k0-theorem'
    statement = 'R is Zhou right e-reduced for every e iff K0(R) is Zhou right E-reduced for every E'

    def instances(self, context):
        return _over(context, ['Z2', 'Z3', 'Z4'], lambda text, R: _equivalent(text, R, C.ks(R.zero, R)))


class K0Z7Example(TheoremBase):
    __kind__ = 'k0-z7-example'
    statement = 'A = [[1,0],[1,1]] ∈ K0(Z7) has idempotent diagonal entries but A² = [[1,0],[2,1]] ≠ A'

    def instances(self, context):
        def one(text, K):
            A = K.index([[1, 0], [1, 1]])
            square = K.times(A, A)
            ok = canonical(K.value(square)) == canonical([[1, 0], [2, 1]]) and square != A
            return _outcome(text, ok, witness={'A²': K.label(square)})
        return _over(context, ['K(0,Z7)'], one)


# The 16-element algebra

class FreeAlgebraSocle(TheoremBase):
    """Published socle and δ of the 16-element algebra on idempotents a, b with ab = 0"""

    __kind__ = 'free-algebra-socle'
    statement = ('In R = Z2<a, b>/(aRb, a² - a, b² - b): aR = {0, a}, (ba)R = {0, ba}, (1+a+b+ba)R and (a+ba)R '
                 'are minimal right ideals, Soc(R) is their direct sum and equals δ(R); ba is the only nonzero '
                 'nilpotent; δ(U2(R)) = [[δ(R),R],[0,δ(R)]]')

    GENERATORS = ['a', 'ba', '1+a+b+ba', 'a+ba']

    def instances(self, context):
        def one(text, R):
            minimal = {I.mask for I in minimal_right_ideals(R)}
            result = []
            total = R.zero_ideal()
            for name in self.GENERATORS:
                I = cyclic_right_ideal(R, R.index(name))
                total = subset_sum(total, I)
                result.append(_outcome(text, len(I) == 2 and I.mask in minimal,
                                       {'minimal': '(%s)R' % (name,)}, mismatch='divergence',
                                       witness={'computed': I.labels()}))
            result.append(_compare(text, total, socle(R), mismatch='divergence', params={'set': 'Soc'}))
            result.append(_compare(text, socle(R), delta(R), mismatch='divergence', params={'set': 'delta = Soc'}))
            result.append(_compare(text, R.subset([R.zero, R.index('ba')]), nilpotent_elements(R),
                                   mismatch='divergence', params={'set': 'N'}))
            return result
        result = _over(context, ['freealg16'], one)

        if not context.include_huge:
            result.append(Instance('U(2,freealg16)', 'refused', note='huge tier disabled'))
            return result

        def upper(text, U):
            R = context.ring('freealg16')
            inside = _values(R, delta(R))
            claimed = _where(U, lambda v: canonical(v[0][0]) in inside and canonical(v[1][1]) in inside)
            return _compare(text, claimed, delta(U), mismatch='divergence', params={'set': 'delta(U2(R))'})
        return result + _over(context, ['U(2,freealg16)'], upper)


def regression_entries(ids=None):
    """Entry instances in registration order, optionally restricted to the given ids"""
    known = TheoremBase.__subclasses__
    if ids:
        unknown = [i for i in ids if i not in known]
        if unknown:
            raise ValueError('Unknown regression entries: %s' % (', '.join(unknown),))
    return [cls() for kind, cls in known.items() if not ids or kind in ids]


def run_regression(context, report, cache_storage=None, ids=None, max_workers=None):
    entries = regression_entries(ids)
    logger.info('Running %d regression entries', len(entries))
    return run_entries(entries, context, report, cache_storage, max_workers or context.max_workers)
