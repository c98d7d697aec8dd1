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

from . import constructors as C
from .catalog import Catalog
from .predicates import predicate_class, check, check_for_all_idempotents
from .radicals import LatticeExplosion, delta
from .ring import (ComplexityRefusal, OrderCapExceeded, ElementSubset, nilpotent_elements, idempotent_elements,
                   nonzero_idempotents)
from .worker import run_parallel

logger = logging.getLogger(__name__)

VERDICTS = ('error', 'counterexample', 'divergence', 'confirmed', 'refused')

# Budget and cap errors turn into a refused instance instead of aborting a sweep
REFUSALS = (ComplexityRefusal, OrderCapExceeded, LatticeExplosion)


def labels(subset):
    if isinstance(subset, ElementSubset):
        return subset.labels()
    return list(subset)


class Instance(object):
    """One ring (and parameter choice) a statement was tested on"""

    def __init__(self, ring, verdict, params=None, witness=None, claimed=None, computed=None, note=None):
        if verdict not in VERDICTS:
            raise ValueError('Unknown verdict: %r' % (verdict,))
        self.ring = ring
        self.verdict = verdict
        self.params = params or {}
        self.witness = witness
        self.claimed = claimed
        self.computed = computed
        self.note = note

    def __repr__(self):
        return '<Instance %s: %s>' % (self.ring, self.verdict)

    def to_dict(self):
        return {
            'ring': self.ring,
            'params': dict(self.params),
            'verdict': self.verdict,
            'witness': self.witness,
            'claimed': self.claimed,
            'computed': self.computed,
            'note': self.note,
        }


class TheoremReport(object):
    """Verdicts of one statement over the instances it was tested on"""

    def __init__(self, id, statement, instances=None):
        self.id = id
        self.statement = statement
        self.instances = list(instances or [])

    def __repr__(self):
        return '<TheoremReport %s: %s>' % (self.id, self.verdict)

    def add(self, instance):
        self.instances.append(instance)
        return instance

    @property
    def verdict(self):
        present = {instance.verdict for instance in self.instances}
        for verdict in VERDICTS:
            if verdict in present:
                return verdict
        return 'refused'

    @property
    def evidence(self):
        # A catalog can refute a universal statement but never prove it
        if self.verdict == 'counterexample':
            return 'refutation-definitive'
        return 'confirmation-evidence'

    def with_verdict(self, verdict):
        return [instance for instance in self.instances if instance.verdict == verdict]

    def to_dict(self):
        return {
            'id': self.id,
            'statement': self.statement,
            'evidence': self.evidence,
            'verdict': self.verdict,
            'instances': [instance.to_dict() for instance in self.instances],
        }


class PredicateSpec(object):
    """A predicate id, optionally with e pinned to the identity (written id@1)"""

    def __init__(self, text):
        self.text = text
        name, _, pin = text.partition('@')
        if pin not in ('', '1'):
            raise ValueError('Unsupported predicate parameter %r in %r (use id or id@1)' % (pin, text))
        self.id = name
        self.at_one = pin == '1'
        self.cls = predicate_class(name)

    def __str__(self):
        return self.text


def _idempotent_choices(R, specs):
    if not any(spec.cls.needs_e for spec in specs):
        return [None]
    if any(spec.at_one for spec in specs):
        return [R.one] if R.unital else []
    return [int(e) for e in nonzero_idempotents(R)]


def _implication_instance(text, R, P, Q, budget):
    try:
        held = 0
        choices = _idempotent_choices(R, (P, Q))
        for e in choices:
            params = {} if e is None else {'e': e}
            premise = check(P.id, R, params if P.cls.needs_e else None, budget=budget)
            if not premise.verdict:
                continue
            held += 1
            conclusion = check(Q.id, R, params if Q.cls.needs_e else None, budget=budget)
            if not conclusion.verdict:
                return Instance(text, 'counterexample', {k: R.label(v) for k, v in params.items()},
                                witness=conclusion.witness_labels(),
                                note='%s holds, %s fails' % (P, Q))
        if not choices:
            return Instance(text, 'confirmed', note='no admissible idempotent')
        return Instance(text, 'confirmed', note='premise held for %d of %d choices' % (held, len(choices)))
    except REFUSALS as e:
        logger.info('Refused %s => %s on %s: %s', P, Q, text, e)
        return Instance(text, 'refused', note=str(e))


def check_implication(p, q, tier='small', catalog=None, budget=None, max_workers=None):
    """Search the catalog for rings where P holds and Q fails

    With e-parameterized predicates the idempotent is shared: P(e) => Q(e) for every nonzero
    idempotent e, or only e = 1 with the id@1 form.
    """
    P, Q = PredicateSpec(p), PredicateSpec(q)
    catalog = catalog or Catalog(tier=tier)
    rings = catalog.rings()
    logger.debug('Checking %s => %s over %d rings', P, Q, len(rings))
    report = TheoremReport('%s=>%s' % (P, Q), '%s implies %s' % (P, Q))
    for instance in run_parallel(lambda item: _implication_instance(item[0], item[1], P, Q, budget), rings,
                                 max_workers):
        report.add(instance)
    return report


def _h11(R):
    H = C.hst(R.one, R.one, R)
    return H, H.coords


def _k0(R):
    K = C.ks(R.zero, R)
    return K, K.coords[:, [0, 3]]


def _h3(R, m=None):
    m = m or R.char
    H = C.h3(m, R)
    Zm = H.parts[0]
    # n must be nilpotent in Z_m and the a3 entry nilpotent in R; a1, a2, a4 are free
    nil_n = nilpotent_elements(Zm).bits[H.coords[:, 0]]
    return H, H.coords[:, [3]], nil_n


def _members(kind, X):
    if kind == 'nilpotent':
        return nilpotent_elements(X).bits
    if kind == 'delta':
        return delta(X).bits
    if kind == 'idempotent':
        return idempotent_elements(X).bits
    raise ValueError(kind)


# lemma id -> (construction, element set, direction)
CHARACTERIZATIONS = {
    'H11-nilpotent': (_h11, 'nilpotent', 'iff'),
    'H11-delta': (_h11, 'delta', 'iff'),
    'H11-idempotent': (_h11, 'idempotent', 'iff'),
    'K0-nilpotent': (_k0, 'nilpotent', 'iff'),
    'K0-delta': (_k0, 'delta', 'iff'),
    'K0-idempotent': (_k0, 'idempotent', 'forward'),
    'H3-nilpotent': (_h3, 'nilpotent', 'iff'),
}

STATEMENTS = {
    'H11-nilpotent': 'A in N(H(1,1)(R)) iff a, d, g in N(R)',
    'H11-delta': 'A in delta(H(1,1)(R)) iff a, d, g in delta(R)',
    'H11-idempotent': 'A in Id(H(1,1)(R)) iff a, d, g in Id(R)',
    'K0-nilpotent': 'A in N(K0(R)) iff a, b in N(R)',
    'K0-delta': 'A in delta(K0(R)) iff a, b in delta(R)',
    'K0-idempotent': 'A in Id(K0(R)) implies a, b in Id(R)',
    'H3-nilpotent': 'A in N(H3(Z_m, R)) iff n is nilpotent in Z_m and the middle diagonal entry is in N(R)',
}


def verify_characterization(lemma_id, R, m=None):
    """Compare an entrywise membership criterion with the brute-force element set"""
    try:
        build, kind, direction = CHARACTERIZATIONS[lemma_id]
    except KeyError:
        raise ValueError('Unknown characterization: %r (known: %s)' % (lemma_id, ', '.join(sorted(CHARACTERIZATIONS))))

    report = TheoremReport('characterization:%s' % (lemma_id,), STATEMENTS[lemma_id])
    try:
        built = build(R, m) if build is _h3 else build(R)
        X, diagonal = built[0], built[1]
        predicted = _members(kind, R)[diagonal].all(axis=1)
        if len(built) > 2:
            predicted &= built[2]
        actual = _members(kind, X)
    except REFUSALS as e:
        report.add(Instance(R.name, 'refused', note=str(e)))
        return report

    if direction == 'iff':
        bad = np.flatnonzero(actual != predicted)
        converse = None
    else:
        bad = np.flatnonzero(actual & ~predicted)
        converse = np.flatnonzero(predicted & ~actual)

    note = 'checked all %d elements of %s' % (X.order, X.name)
    if converse is not None and len(converse):
        note += '; converse fails at %s' % (X.label(converse[0]),)
    if len(bad):
        report.add(Instance(X.name, 'counterexample', witness={'A': X.label(bad[0])},
                            claimed=bool(predicted[bad[0]]), computed=bool(actual[bad[0]]), note=note))
    else:
        witness = {'converse': X.label(converse[0])} if converse is not None and len(converse) else None
        report.add(Instance(X.name, 'confirmed', witness=witness, note=note))
    return report


def _zhou_failures(R):
    failing, succeeding = [], []
    for e in nonzero_idempotents(R):
        result = check('zhou_right_e_reduced', R, {'e': int(e)})
        (succeeding if result.verdict else failing).append((int(e), result))
    return failing, succeeding


def _pasting_instance(text, R):
    """Look for f with both corners Zhou right reduced for all their idempotents while R fails"""
    try:
        if not R.unital:
            return None
        for f in nonzero_idempotents(R):
            f = int(f)
            g = R.minus(R.one, f)
            if g == R.zero:
                continue
            corners = [C.corner(R, f), C.corner(R, g)]
            reports = [r for S in corners for r in check_for_all_idempotents('zhou_right_e_reduced', S)]
            if not all(r.verdict for r in reports):
                continue
            failing, succeeding = _zhou_failures(R)
            if failing:
                e, result = failing[0]
                return Instance(text, 'counterexample', {'f': R.label(f)},
                                witness=dict(result.witness_labels(), e=R.label(e)),
                                computed={'failing': [R.label(x) for x, _ in failing],
                                          'succeeding': [R.label(x) for x, _ in succeeding]},
                                note='fails for every nonzero idempotent' if not succeeding else
                                'fails for %d of %d nonzero idempotents' % (len(failing),
                                                                            len(failing) + len(succeeding)))
        return Instance(text, 'confirmed', note='no pasting counterexample')
    except REFUSALS as e:
        return Instance(text, 'refused', note=str(e))


def search(mode='pasting', catalog=None, tier='medium', p=None, q=None, max_workers=None):
    """Counterexample search: corner pasting, or an implication over every enabled tier"""
    catalog = catalog or Catalog(tier=tier)
    if mode == 'implication':
        if p is None or q is None:
            raise ValueError('Implication search needs two predicates')
        return check_implication(p, q, catalog=catalog, max_workers=max_workers)
    if mode != 'pasting':
        raise ValueError('Unknown search mode: %r' % (mode,))

    report = TheoremReport('search:pasting',
                           'fRf and (1-f)R(1-f) Zhou right reduced for all their idempotents, R not')
    rings = catalog.rings()
    for instance in run_parallel(lambda item: _pasting_instance(*item), rings, max_workers):
        if instance is not None:
            report.add(instance)
    logger.debug('Pasting search over %d rings found %d counterexamples', len(rings),
                 len(report.with_verdict('counterexample')))
    return report
