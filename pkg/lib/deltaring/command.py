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


import json
import logging
import sys

import yaml

from .expr import SIGNATURES, parse_element
from .harness import REFUSALS, check_implication, search
from .predicates import PredicateBase, check, predicate_class
from .radicals import all_right_ideals, delta_routes, jacobson, socle
from .regression import TheoremBase
from .reporters import ReporterBase
from .ring import RingError, center, idempotent_elements, nilpotent_elements, units, verify_axioms
from .storage import RingTableYaml

logger = logging.getLogger(__name__)

# Expression kinds that are not registered in the constructor signature table
EXTRA_KINDS = ['Z<n>', 'GF<p>', 'prod(expr, ...)', 'table(path)', 'freealg16']


def _compact(subset):
    return '{%s}' % (','.join(subset.labels()),)


class DeltaringCommand:
    def __init__(self, deltaring):

        self.deltaring = deltaring
        self.deltaring_config = deltaring.deltaring_config

    def _emit(self, document, text_lines):
        fmt = self.deltaring_config.format
        if fmt == 'yaml':
            print(yaml.safe_dump(document, default_flow_style=False, sort_keys=False, allow_unicode=True).rstrip('\n'))
        elif fmt == 'json':
            indent = self.deltaring.config['report']['json'].get('indent', 2)
            print(json.dumps(document, ensure_ascii=False, indent=indent))
        else:
            print('\n'.join(text_lines))

    def _finish(self):
        report = self.deltaring.report
        print(report.finish(self.deltaring_config.format))
        return report.exit_code()

    def show_features(self):
        print()
        print('Supported ring expressions:\n')
        kinds = EXTRA_KINDS + ['%s(%s)' % (name, ', '.join(shape)) for name, shape in SIGNATURES.items()]
        print('\n'.join('  * %s' % (kind,) for kind in kinds))
        print()
        print('Supported predicates:\n')
        print(PredicateBase.predicate_documentation())
        print()
        print('Regression entries:\n')
        print(TheoremBase.theorem_documentation())
        print()
        print('Report formats:\n')
        print(ReporterBase.reporter_documentation())
        print()
        return 0

    def list_catalog(self):
        catalog = self.deltaring.catalog
        entries = [{'ring': entry.text, 'order': entry.order, 'tier': entry.tier} for entry in catalog.entries()]
        lines = ['%s (order %d, %s)' % (entry['ring'], entry['order'], entry['tier']) for entry in entries]
        self._emit({'tiers': list(catalog.tiers), 'rings': entries}, lines)
        return 0

    def eval_ring(self, text, save=None):
        R = self.deltaring.ring(text)
        verify_axioms(R.add, R.mul, R.one if R.unital else None)
        document = {
            'ring': R.name,
            'order': R.order,
            'unital': R.unital,
            'characteristic': R.char if R.unital else None,
            'axioms': 'ok',
        }
        lines = ['%s: order %d' % (R.name, R.order),
                 'characteristic %d' % (R.char,) if R.unital else 'no identity',
                 'ring axioms hold']
        if save is not None:
            RingTableYaml(save).save(R)
            logger.info('Saved %s to %s', R.name, save)
            document['saved'] = save
            lines.append('saved to %s' % (save,))
        self._emit(document, lines)
        return 0

    def show_delta(self, text):
        R = self.deltaring.ring(text)
        routes = delta_routes(R)
        reference = routes[0][1]
        agree = all(S == reference for _, S in routes)
        document = {
            'ring': R.name,
            'delta': reference.labels(),
            'size': len(reference),
            'routes': {name: S == reference for name, S in routes},
            'routes_agree': agree,
        }
        lines = ['δ = %s' % (_compact(reference),),
                 'routes: %s' % ('agree' if agree else 'DISAGREE: ' + ', '.join(
                     name for name, S in routes if S != reference),)]
        self._emit(document, lines)
        return 0 if agree else 1

    def show_radical(self, text):
        R = self.deltaring.ring(text)
        lattice = all_right_ideals(R)
        J, soc = jacobson(R), socle(R)
        document = {
            'ring': R.name,
            'jacobson': J.labels(),
            'socle': soc.labels(),
            'right_ideals': len(lattice),
            'maximal_right_ideals': len(lattice.maximal_ideals()),
            'essential_maximal_right_ideals': len([I for I in lattice.maximal_ideals()
                                                   if lattice.meets_every_cyclic(I.mask)]),
            'essential_right_ideals': len(lattice.essential_ideals()),
        }
        lines = ['J = %s' % (_compact(J),), 'Soc = %s' % (_compact(soc),)]
        lines.extend('%s: %d' % (key.replace('_', ' '), document[key]) for key in list(document)[3:])
        self._emit(document, lines)
        return 0

    def show_elements(self, text):
        R = self.deltaring.ring(text)
        sets = [('nilpotent', nilpotent_elements(R)), ('idempotent', idempotent_elements(R))]
        if R.unital:
            sets.append(('units', units(R)))
        sets.append(('center', center(R)))
        document = dict([('ring', R.name)] + [(name, S.labels()) for name, S in sets])
        self._emit(document, ['%s = %s' % (name, _compact(S)) for name, S in sets])
        return 0

    def check_predicate(self, predicate_id, text, e=None):
        predicate_class(predicate_id)
        R = self.deltaring.ring(text)
        params = None if e is None else {'e': R.index(parse_element(e))}
        result = check(predicate_id, R, params)
        document = result.to_dict()
        lines = ['%s(%s%s): %s' % (predicate_id, R.name, '' if e is None else ', e=%s' % (e,),
                                   'true' if result.verdict else 'false')]
        if result.witness is not None:
            lines.append('witness: %s' % (', '.join('%s=%s' % item for item in result.witness_labels().items()),))
        self._emit(document, lines)
        return 0 if result.verdict else 1

    def run_implication(self, premise, conclusion):
        report = check_implication(premise, conclusion, catalog=self.deltaring.catalog,
                                   max_workers=self.deltaring.max_workers)
        self.deltaring.report.add_report(report)
        return self._finish()

    def run_search(self, mode, predicates):
        p, q = predicates if predicates else (None, None)
        report = search(mode, catalog=self.deltaring.catalog, p=p, q=q, max_workers=self.deltaring.max_workers)
        self.deltaring.report.add_report(report)
        return self._finish()

    def run_regression(self, ids):
        self.deltaring.run_regression(ids or None)
        return self._finish()

    def dispatch(self):
        config = self.deltaring_config
        verb = config.verb
        if verb == 'catalog':
            return self.show_features() if config.features else self.list_catalog()
        if verb == 'eval':
            return self.eval_ring(config.ring, config.save)
        if verb == 'delta':
            return self.show_delta(config.ring)
        if verb == 'radical':
            return self.show_radical(config.ring)
        if verb == 'elements':
            return self.show_elements(config.ring)
        if verb == 'check':
            return self.check_predicate(config.predicate, config.ring, config.e)
        if verb == 'implication':
            return self.run_implication(config.premise, config.conclusion)
        if verb == 'search':
            return self.run_search(config.mode, config.predicates)
        if verb == 'regress':
            return self.run_regression(config.entries)
        raise ValueError('Unknown verb: %r' % (verb,))

    def handle_actions(self):
        if self.deltaring_config.gc_cache is not None:
            self.deltaring.cache_storage.gc(list(TheoremBase.__subclasses__), self.deltaring_config.gc_cache)
            sys.exit(0)

    def check_edit_config(self):
        if self.deltaring_config.edit_config:
            sys.exit(self.deltaring.config_storage.edit())

    def execute(self):
        """Run the selected verb; returns the exit code"""
        try:
            return self.dispatch()
        except REFUSALS as e:
            logger.info('Refused: %s', e, exc_info=True)
            print('Refused: %s' % (e,), file=sys.stderr)
            return 3
        except (RingError, ValueError, OSError, yaml.YAMLError) as e:
            logger.debug('Command failed', exc_info=True)
            print('Error: %s' % (e,), file=sys.stderr)
            return 2

    def run(self):
        self.check_edit_config()
        self.handle_actions()
        code = self.execute()
        self.deltaring.close()
        sys.exit(code)
