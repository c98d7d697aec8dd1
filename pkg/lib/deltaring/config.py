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


import argparse
import logging

import deltaring
from .catalog import TIER_NAMES

logger = logging.getLogger(__name__)

FORMATS = ('text', 'yaml', 'json')


class BaseConfig(object):

    def __init__(self, pkgname, deltaring_dir, config, cache, manifest, verbose):
        self.pkgname = pkgname
        self.deltaring_dir = deltaring_dir
        self.config = config
        self.cache = cache
        self.manifest = manifest
        self.verbose = verbose


class CommandConfig(BaseConfig):

    def __init__(self, args, pkgname, deltaring_dir, config, cache, manifest=None, verbose=False):
        super().__init__(pkgname, deltaring_dir, config, cache, manifest, verbose)
        self.parse_args(args)

    def parse_args(self, cmdline_args):
        parser = argparse.ArgumentParser(prog=self.pkgname, description=deltaring.__doc__,
                                         formatter_class=argparse.RawDescriptionHelpFormatter)
        parser.add_argument('--version', action='version', version='%(prog)s {}'.format(deltaring.__version__))
        parser.add_argument('-v', '--verbose', action='store_true', help='show debug output')
        parser.add_argument('--format', choices=FORMATS, default='text', help='output format (default: text)')
        parser.add_argument('--tier', choices=TIER_NAMES, default=None,
                            help='catalog tier for sweeps (default: from the configuration)')

        group = parser.add_argument_group('files and directories')
        group.add_argument('--config', metavar='FILE', help='read configuration from FILE', default=self.config)
        group.add_argument('--cache', metavar='FILE', help='use FILE as verdict history database',
                           default=self.cache)
        group.add_argument('--manifest', metavar='FILE', help='read named Cayley tables and algebras from FILE',
                           default=self.manifest)

        group = parser.add_argument_group('interactive commands ($EDITOR/$VISUAL)')
        group.add_argument('--edit-config', action='store_true', help='edit configuration file')

        group = parser.add_argument_group('miscellaneous')
        group.add_argument('--gc-cache', metavar='RETAIN_LIMIT', type=int, nargs='?', const=1,
                           help='remove old verdict history, keeping the latest RETAIN_LIMIT (default: 1)')

        verbs = parser.add_subparsers(dest='verb', metavar='VERB')

        sub = verbs.add_parser('eval', help='order, characteristic and axiom status of a ring')
        sub.add_argument('ring', metavar='EXPR', help='ring expression')
        sub.add_argument('--save', metavar='FILE', help='write the ring as a table file')

        sub = verbs.add_parser('delta', help='the Zhou radical and agreement of its characterizations')
        sub.add_argument('ring', metavar='EXPR', help='ring expression')

        sub = verbs.add_parser('radical', help='Jacobson radical, socle and right ideal counts')
        sub.add_argument('ring', metavar='EXPR', help='ring expression')

        sub = verbs.add_parser('elements', help='nilpotents, idempotents, units and center')
        sub.add_argument('ring', metavar='EXPR', help='ring expression')

        sub = verbs.add_parser('check', help='decide a ring class predicate')
        sub.add_argument('predicate', metavar='PREDICATE', help='predicate id (see catalog --features)')
        sub.add_argument('ring', metavar='EXPR', help='ring expression')
        sub.add_argument('--e', metavar='ELEM', dest='e', help='the idempotent, as a structured literal')

        sub = verbs.add_parser('implication', help='search the catalog for rings where P holds and Q fails')
        sub.add_argument('premise', metavar='P', help='predicate id, or id@1 to fix e = 1')
        sub.add_argument('conclusion', metavar='Q', help='predicate id, or id@1 to fix e = 1')

        sub = verbs.add_parser('regress', help='re-verify the regression statements')
        sub.add_argument('entries', metavar='ENTRY', nargs='*', help='entry ids to run (default: all)')

        sub = verbs.add_parser('search', help='counterexample search over the catalog')
        sub.add_argument('mode', choices=('pasting', 'implication'), nargs='?', default='pasting')
        sub.add_argument('predicates', metavar='P Q', nargs='*', help='premise and conclusion for implication')

        sub = verbs.add_parser('catalog', help='list catalog rings')
        sub.add_argument('--features', action='store_true',
                         help='list constructions, predicates, regression entries and report formats')

        args = parser.parse_args(cmdline_args)

        if args.verb is None and not args.edit_config and args.gc_cache is None:
            parser.error('a verb is required')
        if args.verb == 'search' and args.mode == 'implication' and len(args.predicates) != 2:
            parser.error('search implication needs exactly two predicates')

        for arg in vars(args):
            setattr(self, arg, getattr(args, arg))
