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
import os
import sys

from .catalog import Catalog
from .expr import Evaluator, Manifest
from .handler import Report
from .limits import limits
from .regression import RegressionContext, run_regression

logger = logging.getLogger(__name__)


class Deltaring(object):
    def __init__(self, deltaring_config, config_storage, cache_storage):

        self.deltaring_config = deltaring_config

        logger.info('Using %s as configuration', self.deltaring_config.config)
        logger.info('Using %s as verdict history', self.deltaring_config.cache)

        self.config_storage = config_storage
        self.cache_storage = cache_storage

        self.check_directories()

        self.config = self.config_storage.config
        limits.update(**self.config['limits'])
        logger.debug('Active limits: %r', limits)

        self.evaluator = Evaluator(self.load_manifest())
        self.report = Report(self.config)
        self._catalog = None

    def check_directories(self):
        if not os.path.exists(self.deltaring_config.config):
            self.config_storage.write_default_config(self.deltaring_config.config)
            print("""
    A default config has been written to {config_yaml}.
    Use "{pkgname} --edit-config" to customize it.
        """.format(config_yaml=self.deltaring_config.config, pkgname=self.deltaring_config.pkgname), file=sys.stderr)

    def load_manifest(self):
        filename = self.deltaring_config.manifest
        if filename is None:
            return Manifest()
        logger.info('Using %s as manifest', filename)
        return Manifest.from_file(filename)

    @property
    def catalog(self):
        if self._catalog is None:
            settings = self.config['catalog']
            tier = self.deltaring_config.tier or settings['tier']
            self._catalog = Catalog(self.evaluator, tier=tier, include_huge=settings['include_huge'])
            logger.debug('Catalog tiers: %s', ', '.join(self._catalog.tiers))
        return self._catalog

    @property
    def max_workers(self):
        return self.config['harness']['max_workers']

    def ring(self, text):
        return self.evaluator.evaluate(text)

    def run_regression(self, ids=None):
        context = RegressionContext(self.catalog, max_workers=self.max_workers)
        history = self.cache_storage if self.config['harness']['history'] else None
        return run_regression(context, self.report, history, ids=ids, max_workers=self.max_workers)

    def close(self):
        if self.cache_storage is not None:
            self.cache_storage.close()
