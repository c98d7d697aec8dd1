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


# File and folder paths
import logging
import os.path
import signal
import sys

import yaml
from platformdirs import PlatformDirs

pkgname = 'deltaring'
deltaring_dir = os.path.expanduser(os.path.join('~', '.' + pkgname))
deltaring_cache_dir = PlatformDirs(pkgname).user_cache_dir

if not os.path.exists(deltaring_dir):
    deltaring_dir = PlatformDirs(pkgname).user_config_dir

from deltaring.command import DeltaringCommand
from deltaring.config import CommandConfig
from deltaring.main import Deltaring
from deltaring.ring import RingError
from deltaring.storage import YamlConfigStorage, CacheMiniDBStorage

# Ignore SIGPIPE for stdout, so piping into head does not raise
try:
    signal.signal(signal.SIGPIPE, signal.SIG_DFL)
except AttributeError:
    # Windows does not have signal.SIGPIPE
    ...

logger = logging.getLogger(pkgname)

CONFIG_FILE = 'deltaring.yaml'
CACHE_FILE = 'verdicts.db'


def setup_logger(verbose):
    if verbose:
        root_logger = logging.getLogger('')
        console = logging.StreamHandler()
        console.setFormatter(logging.Formatter('%(asctime)s %(module)s %(levelname)s: %(message)s'))
        root_logger.addHandler(console)
        root_logger.setLevel(logging.DEBUG)
        root_logger.info('turning on verbose logging mode')


def main(args=None):
    config_file = os.path.join(deltaring_dir, CONFIG_FILE)
    cache_file = os.path.join(deltaring_cache_dir, CACHE_FILE)

    command_config = CommandConfig(sys.argv[1:] if args is None else args, pkgname, deltaring_dir,
                                   config_file, cache_file)
    setup_logger(command_config.verbose)

    # setup storage API, then the engine; a broken config or manifest exits 2
    try:
        config_storage = YamlConfigStorage(command_config.config)
        cache_storage = CacheMiniDBStorage(command_config.cache)
        deltaring = Deltaring(command_config, config_storage, cache_storage)
    except (RingError, OSError, ValueError, yaml.YAMLError) as e:
        print("Error: %s" % (e,), file=sys.stderr)
        sys.exit(2)
    deltaring_command = DeltaringCommand(deltaring)

    deltaring_command.run()


if __name__ == '__main__':
    main()
