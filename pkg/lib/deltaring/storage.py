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


import os
import copy
import shutil
import logging
from abc import ABCMeta, abstractmethod

import yaml
import minidb

from .util import atomic_rename, edit_file
from .ring import ShapeError, build_table_ring, ring_tables

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = {
    'limits': {
        'max_order': 4096,
        'lattice_cap': 2 ** 20,
        'predicate_budget': 2 ** 32,
        'weakly_symmetric_max_order': 32,
        'search_budget': 2 ** 24,
        'power_bound': None,
    },

    'catalog': {
        'tier': 'medium',
        'include_huge': False,
    },

    'harness': {
        'max_workers': 4,
        'history': True,
    },

    'report': {
        'text': {
            'line_length': 75,
            'details': True,
            'footer': True,
        },
        'yaml': {},
        'json': {
            'indent': 2,
        },
    },
}


def merge(source, destination):
    # http://stackoverflow.com/a/20666342
    for key, value in source.items():
        if isinstance(value, dict):
            # get node or create one
            node = destination.setdefault(key, {})
            merge(value, node)
        else:
            destination[key] = value

    return destination


class BaseStorage(metaclass=ABCMeta):
    @abstractmethod
    def load(self, *args):
        ...

    @abstractmethod
    def save(self, *args):
        ...


class BaseFileStorage(BaseStorage, metaclass=ABCMeta):
    def __init__(self, filename):
        self.filename = filename


class BaseTextualFileStorage(BaseFileStorage, metaclass=ABCMeta):
    def __init__(self, filename):
        super().__init__(filename)
        self.config = {}
        self.load()

    @classmethod
    @abstractmethod
    def parse(cls, *args):
        ...

    def edit(self, example_file=None):
        fn_base, fn_ext = os.path.splitext(self.filename)
        file_edit = fn_base + '.edit' + fn_ext

        if os.path.exists(self.filename):
            shutil.copy(self.filename, file_edit)
        elif example_file is not None and os.path.exists(example_file):
            os.makedirs(os.path.dirname(file_edit) or '.', exist_ok=True)
            shutil.copy(example_file, file_edit)

        while True:
            try:
                edit_file(file_edit)
                # Check if we can still parse it
                self.parse(file_edit)
                break
            except SystemExit:
                raise
            except Exception as e:
                print('Parsing failed:')
                print('======')
                print(e)
                print('======')
                print('')
                print('The file', file_edit, 'was NOT updated.')
                user_input = input("Do you want to retry the same edit? (Y/n)")
                if user_input.lower()[:1] == 'n':
                    print('Your changes have been saved in', file_edit)
                    return 1

        atomic_rename(file_edit, self.filename)
        print('Saving edit changes in', self.filename)
        return 0

    @classmethod
    def write_default_config(cls, filename):
        os.makedirs(os.path.dirname(filename) or '.', exist_ok=True)
        config_storage = cls(None)
        config_storage.filename = filename
        config_storage.save()


class BaseYamlFileStorage(BaseTextualFileStorage, metaclass=ABCMeta):
    @classmethod
    def parse(cls, *args):
        filename = args[0]
        if filename is not None and os.path.exists(filename):
            with open(filename) as fp:
                return yaml.load(fp, Loader=yaml.SafeLoader)


class YamlConfigStorage(BaseYamlFileStorage):
    def load(self, *args):
        config = self.parse(self.filename) or {}
        if not isinstance(config, dict):
            raise ValueError('Configuration %s must be a mapping' % (self.filename,))
        self.config = merge(config, copy.deepcopy(DEFAULT_CONFIG))

    def save(self, *args):
        with open(self.filename, 'w') as fp:
            yaml.dump(self.config, fp, default_flow_style=False)


def _read_mapping(filename, required=(), allowed=None):
    with open(filename) as fp:
        data = yaml.load(fp, Loader=yaml.SafeLoader)
    if not isinstance(data, dict):
        raise ValueError('%s: expected a mapping at the top level' % (filename,))
    missing = [key for key in required if key not in data]
    if missing:
        raise ValueError('%s: missing key(s) %s' % (filename, ', '.join(missing)))
    if allowed is not None:
        unknown = [str(key) for key in data if key not in allowed]
        if unknown:
            raise ValueError('%s: unknown key(s) %s' % (filename, ', '.join(unknown)))
    return data


class TableDumper(yaml.SafeDumper):
    """Block mappings, but every list (table rows included) on a single flow-style line"""
    ...


def _represent_list(dumper, data):
    return dumper.represent_sequence('tag:yaml.org,2002:seq', data, flow_style=True)


TableDumper.add_representer(list, _represent_list)


def _dump(data, fp):
    yaml.dump(data, fp, Dumper=TableDumper, default_flow_style=False, sort_keys=False, width=1 << 30,
              allow_unicode=True)


RING_KEYS = ('order', 'one', 'add', 'mul', 'labels')
ALGEBRA_KEYS = ('base', 'order', 'add', 'mul', 'left', 'right', 'labels')
CAYLEY_KEYS = ('elements', 'table')


def _layout(obj, default):
    """Keys of the document obj was loaded from, in file order, or default"""
    keys = obj.document_keys
    return list(default) if keys is None else keys


def _ring_layout(ring, default):
    keys = [key for key in default if key != 'labels' and (key != 'one' or ring.unital)]
    if ring.labels != [str(i) for i in range(ring.order)]:
        keys.append('labels')
    return _layout(ring, keys)


def _labels(data):
    labels = data.get('labels')
    return None if labels is None else [str(label) for label in labels]


class RingTableYaml(BaseFileStorage):
    """order, add, mul, optional one and labels

    Saving a ring that was loaded from a file writes the same keys in the same order, so a file
    already in this layout survives load and save unchanged.
    """

    def load(self, *args):
        data = _read_mapping(self.filename, ('add', 'mul'), RING_KEYS)
        order = data.get('order')
        if order is not None and order != len(data['add']):
            raise ShapeError('%s: order %r does not match %d table rows' % (self.filename, order, len(data['add'])))
        ring = build_table_ring(data['add'], data['mul'], data.get('one'), labels=_labels(data),
                                name=os.path.basename(self.filename))
        ring.document_keys = list(data)
        return ring

    def save(self, *args):
        ring = args[0]
        fields = ring_tables(ring)
        with open(self.filename, 'w') as fp:
            _dump({key: fields.get(key) for key in _ring_layout(ring, RING_KEYS)}, fp)


class CayleyTableYaml(BaseFileStorage):
    """elements (names) and table (indices)"""

    def load(self, name=None):
        from .constructors import CayleyTable
        data = _read_mapping(self.filename, CAYLEY_KEYS, CAYLEY_KEYS)
        cayley = CayleyTable(data['elements'], data['table'], name=name or os.path.basename(self.filename))
        cayley.document_keys = list(data)
        return cayley

    def save(self, *args):
        cayley = args[0]
        fields = {'elements': list(cayley.elements), 'table': cayley.table.tolist()}
        with open(self.filename, 'w') as fp:
            _dump({key: fields[key] for key in _layout(cayley, CAYLEY_KEYS)}, fp)


class AlgebraYaml(BaseFileStorage):
    """A non-unital ring T over a base ring expression, with both action tables"""

    def load(self, *args):
        data = _read_mapping(self.filename, ('base', 'add', 'mul', 'left', 'right'), ALGEBRA_KEYS)
        algebra = build_table_ring(data['add'], data['mul'], labels=_labels(data), name=os.path.basename(self.filename))
        algebra.document_keys = list(data)
        return {
            'base': str(data['base']),
            'algebra': algebra,
            'left': data['left'],
            'right': data['right'],
        }

    def save(self, *args):
        algebra = args[0]
        fields = ring_tables(algebra.algebra)
        fields.update(base=algebra.base.name, left=algebra.left.tolist(), right=algebra.right.tolist())
        with open(self.filename, 'w') as fp:
            _dump({key: fields.get(key) for key in _ring_layout(algebra.algebra, ALGEBRA_KEYS)}, fp)


class ManifestYaml(BaseFileStorage):
    """Named Cayley tables and algebras for ring expressions"""

    def load(self, *args):
        data = _read_mapping(self.filename, allowed=('tables', 'algebras'))
        for section in ('tables', 'algebras'):
            entries = data.get(section) or {}
            if not isinstance(entries, dict) or not all(isinstance(v, dict) for v in entries.values()):
                raise ValueError('%s: %s must map names to mappings' % (self.filename, section))
        return data

    def save(self, *args):
        with open(self.filename, 'w') as fp:
            _dump(args[0], fp)


class CacheStorage(BaseFileStorage, metaclass=ABCMeta):
    @abstractmethod
    def close(self):
        ...

    @abstractmethod
    def get_guids(self):
        ...

    @abstractmethod
    def load(self, guid):
        ...

    @abstractmethod
    def save(self, guid, verdict, timestamp, data=None):
        ...

    @abstractmethod
    def delete(self, guid):
        ...

    @abstractmethod
    def clean(self, guid, retain_limit=1):
        ...

    def gc(self, known_guids, retain_limit=1):
        if retain_limit <= 0:
            raise ValueError('History garbage collection must retain at least 1 verdict per entry (requested: %d)'
                             % (retain_limit,))
        for guid in set(self.get_guids()) - set(known_guids):
            print('Removing: {guid}'.format(guid=guid))
            self.delete(guid)

        for guid in known_guids:
            count = self.clean(guid, retain_limit)
            if count > 0:
                print('Removed {count} old verdicts of {guid}'.format(count=count, guid=guid))


class VerdictEntry(minidb.Model):
    guid = str
    timestamp = int
    verdict = str
    data = str


class CacheMiniDBStorage(CacheStorage):
    def __init__(self, filename):
        super().__init__(filename)

        dirname = os.path.dirname(filename)
        if dirname and not os.path.isdir(dirname):
            os.makedirs(dirname)

        self.db = minidb.Store(self.filename, debug=True, vacuum_on_close=False)
        self.db.register(VerdictEntry)

    def close(self):
        self.db.close()
        self.db = None

    def get_guids(self):
        return (guid for guid, in VerdictEntry.query(self.db, minidb.Function('distinct', VerdictEntry.c.guid)))

    def load(self, guid):
        for verdict, timestamp, data in VerdictEntry.query(self.db,
                                                           VerdictEntry.c.verdict // VerdictEntry.c.timestamp
                                                           // VerdictEntry.c.data,
                                                           order_by=minidb.columns(VerdictEntry.c.timestamp.desc,
                                                                                   VerdictEntry.c.id.desc),
                                                           where=VerdictEntry.c.guid == guid, limit=1):
            return verdict, timestamp, data

        return None, None, None

    def get_history(self, guid, count=1):
        history = []
        if count < 1:
            return history
        for verdict, timestamp in VerdictEntry.query(self.db, VerdictEntry.c.verdict // VerdictEntry.c.timestamp,
                                                     order_by=minidb.columns(VerdictEntry.c.timestamp.desc,
                                                                             VerdictEntry.c.id.desc),
                                                     where=VerdictEntry.c.guid == guid, limit=count):
            history.append((verdict, timestamp))
        return history

    def save(self, guid, verdict, timestamp, data=None):
        self.db.save(VerdictEntry(guid=guid, timestamp=timestamp, verdict=verdict, data=data))
        self.db.commit()

    def delete(self, guid):
        VerdictEntry.delete_where(self.db, VerdictEntry.c.guid == guid)
        self.db.commit()

    def clean(self, guid, retain_limit=1):
        retain_limit = max(1, retain_limit)
        keep_ids = [row[0] for row in VerdictEntry.query(
            self.db, VerdictEntry.c.id, where=VerdictEntry.c.guid == guid,
            order_by=minidb.columns(VerdictEntry.c.timestamp.desc, VerdictEntry.c.id.desc), limit=retain_limit)]
        if keep_ids:
            where_clause = VerdictEntry.c.guid == guid
            for keep_id in keep_ids:
                where_clause = where_clause & (VerdictEntry.c.id != keep_id)
            result = VerdictEntry.delete_where(self.db, where_clause)
            self.db.commit()
            self.db.vacuum()
            return result

        return 0
