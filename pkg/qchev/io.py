#!/usr/bin/env python3
"""
I/O and related utils.

Space descriptors are written ``FAMILYrank:node`` (Bourbaki numbering), e.g.
``A3:2`` for Gr(2, 4). Product factors add a scaling, ``A3:2:-1/2``; the
token ``any`` stands for an arbitrary closed symplectic factor.

Attributes
----------
EXT_JSONL : list
    List of supported JSON-lines file extensions, in lower case.
CSV_HEADER : list
    Columns of the atlas CSV summary.
ATLAS_RECORD_SCHEMA : dict
    JSON schema of one atlas record.
LGR :
    Logger
"""

import csv
import json
import logging
import re
from dataclasses import dataclass
from fractions import Fraction

from qchev import utils
from qchev.bounds import ANY_CLOSED, NormalizedFactor
from qchev.errors import DescriptorError, InvalidRank, SchemaError
from qchev.roots import FAMILIES, RANK_BOUNDS, CartanType, build_root_system
from qchev.schubert import ParabolicChoice

EXT_JSONL = ['.jsonl', '.json']
CSV_HEADER = [
    'family',
    'rank',
    'node',
    'dim',
    'index',
    'schubert_count',
    'width_upper_pi',
    'seshadri_upper',
]

_DESCRIPTOR = re.compile(r'^\s*([A-Ga-g])(\d+):(\d+)\s*$')
_RATIONAL = r'(?:\s*-?\d+(?:/\d+|\.\d+)?\s*)'
_PI_STRING = {'type': 'string', 'pattern': r'^-?\d+(/\d+)? π$'}
_RATIONAL_STRING = {'type': 'string', 'pattern': r'^-?\d+(/\d+)?$'}

ATLAS_RECORD_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'title': 'qchev atlas record',
    'type': 'object',
    'required': ['descriptor', 'family', 'rank', 'node', 'canonical', 'status', 'weyl_order'],
    'properties': {
        'descriptor': {'type': 'string', 'pattern': r'^[A-G]\d+:\d+$'},
        'family': {'type': 'string', 'enum': list(FAMILIES)},
        'rank': {'type': 'integer', 'minimum': 1},
        'node': {'type': 'integer', 'minimum': 1},
        'canonical': {'type': 'boolean'},
        'status': {'type': 'string', 'enum': ['ok', 'skipped']},
        'weyl_order': {'type': 'integer', 'minimum': 1},
        'reason': {'type': 'string'},
        'complex_dimension': {'type': 'integer', 'minimum': 1},
        'index': {'type': 'integer', 'minimum': 1},
        'schubert_count': {'type': 'integer', 'minimum': 2},
        'cominuscule': {'type': 'boolean'},
        'witness': {
            'type': 'object',
            'required': [
                'alpha_dim',
                'beta_dim',
                'coefficient',
                'real_dim_sum',
                'dim_relation',
                'dim_relation_ok',
            ],
            'properties': {
                'alpha_dim': {'type': 'integer', 'minimum': 0},
                'beta_dim': {'type': 'integer', 'minimum': 0},
                'coefficient': {'type': 'integer', 'minimum': 1},
                'real_dim_sum': {'type': 'integer', 'minimum': 0},
                'dim_relation': {'type': 'integer', 'minimum': 0},
                'dim_relation_ok': {'const': True},
            },
            'additionalProperties': False,
        },
        'bounds': {
            'type': 'object',
            'required': ['width_upper', 'seshadri_upper', 'sharpness', 'citations'],
            'properties': {
                'width_upper': _PI_STRING,
                'gw_capacity': {'oneOf': [_PI_STRING, {'type': 'null'}]},
                'seshadri_upper': {'oneOf': [_RATIONAL_STRING, {'type': 'null'}]},
                'sharpness': {'type': 'string', 'enum': ['exact', 'conjectural']},
                'citations': {
                    'type': 'array',
                    'items': {'type': 'string'},
                    'minItems': 1,
                },
                'width_upper_decimal': {'type': 'number'},
                'seshadri_upper_decimal': {'type': 'number'},
            },
            'additionalProperties': False,
        },
    },
    'additionalProperties': False,
    'if': {'properties': {'status': {'const': 'ok'}}},
    'then': {
        'required': [
            'complex_dimension',
            'index',
            'schubert_count',
            'cominuscule',
            'witness',
            'bounds',
        ]
    },
    'else': {'required': ['reason']},
}

LGR = logging.getLogger(__name__)
LGR.setLevel(logging.INFO)


@dataclass(frozen=True, order=True)
class SpaceDescriptor:
    """
    A homogeneous space G/P with b_2 = 1, as family, rank and excluded node.

    Descriptors sort by (family, rank, node).
    """

    family: str
    rank: int
    node: int

    def __str__(self):
        return f'{self.family}{self.rank}:{self.node}'

    @property
    def cartan_type(self):
        """The CartanType of G."""
        return CartanType(self.family, self.rank)

    @property
    def canonical(self):
        """Whether the node is least in its orbit under diagram automorphisms."""
        return is_canonical(self.family, self.rank, self.node)

    def parabolic(self):
        """Build the ParabolicChoice described."""
        return ParabolicChoice(build_root_system(self.cartan_type), self.node)


def parse_descriptor(text):
    """
    Parse ``'A3:2'`` into a SpaceDescriptor.

    Parameters
    ----------
    text : str
        The descriptor.

    Returns
    -------
    SpaceDescriptor
        The parsed descriptor, with upper case family.

    Raises
    ------
    DescriptorError
        If `text` is malformed, the rank is invalid for the family, or the
        node is out of range.
    """
    match = _DESCRIPTOR.match(str(text))
    if match is None:
        raise DescriptorError(
            f'Cannot parse {text!r}: descriptors look like "A3:2" (family, rank, node)'
        )
    family, rank, node = match.group(1).upper(), int(match.group(2)), int(match.group(3))
    try:
        CartanType(family, rank)
    except InvalidRank as err:
        raise DescriptorError(f'Invalid descriptor {text!r}: {err}')
    if not 1 <= node <= rank:
        raise DescriptorError(
            f'Invalid descriptor {text!r}: node {node} is not in 1..{rank}'
        )
    return SpaceDescriptor(family, rank, node)


def parse_factor(text):
    """
    Parse one product factor.

    Accepted forms are ``'A3:2'`` (scaling 1), ``'A3:2:a'`` with a rational
    ``a`` (``'-1/2'``, ``'0.5'``), and ``'any'`` or ``'any:a'`` for an
    arbitrary closed symplectic factor, whose scaling is irrelevant.

    Returns
    -------
    NormalizedFactor
        The factor.

    Raises
    ------
    DescriptorError
        If `text` is malformed.
    ZeroScaling
        If a homogeneous factor is scaled by zero.
    """
    text = str(text).strip()
    head, _, tail = text.partition(':')
    if head.lower() == 'any':
        if tail and not re.fullmatch(_RATIONAL, tail):
            raise DescriptorError(f'Cannot parse the scaling of {text!r}')
        if tail:
            LGR.debug(f'Scaling {tail} of the arbitrary factor does not enter the bound')
        return NormalizedFactor(ANY_CLOSED, Fraction(1))

    parts = text.split(':')
    if len(parts) == 2:
        return NormalizedFactor(parse_descriptor(text).parabolic())
    if len(parts) != 3:
        raise DescriptorError(
            f'Cannot parse factor {text!r}: use "A3:2", "A3:2:-1/2", or "any"'
        )
    descriptor = parse_descriptor(':'.join(parts[:2]))
    try:
        scaling = utils.if_declared_force_type(parts[2], 'fraction', 'scaling', silent=True)
    except ValueError as err:
        raise DescriptorError(f'Cannot parse factor {text!r}: {err}')
    if scaling is None or scaling == '':
        raise DescriptorError(f'Cannot parse factor {text!r}: empty scaling')
    return NormalizedFactor(descriptor.parabolic(), scaling)


def is_canonical(family, rank, node):
    """
    Whether `node` is the least node of its orbit under diagram automorphisms.

    A_n swaps ``j`` and ``n + 1 - j``; D_n swaps the two spinor nodes, and
    D_4 permutes nodes 1, 3, 4; E_6 swaps 1 and 6, 3 and 5.
    """
    if family == 'A':
        return node <= rank + 1 - node
    if family == 'D':
        if rank == 4:
            return node not in (3, 4)
        return node != rank
    if family == 'E' and rank == 6:
        return node not in (5, 6)
    return True


def iter_descriptors(max_rank, dedup=False):
    """
    Every descriptor of rank at most `max_rank`, sorted by (family, rank, node).

    Parameters
    ----------
    max_rank : int
        Largest rank, at least 1.
    dedup : bool, optional
        Keep only canonical descriptors. Default: False.

    Returns
    -------
    list of SpaceDescriptor
        The descriptors.
    """
    if max_rank < 1:
        raise ValueError(f'Maximum rank must be at least 1, got {max_rank}')
    out = []
    for family in FAMILIES:
        low, high = RANK_BOUNDS[family]
        high = max_rank if high is None else min(high, max_rank)
        for rank in range(low, high + 1):
            for node in range(1, rank + 1):
                desc = SpaceDescriptor(family, rank, node)
                if dedup and not desc.canonical:
                    continue
                out.append(desc)
    return sorted(out)


def dumps_record(record):
    """Deterministic one-line JSON rendering of a record."""
    return json.dumps(record, sort_keys=True, separators=(',', ':'), ensure_ascii=False)


def loads_record(line):
    """Parse one JSON-lines record."""
    return json.loads(line)


def validate_record(record, schema=None):
    """
    Validate a record against `ATLAS_RECORD_SCHEMA`.

    Notes
    -----
    Requires module ``jsonschema`` to work.

    Raises
    ------
    ImportError
        If jsonschema is not installed.
    SchemaError
        If the record does not validate.
    """
    try:
        import jsonschema
    except ImportError:
        raise ImportError(
            'jsonschema is required to validate records. '
            'Please install qchev with the "schema" extra.'
        )

    try:
        jsonschema.validate(instance=record, schema=schema or ATLAS_RECORD_SCHEMA)
    except jsonschema.ValidationError as err:
        raise SchemaError(
            f'Record {record.get("descriptor", "?")} does not validate: {err.message}'
        )


def _check_out(fname, exts):
    has_ext, fname = utils.check_ext(exts, fname)
    if not has_ext:
        LGR.warning(f'{fname} does not end with any of {exts}')
    return fname


def write_jsonl(records, fname):
    """
    Export records as JSON lines, UTF-8 with LF endings.

    Parameters
    ----------
    records : list of dict
        The records.
    fname : str or os.PathLike
        Output file.
    """
    fname = _check_out(fname, EXT_JSONL)
    LGR.info(f'Export {len(records)} records to {fname}')
    with open(fname, 'w', encoding='utf-8', newline='\n') as f:
        for record in records:
            f.write(dumps_record(record) + '\n')


def read_jsonl(fname):
    """Read back records written by `write_jsonl`."""
    with open(fname, encoding='utf-8') as f:
        return [loads_record(line) for line in f if line.strip()]


def _pi_units(text):
    return text[: -len(' π')] if text else ''


def write_csv(records, fname):
    """
    Export the atlas summary as CSV with header `CSV_HEADER`.

    Skipped records keep their descriptor columns and leave the others empty.
    """
    fname = _check_out(fname, ['.csv'])
    LGR.info(f'Export summary to {fname}')
    with open(fname, 'w', encoding='utf-8', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(CSV_HEADER)
        for rec in records:
            bounds = rec.get('bounds') or {}
            writer.writerow(
                [
                    rec['family'],
                    rec['rank'],
                    rec['node'],
                    rec.get('complex_dimension', ''),
                    rec.get('index', ''),
                    rec.get('schubert_count', ''),
                    _pi_units(bounds.get('width_upper')),
                    bounds.get('seshadri_upper') or '',
                ]
            )


def write_timing(timings, fname):
    """
    Export per-descriptor wall times (seconds) as a two-column TSV.

    Parameters
    ----------
    timings : dict
        Mapping descriptor string -> seconds.
    fname : str or os.PathLike
        Output file.
    """
    LGR.debug(f'Export timings to {fname}')
    with open(fname, 'w', encoding='utf-8', newline='\n') as f:
        f.write('descriptor\tseconds\n')
        for key in sorted(timings):
            f.write(f'{key}\t{timings[key]:.6f}\n')


def render_table(rows):
    """
    Render ``(key, value)`` rows as an aligned two-column text table.

    Parameters
    ----------
    rows : list of tuple
        Rows; values are turned into strings.

    Returns
    -------
    str
        The table, one row per line.
    """
    rows = [(str(k), '' if v is None else str(v)) for k, v in rows]
    width = max((len(k) for k, _ in rows), default=0)
    return '\n'.join(f'{k:<{width}}  {v}' for k, v in rows)


"""
Copyright 2021-2026, Stefano Moia & qchev contributors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""
