#!/usr/bin/env python3
"""
Root systems of the finite Cartan types, in exact integer arithmetic.

Roots are stored in simple-root coordinates, coroots in simple-coroot
coordinates. The Cartan matrix follows the convention
``C[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``
with Bourbaki node numbering (see ``docs/usage/dynkin_diagrams.md``).

Indices of simple roots are 1-based in every public function, as in the
Dynkin diagrams; arrays are 0-based internally.

Attributes
----------
FAMILIES : tuple
    Supported Cartan families.
RANK_BOUNDS : dict
    Admissible ranks per family, as ``(min, max)`` with ``max=None`` if unbounded.
FUNDAMENTAL_DEGREES : dict
    Fundamental degrees of the exceptional Weyl groups.
LGR :
    Logger
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import prod

import numpy as np

from qchev.errors import DimensionMismatch, IndexOutOfRange, InvalidRank, NotARoot

FAMILIES = ('A', 'B', 'C', 'D', 'E', 'F', 'G')
RANK_BOUNDS = {
    'A': (1, None),
    'B': (2, None),
    'C': (2, None),
    'D': (4, None),
    'E': (6, 8),
    'F': (4, 4),
    'G': (2, 2),
}
FUNDAMENTAL_DEGREES = {
    ('E', 6): (2, 5, 6, 8, 9, 12),
    ('E', 7): (2, 6, 8, 10, 12, 14, 18),
    ('E', 8): (2, 8, 12, 14, 18, 20, 24, 30),
    ('F', 4): (2, 6, 8, 12),
    ('G', 2): (2, 6),
}

LGR = logging.getLogger(__name__)
LGR.setLevel(logging.INFO)


@dataclass(frozen=True, order=True)
class CartanType:
    """
    A finite Cartan type, e.g. ``CartanType('B', 3)``.

    Parameters
    ----------
    family : str
        One of ``'A'`` to ``'G'``.
    rank : int
        Rank of the type.

    Raises
    ------
    InvalidRank
        If the family is unknown or the rank is not admissible for it.
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidRank(
                f'Cartan family {self.family!r} not supported. '
                f'Supported families are {FAMILIES}'
            )
        if isinstance(self.rank, bool) or not isinstance(self.rank, int):
            raise InvalidRank(f'Rank must be an integer, got {self.rank!r}')
        low, high = RANK_BOUNDS[self.family]
        if self.rank < low or (high is not None and self.rank > high):
            upper = 'infinity' if high is None else high
            raise InvalidRank(
                f'Rank {self.rank} is not admissible for family {self.family}: '
                f'it must lie in [{low}, {upper}].'
            )

    def __str__(self):
        return f'{self.family}{self.rank}'


@dataclass(frozen=True)
class Weight:
    """An integral weight, in the basis of fundamental weights."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, 'coords', tuple(int(c) for c in self.coords))

    def __len__(self):
        return len(self.coords)


def cartan_matrix(family, rank):
    """
    Build the Cartan matrix of a finite type in Bourbaki numbering.

    Parameters
    ----------
    family : str
        Cartan family letter.
    rank : int
        Rank.

    Returns
    -------
    np.ndarray
        ``rank x rank`` integer matrix with ``C[i][j] = <alpha_j, alpha_i^vee>``.
    """
    ctype = CartanType(family, rank)
    n = ctype.rank
    cmat = 2 * np.eye(n, dtype=np.int64)

    def link(i, j, cij=-1, cji=-1):
        cmat[i, j] = cij
        cmat[j, i] = cji

    if family in 'ABC':
        for i in range(n - 1):
            link(i, i + 1)
        if family == 'B':
            # alpha_n is short
            link(n - 2, n - 1, -1, -2)
        elif family == 'C':
            # alpha_n is long
            link(n - 2, n - 1, -2, -1)
    elif family == 'D':
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == 'E':
        # 1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
        link(0, 2)
        for i in range(2, n - 1):
            link(i, i + 1)
        link(1, 3)
    elif family == 'F':
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif family == 'G':
        # alpha_1 is short
        link(0, 1, -3, -1)

    return cmat


def dual_cartan_type(ctype):
    """
    Return the type of the coroot system.

    Parameters
    ----------
    ctype : CartanType
        A Cartan type.

    Returns
    -------
    CartanType
        ``C_n`` for ``B_n`` and vice versa, the type itself otherwise.
        (``F_4`` and ``G_2`` are self-dual up to reversing the node numbering.)
    """
    swap = {'B': 'C', 'C': 'B'}
    return CartanType(swap.get(ctype.family, ctype.family), ctype.rank)


def fundamental_degrees(ctype):
    """
    Return the fundamental degrees of the Weyl group of `ctype`.

    Parameters
    ----------
    ctype : CartanType
        A Cartan type.

    Returns
    -------
    tuple of int
        The degrees, in increasing order.
    """
    n = ctype.rank
    if ctype.family == 'A':
        return tuple(range(2, n + 2))
    if ctype.family in 'BC':
        return tuple(range(2, 2 * n + 1, 2))
    if ctype.family == 'D':
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
    return FUNDAMENTAL_DEGREES[(ctype.family, n)]


def weyl_group_order(ctype):
    """
    Order of the Weyl group, as the product of the fundamental degrees.

    Parameters
    ----------
    ctype : CartanType
        A Cartan type.

    Returns
    -------
    int
        The order of the Weyl group.
    """
    return prod(fundamental_degrees(ctype))


def _is_positive(vec):
    return all(c >= 0 for c in vec) and any(c > 0 for c in vec)


class RootSystem:
    """
    Positive roots and coroots of a finite Cartan type.

    Instances are immutable and built through `build_root_system`, which
    caches one instance per Cartan type.

    Parameters
    ----------
    cartan_type : CartanType
        The type of the system.
    cartan_matrix : np.ndarray
        Its Cartan matrix.
    positive_roots : tuple of tuple of int
        Positive roots in simple-root coordinates, sorted by height then
        coordinates.
    positive_coroots : tuple of tuple of int
        Coroots of `positive_roots`, in the same order, in simple-coroot
        coordinates.
    """

    def __init__(self, cartan_type, cartan_matrix, positive_roots, positive_coroots):
        self.cartan_type = cartan_type
        cartan_matrix = np.array(cartan_matrix, dtype=np.int64)
        cartan_matrix.setflags(write=False)
        self.cartan_matrix = cartan_matrix
        self.positive_roots = tuple(tuple(r) for r in positive_roots)
        self.positive_coroots = tuple(tuple(c) for c in positive_coroots)
        self._index = {r: i for i, r in enumerate(self.positive_roots)}

    def __repr__(self):
        return f'RootSystem({self.cartan_type})'

    def __eq__(self, other):
        if not isinstance(other, RootSystem):
            return NotImplemented
        return self.cartan_type == other.cartan_type

    def __hash__(self):
        return hash(('RootSystem', self.cartan_type))

    @property
    def rank(self):
        """Rank of the system."""
        return self.cartan_type.rank

    @cached_property
    def roots_array(self):
        """Positive roots as the columns of a ``rank x |R+|`` array."""
        arr = np.array(self.positive_roots, dtype=np.int64).T.copy()
        arr.setflags(write=False)
        return arr

    @cached_property
    def highest_root(self):
        """The highest root (last in height order)."""
        return self.positive_roots[-1]

    def check_index(self, i):
        """
        Check that `i` is a valid 1-based simple-root index.

        Raises
        ------
        IndexOutOfRange
            If `i` is not in ``1..rank``.
        """
        if isinstance(i, bool) or not isinstance(i, (int, np.integer)):
            raise IndexOutOfRange(f'Simple root index must be an integer, got {i!r}')
        if not 1 <= i <= self.rank:
            raise IndexOutOfRange(
                f'Simple root index {i} out of range for {self.cartan_type} '
                f'(expected 1..{self.rank}).'
            )

    def index_of(self, root):
        """
        Position of a positive root in `positive_roots`.

        Raises
        ------
        NotARoot
            If `root` is not a positive root.
        """
        key = tuple(int(c) for c in root)
        try:
            return self._index[key]
        except KeyError:
            raise NotARoot(f'{key} is not a positive root of {self.cartan_type}')

    def coroot_of(self, root):
        """Coroot of a positive root, in simple-coroot coordinates."""
        return self.positive_coroots[self.index_of(root)]

    def pair_root_coroot(self, root, i):
        """
        Pairing ``<root, alpha_i^vee>`` of a root vector with a simple coroot.

        Parameters
        ----------
        root : sequence of int
            Vector in simple-root coordinates.
        i : int
            1-based simple-root index.

        Returns
        -------
        int
            ``sum_j root[j] * C[i][j]``.
        """
        self.check_index(i)
        if len(root) != self.rank:
            raise DimensionMismatch(
                f'Root vector of length {len(root)} does not match rank {self.rank}'
            )
        return int(self.cartan_matrix[i - 1] @ np.asarray(root, dtype=np.int64))

    def fundamental_weight(self, i):
        """Fundamental weight ``omega_i``."""
        self.check_index(i)
        return Weight(tuple(int(j == i - 1) for j in range(self.rank)))

    def is_root(self, vec):
        """Whether `vec` is a root (positive or negative)."""
        key = tuple(int(c) for c in vec)
        return key in self._index or tuple(-c for c in key) in self._index


@lru_cache(maxsize=None)
def build_root_system(ctype):
    """
    Generate the positive roots and coroots of a Cartan type.

    Roots and coroots are reflected together, starting from the simple ones,
    until the orbit closes: ``s_j(alpha) = alpha - <alpha, alpha_j^vee> alpha_j``
    and ``s_j(alpha^vee) = alpha^vee - <alpha_j, alpha^vee> alpha_j^vee``.

    Parameters
    ----------
    ctype : CartanType
        The Cartan type.

    Returns
    -------
    RootSystem
        The root system, with roots sorted by height then coordinates.

    Raises
    ------
    InvalidRank
        If `ctype` is not a valid Cartan type.
    """
    if not isinstance(ctype, CartanType):
        ctype = CartanType(*ctype)
    LGR.debug(f'Build root system {ctype}')
    cmat = cartan_matrix(ctype.family, ctype.rank)
    n = ctype.rank
    eye = np.eye(n, dtype=np.int64)

    found = {}
    queue = deque()
    for i in range(n):
        simple = tuple(int(c) for c in eye[i])
        found[simple] = simple
        queue.append(simple)

    while queue:
        root = queue.popleft()
        coroot = np.array(found[root], dtype=np.int64)
        root_arr = np.array(root, dtype=np.int64)
        # <root, alpha_j^vee> for all j, and <alpha_j, coroot> for all j
        root_pairs = cmat @ root_arr
        coroot_pairs = cmat.T @ coroot
        for j in range(n):
            new_root = root_arr - root_pairs[j] * eye[j]
            if not _is_positive(new_root):
                continue
            key = tuple(int(c) for c in new_root)
            if key not in found:
                new_coroot = coroot - coroot_pairs[j] * eye[j]
                found[key] = tuple(int(c) for c in new_coroot)
                queue.append(key)

    roots = sorted(found, key=lambda r: (sum(r), r))
    LGR.debug(f'{ctype} has {len(roots)} positive roots')
    return RootSystem(ctype, cmat, roots, [found[r] for r in roots])


def pair_weight_coroot(weight, coroot):
    """
    Pair a weight with a coroot.

    Parameters
    ----------
    weight : Weight or sequence of int
        Weight in fundamental-weight coordinates.
    coroot : sequence of int
        Coroot in simple-coroot coordinates.

    Returns
    -------
    int
        ``sum_i weight[i] * coroot[i]``.

    Raises
    ------
    DimensionMismatch
        If the two vectors have different lengths.
    """
    coords = weight.coords if isinstance(weight, Weight) else tuple(weight)
    if len(coords) != len(coroot):
        raise DimensionMismatch(
            f'Weight of length {len(coords)} cannot be paired with a coroot of '
            f'length {len(coroot)}'
        )
    return sum(int(w) * int(c) for w, c in zip(coords, coroot))


def simple_reflection_action(rs, i):
    """
    Matrix of the simple reflection ``s_i`` on simple-root coordinates.

    Column ``j`` is ``s_i(alpha_j) = alpha_j - C[i][j] alpha_i``.

    Parameters
    ----------
    rs : RootSystem
        The root system.
    i : int
        1-based simple-root index.

    Returns
    -------
    np.ndarray
        Read-only ``rank x rank`` integer matrix.

    Raises
    ------
    IndexOutOfRange
        If `i` is not in ``1..rank``.
    """
    rs.check_index(i)
    mat = np.eye(rs.rank, dtype=np.int64)
    mat[i - 1, :] -= rs.cartan_matrix[i - 1, :]
    mat.setflags(write=False)
    return mat


"""
Copyright 2026, qchev contributors.

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
