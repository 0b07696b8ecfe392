#!/usr/bin/env python3
"""
Quantum multiplication by the divisor class on QH*(G/P), b_2(G/P) = 1.

The product follows the quantum Chevalley formula: for a codimension-graded
class ``sigma_u``,

    sigma_{s_beta} * sigma_u
        = sum  <omega_beta, alpha^vee> sigma_{u s_alpha}
            over alpha in R+ minus R_P+ with l(u s_alpha) = l(u) + 1
        + sum  <omega_beta, alpha^vee> q^{d(alpha)} sigma_{[u s_alpha]}
            over alpha in R+ minus R_P+ with l([u s_alpha]) = l(u) + 1 - d(alpha) I

where ``d(alpha)`` is the ``beta^vee`` coefficient of ``alpha^vee`` and ``I``
the Fano index. The coefficient of ``q^d sigma_w`` is the genus-zero
three-point invariant of degree ``d A`` through ``sigma_{s_beta}``,
``sigma_u`` and ``sigma(w)``.

All arithmetic is on Python integers.

Attributes
----------
LGR :
    Logger
"""

import logging
from collections import defaultdict
from dataclasses import dataclass

from qchev.errors import GradingError, LemmaViolation, RootInParabolic
from qchev.roots import pair_weight_coroot
from qchev.schubert import (
    SchubertClass,
    adjacent_partner,
    complex_dimension,
    fano_index,
    fundamental_class,
    minimal_coset_rep,
    point_class,
)
from qchev.weyl import longest_element, reflection_from_root

LGR = logging.getLogger(__name__)
LGR.setLevel(logging.INFO)


class QuantumProduct:
    """
    Finite map ``(representative, degree) -> positive coefficient``.

    Parameters
    ----------
    terms : dict, optional
        Mapping from ``(WeylElement, int)`` to ``int``. Zero coefficients are
        dropped.
    """

    def __init__(self, terms=None):
        self._terms = {}
        for (rep, degree), coef in (terms or {}).items():
            if degree < 0:
                raise ValueError(f'Curve degree must be nonnegative, got {degree}')
            if coef:
                self._terms[(rep, int(degree))] = int(coef)

    @staticmethod
    def _order(item):
        (rep, degree), _ = item
        return (degree, rep.sort_key)

    def items(self):
        """Terms as ``((rep, degree), coefficient)``, sorted by degree then rep."""
        return sorted(self._terms.items(), key=self._order)

    def __iter__(self):
        return iter(key for key, _ in self.items())

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, QuantumProduct):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self):
        body = ' + '.join(
            f'{coef} q^{d} {rep!r}' for (rep, d), coef in self.items()
        )
        return f'QuantumProduct({body or "0"})'

    def coefficient(self, rep, degree):
        """Coefficient of ``q^degree sigma_rep``, zero if absent."""
        return self._terms.get((rep, degree), 0)

    def degrees(self):
        """Sorted curve degrees with at least one term."""
        return sorted({d for _, d in self._terms})

    def classical_terms(self):
        """Degree-zero terms as ``(rep, coefficient)``."""
        return self.quantum_terms(0)

    def quantum_terms(self, degree=None):
        """
        Terms of positive degree, or of the given degree.

        Parameters
        ----------
        degree : int or None, optional
            Restrict to this degree. Default: every positive degree.

        Returns
        -------
        list of tuple
            ``(rep, coefficient)`` if `degree` is given, otherwise
            ``(rep, degree, coefficient)``.
        """
        if degree is None:
            return [(rep, d, c) for (rep, d), c in self.items() if d > 0]
        return [(rep, c) for (rep, d), c in self.items() if d == degree]


@dataclass(frozen=True)
class GWWitness:
    """
    A nonvanishing degree-one invariant through the point class.

    Attributes
    ----------
    alpha_class : SchubertClass
        The codimension-one class ``sigma_{[s_beta]}``.
    beta_class : SchubertClass
        The dimension-graded class ``sigma(w)``, of complex dimension
        ``n + 1 - I``.
    coefficient : int
        The invariant, a positive integer.
    real_dim_sum : int
        Real dimension of `alpha_class` plus that of `beta_class`.
    chain : tuple of SchubertClass
        The degree-one chain ``([w_0], [w_0 s_beta])`` joining the point class
        to the dual of `alpha_class`.
    degree : int
        Curve degree of the invariant (always 1).
    """

    alpha_class: SchubertClass
    beta_class: SchubertClass
    coefficient: int
    real_dim_sum: int
    chain: tuple = ()
    degree: int = 1


def curve_degree_of_root(root, p):
    """
    Curve degree ``d(alpha)``: the ``beta^vee`` coefficient of ``alpha^vee``.

    Parameters
    ----------
    root : sequence of int
        A positive root outside the Levi part.
    p : ParabolicChoice
        The parabolic.

    Returns
    -------
    int
        ``d(alpha) >= 1``.

    Raises
    ------
    RootInParabolic
        If `root` is supported on the included nodes.
    NotARoot
        If `root` is not a positive root.
    """
    coroot = p.root_system.coroot_of(root)
    if root[p.beta - 1] == 0:
        raise RootInParabolic(
            f'Root {tuple(root)} lies in the Levi part of {p}, it has no curve degree'
        )
    return coroot[p.beta - 1]


def chevalley_multiply(u, p):
    """
    Quantum product ``sigma_{s_beta} * sigma_u``.

    Parameters
    ----------
    u : SchubertClass
        A codimension-graded basis class.
    p : ParabolicChoice
        The parabolic.

    Returns
    -------
    QuantumProduct
        The product, with coefficients aggregated per (class, degree).

    Raises
    ------
    GradingError
        If `u` is dimension-graded.
    """
    if u.grading != 'codimension':
        raise GradingError(
            'The Chevalley product is defined on codimension-graded classes, '
            f'got a {u.grading}-graded class. Use dual_class or regrade first.'
        )
    rs = p.root_system
    index = fano_index(p)
    omega_beta = rs.fundamental_weight(p.beta)
    base = minimal_coset_rep(u.rep, p)
    level = base.length

    terms = defaultdict(int)
    for root in p.outside_roots:
        coef = pair_weight_coroot(omega_beta, rs.coroot_of(root))
        degree = curve_degree_of_root(root, p)
        image = base * reflection_from_root(rs, root)
        if image.length == level + 1:
            # Such an image is already a minimal representative
            terms[(minimal_coset_rep(image, p), 0)] += coef
            continue
        target = minimal_coset_rep(image, p)
        if target.length == level + 1 - degree * index:
            terms[(target, degree)] += coef

    LGR.debug(f'sigma_s{p.beta} * sigma_u (l(u) = {level}) has {len(terms)} terms')
    return QuantumProduct(terms)


def divisor_multiply(prod, p):
    """
    Multiply every term of a quantum product by the divisor class.

    Parameters
    ----------
    prod : QuantumProduct
        Linear combination ``sum c q^d sigma_w``.
    p : ParabolicChoice
        The parabolic.

    Returns
    -------
    QuantumProduct
        ``sigma_{s_beta} * prod``, degrees added up.
    """
    terms = defaultdict(int)
    for (rep, degree), coef in prod.items():
        step = chevalley_multiply(SchubertClass(rep, 'codimension'), p)
        for (target, extra), inner in step.items():
            terms[(target, degree + extra)] += coef * inner
    return QuantumProduct(terms)


def quantum_power(p, k):
    """
    ``sigma_{s_beta}^{*k}``, computed by iterated Chevalley products.

    Parameters
    ----------
    p : ParabolicChoice
        The parabolic.
    k : int
        Nonnegative exponent.

    Returns
    -------
    QuantumProduct
        The power, expanded in the Schubert basis.
    """
    if k < 0:
        raise ValueError(f'Exponent must be nonnegative, got {k}')
    prod = QuantumProduct({(fundamental_class(p).rep, 0): 1})
    for _ in range(k):
        prod = divisor_multiply(prod, p)
    return prod


def extract_gw_invariant(prod, target, degree):
    """
    Read a three-point genus-zero invariant off a Chevalley product.

    For ``prod = sigma_{s_beta} * sigma_u``, the coefficient of
    ``q^degree sigma_w`` equals the invariant of degree ``degree A`` through
    ``sigma_{s_beta}``, ``sigma_u`` and ``sigma(w)``. G/P with b_2 = 1 is
    Kahler-Einstein, hence monotone, so it agrees with the symplectic one.

    Parameters
    ----------
    prod : QuantumProduct
        Output of `chevalley_multiply`.
    target : SchubertClass
        The class ``w``; its representative is what counts.
    degree : int
        Curve degree.

    Returns
    -------
    int
        The invariant, zero if the term is absent.
    """
    return prod.coefficient(target.rep, degree)


def verify_nonvanishing_lemma(p):
    """
    Exhibit a nonvanishing degree-one invariant through the point class.

    Computes ``sigma_{s_beta} * sigma_pt``, checks that it has no classical
    term and at least one degree-one term, and returns the witness built on
    the lexicographically least degree-one target.

    Parameters
    ----------
    p : ParabolicChoice
        The parabolic.

    Returns
    -------
    GWWitness
        The witness, with ``real_dim_sum = 4n - 2I``.

    Raises
    ------
    LemmaViolation
        If no witness exists. This signals a bug.
    """
    n = complex_dimension(p)
    index = fano_index(p)
    point = point_class(p)
    LGR.info(f'Verify degree-one invariant through the point on {p} (n={n}, I={index})')

    prod = chevalley_multiply(point, p)
    if prod.classical_terms():
        raise LemmaViolation(
            f'sigma_s{p.beta} * sigma_pt on {p} has classical terms: {prod!r}'
        )
    degree_one = prod.quantum_terms(1)
    if not degree_one:
        raise LemmaViolation(
            f'sigma_s{p.beta} * sigma_pt on {p} has no degree-one term: {prod!r}'
        )

    target, coefficient = min(
        degree_one, key=lambda item: tuple(int(c) for c in item[0].matrix.flat)
    )
    lift = longest_element(p.root_system)
    alpha_class = adjacent_partner(point, p, lift=lift)
    if alpha_class.rep != p.s_beta:
        raise LemmaViolation(f'Partner of the point on {p} is not [s_beta]')
    beta_class = SchubertClass(target, 'dimension')
    real_dim_sum = alpha_class.real_dimension(n) + beta_class.real_dimension(n)
    if beta_class.level != n + 1 - index or real_dim_sum != 4 * n - 2 * index:
        raise LemmaViolation(
            f'Witness on {p} breaks the dimension relation: '
            f'{real_dim_sum} != 4*{n} - 2*{index}'
        )
    chain = (
        point,
        SchubertClass(minimal_coset_rep(lift * p.s_beta, p), 'codimension'),
    )
    LGR.info(f'{p}: invariant {coefficient} through sigma(w) of dimension {beta_class.level}')
    return GWWitness(
        alpha_class=alpha_class,
        beta_class=beta_class,
        coefficient=coefficient,
        real_dim_sum=real_dim_sum,
        chain=chain,
    )


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
