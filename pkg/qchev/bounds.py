#!/usr/bin/env python3
"""
Gromov width and Seshadri upper bounds from a degree-one witness.

Every value is an exact rational in units of pi. Reports carry the ordered
chain of inequalities that turns the witness into the bound; the analytic
capacities appearing in that chain are recorded, not computed.

Attributes
----------
CITATIONS : dict
    The inequality steps used by the reports, by key.
SINGLE_SPACE_CHAIN : tuple
    Citation keys of the single-space bound, in proof order.
LOW_DIMENSION_CHAIN : tuple
    Citation keys replacing it for the projective line.
LGR :
    Logger
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from qchev.errors import (
    NoHomogeneousFactor,
    NonHomogeneousFactor,
    ScaledFactorsUnsupported,
    ZeroScaling,
)
from qchev.quantum import verify_nonvanishing_lemma
from qchev.schubert import complex_dimension, fano_index, is_hermitian_symmetric
from qchev.utils import format_rational

LGR = logging.getLogger(__name__)
LGR.setLevel(logging.INFO)


@dataclass(frozen=True)
class Citation:
    """
    One inequality step of a bound.

    Attributes
    ----------
    key : str
        Stable identifier used in records.
    label : str
        Name of the result the step rests on.
    statement : str
        The inequality, in plain text.
    anchor : str
        The same inequality as it is usually typeset, for locating it in
        the literature.
    """

    key: str
    label: str
    statement: str
    anchor: str


CITATIONS = {
    c.key: c
    for c in (
        Citation(
            'gw-nonvanishing',
            'nonvanishing degree-one invariant of G/P',
            'Psi_{A,0,3}(pt; alpha, beta, pt) != 0 with '
            'dim alpha + dim beta = 4n - 2 c_1(A)',
            'Ψ_{A,0,3}(pt; α, β, pt) ≠ 0',
        ),
        Citation(
            'gw-agreement',
            'agreement of symplectic and algebraic GW invariants',
            'on a monotone manifold the symplectic GW invariant agrees with '
            'the algebraic one',
            'Ψ_{A,0,m+2} = Ψ^{alg}_{A,0,m+2} for (M, ω) monotone',
        ),
        Citation(
            'gw-area',
            'GW capacities of the witness',
            'GW(M, w; pt, gamma) = GW_0(M, w; pt, gamma) = w(A) = pi',
            'GW(M, ω; pt, γ) = GW_0(M, ω; pt, γ) = π',
        ),
        Citation(
            'gw-capacity',
            'GW bounds on pseudo capacities, real dimension at least 4',
            'C_HZ^(2)(M, w; pt, gamma) <= GW(M, w; pt, gamma) and '
            'C_HZ^(2o)(M, w; pt, gamma) <= GW_0(M, w; pt, gamma)',
            'C_HZ^(2)(M, ω; pt, α) ≤ GW(M, ω; pt, α), '
            'C_HZ^(2o)(M, ω; pt, α) ≤ GW_0(M, ω; pt, α)',
        ),
        Citation(
            'capacity-comparison',
            'Gromov width below the pseudo capacities',
            'c_G(M, w) <= C_HZ^(2)(M, w; pt, gamma) <= C_HZ^(2o)(M, w; pt, gamma)',
            'c_G(M, ω) ≤ C_HZ^(2)(M, ω; pt, α), '
            'C_HZ^(2)(M, ω; α_1, α_2) ≤ C_HZ^(2o)(M, ω; α_1, α_2)',
        ),
        Citation(
            'gromov-width',
            'Gromov width of G/P',
            'c_G(M, w) <= pi',
            'c_G(M, ω) ≤ π',
        ),
        Citation(
            'conformality',
            'conformality of symplectic capacities',
            'c(M, lambda w) = |lambda| c(M, w)',
            'c(M, λω) = |λ| c(M, ω)',
        ),
        Citation(
            'low-dimension',
            'Gromov width of the projective line',
            'c_G(CP^1, w_FS) = pi',
            'c_G(ℂP¹, ω_FS) = π',
        ),
        Citation(
            'gw-product',
            'product formula for GW invariants',
            'Psi^{N x M}_{0 + A,0,3}(pt; [N] x alpha, [N] x beta, pt) != 0',
            'Ψ^{N×M}_{0⊕A,0,3}(pt; [N]×α, [N]×β, pt) ≠ 0',
        ),
        Citation(
            'product-capacity',
            'pseudo capacity of a product with a homogeneous factor',
            'C_HZ^(2o)(N x M, W + a w; pt, [N] x gamma) <= |a| pi',
            'C_HZ^(2o)(N×M, Ω⊕aω; pt, [N]×γ) ≤ |a|π',
        ),
        Citation(
            'product-width',
            'Gromov width of products of G/P',
            'c_G(M_1 x ... x M_r, a_1 w^1 + ... + a_r w^r) <= min |a_i| pi',
            'c_G(M_1×⋯×M_r, a_1ω^1⊕⋯⊕a_rω^r) ≤ min |a_i| π',
        ),
        Citation(
            'mixed-width',
            'Gromov width of N x G/P',
            'c_G(N x M, W + a w) <= |a| pi',
            'c_G(N×M, Ω⊕aω) ≤ |a|π',
        ),
        Citation(
            'seshadri-transfer',
            'Seshadri constant below the Gromov width',
            'eps(L) <= c_G(N, w_L) for any Kahler form w_L representing c_1(L)',
            'ε(L) ≤ c_G(N, ω_L)',
        ),
        Citation(
            'seshadri',
            'Seshadri constant of products of G/P',
            'eps(L) <= 1 for c_1(L) = [w / pi]',
            'ε(L) ≤ 1',
        ),
    )
}

SINGLE_SPACE_CHAIN = (
    'gw-nonvanishing',
    'gw-agreement',
    'gw-area',
    'gw-capacity',
    'capacity-comparison',
    'gromov-width',
)

# Below real dimension 4 the capacity chain does not apply
LOW_DIMENSION_CHAIN = ('gw-nonvanishing', 'low-dimension')


class AnyClosedSymplectic:
    """Placeholder for an arbitrary closed symplectic factor ``(N, Omega)``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'ANY_CLOSED'

    def __str__(self):
        return 'any'

    def __reduce__(self):
        return (AnyClosedSymplectic, ())


ANY_CLOSED = AnyClosedSymplectic()


@dataclass(frozen=True)
class NormalizedFactor:
    """
    One factor of a product, with the scaling of its symplectic form.

    Parameters
    ----------
    space : ParabolicChoice or AnyClosedSymplectic
        The factor.
    scaling : Fraction
        Nonzero scaling ``a`` of the form.

    Raises
    ------
    ZeroScaling
        If `scaling` is zero.
    """

    space: object
    scaling: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, 'scaling', Fraction(self.scaling))
        if self.scaling == 0:
            raise ZeroScaling(f'Factor {self.space} is scaled by zero')

    @property
    def homogeneous(self):
        """Whether the factor is a homogeneous space G/P."""
        return not isinstance(self.space, AnyClosedSymplectic)


@dataclass(frozen=True)
class NormalizationScale:
    """
    Area of the generator of H_2, in units of pi.

    The default ``1`` means ``w(A) = pi``.
    """

    omega_on_generator: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(
            self, 'omega_on_generator', Fraction(self.omega_on_generator)
        )
        if self.omega_on_generator <= 0:
            raise ValueError(
                f'Normalization must be positive, got {self.omega_on_generator}'
            )

    @classmethod
    def from_factor(cls, factor):
        """
        Scale of ``lambda w`` for a nonzero rational `factor`, i.e. ``|lambda|``.

        Raises
        ------
        ZeroScaling
            If `factor` is zero.
        """
        factor = Fraction(factor)
        if factor == 0:
            raise ZeroScaling('The symplectic form cannot be scaled by zero')
        return cls(abs(factor))


@dataclass(frozen=True)
class BoundReport:
    """
    Exact bounds with their justification.

    Attributes
    ----------
    gromov_width_upper : Fraction
        Upper bound on the Gromov width, in units of pi.
    seshadri_upper : Fraction or None
        Upper bound on the Seshadri constant, when it applies.
    gw_capacity_value : Fraction or None
        Value of the GW capacity, in units of pi, for single spaces.
    witnesses : tuple of GWWitness
        One witness per homogeneous factor.
    citations : tuple of Citation
        Inequality chain, starting with the witness.
    sharpness : str or None
        ``'exact'`` if every homogeneous factor is Hermitian symmetric,
        ``'conjectural'`` otherwise.
    """

    gromov_width_upper: Fraction
    seshadri_upper: Fraction = None
    gw_capacity_value: Fraction = None
    witnesses: tuple = ()
    citations: tuple = ()
    sharpness: str = None

    def __post_init__(self):
        if self.gromov_width_upper <= 0:
            raise ValueError(
                f'Gromov width bound must be positive, got {self.gromov_width_upper}'
            )
        if not self.citations or self.citations[0].key != 'gw-nonvanishing':
            raise ValueError('A bound report must start from the witness citation')

    def to_dict(self, decimal=False):
        """
        Render the report with rationals as ``'p/q π'`` strings.

        Parameters
        ----------
        decimal : bool, optional
            Also add float renderings. Default: False.

        Returns
        -------
        dict
            JSON-ready dictionary.
        """
        out = {
            'width_upper': format_rational(self.gromov_width_upper, 'π'),
            'gw_capacity': (
                None
                if self.gw_capacity_value is None
                else format_rational(self.gw_capacity_value, 'π')
            ),
            'seshadri_upper': (
                None if self.seshadri_upper is None else format_rational(self.seshadri_upper)
            ),
            'sharpness': self.sharpness,
            'citations': [c.key for c in self.citations],
        }
        if decimal:
            out['width_upper_decimal'] = float(self.gromov_width_upper)
            if self.seshadri_upper is not None:
                out['seshadri_upper_decimal'] = float(self.seshadri_upper)
        return out


def _sharpness(spaces):
    if all(is_hermitian_symmetric(p) for p in spaces):
        return 'exact'
    return 'conjectural'


def single_space_bound(p, scale=None):
    """
    Gromov width bound of a single G/P.

    Parameters
    ----------
    p : ParabolicChoice
        The space.
    scale : NormalizationScale or None, optional
        Area of the generator, in units of pi. Default: ``w(A) = pi``.

    Returns
    -------
    BoundReport
        ``c_G <= scale`` with the GW capacity equal to the same value.

    Raises
    ------
    LemmaViolation
        If the witness cannot be found.
    """
    if scale is None:
        scale = NormalizationScale()
    witness = verify_nonvanishing_lemma(p)
    value = scale.omega_on_generator
    if complex_dimension(p) == 1:
        keys = list(LOW_DIMENSION_CHAIN)
    else:
        keys = list(SINGLE_SPACE_CHAIN)
    if value != 1:
        keys.append('conformality')
    seshadri = Fraction(1) if value == 1 else None
    if seshadri is not None:
        keys += ['seshadri-transfer', 'seshadri']
    LGR.info(f'{p}: c_G <= {format_rational(value, "π")}')
    return BoundReport(
        gromov_width_upper=value,
        seshadri_upper=seshadri,
        gw_capacity_value=value,
        witnesses=(witness,),
        citations=tuple(CITATIONS[k] for k in keys),
        sharpness=_sharpness([p]),
    )


def _check_factors(factors):
    factors = list(factors)
    if not factors:
        raise NoHomogeneousFactor('A product needs at least one factor')
    for f in factors:
        if f.scaling == 0:
            raise ZeroScaling(f'Factor {f.space} is scaled by zero')
    homogeneous = [f for f in factors if f.homogeneous]
    if not homogeneous:
        raise NoHomogeneousFactor(
            'A product of arbitrary closed symplectic manifolds has no bound: '
            'at least one homogeneous factor is required'
        )
    return factors, homogeneous


def product_bound(factors):
    """
    Gromov width bound of a product of (rescaled) factors.

    Parameters
    ----------
    factors : list of NormalizedFactor
        The factors. Arbitrary closed factors add no constraint.

    Returns
    -------
    BoundReport
        ``c_G <= min |a_i|`` over the homogeneous factors.

    Raises
    ------
    NoHomogeneousFactor
        If no factor is a homogeneous space.
    ZeroScaling
        If a factor is scaled by zero.
    """
    factors, homogeneous = _check_factors(factors)
    witnesses = tuple(verify_nonvanishing_lemma(f.space) for f in homogeneous)
    value = min(abs(f.scaling) for f in homogeneous)

    mixed = len(homogeneous) < len(factors)
    if not mixed and sum(complex_dimension(f.space) for f in factors) == 1:
        keys = list(LOW_DIMENSION_CHAIN)
        if value != 1:
            keys.append('conformality')
    else:
        keys = ['gw-nonvanishing', 'gw-agreement', 'gw-product', 'product-capacity']
        keys += ['capacity-comparison']
        keys.append('mixed-width' if mixed else 'product-width')

    seshadri = None
    if not mixed and all(f.scaling == 1 for f in factors):
        seshadri = Fraction(1)
        keys += ['seshadri-transfer', 'seshadri']
    LGR.info(f'Product of {len(factors)} factors: c_G <= {format_rational(value, "π")}')
    return BoundReport(
        gromov_width_upper=value,
        seshadri_upper=seshadri,
        witnesses=witnesses,
        citations=tuple(CITATIONS[k] for k in keys),
        sharpness=_sharpness([f.space for f in homogeneous]),
    )


def seshadri_bound(factors):
    """
    Seshadri constant bound of an unscaled product of homogeneous spaces.

    With ``c_1(L) = [w / pi]``, ``eps(L) <= c_G(M, w / pi) = c_G(M, w) / pi``.

    Parameters
    ----------
    factors : list of NormalizedFactor
        Unscaled homogeneous factors.

    Returns
    -------
    Fraction
        The bound, ``1``.

    Raises
    ------
    ScaledFactorsUnsupported
        If a factor has scaling other than 1.
    NonHomogeneousFactor
        If a factor is an arbitrary closed manifold.
    """
    factors = list(factors)
    scaled = [f for f in factors if f.scaling != 1]
    if scaled:
        raise ScaledFactorsUnsupported(
            'The Seshadri bound is stated for the unscaled product, but '
            f'{len(scaled)} factor(s) are rescaled'
        )
    if any(not f.homogeneous for f in factors):
        raise NonHomogeneousFactor(
            'The Seshadri bound needs every factor to be a homogeneous space'
        )
    return product_bound(factors).gromov_width_upper


def monotone_constant(p, scale=None):
    """
    Monotonicity constant ``lambda`` with ``w(A) = lambda c_1(A)``.

    Parameters
    ----------
    p : ParabolicChoice
        The space.
    scale : NormalizationScale or None, optional
        Area of the generator, in units of pi.

    Returns
    -------
    Fraction
        ``scale / I``, in units of pi.
    """
    if scale is None:
        scale = NormalizationScale()
    return scale.omega_on_generator / fano_index(p)


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
