#!/usr/bin/env python3
"""
Exceptions raised by qchev.

Every exception derives from `QchevError` and from the closest builtin, so
callers catching ``ValueError`` or ``IndexError`` keep working.
"""


class QchevError(Exception):
    """Base class of all qchev errors."""


class InvalidRank(QchevError, ValueError):
    """A Cartan family was given a rank outside its admissible range."""


class DimensionMismatch(QchevError, ValueError):
    """Two vectors (or a vector and a root system) disagree in length."""


class IndexOutOfRange(QchevError, IndexError):
    """A simple-root index is outside ``1..rank``."""


class SystemMismatch(QchevError, ValueError):
    """Two Weyl group elements belong to different root systems."""


class NotARoot(QchevError, ValueError):
    """A vector is not a positive root of the root system."""


class CapExceeded(QchevError, RuntimeError):
    """
    The Weyl group is larger than the enumeration cap.

    Attributes
    ----------
    order_lower_bound : int
        Lower bound on (or exact value of) the group order.
    cap : int
        The cap that was exceeded.
    """

    def __init__(self, order_lower_bound, cap):
        self.order_lower_bound = order_lower_bound
        self.cap = cap
        super().__init__(
            f'Weyl group has at least {order_lower_bound} elements, more than the '
            f'enumeration cap of {cap}. Raise the cap with --cap or QCHEV_CAP.'
        )

    def __reduce__(self):
        return (type(self), (self.order_lower_bound, self.cap))


class InvalidParabolic(QchevError, ValueError):
    """A parabolic choice does not exclude exactly one simple root."""


class RootInParabolic(QchevError, ValueError):
    """A root supported on the parabolic nodes has no curve degree."""


class GradingError(QchevError, ValueError):
    """A Schubert class carries the wrong grading for the operation."""


class LemmaViolation(QchevError, AssertionError):
    """No degree-one Gromov-Witten witness was found. This is a bug."""


class NoHomogeneousFactor(QchevError, ValueError):
    """A product contains no homogeneous space to bound it."""


class NonHomogeneousFactor(QchevError, ValueError):
    """An arbitrary closed factor appears where only homogeneous ones are allowed."""


class ZeroScaling(QchevError, ValueError):
    """A symplectic form was scaled by zero."""


class ScaledFactorsUnsupported(QchevError, ValueError):
    """The Seshadri bound was requested for a rescaled product."""


class DescriptorError(QchevError, ValueError):
    """A space or factor descriptor could not be parsed."""


class SchemaError(QchevError, ValueError):
    """A record does not validate against the atlas record schema."""


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
