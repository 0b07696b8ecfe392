"""Quantum Chevalley bounds on Gromov widths and Seshadri constants."""

from . import (
    _version,
    bounds,
    errors,
    io,
    quantum,
    roots,
    schubert,
    utils,
    weyl,
    workflows,
)

__all__ = [
    bounds,
    errors,
    io,
    quantum,
    roots,
    schubert,
    utils,
    weyl,
    workflows,
]

__version__ = _version.get_versions()['version']
