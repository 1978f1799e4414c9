"""Exact computations in W-graph algebras."""

import json as _json

from ._wgalg import (
    BoundError,
    Omega,
    ParseError,
    WgalgError,
    group_order,
    quiver_dot,
    relations,
    run,
)
from . import _wgalg


def verify_certificate(omega, certificate="builtin"):
    """Verification report as a dict; `certificate` is JSON text, a dict, or "builtin"."""
    if isinstance(certificate, dict):
        certificate = _json.dumps(certificate)
    return _json.loads(_wgalg.verify_certificate(omega, certificate))


def search_certificate(omega):
    """The certificate found as a dict, or None."""
    text = _wgalg.search_certificate(omega)
    return None if text is None else _json.loads(text)


__all__ = [
    "BoundError",
    "Omega",
    "ParseError",
    "WgalgError",
    "group_order",
    "quiver_dot",
    "relations",
    "run",
    "search_certificate",
    "verify_certificate",
]
