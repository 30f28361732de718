# Copyright 2026 The liouville authors
# SPDX-License-Identifier: Apache-2.0
"""Symbolic integration in towers of exp and log, with Ei and incomplete gamma answers."""

import json as _json

from ._liouville import UnsupportedError, parse
from . import _liouville as _ext

__all__ = ["UnsupportedError", "parse", "lower", "integrate", "verify", "structure"]


def lower(text, var="x", constants=()):
    """Canonical form of `text` in its differential field, with the tower used."""
    return _json.loads(_ext.lower_json(text, var, list(constants)))


def integrate(text, var="x", constants=(), tower=(), verify=False, seed=1):
    """Antiderivative as a dict: status, elementary, logs, ei, gamma_* and text.

    Unsupported input is reported through status, not raised.
    """
    return _json.loads(_ext.integrate_json(text, var, list(constants), list(tower), verify, seed))


def verify(text, var="x", constants=(), seed=1):
    """Integrate, then check the answer symbolically and at random points."""
    return _json.loads(_ext.verify_json(text, var, list(constants), seed))


def structure(text, var="x", constants=(), tower=()):
    """Is exp(g) or log(f) already in the tower? Dependent answers carry a witness."""
    return _json.loads(_ext.structure_json(text, var, list(constants), list(tower)))
