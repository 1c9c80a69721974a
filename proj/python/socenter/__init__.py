"""Central elements of U(so_n): construction, Harish-Chandra images and GT checks."""

import json

from ._core import (
    Element,
    build_C,
    build_pf,
    build_PF,
    casimir_omega,
    commutator,
    embed_shift,
    gamma_n,
    gen,
    gt_dimension,
    monic_degree_check,
    one,
    opp,
    shift_indices,
    specialize,
)
from . import _core

__all__ = [
    "Element",
    "build_C",
    "build_pf",
    "build_PF",
    "casimir_omega",
    "commutator",
    "embed_shift",
    "gamma",
    "gamma_n",
    "gen",
    "gt_dimension",
    "is_central",
    "iwasawa_pf_check",
    "monic_degree_check",
    "one",
    "opp",
    "shift_indices",
    "specialize",
    "verify",
]


def is_central(x, threads=0):
    """{"ok", "witness", "residual_terms"}"""
    return json.loads(_core.is_central_json(x, threads))


def iwasawa_pf_check(m):
    return json.loads(_core.iwasawa_pf_check_json(m))


def gamma(x):
    """HPoly as {"vars", "terms"}."""
    return json.loads(_core.gamma_json(x))


def verify(lemma, n, lam, ell=0, tol=1e-8):
    """lemma: pipi, noX, X2, X1, pf_shift, casimir or brackets."""
    return json.loads(_core.verify_json(lemma, n, list(lam), ell, tol))
