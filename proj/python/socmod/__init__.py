"""Python bindings for the socmod library."""

import json

from ._socmod import (
    DomainError,
    Module,
    ResourceError,
    Ring,
    colength,
    corpus,
    from_columns,
    ideal,
    mingens,
    same_module,
    soc_dim,
    socle_colon,
)
from . import _socmod

__all__ = [
    "DomainError", "Module", "ResourceError", "Ring", "check_closed", "check_cor25", "check_prop23",
    "check_rees_cm", "check_rn1", "check_socle_multiplier", "colength", "corpus", "dual_image",
    "from_columns", "ideal", "mingens", "run_text", "same_module", "soc_dim", "socle_colon", "theorem51",
]


def check_rn1(n):
    return json.loads(_socmod._check_rn1(n))


def check_prop23(n, samples=8, seed=1):
    return json.loads(_socmod._check_prop23(n, samples, seed))


def check_cor25(n):
    return json.loads(_socmod._check_cor25(n))


def check_socle_multiplier(n):
    return json.loads(_socmod._check_socle_multiplier(n))


def check_closed(n):
    return json.loads(_socmod._check_closed(n))


def check_rees_cm(n):
    return json.loads(_socmod._check_rees_cm(n))


def theorem51(n):
    return json.loads(_socmod._theorem51(n))


def dual_image(ring, gens):
    return json.loads(_socmod._dual_image(ring, list(gens)))


def run_text(text, trunc_cap=64, seed=1, deterministic=False):
    """Run a script; returns {"reports", "exit_code", "parse_error"}."""
    return json.loads(_socmod._run_text(text, trunc_cap, seed, deterministic))
