"""Shared cached builders: expensive artifacts are computed once per run."""

from functools import lru_cache

import numpy as np

from tecc import (
    FamilySpec,
    build_pair_index,
    build_parity_check,
    codeword_weight_distribution,
    dual_weights_from_spectrum,
    full_spectrum,
    instantiate,
    macwilliams_transform,
    make_ctx,
    systematic_generator,
)
from tecc.spectrum import _scaled_table

FAMILIES = ("gold2", "gold3", "th", "kasami5")

# pass/fail lines from the acceptance suite; echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def spec_for(family: str, n: int) -> FamilySpec:
    """k = 1 for the gcd families, t = (n-1)/2 for th."""
    k = (n - 1) // 2 if family == "th" else 1
    return FamilySpec(family, k)


@lru_cache(maxsize=None)
def get_ctx(n: int):
    return make_ctx(n)


@lru_cache(maxsize=None)
def get_pair(family: str, n: int):
    return instantiate(spec_for(family, n), get_ctx(n))


@lru_cache(maxsize=None)
def get_report(family: str, n: int):
    return full_spectrum(get_ctx(n), get_pair(family, n))


@lru_cache(maxsize=None)
def get_H(family: str, n: int):
    return build_parity_check(get_ctx(n), get_pair(family, n))


@lru_cache(maxsize=None)
def get_generator(family: str, n: int):
    return systematic_generator(get_H(family, n))


@lru_cache(maxsize=None)
def get_pair_index(family: str, n: int):
    return build_pair_index(get_ctx(n), get_pair(family, n))


@lru_cache(maxsize=None)
def get_dual(family: str, n: int):
    ctx = get_ctx(n)
    return dual_weights_from_spectrum(ctx, get_pair(family, n), get_report(family, n), get_H(family, n))


@lru_cache(maxsize=None)
def get_code_dist(family: str, n: int):
    return macwilliams_transform(get_dual(family, n), 3 * n)


@lru_cache(maxsize=None)
def get_bruteforce_dist(family: str, n: int):
    return codeword_weight_distribution(get_ctx(n), get_pair(family, n))


def direct_spectrum(ctx, pair, b: int, c: int) -> np.ndarray:
    """Transform values for every a by direct summation over x (no FWHT).

    Index-faithful: entry a equals transform_single(ctx, pair, a, b, c).
    """
    order = ctx.order
    masked = _scaled_table(ctx, b, pair.f_np) ^ _scaled_table(ctx, c, pair.g_np)
    logs = ctx._log_np[np.arange(1, order)]
    ax = np.zeros((order, order), dtype=np.int64)
    ax[1:, 1:] = ctx._exp_np[logs[:, None] + logs[None, :]]
    signs = 1 - 2 * ctx.trace_table[ax ^ masked[None, :]].astype(np.int64)
    return signs.sum(axis=1)
