"""The generalized transform of a function pair and its five-value certificate.

For a pair {f, g} the transform is

    F(a, b, c) = sum over x in GF(2^n) of (-1)^Tr(a*x + b*f(x) + c*g(x))

scanned over all a and all nonzero b, c.  The full scan uses a fast
Walsh-Hadamard transform of the sign sequence s[x] = (-1)^Tr(b*f(x)+c*g(x)).
The FWHT pairs x against the plain dot-product functional parity(a & x)
instead of Tr(a*x); since a -> Tr(a*.) runs over all linear functionals
exactly once, the two value multisets over a coincide up to a permutation of
the a index.  Everything certified here (value sets, multisets, histograms)
is permutation-invariant; per-index values always come from the naive sum.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .field import FieldCtx
from .functions import MonomialPair


def allowed_values(n: int) -> set[int]:
    """The five-value set {0, +-2^((n+1)/2), +-2^((n+3)/2)} for odd n."""
    lo = 1 << ((n + 1) // 2)
    hi = 1 << ((n + 3) // 2)
    return {0, lo, -lo, hi, -hi}


@dataclass
class SpectrumReport:
    """Histogram of transform values over all (a, b, c) with b, c nonzero."""

    n: int
    histogram: dict[int, int]
    five_valued: bool
    witness: tuple[int, int, int] | None = None
    family: str | None = None
    param: int | None = None

    def total(self) -> int:
        return sum(self.histogram.values())

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "family": self.family,
            "k": self.param,
            "histogram": [[v, c] for v, c in sorted(self.histogram.items())],
            "five_valued": self.five_valued,
            "witness": list(self.witness) if self.witness else None,
        }


def transform_single(ctx: FieldCtx, pair: MonomialPair, a: int, b: int, c: int) -> int:
    """Direct O(2^n) evaluation of F(a, b, c).  The reference oracle."""
    mul = ctx.mul
    tr = ctx._trace_list
    f = pair.f_table
    g = pair.g_table
    total = 0
    for x in range(ctx.order):
        total += 1 - 2 * tr[mul(a, x) ^ mul(b, f[x]) ^ mul(c, g[x])]
    return total


def fwht_inplace(mat: np.ndarray) -> np.ndarray:
    """Walsh-Hadamard transform along the last axis, in place, exact ints."""
    size = mat.shape[-1]
    h = 1
    while h < size:
        view = mat.reshape(mat.shape[0], -1, 2, h)
        even = view[:, :, 0, :]
        odd = view[:, :, 1, :]
        diff = even - odd
        even += odd
        odd[:] = diff
        h <<= 1
    return mat


def _scaled_table(ctx: FieldCtx, coeff: int, table_np: np.ndarray) -> np.ndarray:
    """coeff * table[x] for all x, vectorized through the log/antilog tables."""
    if coeff == 0:
        return np.zeros(ctx.order, dtype=np.int64)
    out = ctx._exp_np[ctx._log[coeff] + ctx._log_np[table_np]]
    out[table_np == 0] = 0
    return out


def spectrum_for_bc(ctx: FieldCtx, pair: MonomialPair, b: int, c: int) -> np.ndarray:
    """All 2^n transform values for fixed (b, c), via the FWHT fast path.

    As a multiset this equals {transform_single(a, b, c) : a in L}; the
    per-index correspondence is permuted (see module docstring).
    """
    masked = _scaled_table(ctx, b, pair.f_np) ^ _scaled_table(ctx, c, pair.g_np)
    signs = (1 - 2 * ctx.trace_table[masked].astype(np.int32)).reshape(1, ctx.order)
    return fwht_inplace(signs)[0]


def _stratum_histograms(
    ctx: FieldCtx,
    f_np: np.ndarray,
    g_np: np.ndarray,
    b_values: range,
) -> tuple[np.ndarray, list[int]]:
    """Accumulated value histogram over b in b_values and all c != 0, a in L.

    Returns (hist, bad_b): hist[i] counts transform value V = 2*i - 2^n;
    bad_b lists b values whose row batch produced values outside the
    five-value set.  Row sums and Parseval are checked for every (b, c).
    """
    order = ctx.order
    group = ctx.group_order
    exp = ctx._exp_np
    logt = ctx._log_np
    tr = ctx.trace_table

    # c * g(x) for every c != 0 at once; column x = 0 is identically zero.
    log_g = logt[g_np[1:]]
    cg = np.zeros((group, order), dtype=np.int64)
    cg[:, 1:] = exp[logt[1:order, None] + log_g[None, :]]

    log_f = logt[f_np[1:]]
    allowed_idx = np.zeros(order + 1, dtype=bool)
    for v in allowed_values(ctx.n):
        allowed_idx[(v + order) >> 1] = True

    hist = np.zeros(order + 1, dtype=np.int64)
    bad_b: list[int] = []
    parseval = order * order
    acc = np.int16 if order < (1 << 15) else np.int32  # sums reach +-2^n
    for b in b_values:
        bf = np.zeros(order, dtype=np.int64)
        bf[1:] = exp[ctx._log[b] + log_f]
        signs = (1 - 2 * tr[bf[None, :] ^ cg].astype(acc))
        w = fwht_inplace(signs)
        if not (w.sum(axis=1, dtype=np.int64) == order).all():
            raise ArithmeticError(f"transform row sum != 2^n at b={b}")
        if not ((w.astype(np.int64) ** 2).sum(axis=1) == parseval).all():
            raise ArithmeticError(f"Parseval violated at b={b}")
        batch = np.bincount((w.ravel().astype(np.int64) + order) >> 1, minlength=order + 1)
        hist += batch
        if (batch[~allowed_idx] != 0).any():
            bad_b.append(b)
    return hist, bad_b


def _spectrum_chunk(args) -> tuple[np.ndarray, list[int]]:
    ctx, pair, b_lo, b_hi = args
    return _stratum_histograms(ctx, pair.f_np, pair.g_np, range(b_lo, b_hi))


def _find_witness(ctx: FieldCtx, pair: MonomialPair, b_candidates: list[int]) -> tuple[int, int, int]:
    """Recover a concrete offending (a, b, c) with the naive oracle."""
    ok = allowed_values(ctx.n)
    for b in b_candidates:
        for c in range(1, ctx.order):
            values = spectrum_for_bc(ctx, pair, b, c)
            if all(int(v) in ok for v in values):
                continue
            for a in range(ctx.order):
                if transform_single(ctx, pair, a, b, c) not in ok:
                    return (a, b, c)
    raise AssertionError("offending batch vanished on rescan")  # pragma: no cover


def full_spectrum(ctx: FieldCtx, pair: MonomialPair, workers: int = 1) -> SpectrumReport:
    """Exhaustive transform histogram over b, c in L* and the five-value verdict.

    Each (b, c) batch is independent; workers > 1 fans the b range out to a
    process pool and merges the histograms by summation.
    """
    order = ctx.order
    if workers > 1:
        step = (ctx.group_order + workers - 1) // workers
        chunks = [
            (ctx, pair, lo, min(lo + step, order))
            for lo in range(1, order, step)
        ]
        hist = np.zeros(order + 1, dtype=np.int64)
        bad_b: list[int] = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part, bad in pool.map(_spectrum_chunk, chunks):
                hist += part
                bad_b.extend(bad)
    else:
        hist, bad_b = _stratum_histograms(ctx, pair.f_np, pair.g_np, range(1, order))

    histogram = {int(2 * i - order): int(cnt) for i, cnt in enumerate(hist) if cnt}
    expected_total = order * ctx.group_order**2
    if sum(histogram.values()) != expected_total:  # pragma: no cover
        raise ArithmeticError("histogram mass mismatch")

    five = not bad_b
    witness = None if five else _find_witness(ctx, pair, sorted(bad_b))
    return SpectrumReport(
        n=ctx.n,
        histogram=histogram,
        five_valued=five,
        witness=witness,
        family=pair.family,
        param=pair.param,
    )


def single_table_spectrum(ctx: FieldCtx, table_np: np.ndarray) -> dict[int, int]:
    """Histogram of sum_x (-1)^Tr(a*x + b*h(x)) over all a and all b != 0.

    Used for the dual-code strata where exactly one of the pair's functions
    has a zero coefficient.
    """
    order = ctx.order
    exp = ctx._exp_np
    logt = ctx._log_np
    log_h = logt[table_np[1:]]
    bh = np.zeros((ctx.group_order, order), dtype=np.int64)
    bh[:, 1:] = exp[logt[1:order, None] + log_h[None, :]]
    acc = np.int16 if order < (1 << 15) else np.int32
    signs = (1 - 2 * ctx.trace_table[bh].astype(acc))
    w = fwht_inplace(signs)
    hist = np.bincount((w.ravel().astype(np.int64) + order) >> 1, minlength=order + 1)
    return {int(2 * i - order): int(cnt) for i, cnt in enumerate(hist) if cnt}
