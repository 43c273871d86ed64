"""The four catalogued families of power-function pairs and APN checks.

Each family fixes a pair of exponents {d1, d2} over GF(2^n):

    gold2    x^(2^k+1),          x^(2^(2k)+1)              gcd(n, k) = 1
    gold3    x^(2^k+1),          x^(2^(3k)+1)              gcd(n, k) = 1
    th       x^(2^t+1),          x^(2^(t+2)+3)             n = 2t + 1
    kasami5  x^(2^(2k)-2^k+1),   x^(2^(4k)-2^(3k)+2^(2k)-2^k+1)   gcd(n, k) = 1

Raw exponents can exceed 2^n - 1 (the kasami5 ones grow as 2^(4k)), so they
are reduced mod 2^n - 1 before the evaluation tables are built.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

import numpy as np

from .field import FieldCtx

FAMILY_NAMES = ("gold2", "gold3", "th", "kasami5")


class ConditionViolated(ValueError):
    """A family's side condition (gcd or n = 2t+1) does not hold."""


class DegeneratePair(ValueError):
    """Both exponents reduce to the same power map."""


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer parameter (k, or t for 'th')."""

    family: str
    k: int

    def __post_init__(self) -> None:
        name = self.family.lower()
        if name not in FAMILY_NAMES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILY_NAMES}")
        object.__setattr__(self, "family", name)
        if self.k < 1:
            raise ValueError("family parameter must be a positive integer")


def family_exponents(spec: FamilySpec, n: int) -> tuple[int, int]:
    """Raw (unreduced) exponent pair for a family instance, after checking
    the family's side condition."""
    k = spec.k
    if spec.family == "th":
        if n != 2 * k + 1:
            raise ConditionViolated(f"family th requires n = 2t+1; got n={n}, t={k}")
        return (1 << k) + 1, (1 << (k + 2)) + 3
    if gcd(n, k) != 1:
        raise ConditionViolated(f"family {spec.family} requires gcd(n,k)=1; gcd({n},{k})={gcd(n, k)}")
    if spec.family == "gold2":
        return (1 << k) + 1, (1 << (2 * k)) + 1
    if spec.family == "gold3":
        return (1 << k) + 1, (1 << (3 * k)) + 1
    # kasami5
    d1 = (1 << (2 * k)) - (1 << k) + 1
    d2 = (1 << (4 * k)) - (1 << (3 * k)) + (1 << (2 * k)) - (1 << k) + 1
    return d1, d2


@dataclass
class MonomialPair:
    """A pair of power maps {x^d1, x^d2} with full evaluation tables.

    f_table[x] = x^d1 and g_table[x] = x^d2 for every x in [0, 2^n); both
    tables map 0 to 0.  Immutable by convention after construction.
    """

    n: int
    d1: int
    d2: int
    f_table: list[int]
    g_table: list[int]
    family: str | None = None
    param: int | None = None

    @cached_property
    def f_np(self) -> np.ndarray:
        return np.array(self.f_table, dtype=np.int64)

    @cached_property
    def g_np(self) -> np.ndarray:
        return np.array(self.g_table, dtype=np.int64)

    def __repr__(self) -> str:
        fam = f", family={self.family}:{self.param}" if self.family else ""
        return f"MonomialPair(n={self.n}, d1={self.d1}, d2={self.d2}{fam})"


def monomial_pair(
    ctx: FieldCtx,
    d1: int,
    d2: int,
    family: str | None = None,
    param: int | None = None,
) -> MonomialPair:
    """Reduce two exponents mod 2^n - 1 and build their evaluation tables."""
    r1 = d1 % ctx.group_order
    r2 = d2 % ctx.group_order
    if r1 == 0 or r2 == 0:
        raise ValueError("exponent reduces to 0: the map collapses to x -> 1 on L*")
    if r1 == r2:
        raise DegeneratePair(f"exponents {d1} and {d2} coincide mod 2^n-1 (= {r1})")
    f_table = [ctx.pow(x, r1) for x in range(ctx.order)]
    g_table = [ctx.pow(x, r2) for x in range(ctx.order)]
    return MonomialPair(ctx.n, r1, r2, f_table, g_table, family, param)


def instantiate(spec: FamilySpec, ctx: FieldCtx) -> MonomialPair:
    """Instantiate a family over a given field."""
    d1, d2 = family_exponents(spec, ctx.n)
    return monomial_pair(ctx, d1, d2, family=spec.family, param=spec.k)


def power_table(ctx: FieldCtx, e: int) -> list[int]:
    """Evaluation table of the single power map x^e."""
    r = e % ctx.group_order
    return [ctx.pow(x, r) for x in range(ctx.order)]


def differential_counts(ctx: FieldCtx, table: list[int], q: int) -> np.ndarray:
    """Number of x with h(x+q) + h(x) = p, for every p (index = p)."""
    if q == 0:
        raise ValueError("q must be nonzero")
    t = np.asarray(table, dtype=np.int64)
    if t.shape != (ctx.order,):
        raise ValueError("table length does not match the field order")
    deriv = t[np.arange(ctx.order) ^ q] ^ t
    return np.bincount(deriv, minlength=ctx.order)


def differential_spectrum(ctx: FieldCtx, table: list[int], q: int) -> dict[int, int]:
    """Histogram {solution count: number of p values} for a fixed q != 0."""
    counts = differential_counts(ctx, table, q)
    freq = np.bincount(counts)
    return {int(c): int(f) for c, f in enumerate(freq) if f > 0}


def is_apn(ctx: FieldCtx, table: list[int]) -> bool:
    """True iff every nontrivial derivative takes each value at most twice.

    Exhaustive O(2^(2n)) count over all (q, p).
    """
    if table[0] != 0:
        raise ValueError("table must map 0 to 0")
    t = np.asarray(table, dtype=np.int64)
    idx = np.arange(ctx.order)
    for q in range(1, ctx.order):
        deriv = t[idx ^ q] ^ t
        if int(np.bincount(deriv, minlength=ctx.order).max()) > 2:
            return False
    return True
