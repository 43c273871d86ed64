"""Arithmetic in GF(2^n) for odd n, 5 <= n <= 17.

Field elements are plain ints: bit i is the coefficient of alpha^i in the
polynomial basis {1, alpha, ..., alpha^(n-1)}, where alpha is a root of the
modulus polynomial.  0 and 1 are the additive and multiplicative identities
and addition is xor.

The modulus is always the lexicographically smallest irreducible polynomial
of degree n (smallest bitmask value), so every constant derived downstream
is reproducible across runs and implementations.
"""

from __future__ import annotations

import numpy as np

SUPPORTED_DEGREES = (5, 7, 9, 11, 13, 15, 17)


def poly_mod(a: int, m: int) -> int:
    """Remainder of the carryless division of a by m over GF(2)."""
    dm = m.bit_length() - 1
    da = a.bit_length() - 1
    while da >= dm:
        a ^= m << (da - dm)
        da = a.bit_length() - 1
    return a


def is_irreducible(m: int) -> bool:
    """Exhaustive trial division by every polynomial of degree 1..deg(m)/2."""
    deg = m.bit_length() - 1
    if deg < 1:
        return False
    for d in range(2, 1 << (deg // 2 + 1)):
        if poly_mod(m, d) == 0:
            return False
    return True


def smallest_irreducible(n: int) -> int:
    """Lexicographically smallest irreducible polynomial of degree n."""
    # Even bitmasks are divisible by x, so only odd candidates are scanned.
    for m in range((1 << n) + 1, 1 << (n + 1), 2):
        if is_irreducible(m):
            return m
    raise ValueError(f"no irreducible polynomial of degree {n}")  # pragma: no cover


def _prime_factors(v: int) -> list[int]:
    out = []
    p = 2
    while p * p <= v:
        if v % p == 0:
            out.append(p)
            while v % p == 0:
                v //= p
        p += 1
    if v > 1:
        out.append(v)
    return out


class FieldCtx:
    """A fully specified instance of GF(2^n).

    Carries the modulus, log/antilog tables for a primitive element, and the
    precomputed trace table.  Immutable after construction; every operation
    is a pure function of (ctx, inputs).
    """

    def __init__(self, n: int) -> None:
        if n % 2 == 0:
            raise ValueError(f"n must be odd, got {n}")
        if not 5 <= n <= 17:
            # below n=5 the code dimension 2^n - 3n - 1 collapses to zero
            raise ValueError(f"n must be in [5, 17], got {n}")
        self.n = n
        self.order = 1 << n
        self.group_order = self.order - 1
        self.modulus = smallest_irreducible(n)

        self.generator = self._find_generator()
        exp = [0] * (2 * self.group_order)
        log = [0] * self.order
        v = 1
        for i in range(self.group_order):
            exp[i] = v
            exp[i + self.group_order] = v
            log[v] = i
            v = self._mul_raw(v, self.generator)
        if v != 1:  # pragma: no cover
            raise AssertionError("generator order mismatch")
        self._exp = exp
        self._log = log
        self._exp_np = np.array(exp, dtype=np.int64)
        self._log_np = np.array(log, dtype=np.int64)

        # Tr is GF(2)-linear, so the basis traces determine the full table.
        mask = 0
        for j in range(n):
            if self._trace_powersum(1 << j):
                mask |= 1 << j
        self.trace_mask = mask
        xs = np.arange(self.order, dtype=np.uint32)
        self.trace_table = (np.bitwise_count(xs & np.uint32(mask)) & 1).astype(np.uint8)
        self._trace_list = self.trace_table.tolist()
        assert self._trace_list[0] == 0
        assert int(self.trace_table.sum()) == self.order // 2

    # -- construction helpers -------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        """Carryless multiply mod the modulus, no tables."""
        p = 0
        while b:
            if b & 1:
                p ^= a
            b >>= 1
            a <<= 1
            if a & self.order:
                a ^= self.modulus
        return p

    def _pow_raw(self, x: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, x)
            x = self._mul_raw(x, x)
            e >>= 1
        return r

    def _find_generator(self) -> int:
        """Smallest element generating the full multiplicative group."""
        cofactors = [self.group_order // p for p in _prime_factors(self.group_order)]
        for cand in range(2, self.order):
            if all(self._pow_raw(cand, c) != 1 for c in cofactors):
                return cand
        raise AssertionError("no generator found")  # pragma: no cover

    def _trace_powersum(self, x: int) -> int:
        """Tr(x) = x + x^2 + x^4 + ... + x^(2^(n-1)), evaluated directly."""
        t = x
        acc = x
        for _ in range(self.n - 1):
            t = self._mul_raw(t, t)
            acc ^= t
        if acc not in (0, 1):  # pragma: no cover
            raise AssertionError("trace landed outside GF(2)")
        return acc

    # -- field operations ------------------------------------------------

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp[self._log[x] + self._log[y]]

    def sqr(self, x: int) -> int:
        if x == 0:
            return 0
        return self._exp[2 * self._log[x] % self.group_order]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.pow(x, self.order - 2)

    def pow(self, x: int, e: int) -> int:
        """x^e with e >= 0; exponents act mod 2^n - 1 on nonzero x."""
        if e < 0:
            raise ValueError("exponent must be non-negative")
        if x == 0:
            return 1 if e == 0 else 0
        return self._exp[self._log[x] * (e % self.group_order) % self.group_order]

    def frobenius(self, x: int, k: int) -> int:
        """x^(2^(k mod n)); negative k applies the inverse automorphism."""
        if x == 0:
            return 0
        return self._exp[(self._log[x] << (k % self.n)) % self.group_order]

    def trace(self, x: int) -> int:
        return self._trace_list[x]

    def elements(self) -> range:
        return range(self.order)

    def nonzero(self) -> range:
        return range(1, self.order)

    def __repr__(self) -> str:
        return f"FieldCtx(n={self.n}, modulus={self.modulus:#x})"


def make_ctx(n: int) -> FieldCtx:
    """Build the GF(2^n) context with the canonical (smallest) modulus."""
    return FieldCtx(n)
