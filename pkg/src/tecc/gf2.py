"""Small GF(2) linear algebra on int bitmasks (bit i = column i)."""

from __future__ import annotations


def row_reduce(rows: list[int], ncols: int) -> tuple[int, list[int], list[int]]:
    """Reduced row echelon form, pivoting on the lowest-index columns.

    Returns (rank, rref_rows, pivot_columns).  Input is not modified.
    """
    work = list(rows)
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and ((work[r] >> col) & 1):
                work[r] ^= work[rank]
        pivots.append(col)
        rank += 1
        if rank == len(work):
            break
    return rank, work, pivots


def nullspace_basis(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """Basis of {x : M x = 0} plus the list of free (non-pivot) columns.

    Basis vector i has bit free_cols[i] set, so stacking them yields a
    systematic-form generator for the nullspace.
    """
    rank, rref, pivots = row_reduce(rows, ncols)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        v = 1 << fc
        for r, pc in enumerate(pivots):
            if (rref[r] >> fc) & 1:
                v |= 1 << pc
        basis.append(v)
    return basis, free_cols


def transpose(rows: list[int], ncols: int) -> list[int]:
    """Transpose a bit matrix given as row bitmasks."""
    out = []
    for c in range(ncols):
        v = 0
        for r, row in enumerate(rows):
            v |= ((row >> c) & 1) << r
        out.append(v)
    return out


def span(basis: list[int]) -> list[int]:
    """All 2^len(basis) GF(2) combinations of the basis vectors, sorted."""
    out = [0]
    for b in basis:
        out += [v ^ b for v in out]
    return sorted(out)
