"""Descending plane partitions: validation, enumeration and statistics.

A descending plane partition is a shifted array of positive parts: row i
(1-based) occupies absolute columns i .. i + len(row_i) - 1.  Parts
decrease weakly along rows and strictly down columns, and first parts
interlace the row lengths:

    D[1][1] > len_1 >= D[2][2] > len_2 >= ... >= D[t][t] > len_t.

The empty array is a valid element.  ``DPP(n)`` is the set of all such
arrays with every part at most n; an array does not carry its ambient n,
so the statistics take n as an argument.

A part in row i at 0-based offset k (absolute column i + k) is special
when it is <= k; nu counts nonspecial parts, mu special parts, rho the
parts equal to n.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ResourceLimitError, ValidationError
from .limits import BRUTE_FORCE_LIMIT
from .polynomial import NVARS, MultiPoly


@dataclass(frozen=True)
class Dpp:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        prev = None
        for idx, row in enumerate(self.rows):
            if not row:
                raise ValidationError("rows must be nonempty")
            if any(not isinstance(p, int) or p < 1 for p in row):
                raise ValidationError("parts must be positive integers")
            if any(row[k] < row[k + 1] for k in range(len(row) - 1)):
                raise ValidationError("parts must decrease weakly along rows")
            if prev is not None:
                # chain: len(prev) >= row[0] and, below, prev row covers this one
                if len(prev) < row[0]:
                    raise ValidationError("row length chain violated")
                if len(row) > len(prev) - 1:
                    raise ValidationError("row extends past the row above")
                # strict decrease down columns; offset k here sits under
                # offset k+1 of the previous row
                for k, part in enumerate(row):
                    if part >= prev[k + 1]:
                        raise ValidationError("parts must decrease strictly down columns")
            if row[0] <= len(row):
                raise ValidationError("first part must exceed the row length")
            prev = row

    @property
    def row_count(self) -> int:
        return len(self.rows)

    @property
    def max_part(self) -> int:
        return self.rows[0][0] if self.rows else 0

    def parts_sum(self) -> int:
        return sum(sum(row) for row in self.rows)


EMPTY_DPP = Dpp(())


@dataclass(frozen=True)
class DppStats:
    nu: int
    mu: int
    rho: int
    parts_sum: int
    row_count: int


def dpp_stats(d: Dpp, n: int) -> DppStats:
    nu = mu = rho = 0
    for row in d.rows:
        for k, part in enumerate(row):
            if part > n:
                raise ValidationError(f"part {part} exceeds ambient order {n}")
            if part <= k:
                mu += 1
            else:
                nu += 1
            if part == n:
                rho += 1
    return DppStats(nu, mu, rho, d.parts_sum(), d.row_count)


def _row_fillings(first: int, length: int, prev: tuple[int, ...] | None) -> Iterator[tuple[int, ...]]:
    # all weakly decreasing positive rows with the given first part and
    # length, strictly below the previous row where columns overlap
    parts = [first]

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k == length:
            yield tuple(parts)
            return
        hi = parts[-1]
        if prev is not None:
            hi = min(hi, prev[k + 1] - 1)
        for v in range(hi, 0, -1):
            parts.append(v)
            yield from rec(k + 1)
            parts.pop()

    yield from rec(1)


def _next_rows(n: int, prev: tuple[int, ...] | None) -> Iterator[tuple[int, ...]]:
    if prev is None:
        first_hi = n
    else:
        if len(prev) < 2:
            return
        first_hi = min(n, len(prev), prev[1] - 1)
    for first in range(2, first_hi + 1):
        for length in range(1, first):
            yield from _row_fillings(first, length, prev)


def enumerate_dpps(n: int) -> Iterator[Dpp]:
    """Yield every element of DPP(n) exactly once.

    Rows are built top to bottom by choosing each row's first part and
    length subject to the interlacing chain, then filling the remaining
    parts.  The results are emitted sorted by the key (row count, first
    parts, row lengths, full part tuples), which fixes the order used by
    every fixture and by the command-line enumerator.
    """
    if n < 1:
        raise ValidationError("order must be at least 1")
    found: list[Dpp] = []

    def walk(rows: list[tuple[int, ...]]) -> None:
        found.append(Dpp(tuple(rows)))
        prev = rows[-1] if rows else None
        for row in _next_rows(n, prev):
            rows.append(row)
            walk(rows)
            rows.pop()

    walk([])
    found.sort(
        key=lambda d: (
            d.row_count,
            tuple(r[0] for r in d.rows),
            tuple(len(r) for r in d.rows),
            d.rows,
        )
    )
    yield from found


def _check_brute_limit(n: int) -> None:
    if n > BRUTE_FORCE_LIMIT:
        raise ResourceLimitError(
            f"brute-force generating function capped at order {BRUTE_FORCE_LIMIT}"
        )


def z_dpp_brute(n: int) -> MultiPoly:
    """Sum of x^nu * y^mu * z^rho over DPP(n)."""
    _check_brute_limit(n)
    counts: Counter[tuple[int, int, int]] = Counter()
    for d in enumerate_dpps(n):
        s = dpp_stats(d, n)
        counts[(s.nu, s.mu, s.rho)] += 1
    return MultiPoly(NVARS, {(p, m, k, 0, 0): c for (p, m, k), c in counts.items()})


def z_dpp_brute_w(n: int) -> MultiPoly:
    """Sum of w^(rows+1) * x^nu * y^mu * z^rho over DPP(n)."""
    _check_brute_limit(n)
    counts: Counter[tuple[int, int, int, int]] = Counter()
    for d in enumerate_dpps(n):
        s = dpp_stats(d, n)
        counts[(s.nu, s.mu, s.rho, s.row_count + 1)] += 1
    return MultiPoly(
        NVARS, {(p, m, k, f, 0): c for (p, m, k, f), c in counts.items()}
    )


def q_sum_of_parts(n: int) -> MultiPoly:
    """Sum of q^(sum of parts) over DPP(n)."""
    _check_brute_limit(n)
    counts: Counter[int] = Counter()
    for d in enumerate_dpps(n):
        counts[d.parts_sum()] += 1
    return MultiPoly(NVARS, {(0, 0, 0, 0, s): c for s, c in counts.items()})


def dpp_to_json(d: Dpp) -> list[list[int]]:
    return [list(row) for row in d.rows]


def dpp_from_json(obj: Sequence[Sequence[int]]) -> Dpp:
    return Dpp(tuple(tuple(int(v) for v in row) for row in obj))
