"""Alternating sign matrices: validation, enumeration and statistics.

An order-n alternating sign matrix has entries in {-1, 0, 1}, nonzero
entries alternating in sign along every row and column, and all row and
column sums equal to 1.  Equivalently every partial row and column sum
lies in {0, 1}, which is the form the validator checks and the invariant
the enumerator maintains.

Statistics, for the generating function in (x, y, z):

    nu  - sum of A[i][j]*A[i'][j'] over i < i', j' <= j (inversion count)
    mu  - number of -1 entries
    rho - number of 0's left of the 1 in the first row
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ResourceLimitError, ValidationError
from .limits import BRUTE_FORCE_LIMIT
from .polynomial import NVARS, MultiPoly


@dataclass(frozen=True)
class Asm:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0:
            raise ValidationError("empty matrix")
        if any(len(r) != n for r in self.rows):
            raise ValidationError("matrix must be square")
        for r in self.rows:
            s = 0
            for v in r:
                if v not in (-1, 0, 1):
                    raise ValidationError(f"entry {v} outside {{-1,0,1}}")
                s += v
                if s not in (0, 1):
                    raise ValidationError("partial row sums must stay in {0,1}")
            if s != 1:
                raise ValidationError("row sum must be 1")
        for j in range(n):
            s = 0
            for i in range(n):
                s += self.rows[i][j]
                if s not in (0, 1):
                    raise ValidationError("partial column sums must stay in {0,1}")
            if s != 1:
                raise ValidationError("column sum must be 1")

    @property
    def n(self) -> int:
        return len(self.rows)

    def nonzeros(self) -> list[tuple[int, int, int]]:
        """(row, col, value) triples, row-major, 0-based."""
        return [
            (i, j, v)
            for i, row in enumerate(self.rows)
            for j, v in enumerate(row)
            if v
        ]


@dataclass(frozen=True)
class AsmStats:
    nu: int
    mu: int
    rho: int

    @property
    def nu_prime(self) -> int:
        return self.nu + self.mu


def enumerate_asms(n: int, first_one_column: int | None = None) -> Iterator[Asm]:
    """Yield every order-n alternating sign matrix exactly once.

    Deterministic order: ascending lexicographic in the concatenated rows
    with entries compared as integers (-1 < 0 < 1).  The search runs
    row by row over the vector of column partial sums, which stays in
    {0,1}^n; that vector also encodes the last nonzero sign seen in each
    column, so sign alternation needs no extra state.

    ``first_one_column`` (0-based) restricts to matrices whose first-row 1
    sits in that column; the n restrictions partition the full set, so
    callers may fan the subtrees out to workers.
    """
    if n < 1:
        raise ValidationError("order must be at least 1")
    if first_one_column is not None and not 0 <= first_one_column < n:
        raise ValidationError("first_one_column out of range")

    col = [0] * n
    rows: list[tuple[int, ...]] = []

    def row_candidates() -> list[tuple[int, ...]]:
        out: list[tuple[int, ...]] = []
        row = [0] * n

        def rec(j: int, rowsum: int) -> None:
            if j == n:
                if rowsum == 1:
                    out.append(tuple(row))
                return
            if col[j] == 1 and rowsum == 1:
                row[j] = -1
                rec(j + 1, 0)
                row[j] = 0
            rec(j + 1, rowsum)
            if col[j] == 0 and rowsum == 0:
                row[j] = 1
                rec(j + 1, 1)
                row[j] = 0

        rec(0, 0)
        return out

    def build(i: int) -> Iterator[Asm]:
        if i == n:
            yield Asm(tuple(rows))
            return
        for cand in row_candidates():
            if i == 0 and first_one_column is not None and cand[first_one_column] != 1:
                continue
            rows.append(cand)
            for j, v in enumerate(cand):
                col[j] += v
            yield from build(i + 1)
            for j, v in enumerate(cand):
                col[j] -= v
            rows.pop()

    yield from build(0)


def asm_stats(a: Asm) -> AsmStats:
    nz = a.nonzeros()
    nu = 0
    for idx, (i, j, v) in enumerate(nz):
        for i2, j2, v2 in nz[idx + 1 :]:
            if i2 > i and j2 <= j:
                nu += v * v2
    mu = sum(1 for _, _, v in nz if v == -1)
    rho = a.rows[0].index(1)
    return AsmStats(nu, mu, rho)


def asm_nu_second_form(a: Asm) -> int:
    """The companion double sum for nu (over i <= i', j' < j); cross-check."""
    nz = a.nonzeros()
    total = 0
    for i, j, v in nz:
        for i2, j2, v2 in nz:
            if i <= i2 and j2 < j:
                total += v * v2
    return total


def asm_reflect(a: Asm) -> Asm:
    """Reflection in the central vertical line: entry (i, j) -> (i, n-1-j)."""
    return Asm(tuple(tuple(reversed(row)) for row in a.rows))


def rotation_invariance(a: Asm, angle: str) -> bool:
    """Invariance under rotation by pi ('half') or pi/2 ('quarter')."""
    n = a.n
    if angle == "half":
        return all(
            a.rows[i][j] == a.rows[n - 1 - i][n - 1 - j]
            for i in range(n)
            for j in range(n)
        )
    if angle == "quarter":
        rotated = tuple(
            tuple(a.rows[n - 1 - j][i] for j in range(n)) for i in range(n)
        )
        return a.rows == rotated
    raise ValidationError(f"unknown angle {angle!r}")


def isolated_ones_count(a: Asm) -> int:
    """Entries 1 whose whole row and column are otherwise zero."""
    count = 0
    n = a.n
    for i in range(n):
        for j in range(n):
            if a.rows[i][j] != 1:
                continue
            if any(a.rows[i][jj] for jj in range(n) if jj != j):
                continue
            if any(a.rows[ii][j] for ii in range(n) if ii != i):
                continue
            count += 1
    return count


def count_asm_no_isolated(n: int, m: int) -> int:
    """Number of order-n matrices with m entries -1 and no isolated 1."""
    if n == 0:
        return 1 if m == 0 else 0
    total = 0
    for a in enumerate_asms(n):
        if asm_stats(a).mu == m and isolated_ones_count(a) == 0:
            total += 1
    return total


def z_asm_brute(n: int) -> MultiPoly:
    """Sum of x^nu * y^mu * z^rho over all order-n matrices."""
    if n > BRUTE_FORCE_LIMIT:
        raise ResourceLimitError(
            f"brute-force generating function capped at order {BRUTE_FORCE_LIMIT}"
        )
    counts: Counter[tuple[int, int, int]] = Counter()
    for a in enumerate_asms(n):
        s = asm_stats(a)
        counts[(s.nu, s.mu, s.rho)] += 1
    return MultiPoly(
        NVARS, {(p, m, k, 0, 0): c for (p, m, k), c in counts.items()}
    )


def asm_to_json(a: Asm) -> list[list[int]]:
    return [list(row) for row in a.rows]


def asm_from_json(obj: Sequence[Sequence[int]]) -> Asm:
    return Asm(tuple(tuple(int(v) for v in row) for row in obj))


def asm_row_word(a: Asm) -> str:
    """Compact text form: per row, the 1-based columns of the nonzero
    entries joined by '.', rows joined by '/'.  Signs are implied by the
    alternation rule (+1, -1, +1, ...)."""
    return "/".join(
        ".".join(str(j + 1) for j, v in enumerate(row) if v) for row in a.rows
    )


def asm_from_row_word(word: str) -> Asm:
    encoded_rows = word.split("/")
    n = len(encoded_rows)
    rows = []
    for encoded in encoded_rows:
        row = [0] * n
        sign = 1
        for tok in encoded.split("."):
            j = int(tok) - 1
            if not 0 <= j < n:
                raise ValidationError(f"column {tok} out of range")
            row[j] = sign
            sign = -sign
        rows.append(tuple(row))
    return Asm(tuple(rows))
