"""Nonintersecting lattice paths in bijection with descending plane
partitions, path-weight sums, and the determinant identity they satisfy.

The primary grid has Cartesian vertices (column, row) with
0 <= column, row <= n-1; edges run rightward and downward.  A family in
the primary class consists of vertex-disjoint paths from (0, L[i-1] - 1)
to (L[i], 0) for i = 1 .. t+1, where n = L[0] > L[1] > ... > L[t] > 0 and
L[t+1] = 0; the L[i] are the row lengths of the matching partition.

Edge weights: a rightward step leaving column c at height h weighs x when
c <= h and y when c > h; in the z-refined regime steps in the top row
(h = n-1) weigh x*z instead of x.  Vertical steps weigh 1.  The counts of
x-steps, y-steps and top-row steps of a family equal the statistics
(nu, mu, rho) of the matching partition.

The alternative class lives on the grid with columns 1 .. n-1 and rows
-1 .. n-1; paths run from (1, d_i) to (d_i, -1) for a strictly decreasing
sequence n-1 >= d_1 > ... > d_t >= 1, where d_i + 1 is the first part of
row i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .dpp import Dpp
from .errors import InvariantError, ResourceLimitError, ValidationError
from .limits import BRUTE_FORCE_LIMIT
from .linalg import PolyMatrix, det_poly
from .polynomial import NVARS, MultiPoly, binom, monomial


@dataclass(frozen=True)
class LatticePath:
    start: tuple[int, int]  # (column, row)
    steps: tuple[str, ...]  # "R" (column + 1) or "D" (row - 1)

    def __post_init__(self):
        if any(s not in ("R", "D") for s in self.steps):
            raise ValidationError("steps must be 'R' or 'D'")

    @property
    def end(self) -> tuple[int, int]:
        c, r = self.start
        c += sum(1 for s in self.steps if s == "R")
        r -= sum(1 for s in self.steps if s == "D")
        return (c, r)

    def vertices(self) -> list[tuple[int, int]]:
        c, r = self.start
        out = [(c, r)]
        for s in self.steps:
            if s == "R":
                c += 1
            else:
                r -= 1
            out.append((c, r))
        return out

    def right_steps(self) -> list[tuple[int, int]]:
        """(column, height) of each rightward step, column of the left end."""
        c, r = self.start
        out = []
        for s in self.steps:
            if s == "R":
                out.append((c, r))
                c += 1
            else:
                r -= 1
        return out


def _check_disjoint(paths: Sequence[LatticePath]) -> None:
    seen: set[tuple[int, int]] = set()
    for p in paths:
        for v in p.vertices():
            if v in seen:
                raise ValidationError(f"paths share vertex {v}")
            seen.add(v)


@dataclass(frozen=True)
class NilpSet:
    n: int
    paths: tuple[LatticePath, ...]

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ValidationError("order must be at least 1")
        if not self.paths:
            raise ValidationError("a family always contains the final path")
        lengths = [sum(1 for s in p.steps if s == "R") for p in self.paths]
        profile = [n] + lengths
        if lengths[-1] != 0:
            raise ValidationError("last path must end in column 0")
        if any(profile[i] <= profile[i + 1] for i in range(len(lengths))):
            raise ValidationError("column profile must decrease strictly")
        for i, p in enumerate(self.paths):
            if p.start != (0, profile[i] - 1):
                raise ValidationError(f"path {i + 1} starts at {p.start}")
            if p.end != (lengths[i], 0):
                raise ValidationError(f"path {i + 1} ends at {p.end}")
            for c, r in p.vertices():
                if not (0 <= c < n and 0 <= r < n):
                    raise ValidationError("path leaves the grid")
        _check_disjoint(self.paths)


def _heights_to_path(start_row: int, heights: Sequence[int]) -> LatticePath:
    # monotone path from (0, start_row) whose k-th rightward step is at
    # the given height, ending at height 0
    steps: list[str] = []
    row = start_row
    for h in heights:
        if h > row:
            raise ValidationError("step heights must decrease weakly")
        steps.extend("D" * (row - h))
        steps.append("R")
        row = h
    steps.extend("D" * row)
    return LatticePath((0, start_row), tuple(steps))


def dpp_to_nilp(d: Dpp, n: int) -> NilpSet:
    """Row i maps to the path whose k-th rightward step has height
    (k-th part of row i) - 1; one extra all-down path closes the family."""
    if d.rows and d.max_part > n:
        raise ValidationError("parts exceed the ambient order")
    lengths = [len(row) for row in d.rows]
    profile = [n] + lengths + [0]
    paths = []
    for i, row in enumerate(d.rows):
        paths.append(_heights_to_path(profile[i] - 1, [p - 1 for p in row]))
    paths.append(_heights_to_path(profile[-2] - 1, []))
    return NilpSet(n, tuple(paths))


def nilp_to_dpp(p: NilpSet) -> Dpp:
    rows = []
    for path in p.paths[:-1]:
        rows.append(tuple(h + 1 for _, h in path.right_steps()))
    return Dpp(tuple(rows))


def nilp_statistics(p: NilpSet) -> tuple[int, int, int]:
    """(steps above the diagonal line, steps below it, steps in the top
    row); equals (nu, mu, rho) of the matching partition."""
    above = below = top = 0
    for path in p.paths:
        for c, h in path.right_steps():
            if c <= h:
                above += 1
            else:
                below += 1
            if h == p.n - 1:
                top += 1
    return (above, below, top)


def path_weight_sum(i: int, j: int, n: int, refined: bool = False) -> MultiPoly:
    """Closed-form weight sum over all paths from (0, j) to (i, 0).

    Plain columns:   sum_k C(i-1, i-k) C(j+1, k) x^k y^(i-k)
    Refined top row: sum_k sum_l C(i-1, i-k) C(n-l-1, k-l) x^k y^(i-k) z^l
    """
    if not (0 <= i < n and 0 <= j < n):
        raise ValidationError("grid indices out of range")
    terms: dict[tuple, int] = {}
    if refined and j == n - 1:
        for k in range(i + 1):
            for l in range(k + 1):
                c = binom(i - 1, i - k) * binom(n - l - 1, k - l)
                if c:
                    exp = (k, i - k, l, 0, 0)
                    terms[exp] = terms.get(exp, 0) + c
    else:
        for k in range(min(i, j + 1) + 1):
            c = binom(i - 1, i - k) * binom(j + 1, k)
            if c:
                exp = (k, i - k, 0, 0, 0)
                terms[exp] = terms.get(exp, 0) + c
    return MultiPoly(NVARS, terms)


def direct_path_weight_oracle(i: int, j: int, n: int, refined: bool = False) -> MultiPoly:
    """Brute-force companion of path_weight_sum: walk every monotone path
    from (0, j) to (i, 0) and sum the edge-weight products."""
    if not (0 <= i < n and 0 <= j < n):
        raise ValidationError("grid indices out of range")
    total = MultiPoly.zero(NVARS)

    def walk(c: int, h: int, ex: int, ey: int, ez: int) -> None:
        nonlocal total
        if c == i and h == 0:
            total = total + monomial(1, x=ex, y=ey, z=ez)
            return
        if c < i:
            if refined and h == n - 1:
                walk(c + 1, h, ex + 1, ey, ez + 1)
            elif c <= h:
                walk(c + 1, h, ex + 1, ey, ez)
            else:
                walk(c + 1, h, ex, ey + 1, ez)
        if h > 0:
            walk(c, h - 1, ex, ey, ez)

    walk(0, j, 0, 0, 0)
    return total


def _profiles(n: int) -> Iterator[tuple[int, ...]]:
    # strictly decreasing tuples inside {1..n-1}, shortest first, then
    # lexicographic in the tuple itself
    from itertools import combinations

    for t in range(n):
        for combo in combinations(range(n - 1, 0, -1), t):
            yield combo


def enumerate_nilp_families(n: int) -> Iterator[NilpSet]:
    """Every nonintersecting family directly, without the bijection.

    Order: profiles as in _profiles, families within a profile in
    depth-first order exploring a downward step before a rightward one.
    """
    if n < 1:
        raise ValidationError("order must be at least 1")
    for profile in _profiles(n):
        ends = list(profile) + [0]
        starts = [n] + list(profile)
        used: set[tuple[int, int]] = set()
        chosen: list[LatticePath] = []

        def build(idx: int) -> Iterator[NilpSet]:
            if idx == len(ends):
                yield NilpSet(n, tuple(chosen))
                return
            target = ends[idx]
            start = (0, starts[idx] - 1)
            steps: list[str] = []

            def walk(c: int, h: int) -> Iterator[NilpSet]:
                if (c, h) in used:
                    return
                if c == target and h == 0:
                    used_here = set()
                    path = LatticePath(start, tuple(steps))
                    for v in path.vertices():
                        used.add(v)
                        used_here.add(v)
                    chosen.append(path)
                    yield from build(idx + 1)
                    chosen.pop()
                    used.difference_update(used_here)
                    return
                if h > 0:
                    steps.append("D")
                    yield from walk(c, h - 1)
                    steps.pop()
                if c < target:
                    steps.append("R")
                    yield from walk(c + 1, h)
                    steps.pop()

            yield from walk(start[0], start[1])

        yield from build(0)


def family_weight(p: NilpSet, refined: bool = False) -> MultiPoly:
    ex = ey = ez = 0
    for path in p.paths:
        for c, h in path.right_steps():
            if refined and h == p.n - 1:
                ex += 1
                ez += 1
            elif c <= h:
                ex += 1
            else:
                ey += 1
    return monomial(1, x=ex, y=ey, z=ez)


def lgv_matrix(n: int, refined: bool = False) -> PolyMatrix:
    """-delta(i, j+1) + path weight sum, the matrix whose determinant
    carries the full family sum."""
    neg_one = MultiPoly.const(-1)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            e = path_weight_sum(i, j, n, refined)
            if i == j + 1:
                e = e + neg_one
            row.append(e)
        rows.append(tuple(row))
    return PolyMatrix(tuple(rows))


def lgv_nilp_sum(n: int, refined: bool = False, check_direct: bool = True) -> MultiPoly:
    """Family weight sum computed twice: direct enumeration and the
    determinant route.  Returns the determinant value after asserting the
    two agree (skip the direct route with check_direct=False)."""
    if n > BRUTE_FORCE_LIMIT:
        raise ResourceLimitError(
            f"family enumeration capped at order {BRUTE_FORCE_LIMIT}"
        )
    det = det_poly(lgv_matrix(n, refined))
    if check_direct:
        direct = MultiPoly.zero(NVARS)
        for fam in enumerate_nilp_families(n):
            direct = direct + family_weight(fam, refined)
        if direct != det:
            raise InvariantError(
                f"family sum and determinant disagree at order {n}"
            )
    return det


@dataclass(frozen=True)
class NilpPrimeSet:
    n: int
    paths: tuple[LatticePath, ...]

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ValidationError("order must be at least 1")
        deltas = []
        for i, p in enumerate(self.paths):
            if p.start[0] != 1:
                raise ValidationError(f"path {i + 1} must start in column 1")
            delta = p.start[1]
            if not 1 <= delta <= n - 1:
                raise ValidationError("start height out of range")
            if p.end != (delta, -1):
                raise ValidationError(f"path {i + 1} must end at ({delta}, -1)")
            deltas.append(delta)
            for c, r in p.vertices():
                if not (1 <= c <= n - 1 and -1 <= r <= n - 1):
                    raise ValidationError("path leaves the grid")
        if any(deltas[i] <= deltas[i + 1] for i in range(len(deltas) - 1)):
            raise ValidationError("start heights must decrease strictly")
        _check_disjoint(self.paths)


def dpp_to_nilp_prime(d: Dpp, n: int) -> NilpPrimeSet:
    """Row i maps to a path from (1, f-1) to (f-1, -1) where f is the
    first part; the k-th rightward step at nonnegative height carries
    part k+1 of the row, extra steps at height -1 pad the length."""
    if d.rows and d.max_part > n:
        raise ValidationError("parts exceed the ambient order")
    paths = []
    for row in d.rows:
        delta = row[0] - 1
        heights = [p - 1 for p in row[1:]]
        steps: list[str] = []
        h = delta
        for target in heights:
            steps.extend("D" * (h - target))
            steps.append("R")
            h = target
        steps.extend("D" * (h + 1))
        pad = delta - 1 - len(heights)
        steps.extend("R" * pad)
        paths.append(LatticePath((1, delta), tuple(steps)))
    return NilpPrimeSet(n, tuple(paths))


def nilp_prime_to_dpp(p: NilpPrimeSet) -> Dpp:
    rows = []
    for path in p.paths:
        parts = [path.start[1] + 1]
        parts.extend(h + 1 for _, h in path.right_steps() if h >= 0)
        rows.append(tuple(parts))
    return Dpp(tuple(rows))


def nilp_prime_statistics(p: NilpPrimeSet) -> tuple[int, int]:
    """(number of paths plus steps above the diagonal line, steps below it
    at nonnegative height); equals (nu, mu) of the matching partition."""
    nu = len(p.paths)
    mu = 0
    for path in p.paths:
        for c, h in path.right_steps():
            if c <= h:
                nu += 1
            elif h >= 0:
                mu += 1
    return (nu, mu)


def enumerate_nilp_prime_families(n: int) -> Iterator[NilpPrimeSet]:
    """Every family of the alternative class, found by direct search."""
    from itertools import combinations

    if n < 1:
        raise ValidationError("order must be at least 1")
    for t in range(n):
        for deltas in combinations(range(n - 1, 0, -1), t):
            used: set[tuple[int, int]] = set()
            chosen: list[LatticePath] = []

            def build(idx: int) -> Iterator[NilpPrimeSet]:
                if idx == len(deltas):
                    yield NilpPrimeSet(n, tuple(chosen))
                    return
                delta = deltas[idx]
                start = (1, delta)
                steps: list[str] = []

                def walk(c: int, h: int) -> Iterator[NilpPrimeSet]:
                    if (c, h) in used:
                        return
                    if c == delta and h == -1:
                        path = LatticePath(start, tuple(steps))
                        verts = set(path.vertices())
                        used.update(verts)
                        chosen.append(path)
                        yield from build(idx + 1)
                        chosen.pop()
                        used.difference_update(verts)
                        return
                    if h > -1:
                        steps.append("D")
                        yield from walk(c, h - 1)
                        steps.pop()
                    if c < delta:
                        steps.append("R")
                        yield from walk(c + 1, h)
                        steps.pop()

                yield from walk(start[0], start[1])

            yield from build(0)


def nilp_to_json(p: NilpSet) -> dict:
    return {"n": p.n, "paths": ["".join(path.steps) for path in p.paths]}


def nilp_from_json(obj: dict) -> NilpSet:
    n = int(obj["n"])
    words = list(obj["paths"])
    profile = [n] + [w.count("R") for w in words]
    paths = [
        LatticePath((0, profile[i] - 1), tuple(words[i])) for i in range(len(words))
    ]
    return NilpSet(n, tuple(paths))
