"""Six-vertex model with domain-wall boundary conditions.

Configurations are stored as an n x n grid of vertex types.  Around each
vertex the four incident edges carry partial sums of the matching
alternating sign matrix: the edge left of (i, j) carries the row sum
through column j-1, the edge above carries the column sum through row
i-1, and so on.  A label 0 means the arrow points right or up, a label 1
left or down.  The six admissible types, as (left, right, top, bottom)
labels, are

    a1 = (0,0,0,0)   a2 = (1,1,1,1)
    b1 = (1,1,0,0)   b2 = (0,0,1,1)
    c1 = (0,1,0,1)   c2 = (1,0,1,0)

Domain-wall boundaries fix the outer labels: 0 on the left and top, 1 on
the right and bottom (horizontal boundary arrows incoming, vertical
outgoing).  c1 corresponds to entry 1, c2 to entry -1 and the rest to 0.

Spectral weights at a point (q; s_1..s_n; t_1..t_n) use u_i = s_i^2 and
v_j = t_j^2, which removes the square root from the c-weight:

    a(u, v) = u*q - 1/(v*q)
    b(u, v) = u/q - q/v
    c at (i, j) = (q^2 - q^-2) * s_i / t_j

so every computation stays in exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Iterator, Sequence

from .asm import Asm, enumerate_asms, z_asm_brute
from .errors import DegenerateParameterError, ValidationError
from .linalg import det_rat

VERTEX_TYPES = ("a1", "a2", "b1", "b2", "c1", "c2")

# (left, right, top, bottom) edge labels per type
EDGE_LABELS = {
    "a1": (0, 0, 0, 0),
    "a2": (1, 1, 1, 1),
    "b1": (1, 1, 0, 0),
    "b2": (0, 0, 1, 1),
    "c1": (0, 1, 0, 1),
    "c2": (1, 0, 1, 0),
}

ENTRY_OF_TYPE = {"a1": 0, "a2": 0, "b1": 0, "b2": 0, "c1": 1, "c2": -1}

# (left label, top label, matrix entry) -> type
_TYPE_FROM_STATE = {
    (0, 0, 1): "c1",
    (1, 1, -1): "c2",
    (0, 0, 0): "a1",
    (1, 1, 0): "a2",
    (1, 0, 0): "b1",
    (0, 1, 0): "b2",
}


@dataclass(frozen=True)
class SixVertexConfig:
    types: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        n = len(self.types)
        if n == 0 or any(len(row) != n for row in self.types):
            raise ValidationError("type grid must be square and nonempty")
        for row in self.types:
            for t in row:
                if t not in EDGE_LABELS:
                    raise ValidationError(f"unknown vertex type {t!r}")
        # recompute both labels of every internal edge and the boundary
        for i in range(n):
            for j in range(n):
                left, right, top, bottom = EDGE_LABELS[self.types[i][j]]
                if j == 0 and left != 0:
                    raise ValidationError(f"left boundary arrow wrong at row {i + 1}")
                if j == n - 1 and right != 1:
                    raise ValidationError(f"right boundary arrow wrong at row {i + 1}")
                if i == 0 and top != 0:
                    raise ValidationError(f"top boundary arrow wrong at column {j + 1}")
                if i == n - 1 and bottom != 1:
                    raise ValidationError(f"bottom boundary arrow wrong at column {j + 1}")
                if j + 1 < n and right != EDGE_LABELS[self.types[i][j + 1]][0]:
                    raise ValidationError(f"horizontal edge conflict at ({i + 1},{j + 1})")
                if i + 1 < n and bottom != EDGE_LABELS[self.types[i + 1][j]][2]:
                    raise ValidationError(f"vertical edge conflict at ({i + 1},{j + 1})")

    @property
    def n(self) -> int:
        return len(self.types)


@dataclass(frozen=True)
class VertexCounts:
    n_a1: int
    n_a2: int
    n_b1: int
    n_b2: int
    n_c1: int
    n_c2: int
    row1_a: int
    row1_b: int
    row1_c: int

    # halved / shifted totals: the grid carries the a- and b-counts twice
    # and the c-count n more times than these
    @property
    def n_a(self) -> int:
        return self.n_a1

    @property
    def n_b(self) -> int:
        return self.n_b1

    @property
    def n_c(self) -> int:
        return self.n_c2


def asm_to_sixvertex(a: Asm) -> SixVertexConfig:
    """Bijection from matrices to configurations via partial sums."""
    n = a.n
    grid = []
    col = [0] * n
    for i in range(n):
        row_types = []
        rowsum = 0
        for j in range(n):
            v = a.rows[i][j]
            row_types.append(_TYPE_FROM_STATE[(rowsum, col[j], v)])
            rowsum += v
            col[j] += v
        grid.append(tuple(row_types))
    return SixVertexConfig(tuple(grid))


def sixvertex_to_asm(c: SixVertexConfig) -> Asm:
    """Inverse bijection: c1 -> 1, c2 -> -1, all other types -> 0."""
    return Asm(
        tuple(tuple(ENTRY_OF_TYPE[t] for t in row) for row in c.types)
    )


def enumerate_configs(n: int) -> Iterator[SixVertexConfig]:
    """All domain-wall configurations, in the matrix enumeration order."""
    for a in enumerate_asms(n):
        yield asm_to_sixvertex(a)


def vertex_counts(c: SixVertexConfig) -> VertexCounts:
    totals = {t: 0 for t in VERTEX_TYPES}
    for row in c.types:
        for t in row:
            totals[t] += 1
    row1 = {"a1": 0, "b1": 0, "c1": 0}
    for t in c.types[0]:
        if t in row1:
            row1[t] += 1
    return VertexCounts(
        totals["a1"],
        totals["a2"],
        totals["b1"],
        totals["b2"],
        totals["c1"],
        totals["c2"],
        row1["a1"],
        row1["b1"],
        row1["c1"],
    )


@dataclass(frozen=True)
class IkPoint:
    """Spectral parameters (q; s; t) with u_i = s_i^2, v_j = t_j^2."""

    q: Fraction
    s: tuple[Fraction, ...]
    t: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "s", tuple(Fraction(v) for v in self.s))
        object.__setattr__(self, "t", tuple(Fraction(v) for v in self.t))
        if len(self.s) != len(self.t):
            raise ValidationError("s and t must have the same length")
        if self.q == 0:
            raise DegenerateParameterError("q must be nonzero")
        for name, seq in (("s", self.s), ("t", self.t)):
            for idx, val in enumerate(seq):
                if val == 0:
                    raise DegenerateParameterError(f"{name}[{idx + 1}] must be nonzero")

    @property
    def n(self) -> int:
        return len(self.s)

    @property
    def u(self) -> tuple[Fraction, ...]:
        return tuple(v * v for v in self.s)

    @property
    def v(self) -> tuple[Fraction, ...]:
        return tuple(v * v for v in self.t)


def weight_a(u: Fraction, v: Fraction, q: Fraction) -> Fraction:
    return u * q - 1 / (v * q)


def weight_b(u: Fraction, v: Fraction, q: Fraction) -> Fraction:
    return u / q - q / v


def weight_c(s_i: Fraction, t_j: Fraction, q: Fraction) -> Fraction:
    return (q * q - 1 / (q * q)) * s_i / t_j


def config_weight(c: SixVertexConfig, pt: IkPoint) -> Fraction:
    u, v = pt.u, pt.v
    total = Fraction(1)
    for i, row in enumerate(c.types):
        for j, t in enumerate(row):
            kind = t[0]
            if kind == "a":
                total *= weight_a(u[i], v[j], pt.q)
            elif kind == "b":
                total *= weight_b(u[i], v[j], pt.q)
            else:
                total *= weight_c(pt.s[i], pt.t[j], pt.q)
    return total


def partition_function_explicit(n: int, pt: IkPoint) -> Fraction:
    """Partition function as the explicit sum over all configurations."""
    if pt.n != n:
        raise ValidationError("point dimension does not match order")
    total = Fraction(0)
    for a in enumerate_asms(n):
        total += config_weight(asm_to_sixvertex(a), pt)
    return total


def ik_determinant_rat(pt: IkPoint) -> Fraction:
    """Determinant form of the partition function, exactly, at a rational
    point.  Requires the u_i (and the v_j) pairwise distinct and no pole
    u_i*v_j in {q^2, q^-2}."""
    n = pt.n
    q2 = pt.q * pt.q
    q2inv = 1 / q2
    u, v = pt.u, pt.v
    for name, seq in (("s", u), ("t", v)):
        for i in range(n):
            for j in range(i + 1, n):
                if seq[i] == seq[j]:
                    raise DegenerateParameterError(
                        f"{name}[{i + 1}] and {name}[{j + 1}] have equal squares"
                    )
    for i in range(n):
        for j in range(n):
            if u[i] * v[j] in (q2, q2inv):
                raise DegenerateParameterError(
                    f"pole at u[{i + 1}]*v[{j + 1}] = q^(+/-2)"
                )
    prefactor = Fraction(1)
    for i in range(n):
        prefactor *= pt.s[i] * pt.t[i] ** (2 * n + 1)
    for i in range(n):
        for j in range(n):
            prefactor *= weight_a(u[i], v[j], pt.q) * weight_b(u[i], v[j], pt.q)
    for i in range(n):
        for j in range(i + 1, n):
            prefactor /= (u[i] - u[j]) * (v[i] - v[j])
    matrix = [
        [1 / (u[i] * v[j] - q2) - 1 / (u[i] * v[j] - q2inv) for j in range(n)]
        for i in range(n)
    ]
    return prefactor * det_rat(matrix)


def homogeneous_weights(q: Fraction, rho0: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    """The (a, b, c) weights at the fully homogeneous point u = v = rho0^2."""
    q = Fraction(q)
    r = Fraction(rho0) ** 2
    return (
        q * r - 1 / (q * r),
        r / q - q / r,
        q * q - 1 / (q * q),
    )


def homogeneous_point(n: int, q: Fraction, rho0: Fraction) -> IkPoint:
    return IkPoint(Fraction(q), (Fraction(rho0),) * n, (Fraction(rho0),) * n)


def check_homogeneous_specialization(n: int, q: Fraction, rho0: Fraction) -> bool:
    """At the homogeneous point the partition function factors through the
    brute-force generating function at x = (a/b)^2, y = (c/b)^2, z = 1."""
    a, b, c = homogeneous_weights(q, rho0)
    if b == 0:
        raise DegenerateParameterError("b weight vanishes; choose rho0^2 != q^(+/-1)")
    lhs = partition_function_explicit(n, homogeneous_point(n, q, rho0))
    x = (a / b) ** 2
    y = (c / b) ** 2
    rhs = b ** (n * (n - 1)) * c**n * z_asm_brute(n).evaluate((x, y, 1, 1, 1))
    return lhs == rhs


def check_refined_specialization(
    n: int, q: Fraction, rho0: Fraction, s1: Fraction
) -> bool:
    """With the first row parameter free the partition function matches the
    z-refined generating function at z = (a~ * b) / (a * b~)."""
    q, rho0, s1 = Fraction(q), Fraction(rho0), Fraction(s1)
    a, b, c = homogeneous_weights(q, rho0)
    r = rho0 * rho0
    u1 = s1 * s1
    a_t = u1 * q - 1 / (r * q)
    b_t = u1 / q - q / r
    c_t = (q * q - 1 / (q * q)) * s1 / rho0
    if 0 in (a, b, b_t):
        raise DegenerateParameterError("degenerate weight in refined specialization")
    pt = IkPoint(q, (s1,) + (rho0,) * (n - 1), (rho0,) * n)
    lhs = partition_function_explicit(n, pt)
    x = (a / b) ** 2
    y = (c / b) ** 2
    z = a_t * b / (a * b_t)
    rhs = (
        b ** ((n - 1) ** 2)
        * b_t ** (n - 1)
        * c ** (n - 1)
        * c_t
        * z_asm_brute(n).evaluate((x, y, z, 1, 1))
    )
    return lhs == rhs


def sample_ik_point(n: int, rng: Random) -> IkPoint:
    """Draw a small random rational point avoiding every degeneracy that
    the determinant route rejects."""

    def frac(nonunit: bool = False) -> Fraction:
        while True:
            val = Fraction(rng.randint(1, 9), rng.randint(1, 6)) * rng.choice((1, -1))
            if val == 0 or (nonunit and abs(val) == 1):
                continue
            return val

    while True:
        q = frac(nonunit=True)
        s = tuple(frac() for _ in range(n))
        t = tuple(frac() for _ in range(n))
        u = [x * x for x in s]
        v = [x * x for x in t]
        if len(set(u)) != n or len(set(v)) != n:
            continue
        q2 = q * q
        if any(ui * vj in (q2, 1 / q2) for ui in u for vj in v):
            continue
        return IkPoint(q, s, t)


def config_to_json(c: SixVertexConfig) -> list[list[str]]:
    return [list(row) for row in c.types]


def config_from_json(obj: Sequence[Sequence[str]]) -> SixVertexConfig:
    return SixVertexConfig(tuple(tuple(str(t) for t in row) for row in obj))
