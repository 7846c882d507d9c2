"""Exact sparse multivariate polynomial arithmetic over the integers.

A polynomial is a mapping from exponent tuples to nonzero integer
coefficients:

    x^2*y + 3  ->  {(2, 1, 0, 0, 0): 1, (0, 0, 0, 0, 0): 3}

The representation is canonical (zero coefficients are never stored), so
``==`` is exact identity of polynomials.  Coefficients are Python ints,
which are arbitrary precision; evaluation returns ``Fraction``.

The package-wide ring is Z[x, y, z, w, q] with the variable order fixed
as (x, y, z, w, q).  Modules that only need a subset of the variables
still build arity-5 polynomials (unused exponents stay 0), so equality
tests work directly across modules.  ``MultiPoly`` itself supports any
arity; operations between polynomials of different arity are rejected.

``OmegaPoly`` adjoins a formal element omega of degree at most 2 over
``MultiPoly``; the only quadratic that matters here is

    y*omega^2 + (1 - x - y)*omega + x = 0,

and ``omega_congruent_zero`` tests divisibility by it.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

NVARS = 5
VAR_NAMES = ("x", "y", "z", "w", "q")
X_IDX, Y_IDX, Z_IDX, W_IDX, Q_IDX = range(NVARS)


def binom(a: int, b: int) -> int:
    """Binomial coefficient with the lattice-path conventions.

    C(a, 0) = 1 for every a (this realizes the phantom-path case C(-1, 0) = 1),
    C(a, b) = 0 whenever b < 0, b > a or a < 0 with b > 0.
    """
    if b == 0:
        return 1
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


class MultiPoly:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("arity", "_terms")

    def __init__(self, arity: int, terms: Mapping[tuple, int] | None = None):
        if arity < 0:
            raise ValueError("arity must be nonnegative")
        clean: dict[tuple, int] = {}
        if terms:
            for exp, coeff in terms.items():
                exp = tuple(exp)
                if len(exp) != arity:
                    raise ValueError(f"exponent {exp} does not match arity {arity}")
                if any(e < 0 or not isinstance(e, int) for e in exp):
                    raise ValueError(f"exponents must be nonnegative ints, got {exp}")
                if not isinstance(coeff, int):
                    raise ValueError("coefficients must be ints")
                if coeff:
                    clean[exp] = clean.get(exp, 0) + coeff
                    if not clean[exp]:
                        del clean[exp]
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "_terms", clean)

    @classmethod
    def _raw(cls, arity: int, terms: dict[tuple, int]) -> "MultiPoly":
        # internal constructor: terms must already be canonical
        self = object.__new__(cls)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "_terms", terms)
        return self

    @classmethod
    def zero(cls, arity: int = NVARS) -> "MultiPoly":
        return cls._raw(arity, {})

    @classmethod
    def const(cls, value: int, arity: int = NVARS) -> "MultiPoly":
        if value == 0:
            return cls._raw(arity, {})
        return cls._raw(arity, {(0,) * arity: value})

    @classmethod
    def variable(cls, index: int, arity: int = NVARS) -> "MultiPoly":
        if not 0 <= index < arity:
            raise ValueError(f"variable index {index} out of range for arity {arity}")
        exp = [0] * arity
        exp[index] = 1
        return cls._raw(arity, {tuple(exp): 1})

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("MultiPoly is immutable")

    @property
    def terms(self) -> Mapping[tuple, int]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[tuple[tuple, int]]:
        return iter(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self._terms.items())))

    def _check_arity(self, other: "MultiPoly") -> None:
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_arity(other)
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            new = out.get(exp, 0) + coeff
            if new:
                out[exp] = new
            elif exp in out:
                del out[exp]
        return MultiPoly._raw(self.arity, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.arity, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MultiPoly._raw(self.arity, {})
            return MultiPoly._raw(
                self.arity, {e: c * other for e, c in self._terms.items()}
            )
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_arity(other)
        out: dict[tuple, int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exp = tuple(map(sum, zip(ea, eb)))
                new = out.get(exp, 0) + ca * cb
                if new:
                    out[exp] = new
                elif exp in out:
                    del out[exp]
        return MultiPoly._raw(self.arity, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(1, self.arity)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def evaluate(self, point: Sequence) -> Fraction:
        """Evaluate exactly at a point of rationals (or ints)."""
        if len(point) != self.arity:
            raise ValueError(f"point length {len(point)} does not match arity {self.arity}")
        vals = [Fraction(p) for p in point]
        total = Fraction(0)
        for exp, coeff in self._terms.items():
            term = Fraction(coeff)
            for v, e in zip(vals, exp):
                if e:
                    term *= v**e
            total += term
        return total

    def substitute(self, index: int, value: int) -> "MultiPoly":
        """Set one variable to an integer constant; arity is preserved."""
        if not 0 <= index < self.arity:
            raise ValueError("variable index out of range")
        out: dict[tuple, int] = {}
        for exp, coeff in self._terms.items():
            c = coeff * value ** exp[index]
            if not c:
                continue
            new_exp = exp[:index] + (0,) + exp[index + 1 :]
            tot = out.get(new_exp, 0) + c
            if tot:
                out[new_exp] = tot
            elif new_exp in out:
                del out[new_exp]
        return MultiPoly._raw(self.arity, out)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        """Terms in the canonical print order.

        Graded order: ascending total degree, ties broken by descending
        lexicographic comparison of the exponent vectors.
        """
        return sorted(
            self._terms.items(),
            key=lambda item: (sum(item[0]), tuple(-e for e in item[0])),
        )

    def to_term_list(self) -> list[list]:
        """JSON-friendly canonical form: [[exponents, coefficient], ...]."""
        return [[list(exp), coeff] for exp, coeff in self.sorted_terms()]

    @classmethod
    def from_term_list(cls, data: Iterable, arity: int = NVARS) -> "MultiPoly":
        terms: dict[tuple, int] = {}
        for exp, coeff in data:
            terms[tuple(exp)] = terms.get(tuple(exp), 0) + int(coeff)
        return cls(arity, terms)

    def __repr__(self) -> str:
        return f"MultiPoly({poly_str(self)!r})"


def _monomial_str(exp: tuple, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, exp):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def poly_str(p: MultiPoly, names: Sequence[str] | None = None) -> str:
    """Canonical string form; fixtures compare these strings directly."""
    if names is None:
        names = VAR_NAMES if p.arity <= NVARS else tuple(f"x{i}" for i in range(p.arity))
    terms = p.sorted_terms()
    if not terms:
        return "0"
    pieces = []
    for pos, (exp, coeff) in enumerate(terms):
        mono = _monomial_str(exp, names)
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if pos == 0:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(pieces)


# The shared ring Z[x, y, z, w, q].
ZERO = MultiPoly.zero()
ONE = MultiPoly.const(1)
X = MultiPoly.variable(X_IDX)
Y = MultiPoly.variable(Y_IDX)
Z = MultiPoly.variable(Z_IDX)
W = MultiPoly.variable(W_IDX)
Q = MultiPoly.variable(Q_IDX)


def const(value: int) -> MultiPoly:
    return MultiPoly.const(value)


def monomial(coeff: int, x: int = 0, y: int = 0, z: int = 0, w: int = 0, q: int = 0) -> MultiPoly:
    """One term of the shared five-variable ring."""
    if coeff == 0:
        return ZERO
    return MultiPoly._raw(NVARS, {(x, y, z, w, q): coeff})


MAX_OMEGA_DEGREE = 2


class OmegaPoly:
    """Polynomial in a formal element omega with MultiPoly coefficients.

    Degree is capped at 2: every relation built here stays at degree <= 2,
    so exceeding the cap is treated as a hard error rather than reduced.
    The zero element has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[MultiPoly]):
        coeffs = list(coeffs)
        if coeffs:
            arity = coeffs[0].arity
            if any(c.arity != arity for c in coeffs):
                raise ValueError("omega coefficients must share one arity")
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        if len(coeffs) - 1 > MAX_OMEGA_DEGREE:
            raise ValueError(f"omega degree {len(coeffs) - 1} exceeds cap {MAX_OMEGA_DEGREE}")
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("OmegaPoly is immutable")

    @classmethod
    def from_poly(cls, p: MultiPoly) -> "OmegaPoly":
        return cls((p,))

    @classmethod
    def zero(cls, arity: int = NVARS) -> "OmegaPoly":
        return cls(())

    @classmethod
    def omega(cls, arity: int = NVARS) -> "OmegaPoly":
        return cls((MultiPoly.zero(arity), MultiPoly.const(1, arity)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, d: int, arity: int = NVARS) -> MultiPoly:
        if d < len(self.coeffs):
            return self.coeffs[d]
        return MultiPoly.zero(self.coeffs[0].arity if self.coeffs else arity)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            other = OmegaPoly.from_poly(other)
        if not isinstance(other, OmegaPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "OmegaPoly":
        if isinstance(other, MultiPoly):
            other = OmegaPoly.from_poly(other)
        if not isinstance(other, OmegaPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        if n == 0:
            return self
        arity = (self.coeffs or other.coeffs)[0].arity
        return OmegaPoly([self.coeff(d, arity) + other.coeff(d, arity) for d in range(n)])

    def __neg__(self) -> "OmegaPoly":
        return OmegaPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "OmegaPoly":
        if isinstance(other, MultiPoly):
            other = OmegaPoly.from_poly(other)
        if not isinstance(other, OmegaPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return OmegaPoly([c * other for c in self.coeffs])
        if isinstance(other, MultiPoly):
            return OmegaPoly([c * other for c in self.coeffs])
        if not isinstance(other, OmegaPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return OmegaPoly(())
        deg = self.degree + other.degree
        if deg > MAX_OMEGA_DEGREE:
            # only raise if the product is genuinely of that degree
            top = self.coeffs[-1] * other.coeffs[-1]
            if top:
                raise ValueError(f"omega degree {deg} exceeds cap {MAX_OMEGA_DEGREE}")
        arity = self.coeffs[0].arity
        out = [MultiPoly.zero(arity) for _ in range(deg + 1)]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return OmegaPoly(out)

    __rmul__ = __mul__

    def evaluate(self, point: Sequence, omega: Fraction) -> Fraction:
        omega = Fraction(omega)
        total = Fraction(0)
        for d, c in enumerate(self.coeffs):
            total += c.evaluate(point) * omega**d
        return total

    def __repr__(self) -> str:
        if not self.coeffs:
            return "OmegaPoly(0)"
        parts = [f"({poly_str(c)})*omega^{d}" for d, c in enumerate(self.coeffs)]
        return "OmegaPoly(" + " + ".join(parts) + ")"


def omega_congruent_zero(d: OmegaPoly, x_index: int = X_IDX, y_index: int = Y_IDX) -> bool:
    """Test divisibility of d by y*omega^2 + (1 - x - y)*omega + x.

    Writing d = d2*omega^2 + d1*omega + d0, divisibility over the fraction
    field is equivalent to the two exact polynomial identities

        y*d0 == x*d2    and    y*d1 == (1 - x - y)*d2.
    """
    if d.degree > 2:
        raise ValueError("omega degree above 2")
    if not d.coeffs:
        return True
    arity = d.coeffs[0].arity
    x = MultiPoly.variable(x_index, arity)
    y = MultiPoly.variable(y_index, arity)
    one = MultiPoly.const(1, arity)
    d0 = d.coeff(0, arity)
    d1 = d.coeff(1, arity)
    d2 = d.coeff(2, arity)
    return y * d0 == x * d2 and y * d1 == (one - x - y) * d2
