from fractions import Fraction
from itertools import combinations
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from asmdpp.errors import ValidationError
from asmdpp.linalg import (
    PolyMatrix,
    det_poly,
    det_rat,
    divide_exact,
    rat_matmul,
)
from asmdpp.matrices import build, l_matrix_rat, shift_matrix
from asmdpp.polynomial import MultiPoly, ONE, X, Y

ARITY = 5

small_polys = st.dictionaries(
    st.tuples(*[st.integers(0, 2)] * ARITY),
    st.integers(-4, 4).filter(bool),
    max_size=3,
).map(lambda d: MultiPoly(ARITY, d))


def poly_matrix(n, rng):
    def rand_poly():
        t = {}
        for _ in range(rng.randint(1, 3)):
            e = tuple(rng.randint(0, 2) for _ in range(ARITY))
            t[e] = t.get(e, 0) + rng.randint(-3, 3)
        return MultiPoly(ARITY, t)

    return [[rand_poly() for _ in range(n)] for _ in range(n)]


def test_det_identity_matrix():
    for n in (1, 2, 3, 5):
        assert det_poly(PolyMatrix.identity(n)) == ONE


def test_det_2x2_cofactor():
    m = PolyMatrix.from_rows([[X, Y], [ONE, X]])
    assert det_poly(m) == X * X - Y


def test_det_rat_examples():
    assert det_rat([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]) == 1
    assert det_rat([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]) == -2
    assert det_rat([[Fraction(0), Fraction(1)], [Fraction(0), Fraction(2)]]) == 0


def test_det_non_square_rejected():
    with pytest.raises(ValidationError):
        det_poly(PolyMatrix.from_rows([[X, Y]]))


def test_det_commutes_with_evaluation():
    rng = Random(11)
    for n in (2, 3, 4, 5, 6):
        m = poly_matrix(n, rng)
        point = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(ARITY))
        sym = det_poly(PolyMatrix.from_rows(m)).evaluate(point)
        num = det_rat([[e.evaluate(point) for e in row] for row in m])
        assert sym == num


def test_det_of_mbar_evaluated_matches_det_rat():
    m = build("M_BAR", 3)
    point = (Fraction(2), Fraction(3), Fraction(5), Fraction(1), Fraction(1))
    assert det_poly(m).evaluate(point) == det_rat(
        [[e.evaluate(point) for e in row] for row in m.entries]
    )


def test_bareiss_agrees_with_minors():
    rng = Random(5)
    for n in (2, 3, 4):
        m = PolyMatrix.from_rows(poly_matrix(n, rng))
        assert det_poly(m, "minors") == det_poly(m, "bareiss")
    for name in ("M_BAR", "M_PRIME", "M_DPRIME"):
        m = build(name, 4)
        assert det_poly(m, "minors") == det_poly(m, "bareiss")


def test_bareiss_handles_zero_pivot():
    z = MultiPoly.zero(ARITY)
    m = PolyMatrix.from_rows([[z, ONE], [ONE, z]])
    assert det_poly(m, "bareiss") == -ONE
    singular = PolyMatrix.from_rows([[z, z], [ONE, ONE]])
    assert det_poly(singular, "bareiss") == z


@settings(max_examples=60)
@given(small_polys, small_polys)
def test_divide_exact_inverts_multiplication(a, b):
    if not a or not b:
        return
    assert divide_exact(a * b, b) == a


def test_divide_exact_rejects_inexact():
    with pytest.raises(ValidationError):
        divide_exact(X + ONE, Y)
    with pytest.raises(ValidationError):
        divide_exact(X, MultiPoly(ARITY, {(0,) * ARITY: 2}))


def test_det_decomposition_against_shift():
    # det(A - S) equals the sum over subsets T of {1..n-1} of the minors
    # with rows {0} u T and columns (T - 1) u {n-1}
    rng = Random(7)
    n = 4
    for _ in range(4):
        a = poly_matrix(n, rng)
        lhs = det_poly(PolyMatrix.from_rows(a) - shift_matrix(n))
        rhs = MultiPoly.zero(ARITY)
        for size in range(n):
            for t_set in combinations(range(1, n), size):
                rows = sorted({0} | set(t_set))
                cols = sorted({t - 1 for t in t_set} | {n - 1})
                sub = PolyMatrix.from_rows([[a[r][c] for c in cols] for r in rows])
                rhs = rhs + det_poly(sub)
        assert lhs == rhs


def _fractions(rng, nonzero=True):
    while True:
        f = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        if not nonzero or f:
            return f


def test_l_matrix_determinant_and_composition():
    rng = Random(3)
    n = 4
    trials = 0
    while trials < 6:
        a1, b1, a2, b2 = (_fractions(rng) for _ in range(4))
        if a2 == a1:
            continue
        l1 = l_matrix_rat(n, a1, b1)
        assert det_rat(l1) == (a1 * b1) ** (n * (n - 1) // 2)
        mid = l_matrix_rat(n, (a2 - a1) / (a1 * b1), a2 * b2 / (a2 - a1))
        assert rat_matmul(l1, mid) == l_matrix_rat(n, a2, b2)
        trials += 1


def test_matrix_requires_homogeneous_entries():
    from asmdpp.polynomial import OmegaPoly

    with pytest.raises(ValidationError):
        PolyMatrix.from_rows([[ONE, OmegaPoly.from_poly(ONE)]])
