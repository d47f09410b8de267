import random
from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from hopfkit.linalg import Matrix, kron, rank, kernel_basis, solve, inverse, rref
from hopfkit.scalar import FieldElement, ZERO, ONE, ZETA
from conftest import field_elements


@st.composite
def matrices(draw, max_rows=5, max_cols=5, sparse=True):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    entry = st.one_of(st.just(ZERO), field_elements()) if sparse else field_elements()
    return Matrix([[draw(entry) for _ in range(c)] for _ in range(r)])


@given(matrices())
def test_rank_nullity(m):
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.cols
    for v in ker:
        assert all(not x for x in m.apply(v))


@given(matrices(), matrices(), matrices(3, 3))
def test_kron_associative(a, b, c):
    assert kron(kron(a, b), c) == kron(a, kron(b, c))


@given(matrices(3, 3), matrices(3, 3), matrices(3, 3), matrices(3, 3))
def test_kron_mixed_product(a, b, c, d):
    if a.cols == c.rows and b.cols == d.rows:
        assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


def test_bareiss_matches_rational_oracle():
    rng = random.Random(3)
    for _ in range(200):
        rows = [[Fraction(rng.choice([0, 0, 1, -1, 2, rng.randint(-7, 7)]), rng.randint(1, 4))
                 for _ in range(6)] for _ in range(6)]
        m = Matrix([[FieldElement(x) for x in r] for r in rows])
        want = sympy.Matrix(rows).rank()
        assert rank(m) == want
        assert rank(m, method="gauss") == want


@given(matrices(4, 4, sparse=False))
def test_bareiss_matches_gauss(m):
    assert rank(m) == rank(m, method="gauss")


@given(matrices(4, 4, sparse=False))
def test_inverse_or_singular(m):
    if m.rows != m.cols:
        return
    if rank(m) == m.rows:
        assert m @ inverse(m) == Matrix.identity(m.rows)
    else:
        assert kernel_basis(m)


@given(matrices(4, 4), st.lists(field_elements(), min_size=4, max_size=4))
def test_solve_consistent_system(m, x):
    x = x[:m.cols]
    b = m.apply(x)
    y = solve(m, b)
    assert y is not None and m.apply(y) == b


def test_rref_pivots_on_known_matrix():
    m = [[ONE, 2 * ONE, ZERO], [2 * ONE, 4 * ONE, ZETA]]
    R, piv = rref(m)
    assert piv == [0, 2]
    assert R[0] == [ONE, 2 * ONE, ZERO]
