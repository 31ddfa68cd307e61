import random
from fractions import Fraction

from hypothesis import given, strategies as st

from nilcomm import linalg


def dense_rank_reference(rows, ncols):
    """Textbook dense Gaussian elimination over Fraction."""
    mat = [[Fraction(r.get(j, 0)) for j in range(ncols)] for r in rows]
    rank = 0
    row_at = 0
    for col in range(ncols):
        sel = next((r for r in range(row_at, len(mat)) if mat[r][col]), None)
        if sel is None:
            continue
        mat[row_at], mat[sel] = mat[sel], mat[row_at]
        for r in range(row_at + 1, len(mat)):
            if mat[r][col]:
                fac = mat[r][col] / mat[row_at][col]
                mat[r] = [x - fac * y for x, y in zip(mat[r], mat[row_at])]
        row_at += 1
        rank += 1
    return rank


@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_rank_matches_dense_reference(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 10), rng.randint(1, 10)
    rows = []
    for _ in range(m):
        row = {j: rng.choice([-2, -1, 1, 2]) for j in range(n) if rng.random() < 0.4}
        rows.append(row)
    assert linalg.rank(rows) == dense_rank_reference(rows, n)


def test_rows_with_explicit_zero_coefficients():
    rows = [{0: 0, 1: 1}, {0: 0, 1: 0}, {1: 1, 2: 0}]
    assert linalg.rank(rows) == 1


def test_nullspace_vectors_are_in_kernel():
    rng = random.Random(7)
    for _ in range(25):
        m, n = rng.randint(1, 8), rng.randint(1, 8)
        rows = [
            {j: rng.randint(-3, 3) for j in range(n) if rng.random() < 0.5}
            for _ in range(m)
        ]
        basis = linalg.nullspace(rows, n)
        assert len(basis) == n - linalg.rank(rows)
        for vec in basis:
            for row in rows:
                assert sum(Fraction(c) * vec.get(j, 0) for j, c in row.items()) == 0


def test_scale_to_integers():
    vec = {0: Fraction(1, 2), 3: Fraction(-3, 4)}
    assert linalg.scale_to_integers(vec) == {0: 2, 3: -3}


def test_matrix_helpers():
    a = ((0, 1), (0, 0))
    b = ((0, 0), (1, 0))
    assert linalg.commutator(a, b) == ((1, 0), (0, -1))
    assert linalg.mat_rank(a) == 1
    assert linalg.transpose(a) == ((0, 0), (1, 0))
    assert linalg.trace(linalg.identity(3)) == 3
    assert linalg.is_zero_matrix(linalg.mat_sub(a, a))
