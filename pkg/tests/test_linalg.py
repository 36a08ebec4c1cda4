import random
from fractions import Fraction

from hypothesis import given, strategies as st

from brauercat.linalg import echelon, left_nullspace, mat_vec, nullspace, rank, rref, same_row_space, transpose

A = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]


def naive_rank(rows):
    """Textbook Gaussian elimination over Fractions, used as an oracle."""
    m = [[Fraction(x) for x in row] for row in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=0, max_size=6))


def test_rank_of_example():
    assert rank(A) == 2


def test_rref_of_example():
    dense, pivots = rref(A, 3)
    assert dense == [[1, 0, 1], [0, 1, 1]]
    assert pivots == [0, 1]


def test_nullspace_of_example():
    assert nullspace(A, 3) == [[-1, -1, 1]]


def test_sparse_rows_accepted():
    assert rank([{0: 1, 5: 2}, {5: 4, 0: 2}]) == 1


def test_fractional_entries():
    assert rank([[Fraction(1, 2), Fraction(1, 3)], [3, 2]]) == 1


@given(matrices)
def test_rank_matches_textbook(rows):
    assert rank(rows) == naive_rank(rows)


@given(matrices)
def test_rank_nullity(rows):
    if not rows:
        return
    n = len(rows[0])
    null = nullspace(rows, n)
    assert rank(rows) + len(null) == n
    for v in null:
        assert all(x == 0 for x in mat_vec(rows, v))


@given(matrices, st.randoms(use_true_random=False))
def test_row_order_does_not_change_row_space(rows, rnd):
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    assert echelon(rows).rref() == echelon(shuffled).rref()


@given(matrices)
def test_left_nullspace(rows):
    if not rows:
        return
    n = len(rows[0])
    for v in left_nullspace(rows, n):
        combo = [sum(Fraction(c) * row[k] for c, row in zip(v, rows)) for k in range(n)]
        assert all(x == 0 for x in combo)


def test_containment():
    e = echelon(A)
    assert e.contains([3, 2, 5])
    assert not e.contains([0, 0, 1])
    assert not e.add([2, 4, 6])
    assert e.rank == 2


def test_same_row_space():
    assert same_row_space(A, [[1, 0, 1], [0, 1, 1]])
    assert not same_row_space(A, [[1, 0, 0]])


def test_transpose():
    assert transpose([[1, 2], [3, 4]], 2) == [[1, 3], [2, 4]]


def test_large_integers_stay_exact():
    rng = random.Random(5)
    rows = [[rng.randint(-10 ** 12, 10 ** 12) for _ in range(8)] for _ in range(8)]
    rows.append([a + b for a, b in zip(rows[0], rows[1])])
    assert rank(rows) == naive_rank(rows)
