import random
from fractions import Fraction

from duha.exactfield import RATIONALS
from duha.linalg import (
    Matrix,
    in_image,
    kernel_basis,
    homology_dim,
    mat_mul,
    mat_vec,
    rank,
    stacked_rank_jump,
)


def mk(rows, ncols=None):
    q = RATIONALS.from_rational
    return Matrix.from_rows(RATIONALS, [[q(v) for v in row] for row in rows], ncols)


def vec(values):
    return [RATIONALS.from_rational(v) for v in values]


def test_rank_frozen():
    assert rank(mk([[1, 2], [2, 4]])) == 1
    assert rank(mk([[1, 0], [0, 1]])) == 2
    assert rank(mk([[Fraction(1, 2), 1], [1, 2], [0, 0]])) == 1
    assert rank(Matrix(RATIONALS, 0, 5)) == 0
    assert rank(Matrix(RATIONALS, 5, 0)) == 0


def test_kernel_frozen():
    ker = kernel_basis(mk([[1, 2, 3]]))
    assert [[c.as_rational() for c in v] for v in ker] == [[-2, 1, 0], [-3, 0, 1]]
    assert kernel_basis(mk([[1, 0], [0, 1]])) == []
    ker = kernel_basis(Matrix(RATIONALS, 0, 2))
    assert [[c.as_rational() for c in v] for v in ker] == [[1, 0], [0, 1]]


def test_kernel_vectors_are_killed():
    rng = random.Random(5)
    for _ in range(40):
        nrows, ncols = rng.randint(0, 5), rng.randint(0, 5)
        m = mk(
            [[Fraction(rng.randint(-3, 3)) for _ in range(ncols)] for _ in range(nrows)],
            ncols,
        )
        ker = kernel_basis(m)
        assert len(ker) == m.ncols - rank(m)
        for v in ker:
            assert all(x.is_zero() for x in mat_vec(m, v))


def test_in_image():
    m = mk([[1, 0], [0, 2], [1, 2]])
    x = in_image(m, vec([3, 4, 7]))
    assert [c.as_rational() for c in x] == [3, 2]
    assert in_image(m, vec([1, 0, 0])) is None
    # zero-column matrix spans only 0
    empty = Matrix(RATIONALS, 2, 0)
    assert in_image(empty, vec([0, 0])) == []
    assert in_image(empty, vec([1, 0])) is None


def test_mat_mul_and_associativity_random():
    rng = random.Random(17)
    for _ in range(25):
        n1, n2, n3, n4 = (rng.randint(0, 4) for _ in range(4))
        a = mk([[Fraction(rng.randint(-2, 2)) for _ in range(n2)] for _ in range(n1)], n2)
        b = mk([[Fraction(rng.randint(-2, 2)) for _ in range(n3)] for _ in range(n2)], n3)
        c = mk([[Fraction(rng.randint(-2, 2)) for _ in range(n4)] for _ in range(n3)], n4)
        assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


def test_rank_additivity_random():
    # rank(m) + dim ker(m) = ncols on random matrices
    rng = random.Random(23)
    for _ in range(30):
        nrows, ncols = rng.randint(1, 5), rng.randint(1, 5)
        m = mk(
            [
                [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(ncols)]
                for _ in range(nrows)
            ],
            ncols,
        )
        assert rank(m) + len(kernel_basis(m)) == ncols


def test_homology_dim():
    # 0 -> K^2 --[1 0; 0 0]--> K^2: homology at middle = ker(d_out) - rank(d_in)
    d_out = mk([[1, 0], [0, 0]])
    d_in = Matrix(RATIONALS, 2, 0)
    assert homology_dim(d_out, d_in) == 1


def test_stacked_rank_jump():
    m = mk([[1], [0]], 1)
    assert stacked_rank_jump(m, [vec([0, 1])]) == 1
    assert stacked_rank_jump(m, [vec([2, 0])]) == 0
    assert stacked_rank_jump(m, [vec([0, 1]), vec([0, 2])]) == 1
    assert stacked_rank_jump(m, []) == 0
