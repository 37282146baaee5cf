from hypothesis import given, strategies as st

from kleinmackey.f2 import BitMatrix, homology_reps, kernel_basis, quotient_dims, rank


def M(rows, cols):
    return BitMatrix.from_rows(rows, cols)


def test_rank_examples():
    assert BitMatrix.identity(3).rank() == 3
    assert BitMatrix.zeros(2, 5).rank() == 0
    assert M([[1, 1], [1, 1]], 2).rank() == 1


def test_kernel_examples():
    assert kernel_basis(BitMatrix.identity(2)) == []
    assert kernel_basis(M([[1, 1]], 2)) == [0b11]
    assert len(kernel_basis(BitMatrix.zeros(2, 3))) == 3


def test_quotient_dims_examples():
    assert quotient_dims([], 3) == 3
    assert quotient_dims([0b01, 0b10], 2) == 0
    assert quotient_dims([0b011], 3) == 2


def test_degenerate_shapes():
    assert BitMatrix.zeros(0, 4).rank() == 0
    assert BitMatrix.zeros(4, 0).rank() == 0
    assert len(BitMatrix.zeros(0, 4).kernel_basis()) == 4


def test_matmul_apply_transpose():
    a = M([[1, 1, 0], [0, 1, 1]], 3)
    b = M([[1, 0], [1, 1], [0, 1]], 2)
    assert (a @ b).to_lists() == [[0, 1], [1, 0]]
    assert a.apply(0b011) == 0b10  # (1,1,0) column vector kills row 0

    assert a.transpose().transpose() == a


def test_solve():
    a = M([[1, 1, 0], [0, 1, 1]], 3)
    x = a.solve(0b10)
    assert x is not None and a.apply(x) == 0b10
    inconsistent = M([[1, 1], [1, 1]], 2)
    assert inconsistent.solve(0b01) is None


def test_homology_reps_chain():
    # 0 -> F2^2 --[1 1]--> F2 -> 0 has homology (0, 1-dim) in the two spots
    d_out = M([[1, 1]], 2)
    d_in = BitMatrix.zeros(2, 0)
    reps, project = homology_reps(d_out, d_in)
    assert len(reps) == 1
    assert project(reps[0]) == 1


@st.composite
def bit_matrices(draw):
    rows = draw(st.integers(0, 7))
    cols = draw(st.integers(0, 7))
    data = [draw(st.integers(0, (1 << cols) - 1)) for _ in range(rows)]
    return BitMatrix(rows, cols, tuple(data))


@given(bit_matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


@given(bit_matrices())
def test_rank_nullity(m):
    assert m.cols == rank(m) + len(kernel_basis(m))


@given(bit_matrices())
def test_kernel_vectors_annihilate(m):
    for v in kernel_basis(m):
        assert m.apply(v) == 0
