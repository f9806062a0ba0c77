import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pgroupcoh.exactlin import (
    AbelianInvariants,
    IntMatrix,
    cokernel_invariants,
    elementary_divisors,
    elementary_divisors_rows,
    kernel_basis_mod,
    kernel_lattice,
    lattice_basis,
    rank_mod_p,
    rank_over_q,
    smith_normal_form,
    solve_integer,
    subquotient,
)


def matrices(max_dim=5, bound=6):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(st.lists(st.integers(-bound, bound), min_size=c, max_size=c),
                               min_size=r, max_size=r)))


def det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    return sum((-1) ** j * rows[0][j] * det([r[:j] + r[j + 1:] for r in rows[1:]]) for j in range(n))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_smith_identity(rows):
    M = IntMatrix.from_rows(rows)
    s = smith_normal_form(M)
    assert s.U @ M @ s.V == s.D
    assert abs(det(s.U.to_rows())) == 1
    assert abs(det(s.V.to_rows())) == 1
    diag = s.diagonal
    assert all(d > 0 for d in diag)
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
    assert s.U_inverse @ s.U == IntMatrix.identity(M.rows)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_elementary_divisors_agree_with_smith(rows):
    M = IntMatrix.from_rows(rows)
    diag, rank = elementary_divisors(M)
    s = smith_normal_form(M)
    assert sorted(diag) == sorted(s.diagonal)
    assert rank == s.rank
    sparse = {i: {j: v for j, v in enumerate(r) if v} for i, r in enumerate(rows)}
    diag2, rank2 = elementary_divisors_rows({i: r for i, r in sparse.items() if r})
    assert sorted(d for d in diag2 if d > 1) == sorted(d for d in diag if d > 1)
    assert rank2 == rank


@settings(max_examples=60, deadline=None)
@given(matrices(), st.lists(st.integers(-4, 4), min_size=5, max_size=5))
def test_solve_integer_roundtrip(rows, x):
    M = IntMatrix.from_rows(rows)
    b = M.apply(x[:M.cols])
    y = solve_integer(M, b)
    assert y is not None
    assert M.apply(y) == b


def test_solve_integer_no_solution():
    M = IntMatrix.from_rows([[2, 0], [0, 3]])
    assert solve_integer(M, [1, 0]) is None
    assert solve_integer(M, [4, 9]) == [2, 3]


@settings(max_examples=40, deadline=None)
@given(matrices(), st.sampled_from([0, 3, 9, 6]))
def test_kernel_lattice(rows, m):
    M = IntMatrix.from_rows(rows)
    K = kernel_lattice(M, m)
    for v in K:
        w = M.apply(v)
        assert all((x % m if m else x) == 0 for x in w)
    if m == 0:
        assert len(K) == M.cols - rank_over_q(M)


def test_kernel_mod_p_dimension():
    M = IntMatrix.from_rows([[1, 2, 0], [2, 4, 0]])
    K = kernel_basis_mod(M, 3)
    assert len(K) == 3 - rank_mod_p(M, 3) == 2
    assert all(all(x % 3 == 0 for x in M.apply(v)) for v in K)


def test_cokernel_invariants():
    M = IntMatrix.from_rows([[2, 0], [0, 3], [0, 0]])
    assert cokernel_invariants(M, 3) == AbelianInvariants(1, (6,))
    M = IntMatrix.from_rows([[3, 0], [0, 9]])
    assert str(cokernel_invariants(M, 2)) == "C3 + C9"


def test_subquotient_coordinates():
    L = [[1, 0], [0, 1]]
    S = [[2, 0], [0, 3]]
    q = subquotient(L, S, 2)
    assert q.invariants == AbelianInvariants(0, (6,))
    assert q.contains([5, 7])
    g = q.generators[0]
    c = q.coordinates([1, 1])[0]
    assert q.coordinates([c * x for x in g]) == [c]
    assert q.coordinates([2, 3]) == [0]


def test_lattice_basis_rank():
    B = lattice_basis([[2, 4], [1, 2], [0, 0]], 2)
    assert len(B) == 1


def test_rank_over_q_certified():
    M = IntMatrix.from_rows([[1, 1], [1, 1], [0, 5]])
    assert rank_over_q(M) == 2
    assert rank_over_q(M, upper_bound=2) == 2
    assert rank_mod_p(M, 5) == 1


def test_invariants_text_roundtrip():
    for text in ["0", "Z", "C3", "Z + Z + C3 + C9", "C3 + C3 + C27"]:
        assert str(AbelianInvariants.from_string(text)) == text
    with pytest.raises(ValueError):
        AbelianInvariants(0, (3, 2))
    assert AbelianInvariants(0, (3, 9)).order == 27
    assert AbelianInvariants(2, (3,)).dim_mod(3) == 3


def test_matrix_dump_parse():
    M = IntMatrix.from_rows([[0, -1, 2], [5, 0, 0]])
    assert IntMatrix.parse(M.dump()) == M
    assert M.transpose().transpose() == M
    assert M.mod(2).to_rows() == [[0, 1, 0], [1, 0, 0]]
