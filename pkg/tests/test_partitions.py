import pytest

from qfock.partitions import (
    EMPTY,
    Partition,
    abacus,
    addable_removable_nodes,
    beta_numbers,
    core_coords,
    core_from_coords,
    crystal_e,
    crystal_epsilon,
    crystal_f,
    from_core_quotient,
    horizontal_ribbon_strips,
    is_core,
    multipartitions_of,
    n_core,
    n_quotient,
    n_sign,
    n_sign_by_permutation,
    n_weight,
    parse_partition,
    partitions_of,
    removable_ribbons,
)

from . import oracles

P = Partition
EXAMPLE_LAM = P([12, 4, 4, 3, 1, 1])
RHO_33 = P([6, 4, 2, 2, 1, 1])


def test_parse_forms():
    assert parse_partition("[12,4^2,3,1^2]") == EXAMPLE_LAM
    assert parse_partition("(3, 1)") == P([3, 1])
    assert parse_partition("[]") == EMPTY
    assert str(EXAMPLE_LAM) == "[12,4^2,3,1^2]"


@pytest.mark.parametrize("bad", ["[1,x]", "[1,2", "[-1]"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_partition(bad)


def test_beta_numbers_of_six_four_three():
    assert tuple(beta_numbers(P([6, 4, 3, 1, 1, 1]), 9)) == (6, 3, 1, -2, -3, -4, -6, -7, -8)


def test_beta_numbers_trivial():
    assert tuple(beta_numbers(EMPTY, 3)) == (0, -1, -2)
    assert tuple(beta_numbers(P([1]), 2)) == (1, -1)


def test_core_of_six_four_three():
    assert n_core(P([6, 4, 3, 1, 1, 1]), 3) == P([3, 1])


def test_core_idempotent_on_core():
    assert n_core(P([3, 1]), 3) == P([3, 1])


def test_core_of_four_by_dominoes():
    assert n_core(P([4]), 2) == EMPTY


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("m", range(0, 9))
def test_core_matches_cell_stripping(n, m):
    for lam in partitions_of(m):
        assert tuple(n_core(lam, n)) == oracles.core_by_stripping(lam, n)


def test_core_coords_examples():
    assert core_coords(P([3, 1]), 3).a == (0, -1, 1)
    assert core_coords(EMPTY, 5).a == (0,) * 5
    assert core_coords(P([12, 9, 6, 6, 4, 4, 2, 2, 2, 1, 1, 1]), 4).a == (-3, -1, 1, 3)


def test_core_coords_round_trip():
    for m in range(12):
        for lam in partitions_of(m):
            if is_core(lam, 3):
                assert core_from_coords(core_coords(lam, 3)) == lam


def test_quotient_of_twelve_four_four():
    assert n_quotient(EXAMPLE_LAM, 3, convention=RHO_33) == (EMPTY, P([1]), P([2]))


def test_quotient_of_rho_plus_row():
    plus = P([RHO_33[0] + 3] + list(RHO_33[1:]))
    assert n_quotient(plus, 3, convention=RHO_33) == (EMPTY, EMPTY, P([1]))


def test_quotient_of_core_is_empty():
    assert n_quotient(P([3, 1]), 3) == (EMPTY,) * 3


def test_sign_examples():
    assert n_sign(EXAMPLE_LAM, 3) == -1
    assert n_sign(P([3, 1]), 3) == 1
    assert n_sign(P([1, 1]), 2) == -1


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("m", range(0, 9))
def test_sign_three_routes(n, m):
    for lam in partitions_of(m):
        s = n_sign(lam, n)
        assert s == n_sign(lam, n, order="bottom") == n_sign_by_permutation(lam, n)
        assert s == oracles.sign_by_stripping(lam, n)


def test_nodes_of_empty():
    assert addable_removable_nodes(EMPTY, 3, 0) == ([(1, 1)], [])


def test_nodes_of_one_box_n2():
    add, rem = addable_removable_nodes(P([1]), 2, 1)
    assert sorted(add) == [(1, 2), (2, 1)] and rem == []


def test_nodes_of_three_one_residue_zero():
    # worked out cell by cell: contents 0 at (2,2) and 3 at (1,4); (1,3) has residue 2
    assert addable_removable_nodes(P([3, 1]), 3, 0) == ([(2, 2), (1, 4)], [])


@pytest.mark.parametrize("n", [2, 3])
def test_nodes_match_border_scan(n):
    for m in range(7):
        for lam in partitions_of(m):
            for i in range(n):
                assert addable_removable_nodes(lam, n, i) == oracles.addable_removable(tuple(lam), n, i)


def test_horizontal_strips_examples():
    assert sorted(horizontal_ribbon_strips(EMPTY, 2, 1)) == sorted([(P([2]), 0), (P([1, 1]), 1)])
    assert horizontal_ribbon_strips(EMPTY, 2, 0) == [(EMPTY, 0)]
    assert sorted(horizontal_ribbon_strips(EMPTY, 3, 1)) == sorted(
        [(P([3]), 0), (P([2, 1]), 1), (P([1, 1, 1]), 2)])


def test_removable_ribbons_match_oracle():
    for m in range(9):
        for lam in partitions_of(m):
            ours = sorted(tuple(mu) for mu, _ in removable_ribbons(lam, 3))
            ref = sorted(mu for mu, _ in oracles.rim_hooks(tuple(lam), 3))
            assert ours == ref


def test_crystal_examples():
    assert crystal_e(EMPTY, 3, 0) is None
    assert crystal_e(P([1]), 2, 0) == EMPTY
    assert crystal_e(P([2]), 2, 1) == P([1])


def test_crystal_inverse_on_string():
    for m in range(8):
        for lam in partitions_of(m):
            for i in range(3):
                k = crystal_epsilon(lam, 3, i)
                mu = lam
                for _ in range(k):
                    mu = crystal_e(mu, 3, i)
                assert crystal_e(mu, 3, i) is None
                for _ in range(k):
                    mu = crystal_f(mu, 3, i)
                assert mu == lam


def test_enumeration_counts():
    assert [len(partitions_of(m)) for m in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert len(multipartitions_of(2, 2)) == 5
    assert len(multipartitions_of(3, 3)) == 22


def test_abacus_runners():
    ab = abacus(P([3, 1]), 3)
    assert sum(len(ab.runner_partition(c)) for c in range(3)) == 0


def test_core_quotient_round_trip_against_convention():
    for w in range(4):
        for q in multipartitions_of(w, 3):
            lam = from_core_quotient(RHO_33, q, 3, convention=RHO_33)
            assert n_core(lam, 3) == RHO_33 and n_weight(lam, 3) == w
            assert n_quotient(lam, 3, convention=RHO_33) == q
