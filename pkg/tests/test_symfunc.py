import pytest

from qfock.laurent import ONE, V, Laurent
from qfock.partitions import EMPTY, Partition, multipartitions_of, partitions_of
from qfock.symfunc import (
    SymVec,
    cauchy_check,
    coproduct,
    eta_direct,
    eta_expansion,
    gram_phi_eta,
    lr_coefficient,
    lr_coefficient_pieri,
    lr_multi,
    multi_order_key,
    phi_direct,
    phi_expansion,
    psi_direct,
    psi_expansion,
    schur_product,
    skew_schur_expand,
    substitute,
    substitute_powersum,
    sym_multiply,
)

from . import oracles

P = Partition
E = EMPTY
VI = Laurent.monomial(-1)


def test_lr_unit():
    assert lr_coefficient(P([3, 1]), E, P([3, 1])) == 1


def test_lr_pieri_example():
    assert lr_coefficient(P([2, 1]), P([1]), P([3, 1])) == 1
    assert schur_product(P([2, 1]), P([1])) == {P([3, 1]): 1, P([2, 2]): 1, P([2, 1, 1]): 1}


def test_lr_two_one_squared():
    assert lr_coefficient(P([2, 1]), P([2, 1]), P([3, 2, 1])) == 2
    assert oracles.lr_bruteforce((3, 2, 1), (2, 1), (2, 1)) == 2


@pytest.mark.parametrize("m", range(0, 6))
def test_lr_against_cell_fillings(m):
    for lam in partitions_of(m):
        for k in range(m + 1):
            for mu in partitions_of(k):
                for nu in partitions_of(m - k):
                    assert lr_coefficient(mu, nu, lam) == oracles.lr_bruteforce(tuple(lam), tuple(mu), tuple(nu))


@pytest.mark.parametrize("m", range(0, 8))
def test_lr_symmetries(m):
    for lam in partitions_of(m):
        for k in range(m + 1):
            for mu in partitions_of(k):
                for nu in partitions_of(m - k):
                    c = lr_coefficient(mu, nu, lam)
                    assert c == lr_coefficient(nu, mu, lam)
                    assert c == lr_coefficient(mu.conjugate(), nu.conjugate(), lam.conjugate())


def test_lr_multi_matches_iterated_product():
    f = [P([1]), P([1]), P([1])]
    assert lr_multi(f, P([2, 1])) == 2
    assert lr_multi([P([2]), P([1, 1])], P([3, 1])) == 1


def test_skew_examples():
    assert skew_schur_expand(P([3, 1]), E) == {P([3, 1]): 1}
    assert skew_schur_expand(P([2, 1]), P([1])) == {P([2]): 1, P([1, 1]): 1}
    assert skew_schur_expand(P([1]), P([1])) == {E: 1}
    assert skew_schur_expand(P([1]), P([2])) == {}


def test_coproduct_recovers_lr():
    for (a, b), c in coproduct(P([3, 2, 1]), 2):
        assert c == lr_coefficient(a, b, P([3, 2, 1]))


def test_pieri_oracle_small():
    assert lr_coefficient_pieri(P([2, 1]), P([2, 1]), P([3, 2, 1])) == 2


TERMS = [
    [(1, 0, 1), (-1, 1, 0)],
    [(1, -1, 0), (1, 0, 1)],
    [(1, 0, 0), (1, 1, 1), (-1, 2, 2)],
]


@pytest.mark.parametrize("terms", TERMS)
@pytest.mark.parametrize("m", range(0, 5))
def test_substitution_two_routes(terms, m):
    n = 1 + max(t[2] for t in terms)
    for lam in partitions_of(m):
        assert substitute(lam, terms, n) == substitute_powersum(lam, terms, n)


def test_eta_trivial():
    assert eta_expansion((E, E, E), 3) == SymVec({(E, E, E): 1})


def test_eta_n2_one_box():
    assert eta_expansion((E, P([1])), 2) == SymVec({(E, P([1])): ONE, (P([1]), E): -V})


def test_eta_example_block():
    mu = (E, P([1]), P([2]))
    eta = eta_expansion(mu, 3)
    assert len(eta) == 8
    assert eta.coefficient(mu) == ONE
    assert eta.coefficient((P([1]), E, P([2]))) == -V
    assert eta == eta_direct(mu, 3) == eta_direct(mu, 3, engine=substitute_powersum)


@pytest.mark.parametrize("n,m", [(2, 0), (2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3)])
def test_lr_route_matches_direct_route(n, m):
    for mu in multipartitions_of(m, n):
        assert eta_expansion(mu, n) == eta_direct(mu, n)
        assert psi_expansion(mu, n) == psi_direct(mu, n)
        assert phi_expansion(mu, n) == phi_direct(mu, n)


def test_psi_n2_one_box():
    assert psi_expansion((E, P([1])), 2) == SymVec({(E, P([1])): ONE, (P([1]), E): VI})


def test_phi_n2_one_box():
    assert phi_expansion((P([1]), E), 2) == SymVec({(P([1]), E): ONE, (E, P([1])): V})


def test_trivial_psi_phi():
    assert psi_expansion((E, E), 2) == SymVec({(E, E): 1})
    assert phi_expansion((E, E), 2) == SymVec({(E, E): 1})


@pytest.mark.parametrize("n,m", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3)])
def test_lattice_congruences_and_triangularity(n, m):
    for mu in multipartitions_of(m, n):
        eta, psi, phi = eta_expansion(mu, n), psi_expansion(mu, n), phi_expansion(mu, n)
        for vec in (eta, psi, phi):
            assert vec.coefficient(mu) == ONE
        for lam, c in eta.items():
            if lam != mu:
                assert c.in_positive_part()
                assert multi_order_key(lam) < multi_order_key(mu)
        for lam, c in psi.items():
            if lam != mu:
                assert c.in_negative_part()
        for lam in phi:
            if lam != mu:
                assert multi_order_key(lam) > multi_order_key(mu)


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 2)])
def test_conjugation_symmetry_of_eta(n, m):
    from qfock.symfunc import conjugate_multi
    keys = multipartitions_of(m, n)
    for lam in keys:
        for mu in keys:
            lhs = eta_expansion(mu, n).coefficient(lam)
            rhs = eta_expansion(conjugate_multi(lam), n).coefficient(conjugate_multi(mu))
            assert lhs == rhs


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("d", range(0, 5))
def test_duality_gram_identity(n, d):
    keys, M = gram_phi_eta(n, d)
    for a in range(len(keys)):
        for b in range(len(keys)):
            assert M[a][b] == (ONE if a == b else Laurent(0))


def test_cauchy_checks():
    assert cauchy_check(1, 4)
    assert cauchy_check(2, 4)
    assert cauchy_check(3, 3)


def test_sym_multiply_componentwise():
    x = SymVec({(P([1]), E): 1})
    y = SymVec({(P([1]), P([1])): V})
    assert sym_multiply(x, y) == SymVec({(P([2]), P([1])): V, (P([1, 1]), P([1])): V})


def test_symvec_json_round_trip():
    x = eta_expansion((E, P([1]), P([2])), 3)
    assert SymVec.from_json(x.to_json()) == x
