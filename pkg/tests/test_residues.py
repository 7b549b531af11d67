from fractions import Fraction
from itertools import combinations, permutations

import pytest
import sympy
from hypothesis import given

from chios import errors
from chios.algebra import boundary, nbc_expand, nbc_expand_oracle, unidependent_axiom_failures
from chios.catalog import B3_WORDS
from chios.matroid import (
    contract,
    delete,
    independent_sets,
    is_independent,
    matroid_from_circuits,
    uniform_matroid,
)
from chios.realization import VectorConfig, chi_os, chi_ot, circuits_from_vectors
from chios.residues import (
    DiagonalBasisCandidate,
    apply_perm,
    chi_contract,
    chi_delete,
    dual_pairing_matrix,
    exact_sequence_check,
    expand_in_diagonal_basis,
    flag,
    is_diagonal_basis,
    iterated_residue,
    iterated_residue_closed,
    nbc_candidate,
    perm_from_cycles,
    residue_step,
    residue_sum_check,
)

from strategies import affine_configs, configs

F = Fraction
B3 = DiagonalBasisCandidate(B3_WORDS)


def identity(k):
    return [[int(i == j) for j in range(k)] for i in range(k)]


def test_chi_delete_is_restriction(chis):
    for chi in chis.values():
        d = chi_delete(chi, 6)
        for X in combinations(range(1, 6), 3):
            assert d(X) == chi(X)


def test_chi_contract_os(chis):
    c = chi_contract(chis["os"], 6)
    assert c((2, 4)) == chis["os"]((2, 4, 6)) == 1


def test_chi_contract_ot_matches_determinants(fig, chis):
    V, M = fig
    c = chi_contract(chis["ot"], 6)
    base = sympy.Matrix([list(V.vector(i)) for i in (1, 2, 4)]).det()
    for X in combinations(range(1, 6), 2):
        rows = [list(V.vector(i)) for i in X] + [list(V.vector(6))]
        assert c(X) == F(str(sympy.Matrix(rows).det() / base))
        assert c(X[::-1]) == -c(X)


def test_contract_loop_refused():
    M = matroid_from_circuits(2, [(1,)])
    with pytest.raises(errors.LoopContraction):
        chi_contract(chi_os(M), 1)


def test_contracted_maps_satisfy_the_axiom(fig, chis):
    _, M = fig
    for chi in chis.values():
        for x in M.ground:
            Mc, _ = contract(M, x)
            assert unidependent_axiom_failures(Mc, chi_contract(chi, x), max_size=4) == []
            Md, _ = delete(M, x)
            assert unidependent_axiom_failures(Md, chi_delete(chi, x), max_size=4) == []


def test_residue_step_cases(fig, chis):
    V, M = fig
    chi = chis["ot"]
    assert residue_step(M, chi, 2, (1, 2, 4)) == (1, (1, 4))
    assert residue_step(M, chi, 2, (1, 3, 4)) == (0, None)
    # after contracting 6, the points 2 and 5 are parallel
    Mc, labels = contract(M, 6)
    cc = chi_contract(chi, 6)
    k, img = residue_step(Mc, cc, 2, (1, 5))
    assert img == (1,)
    det = lambda *w: sympy.Matrix([list(V.vector(i)) for i in w]).det()
    assert k == F(str(det(1, 2, 6) / det(1, 5, 6)))


def test_residue_step_rejects_loops_and_dependents(fig, chis):
    _, M = fig
    with pytest.raises(errors.DependentInput):
        residue_step(M, chis["os"], 1, (1, 2, 3))
    L = matroid_from_circuits(2, [(1,)])
    with pytest.raises(errors.LoopContraction):
        residue_step(L, chi_os(L), 1, (2,))


def test_flags(fig):
    _, M = fig
    assert flag(M, (1, 2, 4)).chain == ((4,), (2, 4), (1, 2, 3, 4, 5, 6))
    assert flag(M, (5,)).chain == ((5,),)
    with pytest.raises(errors.DependentInput):
        flag(M, (1, 2, 3))


def test_residue_of_a_set_on_itself(fig, chis):
    _, M = fig
    for chi in chis.values():
        for k in (1, 2, 3):
            for I in independent_sets(M, k):
                for w in permutations(I):
                    assert iterated_residue(M, chi, w, I) == 1


def test_residue_reorderings_agree(fig, chis):
    _, M = fig
    assert iterated_residue(M, chis["os"], (1, 2, 5), (2, 3, 5)) == -1
    assert iterated_residue(M, chis["os"], (1, 5, 2), (2, 3, 5)) == -1
    for chi in chis.values():
        for k in (1, 2, 3):
            for I in independent_sets(M, k):
                for J in independent_sets(M, k):
                    vals = {iterated_residue(M, chi, w, J) for w in permutations(I)} - {0}
                    assert len(vals) <= 1


def test_rank_two_asymmetry():
    M = uniform_matroid(2, 3)
    chi = chi_os(M)
    assert iterated_residue(M, chi, (1, 3), (1, 2)) == 0
    assert iterated_residue(M, chi, (3, 1), (1, 2)) != 0


def test_closed_form_matches_steps(fig, chis):
    _, M = fig
    for chi in chis.values():
        for k in (1, 2, 3):
            for I in independent_sets(M, k):
                for w in permutations(I):
                    for J in independent_sets(M, k):
                        assert iterated_residue(M, chi, w, J) == iterated_residue_closed(M, chi, w, J)


@given(configs(max_n=6))
def test_closed_form_matches_steps_random(V):
    M = circuits_from_vectors(V)
    if M.loops:
        return
    chi = chi_ot(V, M)
    for k in (1, 2):
        for I in independent_sets(M, k):
            for w in permutations(I):
                for J in independent_sets(M, k):
                    assert iterated_residue(M, chi, w, J) == iterated_residue_closed(M, chi, w, J)


def test_residue_argument_checks(fig, chis):
    _, M = fig
    with pytest.raises(errors.SizeMismatch):
        iterated_residue(M, chis["os"], (1, 2), (1, 2, 4))
    with pytest.raises(errors.DependentInput):
        iterated_residue(M, chis["os"], (1, 2, 4), (1, 2, 3))


def test_permutation_readings():
    assert perm_from_cycles("(132)", 3) == (3, 1, 2)
    assert perm_from_cycles("(1,3,2)", 3) == (3, 1, 2)
    assert perm_from_cycles("id", 3) == (1, 2, 3)
    assert apply_perm((1, 2, 5), (1, 3, 2)) == (1, 5, 2)
    with pytest.raises(ValueError):
        perm_from_cycles("(14)", 3)


def test_diagonal_bases(fig, chis):
    _, M = fig
    nbc3 = nbc_candidate(M, 3)
    for chi in chis.values():
        for cand in (nbc3, B3):
            assert is_diagonal_basis(M, chi, cand)
            assert dual_pairing_matrix(M, chi, cand) == identity(6)


def test_cycle_reading_of_b3_is_not_diagonal(fig, chis):
    _, M = fig
    words = list(B3_WORDS)
    words[1] = apply_perm((1, 2, 5), perm_from_cycles("(132)", 3))
    cand = DiagonalBasisCandidate(tuple(words))
    assert not is_diagonal_basis(M, chis["os"], cand)
    with pytest.raises(errors.NotDiagonal):
        dual_pairing_matrix(M, chis["os"], cand)


def test_small_candidates(fig, chis):
    _, M = fig
    single = DiagonalBasisCandidate(((1, 2, 4),))
    assert not is_diagonal_basis(M, chis["os"], single)  # too few entries
    U = uniform_matroid(1, 1)
    assert dual_pairing_matrix(U, chi_os(U), DiagonalBasisCandidate(((1,),))) == [[1]]
    with pytest.raises(errors.SizeMismatch):
        DiagonalBasisCandidate(((1, 2), (1, 2, 4)))


def test_expansions_in_b3(fig, chis):
    _, M = fig
    assert expand_in_diagonal_basis(M, chis["cordovil"], B3, (1, 2, 6)) == {(1, 2, 5): 1, (1, 5, 6): -1}
    assert expand_in_diagonal_basis(M, chis["ot"], B3, (1, 2, 6)) == {(1, 2, 5): 3, (1, 5, 6): -2}
    assert expand_in_diagonal_basis(M, chis["ot"], B3, (2, 3, 5)) == {(1, 2, 5): -1, (1, 3, 5): 2}
    with pytest.raises(errors.DependentInput):
        expand_in_diagonal_basis(M, chis["ot"], B3, (1, 2, 3))


def test_nbc_expansion_three_ways(fig, chis):
    _, M = fig
    nbc3 = nbc_candidate(M, 3)
    for chi in chis.values():
        for J in independent_sets(M, 3):
            want = nbc_expand(M, chi, J)
            assert expand_in_diagonal_basis(M, chi, nbc3, J) == want
            assert nbc_expand_oracle(M, chi, None, J) == want


def test_exact_sequence(fig, chis):
    _, M = fig
    for chi in chis.values():
        r = exact_sequence_check(M, chi, 6)
        assert r.ok, r.failures
        assert r.rows[3] == (3, 6, 4, 2) and r.rows[0] == (0, 1, 1, 0)
        assert sum(a for _, a, _, _ in r.rows) == sum(b + c for _, _, b, c in r.rows)


def test_exact_sequence_needs_simple():
    M = circuits_from_vectors(VectorConfig(2, [(1, 0), (2, 0), (0, 1)]))
    with pytest.raises(errors.NotSimple):
        exact_sequence_check(M, chi_os(M), 3)


def test_residue_sums(fig, chis):
    V, M = fig
    assert residue_sum_check(V, nbc_candidate(M, 3), (1, 5, 6)) == 1
    assert residue_sum_check(V, B3, (2, 3, 5)) == 1
    assert residue_sum_check(V, B3, (1, 2, 4)) == 1
    for J in independent_sets(M, 3):
        for cand in (nbc_candidate(M, 3), B3):
            assert residue_sum_check(V, cand, J) == 1
    with pytest.raises(errors.NotAffineNormalized):
        residue_sum_check(VectorConfig(3, [(1, 0, 2)]), B3, (1,))


def test_alternating_sums_vanish_on_affine_dependents(fig, chis):
    V, M = fig
    chi = chis["ot"]
    for k in (2, 3, 4):
        for U in combinations(M.ground, k):
            if not is_independent(M, U):
                coeff_sum = sum(boundary(chi, U).terms.values())
                assert coeff_sum == 0


@given(affine_configs(min_n=3, max_n=6))
def test_residue_sums_random_affine(V):
    M = circuits_from_vectors(V)
    if M.loops or M.rank < 2:
        return
    chi = chi_ot(V, M)
    ell = M.rank
    cand = nbc_candidate(M, ell)
    for J in independent_sets(M, ell):
        assert residue_sum_check(V, cand, J, M, chi) == 1
