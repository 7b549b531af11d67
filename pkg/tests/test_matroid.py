from itertools import combinations

import pytest
import sympy
from hypothesis import given

from chios import errors
from chios.matroid import (
    active_elements,
    broken_circuits,
    closure,
    contract,
    delete,
    flag_chain,
    format_circuits,
    free_matroid,
    inactive_unidependents,
    is_flat,
    is_independent,
    is_nbc,
    matroid_from_circuits,
    minimal_broken_circuit_circuits,
    nbc_sets,
    parse_circuits,
    rank,
    uniform_matroid,
    unique_circuit,
)
from chios.realization import circuits_from_vectors

from strategies import configs, orders

PI = (2, 3, 4, 5, 6, 1)


def sympy_rank(V, X):
    if not X:
        return 0
    return sympy.Matrix([list(V.vector(i)) for i in X]).rank()


def sets(*words):
    return [tuple(int(c) for c in w) for w in words]


def test_figure1_circuits(fig):
    _, M = fig
    assert set(M.circuits) == set(sets("123", "145", "256", "346", "1246", "1356", "2345"))


def test_rank_matches_sympy_on_every_subset(fig):
    V, M = fig
    for k in range(7):
        for X in combinations(range(1, 7), k):
            assert rank(M, X) == sympy_rank(V, X)


@given(configs())
def test_rank_matches_sympy_random(V):
    M = circuits_from_vectors(V)
    for k in range(V.n + 1):
        for X in combinations(range(1, V.n + 1), k):
            assert rank(M, X) == sympy_rank(V, X)


def test_closure_and_flats(fig):
    _, M = fig
    assert closure(M, (1, 2)) == (1, 2, 3)
    assert is_flat(M, (2, 4))
    assert not is_flat(M, (1, 2))
    assert closure(M, (1, 2, 4)) == tuple(range(1, 7))


def test_flag_chain_reads_from_the_end(fig):
    _, M = fig
    assert flag_chain(M, (1, 2, 4)) == ((4,), (2, 4), (1, 2, 3, 4, 5, 6))
    assert flag_chain(M, (3,)) == ((3,),)


def test_nbc_lists_natural_order(fig):
    _, M = fig
    assert nbc_sets(M, 2) == sets("12", "13", "14", "15", "16", "24", "25", "26", "34", "35", "36")
    assert nbc_sets(M, 3) == sets("124", "125", "126", "134", "135", "136")
    assert nbc_sets(M, 0) == [()]
    assert nbc_sets(M, 4) == []


def test_broken_circuits_natural(fig):
    _, M = fig
    assert broken_circuits(M) == sets("23", "45", "46", "56", "246", "345", "356")
    assert is_nbc(M, (1, 2, 4)) and not is_nbc(M, (2, 4, 6))


def test_broken_circuits_pi(fig):
    _, M = fig
    assert set(broken_circuits(M, PI)) == set(sets("13", "15", "56", "46", "146", "156", "345"))


def test_inactive_unidependents(fig):
    _, M = fig
    assert inactive_unidependents(M, 3) == sets("123", "145", "256", "346")
    assert inactive_unidependents(M, 4) == sets(
        "1234", "1235", "1236", "1245", "1246", "1256", "1345", "1346", "1356", "1456")


def test_active_elements(fig):
    _, M = fig
    # cl(23) - 23 = {1}; circuit 123 has minimum 1
    assert active_elements(M, (2, 3)) == [1]
    assert active_elements(M, (1, 2)) == []


def test_minimal_broken_circuits(fig):
    _, M = fig
    assert minimal_broken_circuit_circuits(M) == sets("123", "145", "256", "346")
    assert minimal_broken_circuit_circuits(M, PI) == sets("123", "145", "256", "346", "2345")


def test_four_points_on_a_line_tie_break():
    # U_{2,4}: 134 and 234 both lose their minimum down to 34
    M = uniform_matroid(2, 4)
    cs = minimal_broken_circuit_circuits(M)
    assert cs == sets("123", "124", "134")
    brokens = [tuple(e for e in C if e != min(C)) for C in cs]
    assert len(set(brokens)) == len(brokens)
    for a, b in combinations(brokens, 2):
        assert not set(a) <= set(b) and not set(b) <= set(a)


def test_unique_circuit(fig):
    _, M = fig
    assert unique_circuit(M, (1, 2, 3, 4)) == (1, 2, 3)
    with pytest.raises(errors.NotUnidependent):
        unique_circuit(M, (1, 2, 4))


def test_uniform_and_free():
    U = uniform_matroid(2, 4)
    assert U.rank == 2 and len(U.circuits) == 4
    F = free_matroid(5)
    assert F.rank == 5 and is_independent(F, range(1, 6))
    assert len(nbc_sets(F, 3)) == 10


def test_delete_and_contract_labels(fig):
    _, M = fig
    D, dl = delete(M, 6)
    assert dl == (1, 2, 3, 4, 5)
    assert set(D.circuits) == set(sets("123", "145", "2345"))
    C, cl = contract(M, 6)
    assert cl == (1, 2, 3, 4, 5)
    # in M/6 the points 2 and 5 become parallel, as do 3 and 4
    assert (2, 5) in C.circuits and (3, 4) in C.circuits
    assert C.rank == 2


def test_contract_loop_rejected():
    M = matroid_from_circuits(3, [(1,), (2, 3)])
    with pytest.raises(errors.LoopContraction):
        contract(M, 1)
    with pytest.raises(errors.LoopPresent):
        broken_circuits(M)


def test_circuit_axioms_enforced():
    with pytest.raises(errors.ComparableCircuits):
        matroid_from_circuits(4, [(1, 2), (1, 2, 3)])
    with pytest.raises(errors.CircuitElimination):
        matroid_from_circuits(4, [(1, 2, 3), (1, 2, 4)])
    with pytest.raises(errors.ElementOutOfRange):
        matroid_from_circuits(3, [(1, 4)])


def test_circuit_text_round_trip(fig):
    _, M = fig
    assert parse_circuits(format_circuits(M)) == M


@pytest.mark.parametrize("text, line", [
    ("", None),
    ("3 x\n", 1),
    ("3 2\n1 2 3\n", 1),
    ("3 1\n1 2 9\n", 2),
    ("# c\n3 1\n1 a\n", 3),
])
def test_circuit_parse_errors(text, line):
    with pytest.raises(errors.ParseError) as ei:
        parse_circuits(text)
    assert ei.value.line == line


@given(configs(min_n=3, max_n=6).flatmap(lambda V: orders(V.n).map(lambda o: (V, o))))
def test_nbc_count_does_not_depend_on_order(pair):
    V, order = pair
    M = circuits_from_vectors(V)
    if M.loops:
        return
    for ell in range(V.n + 1):
        assert len(nbc_sets(M, ell, order)) == len(nbc_sets(M, ell))
