"""
Residues and diagonal bases
===========================

Iterated residues pair top-degree words against pure elements.  A basis
whose flags separate the words is diagonal: its dual pairing matrix is
the identity, and expansions can be read off from residues alone.
"""

from chios.algebra import AlgebraElement, expand_in_basis_oracle, fmt_monomial
from chios.catalog import B3_WORDS, figure1
from chios.realization import chi_cordovil, chi_os, chi_ot, circuits_from_vectors
from chios.residues import (
    DiagonalBasisCandidate,
    diagonal_conditions,
    dual_pairing_matrix,
    expand_in_diagonal_basis,
    iterated_residue,
    nbc_candidate,
    residue_sum_check,
)

V = figure1()
M = circuits_from_vectors(V)
chis = {"os": chi_os(M), "ot": chi_ot(V, M), "cordovil": chi_cordovil(V, M)}
cands = {"nbc3": nbc_candidate(M, 3), "B3": DiagonalBasisCandidate(B3_WORDS)}

############################################################
# Both candidates satisfy the diagonal conditions

for name, cand in cands.items():
    print(name, diagonal_conditions(M, chis["os"], cand))
    print("  pairing is identity:", all(
        dual_pairing_matrix(M, chi, cand) == [[int(i == j) for j in range(6)] for i in range(6)]
        for chi in chis.values()))

############################################################
# Reordering a word does not change a nonzero residue

for w in ((1, 2, 5), (1, 5, 2)):
    print("residue of e_{235} at", w, "=", iterated_residue(M, chis["os"], w, (2, 3, 5)))

############################################################
# Expansions, once through residues and once by solving a linear system

for kind, chi in chis.items():
    for name, cand in cands.items():
        for J in ((1, 2, 6), (1, 5, 6), (2, 3, 5)):
            if J in cand.sets:
                continue
            coeffs = expand_in_diagonal_basis(M, chi, cand, J)
            check = expand_in_basis_oracle(M, chi, None, list(cand.sets), J)
            note = "" if coeffs == check else "  (oracle disagrees)"
            print(f"{kind:9s} {name:5s} {fmt_monomial(J)} = {AlgebraElement(coeffs)}{note}")

############################################################
# With affine coordinates the residues of any top-degree monomial sum to 1

for name, cand in cands.items():
    sums = {residue_sum_check(V, cand, J, M, chis["ot"]) for J in ((1, 2, 6), (2, 3, 5), (1, 5, 6))}
    print(name, "residue sums:", sorted(map(str, sums)))
