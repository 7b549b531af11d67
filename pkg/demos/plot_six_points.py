"""
Six points in the plane
=======================

Build the matroid of six points in general-but-not-too-general position,
list its circuits and nbc sets, and compare the dimension counts of the
algebra against the binomial coefficients.
"""

from math import comb

from chios import algebra, matroid
from chios.catalog import figure1
from chios.realization import chi_os, circuits_from_vectors

############################################################
# Vectors and circuits
#
# Each point is written in homogeneous coordinates (x, y, 1).

V = figure1()
M = circuits_from_vectors(V)
for i in M.ground:
    print(i, tuple(str(c) for c in V.vector(i)))
print("circuits:", " ".join(algebra.fmt_monomial(C) for C in M.circuits))

############################################################
# nbc sets for the natural order

for ell in range(M.rank + 1):
    sets = matroid.nbc_sets(M, ell)
    print(f"nbc_{ell} ({len(sets)}):", " ".join(map(algebra.fmt_monomial, sets)))

############################################################
# Each degree splits into nbc sets, boundaries of inactive
# unidependents and dependent sets.

chi = chi_os(M)
beta = algebra.beta_for(chi)
for ell in range(M.n + 1):
    nbc = len(matroid.nbc_sets(M, ell))
    uni = len(matroid.inactive_unidependents(M, ell + 1))
    dep = len(matroid.dependent_sets(M, ell))
    dim = algebra.algebra_dimension(M, chi, beta, ell)
    print(f"degree {ell}: {nbc} + {uni} + {dep} = {comb(M.n, ell)}, dim = {dim}")
