"""
Groebner bases under two term orders
====================================

The reduced Groebner basis of the relation ideal depends on the order
of the ground set.  Moving the element 1 to the top adds a circuit of
size four to the basis.
"""

from chios.algebra import fmt_monomial
from chios.catalog import figure1
from chios.groebner import (
    TermOrder,
    leading_monomials,
    leading_term_ideal,
    minimality_witness,
    reduced_groebner,
    universal_groebner,
)
from chios.realization import chi_ot, circuits_from_vectors

V = figure1()
M = circuits_from_vectors(V)
chi = chi_ot(V, M)
orders = {
    "natural": TermOrder.natural(M.n),
    "2<3<4<5<6<1": TermOrder.from_sequence((2, 3, 4, 5, 6, 1)),
}

############################################################
# Reduced bases and leading monomials

Gu = universal_groebner(M, chi)
for name, order in orders.items():
    print(f"-- order {name}")
    G = reduced_groebner(M, chi, order)
    for g, C in zip(G, G.circuits):
        print(f"  ∂{fmt_monomial(C)} -> {g}")
    print("  leads of the universal basis:", " ".join(map(fmt_monomial, leading_monomials(order, Gu))))
    print("  minimal generators:", " ".join(map(fmt_monomial, leading_term_ideal(order, Gu).generators)))

############################################################
# No circuit can be dropped from the universal basis: for each one there
# is an order where the remaining boundaries are not a Groebner basis.

for C in M.circuits:
    order, still_groebner = minimality_witness(M, chi, C)
    print(fmt_monomial(C), "witness order", order.order, "still Groebner:", still_groebner)
