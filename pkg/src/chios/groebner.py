"""Term orders, leading terms and Groebner bases of the chi-ideal.

Divisibility of monomials is support inclusion: e_Y divides e_X iff Y is a
subset of X, since the product with e_{X - Y} is a nonzero multiple of e_X.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .algebra import (
    AlgebraElement,
    beta_for,
    boundary,
    degree_lex_key,
    ideal_echelon,
    reduces_to_zero,
)
from .errors import LoopPresent, NotInIdeal
from .matroid import check_order, minimal_broken_circuit_circuits, nbc_sets

LT, EQ, GT = -1, 0, 1


@dataclass(frozen=True)
class TermOrder:
    """Degree-lexicographic order; ``order`` lists elements least first."""

    n: int
    order: tuple

    @classmethod
    def natural(cls, n):
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def from_sequence(cls, seq):
        seq = tuple(seq)
        return cls(len(seq), check_order(len(seq), seq))

    def __post_init__(self):
        object.__setattr__(self, "order", check_order(self.n, self.order))

    def key(self, X):
        return degree_lex_key(self.n, self.order)(X)

    def min(self, X):
        pos = {e: i for i, e in enumerate(self.order)}
        return min(X, key=pos.__getitem__)


def compare(order, a, b):
    ka, kb = order.key(tuple(sorted(a))), order.key(tuple(sorted(b)))
    return LT if ka < kb else GT if ka > kb else EQ


def leading_term(order, f):
    """(coefficient, monomial) of the largest monomial; (0, None) for f = 0."""
    if not f:
        return Fraction(0), None
    X = max(f.terms, key=order.key)
    return f.terms[X], X


def leading_monomial(order, f):
    return leading_term(order, f)[1]


@dataclass(frozen=True)
class LeadingTermIdeal:
    """Monomial ideal stored by its minimal generators (an antichain)."""

    generators: tuple

    @classmethod
    def from_monomials(cls, monomials):
        ms = {tuple(sorted(m)) for m in monomials}
        minimal = [m for m in ms if not any(o != m and set(o) <= set(m) for o in ms)]
        return cls(tuple(sorted(minimal, key=lambda m: (len(m), m))))

    def contains(self, X):
        X = set(X)
        return any(set(g) <= X for g in self.generators)

    def degree_part(self, n, ell):
        return [X for X in combinations(range(1, n + 1), ell) if self.contains(X)]


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple
    order: object  # TermOrder, or None for the universal basis
    kind: str
    circuits: tuple = ()

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _require_loop_free(M):
    if M.loops:
        raise LoopPresent(f"matroid has loops {M.loops}")


def reduced_groebner(M, chi, order=None):
    """Boundaries of the circuits with minimal broken circuit, made monic."""
    _require_loop_free(M)
    order = order or TermOrder.natural(M.n)
    cs = minimal_broken_circuit_circuits(M, order.order)
    elems = []
    for C in cs:
        g = boundary(chi, C)
        c, _ = leading_term(order, g)
        elems.append(g / c)
    return GroebnerBasis(tuple(elems), order, "reduced", tuple(cs))


def universal_groebner(M, chi):
    _require_loop_free(M)
    cs = tuple(C for C in M.circuits if len(C) > 1)
    return GroebnerBasis(tuple(boundary(chi, C) for C in cs), None, "universal", cs)


def is_reduced(order, G):
    """Monic leading terms and no term of one element divisible by another's lead."""
    leads = []
    for g in G:
        c, X = leading_term(order, g)
        if c != 1:
            return False
        leads.append(set(X))
    for i, g in enumerate(G):
        for j, lead in enumerate(leads):
            if i != j and any(lead <= set(X) for X in g.terms):
                return False
    return True


def leading_monomials(order, G):
    """Leading monomials of the elements of G, duplicates dropped, in G's order."""
    out = []
    for g in G:
        X = leading_monomial(order, g)
        if X is not None and X not in out:
            out.append(X)
    return out


def leading_term_ideal(order, G):
    return LeadingTermIdeal.from_monomials(leading_monomials(order, G))


def canonical_basis(M, chi, order=None, ell=None):
    """Standard monomials for the reduced basis: supports outside its Lt ideal."""
    order = order or TermOrder.natural(M.n)
    lt = leading_term_ideal(order, reduced_groebner(M, chi, order))
    degrees = range(M.n + 1) if ell is None else [ell]
    return [X for d in degrees for X in combinations(M.ground, d) if not lt.contains(X)]


def ideal_leading_monomials(M, chi, beta, order, ell):
    """All leading monomials of nonzero elements of the degree-ell ideal part."""
    return set(ideal_echelon(M, chi, beta, ell, order.order).leads)


def is_groebner(M, chi, beta, order, G):
    """Check Lt(G) = Lt(ideal) degree by degree up to rank + 1.

    Every monomial of degree above rank + 1 is divisible by one of degree
    rank + 1, and all of those are dependent, so agreement up to rank + 1
    settles every degree.
    """
    beta = beta or beta_for(chi)
    G = list(G)
    for g in G:
        if not g or not reduces_to_zero(M, chi, beta, g):
            raise NotInIdeal(f"{g} is not a nonzero member of the ideal")
    top = min(M.n, M.rank + 1)
    lead_sets = [ideal_leading_monomials(M, chi, beta, order, ell) for ell in range(top + 1)]
    lt_ideal = LeadingTermIdeal.from_monomials(X for s in lead_sets for X in s)
    lt_g = leading_term_ideal(order, G)
    for ell in range(top + 1):
        if lt_ideal.degree_part(M.n, ell) != lt_g.degree_part(M.n, ell):
            return False
    return True


def minimality_witness(M, chi, C, beta=None):
    """Order putting the circuit C first, and whether the universal basis
    without its boundary is still Groebner there (it should not be)."""
    C = tuple(sorted(C))
    order = TermOrder.from_sequence(C + tuple(e for e in M.ground if e not in C))
    rest = [boundary(chi, D) for D in M.circuits if len(D) > 1 and D != C]
    return order, is_groebner(M, chi, beta, order, rest)


def canonical_equals_nbc(M, chi, order):
    """Canonical basis against the order-nbc sets in every degree."""
    for ell in range(M.n + 1):
        if canonical_basis(M, chi, order, ell) != nbc_sets(M, ell, order.order):
            return False
    return True


def groebner_to_json(G):
    return {
        "kind": G.kind,
        "order": list(G.order.order) if G.order else None,
        "circuits": [list(c) for c in G.circuits],
        "elements": [g.to_json() for g in G.elements],
    }

