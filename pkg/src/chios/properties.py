"""Invariant suite shared by the ``verify`` command and the test-suite.

Each check returns ``(name, ok, detail)``; ``detail`` is a short string
naming the first counterexample, or empty.
"""

import os
import random
from itertools import permutations

from .algebra import (
    AlgebraElement,
    algebra_dimension,
    beta_for,
    nbc_expand,
    nbc_expand_oracle,
    reduces_to_zero,
    unidependent_axiom_failures,
)
from .groebner import (
    TermOrder,
    canonical_basis,
    is_groebner,
    is_reduced,
    leading_monomial,
    reduced_groebner,
    universal_groebner,
)
from .matroid import independent_sets, nbc_sets
from .residues import exact_sequence_check, iterated_residue, iterated_residue_closed


def seeded_rng(default=0):
    """``random.Random`` seeded from CHIOS_SEED when it is set."""
    return random.Random(int(os.environ.get("CHIOS_SEED", default)))


def random_orders(rng, n, k):
    out = []
    for _ in range(k):
        p = list(range(1, n + 1))
        rng.shuffle(p)
        out.append(TermOrder.from_sequence(p))
    return out


def _result(name, bad):
    return name, not bad, "" if not bad else str(bad[0])


def check_nbc_count_invariant(M, orders):
    base = [len(nbc_sets(M, ell)) for ell in range(M.n + 1)]
    bad = [o.order for o in orders
           if [len(nbc_sets(M, ell, o.order)) for ell in range(M.n + 1)] != base]
    return _result("nbc count independent of order", bad)


def check_dimensions(M, chi, beta):
    bad = [ell for ell in range(M.n + 1)
           if algebra_dimension(M, chi, beta, ell) != len(nbc_sets(M, ell))]
    return _result("dim A_l equals |nbc_l|", bad)


def check_canonical_basis(M, chi, orders):
    bad = []
    for o in orders:
        for ell in range(M.n + 1):
            if canonical_basis(M, chi, o, ell) != nbc_sets(M, ell, o.order):
                bad.append((o.order, ell))
                break
    return _result("canonical basis equals order-nbc", bad)


def check_axiom(M, chi, beta, max_size=5):
    return _result("unidependent proportionality", unidependent_axiom_failures(M, chi, beta, max_size))


def check_circuits_vanish(M, chi, beta):
    bad = [C for C in M.circuits if not reduces_to_zero(M, chi, beta, AlgebraElement({C: 1}))]
    return _result("e_C lies in the ideal", bad)


def check_groebner(M, chi, beta, orders):
    bad = []
    G_u = universal_groebner(M, chi)
    for o in orders:
        G = reduced_groebner(M, chi, o)
        if not is_reduced(o, G) or not is_groebner(M, chi, beta, o, G):
            bad.append(("reduced", o.order))
        if not is_groebner(M, chi, beta, o, G_u):
            bad.append(("universal", o.order))
        for C, g in zip(G_u.circuits, G_u.elements):
            if leading_monomial(o, g) != tuple(sorted(set(C) - {o.min(C)})):
                bad.append(("lead", o.order, C))
    return _result("reduced and universal bases are Groebner", bad)


def check_expansions(M, chi, beta, max_degree=3):
    bad = []
    for ell in range(1, min(M.rank, max_degree) + 1):
        for J in independent_sets(M, ell):
            if nbc_expand(M, chi, J) != nbc_expand_oracle(M, chi, beta, J):
                bad.append(J)
    return _result("flag expansion agrees with row reduction", bad)


def check_residues(M, chi, max_degree=2):
    bad = []
    for ell in range(1, min(M.rank, max_degree) + 1):
        for I in independent_sets(M, ell):
            for w in permutations(I):
                for J in independent_sets(M, ell):
                    if iterated_residue(M, chi, w, J) != iterated_residue_closed(M, chi, w, J):
                        bad.append((w, J))
    return _result("iterated residue matches the flag ratio", bad)


def check_exact_sequences(M, chi, beta):
    if not M.is_simple():
        return "split exact sequence", True, "skipped: not simple"
    bad = []
    for x in M.ground:
        r = exact_sequence_check(M, chi, x, beta)
        if not r.ok:
            bad.append((x, r.failures[0]))
    return _result("split exact sequence", bad)


def property_suite(M, chi, beta=None, orders=None, rng=None, heavy=True):
    """Run every check on (M, chi); returns a list of results."""
    beta = beta or beta_for(chi)
    if orders is None:
        orders = random_orders(rng or seeded_rng(), M.n, 5)
    out = [
        check_nbc_count_invariant(M, orders),
        check_dimensions(M, chi, beta),
        check_canonical_basis(M, chi, orders),
        check_axiom(M, chi, beta),
        check_circuits_vanish(M, chi, beta),
        check_exact_sequences(M, chi, beta),
    ]
    if heavy:
        out += [
            check_groebner(M, chi, beta, orders[:2]),
            check_expansions(M, chi, beta),
            check_residues(M, chi),
        ]
    return out
