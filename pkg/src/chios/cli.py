"""Command-line front end.

    chios dims --input data/figure1.vec
    chios expand --chi ot --basis nbc --target 1,5,6
    chios residue --word 1,2,5 --sigma perm:1,3,2 --target 2,3,5

Without ``--input`` the six-point plane configuration is used.  Exit codes:
0 success, 1 domain error, 2 parse error.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from math import comb

from .algebra import (
    AlgebraElement,
    BetaSystem,
    beta_for,
    algebra_dimension,
    expand_in_basis_oracle,
    fmt_monomial,
    fmt_rat,
    nbc_expand,
    nbc_expand_oracle,
)
from .catalog import figure1
from .errors import ChiosError, ParseError, ValidationError
from .groebner import (
    TermOrder,
    canonical_basis,
    groebner_to_json,
    leading_monomials,
    leading_term_ideal,
    reduced_groebner,
    universal_groebner,
)
from .matroid import (
    dependent_sets,
    inactive_unidependents,
    nbc_sets,
    parse_circuits,
)
from .properties import property_suite, seeded_rng, random_orders
from .realization import (
    FlatBasisAssignment,
    chi_cordovil,
    chi_os,
    chi_ot,
    circuits_from_vectors,
    load_chi_file,
    load_flat_basis,
    parse_vectors,
)
from .residues import (
    DiagonalBasisCandidate,
    diagonal_conditions,
    dual_pairing_matrix,
    exact_sequence_check,
    expand_in_diagonal_basis,
    flag,
    iterated_residue,
    perm_from_cycles,
)


@dataclass
class Session:
    M: object
    V: object
    chi: object
    beta: object
    order: object
    fmt: str


# -- argument parsing helpers -----------------------------------------------


def parse_int_list(text, what="list"):
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise ParseError(f"bad {what} {text!r}; expected comma separated integers") from None


def parse_order(text, n):
    if text == "natural":
        return TermOrder.natural(n)
    if text.startswith("pi:"):
        return TermOrder.from_sequence(parse_int_list(text[3:], "permutation"))
    raise ParseError(f"bad order {text!r}; use natural or pi:<perm>")


def parse_sigma(text, ell):
    """Permutation in one-line form from ``id``, ``perm:1,3,2`` or ``cycle:(132)``."""
    if text == "id":
        return tuple(range(1, ell + 1))
    try:
        if text.startswith("perm:"):
            sigma = parse_int_list(text[5:], "permutation")
            if sorted(sigma) != list(range(1, ell + 1)):
                raise ValueError
            return sigma
        if text.startswith("cycle:"):
            return perm_from_cycles(text[6:], ell)
    except ValueError:
        raise ParseError(f"{text!r} is not a permutation of 1..{ell}") from None
    raise ParseError(f"bad sigma {text!r}; use id, perm:<one-line> or cycle:<cycles>")


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None


def _read_json(path):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: {e.msg}", e.lineno) from None


def parse_input(path, kind=None):
    """(Matroid, VectorConfig or None) from a file; the built-in
    configuration when ``path`` is None."""
    if path is None:
        V = figure1()
        return circuits_from_vectors(V), V
    if kind is None:
        kind = "circuits" if path.endswith(".circ") else "vectors"
    text = _read(path)
    if kind == "circuits":
        return parse_circuits(text), None
    V = parse_vectors(text)
    return circuits_from_vectors(V), V


def build_session(args):
    M, V = parse_input(args.input, args.kind)
    if args.chi_file:
        chi = load_chi_file(M.n, args.chi_file)
    elif args.chi == "os":
        chi = chi_os(M)
    else:
        if V is None:
            raise ValidationError(f"--chi {args.chi} needs a vector configuration")
        if args.flat_basis == "lex":
            B = FlatBasisAssignment(V, M)
        elif args.flat_basis.startswith("file:"):
            B = load_flat_basis(V, M, args.flat_basis[5:])
        else:
            raise ParseError(f"bad --flat-basis {args.flat_basis!r}")
        chi = (chi_ot if args.chi == "ot" else chi_cordovil)(V, M, B)
    beta = BetaSystem(args.beta) if args.beta else beta_for(chi)
    return Session(M, V, chi, beta, parse_order(args.order, M.n), args.format)


# -- rendering ----------------------------------------------------------------


def fmt_set(X):
    if not X:
        return "{}"
    return ("" if max(X) < 10 else ",").join(map(str, X))


def fmt_coeffs(coeffs):
    return str(AlgebraElement(coeffs))


def coeffs_json(coeffs):
    return [{"set": list(k), "value": fmt_rat(v)} for k, v in sorted(coeffs.items())]


def emit(session, text_lines, data):
    if session.fmt == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# -- verbs ----------------------------------------------------------------------


def _degrees(s, degree):
    return [degree] if degree is not None else list(range(s.M.n + 1))


def cmd_nbc(s, args):
    lines, out = [], []
    for ell in _degrees(s, args.degree):
        sets = nbc_sets(s.M, ell, s.order.order)
        lines.append(f"nbc_{ell} ({len(sets)}): " + " ".join(fmt_set(X) for X in sets))
        out.append({"degree": ell, "sets": [list(X) for X in sets]})
    emit(s, lines, {"order": list(s.order.order), "degrees": out})


def _basis(s, args):
    if args.universal:
        return universal_groebner(s.M, s.chi)
    return reduced_groebner(s.M, s.chi, s.order)


def cmd_groebner(s, args):
    G = _basis(s, args)
    lines = [f"{G.kind} basis, {len(G)} elements" + (", leading coefficients 1" if G.order else "")]
    for C, g in zip(G.circuits, G.elements):
        lines.append(f"  \u2202{fmt_monomial(C)} -> {g}")
    emit(s, lines, groebner_to_json(G))


def cmd_lt_ideal(s, args):
    G = universal_groebner(s.M, s.chi) if not args.reduced else reduced_groebner(s.M, s.chi, s.order)
    lead = leading_monomials(s.order, G)
    gens = leading_term_ideal(s.order, G).generators
    lines = [
        "leading monomials: " + ", ".join(fmt_monomial(X) for X in lead),
        "minimal generators: " + ", ".join(fmt_monomial(X) for X in gens),
    ]
    emit(s, lines, {"order": list(s.order.order), "kind": G.kind,
                    "leading_monomials": [list(X) for X in lead],
                    "generators": [list(X) for X in gens]})


def cmd_canonical_basis(s, args):
    lines, out = [], []
    for ell in _degrees(s, args.degree):
        B = canonical_basis(s.M, s.chi, s.order, ell)
        lines.append(f"degree {ell} ({len(B)}): " + " ".join(fmt_monomial(X) for X in B))
        out.append({"degree": ell, "monomials": [list(X) for X in B]})
    emit(s, lines, {"order": list(s.order.order), "degrees": out})


def load_candidate(path):
    try:
        return DiagonalBasisCandidate.from_json(_read_json(path))
    except (KeyError, TypeError) as e:
        raise ParseError(f"{path}: malformed candidate ({e})") from None


def cmd_expand(s, args):
    J = parse_int_list(args.target, "target")
    if args.basis == "nbc":
        coeffs = nbc_expand(s.M, s.chi, J, s.order.order)
        check = nbc_expand_oracle(s.M, s.chi, s.beta, J, s.order.order)
        method = "flag formula"
    elif args.basis.startswith("file:"):
        cand = load_candidate(args.basis[5:])
        coeffs = expand_in_diagonal_basis(s.M, s.chi, cand, J)
        check = expand_in_basis_oracle(s.M, s.chi, s.beta, cand.sets, J)
        method = "iterated residues"
    else:
        raise ParseError(f"bad --basis {args.basis!r}; use nbc or file:<path>")
    agree = coeffs == check
    lines = [f"{fmt_monomial(tuple(sorted(J)))} = {fmt_coeffs(coeffs)}",
             f"{method}; linear algebra {'agrees' if agree else 'DISAGREES'}"]
    emit(s, lines, {"target": sorted(J), "basis": args.basis, "coefficients": coeffs_json(coeffs),
                    "element": AlgebraElement(coeffs).to_json(), "oracle_agrees": agree})
    return 0 if agree else 1


def cmd_residue(s, args):
    word = parse_int_list(args.word, "word")
    sigma = parse_sigma(args.sigma, len(word))
    w = tuple(word[i - 1] for i in sigma)
    J = parse_int_list(args.target, "target")
    value = iterated_residue(s.M, s.chi, w, J)
    chain = flag(s.M, w).chain
    lines = [f"word {fmt_set(w)}; flag " + " < ".join(fmt_set(F) for F in chain),
             f"residue at e_{{{fmt_set(tuple(sorted(J)))}}} = {fmt_rat(value)}"]
    emit(s, lines, {"word": list(w), "target": sorted(J), "value": fmt_rat(value),
                    "flag": [list(F) for F in chain]})


def cmd_diagonal_check(s, args):
    cand = load_candidate(args.file)
    r = diagonal_conditions(s.M, s.chi, cand)
    ok = r["independent"] and r["enough"] and r["separating"]
    identity = None
    if ok:
        P = dual_pairing_matrix(s.M, s.chi, cand)
        identity = all(P[i][j] == (i == j) for i in range(len(P)) for j in range(len(P)))
    lines = [
        f"entries {r['size']}, dim {r['dim']}",
        f"independent: {'yes' if r['independent'] else 'no'}",
        f"enough entries: {'yes' if r['enough'] else 'no'}",
        f"flags separate: {'yes' if r['separating'] else 'no'}"
        + (f" (clash {fmt_set(r['clash'][0])} / {fmt_set(r['clash'][1])})" if r["clash"] else ""),
        f"diagonal basis: {'yes' if ok else 'no'}",
    ]
    if ok:
        lines.append(f"dual pairing is identity: {'yes' if identity else 'no'}")
    emit(s, lines, {"entries": cand.to_json()["entries"], "dim": r["dim"],
                    "independent": r["independent"], "enough": r["enough"],
                    "separating": r["separating"],
                    "clash": [list(w) for w in r["clash"]] if r["clash"] else None,
                    "diagonal": ok, "pairing_identity": identity})
    return 0 if ok and identity else 1


def cmd_exact_seq(s, args):
    r = exact_sequence_check(s.M, s.chi, args.element, s.beta)
    lines = [f"element {r.element}"]
    lines += [f"l={ell}: {a} = {b} + {c}" for ell, a, b, c in r.rows]
    lines.append("ok" if r.ok else "FAILED: " + "; ".join(f"l={e} {m}" for e, m in r.failures))
    emit(s, lines, {"element": r.element, "ok": r.ok,
                    "rows": [{"degree": e, "dim": a, "deletion": b, "contraction": c} for e, a, b, c in r.rows],
                    "failures": [{"degree": e, "reason": m} for e, m in r.failures]})
    return 0 if r.ok else 1


def cmd_dims(s, args):
    parts, rows = [], []
    for ell in range(s.M.n + 1):
        a = len(nbc_sets(s.M, ell, s.order.order))
        b = len(inactive_unidependents(s.M, ell + 1, s.order.order))
        c = len(dependent_sets(s.M, ell))
        dim = algebra_dimension(s.M, s.chi, s.beta, ell)
        total = comb(s.M.n, ell)
        parts.append(f"ℓ={ell}: {a}+{b}+{c}={total}")
        rows.append({"degree": ell, "nbc": a, "inactive_unidependent": b, "dependent": c,
                     "total": total, "dim": dim, "consistent": a + b + c == total and dim == a})
    emit(s, ["; ".join(parts)], {"rows": rows})
    return 0 if all(r["consistent"] for r in rows) else 1


def cmd_verify(s, args):
    orders = random_orders(seeded_rng(), s.M.n, 5)
    results = property_suite(s.M, s.chi, s.beta, orders)
    lines = [f"{'PASS' if ok else 'FAIL'} {name}" + (f": {d}" if d else "") for name, ok, d in results]
    emit(s, lines, {"results": [{"name": n, "ok": ok, "detail": d} for n, ok, d in results]})
    return 0 if all(ok for _, ok, _ in results) else 1


# -- entry point ------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="vector (.vec) or circuit (.circ) file")
    common.add_argument("--kind", choices=["vectors", "circuits"])
    common.add_argument("--chi", choices=["os", "ot", "cordovil"], default="os")
    common.add_argument("--chi-file", help="JSON table of chi values")
    common.add_argument("--beta", choices=["exterior", "commutative"])
    common.add_argument("--order", default="natural", help="natural or pi:<perm>, least element first")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--flat-basis", default="lex", help="lex or file:<path>")

    p = argparse.ArgumentParser(prog="chios", description="chi-algebras of matroids")
    sub = p.add_subparsers(dest="verb", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("nbc", cmd_nbc, "no-broken-circuit sets")
    sp.add_argument("--degree", type=int)
    for name, fn in (("groebner", cmd_groebner), ("lt-ideal", cmd_lt_ideal)):
        sp = add(name, fn, "Groebner basis" if name == "groebner" else "leading term ideal")
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--reduced", action="store_true")
        g.add_argument("--universal", action="store_true")
    sp = add("canonical-basis", cmd_canonical_basis, "standard monomials")
    sp.add_argument("--degree", type=int)
    sp = add("expand", cmd_expand, "expand a pure element in a basis")
    sp.add_argument("--basis", default="nbc", help="nbc or file:<candidate.json>")
    sp.add_argument("--target", required=True)
    sp = add("residue", cmd_residue, "iterated residue")
    sp.add_argument("--word", required=True)
    sp.add_argument("--sigma", default="id", help="id, perm:<one-line> or cycle:<cycles>")
    sp.add_argument("--target", required=True)
    sp = add("diagonal-check", cmd_diagonal_check, "verify a diagonal basis")
    sp.add_argument("--file", required=True)
    sp = add("exact-seq", cmd_exact_seq, "deletion-contraction sequence")
    sp.add_argument("--element", type=int, required=True)
    add("dims", cmd_dims, "dimension table")
    add("verify", cmd_verify, "run the invariant suite")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        s = build_session(args)
        return args.fn(s, args) or 0
    except ParseError as e:
        print(f"chios {args.verb}: parse error: {e}", file=sys.stderr)
        return 2
    except ChiosError as e:
        print(f"chios {args.verb}: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
