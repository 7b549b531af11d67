"""The square-free graded algebra A_Phi, chi-boundaries and degreewise ideals.

Monomials are canonical: an ascending tuple of elements.  A word (any
ordering) is brought to canonical form by paying the commutation scalars
``beta(i, j)`` for each inversion, so ``e_j * e_i = beta(i, j) e_i * e_j``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from types import MappingProxyType

from .errors import DependentInput, InconsistentSystem
from .linalg import SparseEchelon, as_fraction, row_echelon
from .matroid import (
    align_to_flag,
    dependent_sets,
    flag_chain,
    inactive_unidependents,
    is_independent,
    is_unidependent,
    nbc_sets,
    order_position,
)


@dataclass(frozen=True)
class BetaSystem:
    mode: str = "exterior"
    # custom mode: ((i, j), value) pairs with i < j; unlisted pairs default to 1
    values: tuple = ()

    def __post_init__(self):
        if self.mode not in ("exterior", "commutative", "custom"):
            raise ValueError(f"unknown beta mode {self.mode!r}")
        vals = tuple(sorted((tuple(k), as_fraction(v)) for k, v in dict(self.values).items()))
        for (i, j), v in vals:
            if not i < j:
                raise ValueError(f"beta key {(i, j)} must satisfy i < j")
            if v == 0:
                raise ValueError("beta values must be nonzero")
        object.__setattr__(self, "values", vals)

    def __call__(self, i, j):
        if self.mode == "exterior":
            return Fraction(-1)
        if self.mode == "commutative":
            return Fraction(1)
        return dict(self.values).get((min(i, j), max(i, j)), Fraction(1))


EXTERIOR = BetaSystem("exterior")
COMMUTATIVE = BetaSystem("commutative")


def beta_for(chi):
    return BetaSystem(chi.beta_mode)


def word_scalar(beta, word):
    """Canonicalize the product of generators along ``word``.

    Returns ``(scalar, monomial)``; ``(0, None)`` if a generator repeats.
    """
    word = tuple(word)
    if len(set(word)) != len(word):
        return Fraction(0), None
    s = Fraction(1)
    for p in range(len(word)):
        for q in range(p + 1, len(word)):
            if word[p] > word[q]:
                s *= beta(word[q], word[p])
    return s, tuple(sorted(word))


def mono_mul(beta, a, b):
    """e_a * e_b for words ``a`` and ``b``; ``(0, None)`` when supports meet."""
    return word_scalar(beta, tuple(a) + tuple(b))


def fmt_rat(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fmt_monomial(X):
    if not X:
        return "1"
    sep = "" if max(X) < 10 else ","
    return "e_{" + sep.join(map(str, X)) + "}"


class AlgebraElement:
    """Finite rational combination of canonical monomials; immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for X, c in (terms or {}).items():
            c = as_fraction(c)
            if c:
                clean[tuple(X)] = c
        self._terms = clean

    @classmethod
    def monomial(cls, word, coeff=1, beta=None):
        word = tuple(word)
        if beta is None:
            if list(word) != sorted(set(word)):
                raise ValueError("non-canonical word needs a BetaSystem")
            return cls({word: coeff})
        s, X = word_scalar(beta, word)
        return cls({X: s * as_fraction(coeff)}) if s else cls()

    @classmethod
    def one(cls):
        return cls({(): 1})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for X, c in other._terms.items():
            out[X] = out.get(X, 0) + c
        return AlgebraElement(out)

    def __neg__(self):
        return AlgebraElement({X: -c for X, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        if isinstance(k, AlgebraElement):
            return NotImplemented
        k = as_fraction(k)
        return AlgebraElement({X: k * c for X, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, k):
        return self * (1 / as_fraction(k))

    def mul(self, other, beta):
        """Algebra product ``self * other`` under the commutation scalars."""
        out = {}
        for X, a in self._terms.items():
            for Y, b in other._terms.items():
                s, Z = mono_mul(beta, X, Y)
                if s:
                    out[Z] = out.get(Z, 0) + s * a * b
        return AlgebraElement(out)

    def coefficient(self, X):
        return self._terms.get(tuple(sorted(X)), Fraction(0))

    def support(self):
        return sorted(self._terms, key=lambda X: (len(X), X))

    def degrees(self):
        return sorted({len(X) for X in self._terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def degree(self):
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("element is zero or not homogeneous")
        return ds[0]

    def homogeneous_components(self):
        out = {}
        for X, c in self._terms.items():
            out.setdefault(len(X), {})[X] = c
        return {d: AlgebraElement(t) for d, t in sorted(out.items())}

    def __repr__(self):
        return f"AlgebraElement({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for X in self.support():
            c = self._terms[X]
            mag = abs(c)
            body = fmt_monomial(X)
            if mag != 1 or not X:
                body = fmt_rat(mag) if not X else f"{fmt_rat(mag)}*{body}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def to_json(self):
        return {
            "terms": [
                {"support": list(X), "num": str(c.numerator), "den": str(c.denominator)}
                for X, c in sorted(self._terms.items())
            ]
        }

    @classmethod
    def from_json(cls, data):
        return cls({tuple(t["support"]): Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]})


def boundary(chi, X):
    """chi-boundary of e_X for the word X.

    Summands are canonical monomials, so reordering X by sigma multiplies the
    result by sgn(sigma) through chi alone.
    """
    X = tuple(X)
    if not X:
        raise ValueError("boundary of the empty word")
    if len(X) == 1:
        return AlgebraElement.one()
    out = {}
    for p in range(1, len(X) + 1):
        rest = X[: p - 1] + X[p:]
        c = (-1) ** p * chi(rest)
        if c:
            key = tuple(sorted(rest))
            out[key] = out.get(key, 0) + c
    return AlgebraElement(out)


def ideal_degree_basis(M, chi, beta=None, ell=0, order=None):
    """Basis of the degree-``ell`` ideal component: dependent monomials plus
    boundaries of inactive unidependents of size ``ell + 1``."""
    deps = [AlgebraElement({D: 1}) for D in dependent_sets(M, ell)]
    unis = [boundary(chi, U) for U in inactive_unidependents(M, ell + 1, order)]
    return deps + unis


def ideal_spanning_set(M, chi, beta, ell):
    """Degree-``ell`` part of the right ideal generated by the circuit
    boundaries and the loops: all products g * e_Y of matching degree.

    A generator, so callers can stop once they have what they need.
    """
    gens = []
    for C in M.circuits:
        if len(C) == 1:
            gens.append(AlgebraElement({C: 1}))
        else:
            gens.append(boundary(chi, C))
    for g in gens:
        k = ell - g.degree()
        if k < 0:
            continue
        for Y in combinations(M.ground, k):
            h = g.mul(AlgebraElement({Y: 1}), beta)
            if h:
                yield h


def degree_lex_key(n, order=None):
    """Sort key of the degree-lexicographic term order induced by ``order``."""
    pos = order_position(n, order)

    def key(X):
        return len(X), sorted(pos[x] for x in X)

    return key


def _nbc_first_key(nbc):
    def key(X):
        return X not in nbc, X

    return key


# keyed on (matroid, chi identity, beta, degree, ranking); chi maps are immutable
@lru_cache(maxsize=256)
def _echelon(M, chi, beta, ell, ranking):
    if ranking[0] == "nbc":
        key = _nbc_first_key(frozenset(ranking[1]))
    else:
        key = degree_lex_key(M.n, ranking[1])
    ech = SparseEchelon(key)
    full = comb(M.n, ell)
    for g in ideal_spanning_set(M, chi, beta, ell):
        ech.add(g.terms)
        if len(ech) == full:
            break
    return ech


def ideal_echelon(M, chi, beta, ell, order=None):
    """Echelon form of the degree-``ell`` ideal component whose leads are the
    leading monomials under the degree-lex order given by ``order``."""
    beta = beta or beta_for(chi)
    return _echelon(M, chi, beta, ell, ("order", tuple(order or M.ground)))


def nbc_echelon(M, chi, beta, ell, order=None):
    """Echelon form that ranks every non-nbc monomial above every nbc one."""
    beta = beta or beta_for(chi)
    return _echelon(M, chi, beta, ell, ("nbc", tuple(nbc_sets(M, ell, order))))


def algebra_dimension(M, chi, beta, ell):
    """dim A_ell computed as C(n, ell) minus the rank of the ideal component."""
    return comb(M.n, ell) - len(nbc_echelon(M, chi, beta, ell))


def reduces_to_zero(M, chi, beta, f):
    """Membership of ``f`` in the ideal, checked degree by degree."""
    for ell, part in f.homogeneous_components().items():
        if not nbc_echelon(M, chi, beta, ell).contains(part.terms):
            return False
    return True


def _check_independent(M, J):
    J = tuple(sorted(J))
    if len(set(J)) != len(J) or not is_independent(M, J):
        raise DependentInput(f"{J} is dependent")
    return J


def _sorted_in(pos, X):
    return tuple(sorted(X, key=pos.__getitem__))


def nbc_expand(M, chi, J, order=None):
    """Coefficients of e_J in the order-nbc basis via flag matching.

    The coefficient of I is chi(I)/chi(J^tau), I read increasingly in the
    order, where tau is the unique reordering giving J the flag of I.
    """
    J = _check_independent(M, J)
    pos = order_position(M.n, order)
    out = {}
    for I in nbc_sets(M, len(J), order):
        word = _sorted_in(pos, I)
        Jt = align_to_flag(M, J, flag_chain(M, word))
        if Jt is not None:
            out[I] = chi(word) / chi(Jt)
    return out


def nbc_expand_oracle(M, chi, beta, J, order=None):
    """Same coefficients by row reduction against the ideal component."""
    J = _check_independent(M, J)
    beta = beta or beta_for(chi)
    nbc = set(nbc_sets(M, len(J), order))
    residue = nbc_echelon(M, chi, beta, len(J), order).reduce({J: 1})
    stray = [X for X in residue if X not in nbc]
    if stray:
        raise InconsistentSystem(f"monomials {stray} survive reduction")
    return dict(sorted(residue.items()))


def expand_in_basis_oracle(M, chi, beta, basis, J):
    """Coefficients of e_J over an arbitrary family of monomials, by solving
    in nbc coordinates.  Raises InconsistentSystem if e_J is outside their
    span or the family is not linearly independent in A_ell."""
    J = _check_independent(M, J)
    ell = len(J)
    basis = [tuple(sorted(b)) for b in basis]
    cols = [nbc_expand_oracle(M, chi, beta, b) for b in basis]
    target = nbc_expand_oracle(M, chi, beta, J)
    # solve sum_k x_k cols[k] = target in the nbc coordinate space
    idx = {I: r for r, I in enumerate(nbc_sets(M, ell))}
    rows = [[Fraction(0)] * (len(basis) + 1) for _ in idx]
    for k, col in enumerate(cols):
        for I, c in col.items():
            rows[idx[I]][k] = c
    for I, c in target.items():
        rows[idx[I]][-1] = c
    ech, piv = row_echelon(rows)
    if len(basis) in piv or len(piv) != len(basis):
        raise InconsistentSystem("family does not determine the expansion")
    x = [Fraction(0)] * len(basis)
    for r in range(len(piv) - 1, -1, -1):
        c = piv[r]
        s = ech[r][-1] - sum(ech[r][k] * x[k] for k in range(c + 1, len(basis)))
        x[c] = s / ech[r][c]
    return {b: v for b, v in zip(basis, x) if v}


def proportional(f, g):
    """Nonzero scalar c with f = c * g, or None."""
    if not f or not g or set(f.terms) != set(g.terms):
        return None
    X = next(iter(g.terms))
    c = f.terms[X] / g.terms[X]
    return c if f == g * c else None


def nested_unidependent_pairs(M, max_size):
    """Pairs (U', U) of unidependent sets with U' a proper subset of U."""
    unis = [U for k in range(1, max_size + 1) for U in combinations(M.ground, k)
            if is_unidependent(M, U)]
    return [(a, b) for b in unis for a in unis if len(a) < len(b) and set(a) <= set(b)]


def unidependent_axiom_failures(M, chi, beta=None, max_size=5):
    """Nested unidependent pairs where the boundary of U is not a nonzero
    multiple of boundary(U') * e_{U - U'}; empty when the axiom holds."""
    beta = beta or beta_for(chi)
    bad = []
    for a, b in nested_unidependent_pairs(M, max_size):
        rest = tuple(sorted(set(b) - set(a)))
        rhs = boundary(chi, a).mul(AlgebraElement({rest: 1}), beta)
        if proportional(boundary(chi, b), rhs) is None:
            bad.append((a, b))
    return bad
