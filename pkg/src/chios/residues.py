"""Deletion and contraction of chi-maps, iterated residues and diagonal bases.

Minors are relabeled to 1..n-1; every public function here takes and returns
original labels, translating through the ``labels`` tuples internally.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .algebra import (
    AlgebraElement,
    algebra_dimension,
    beta_for,
    ideal_degree_basis,
    reduces_to_zero,
)
from .errors import (
    DependentInput,
    LoopContraction,
    NotAffineNormalized,
    NotDiagonal,
    NotSimple,
    SizeMismatch,
)
from .matroid import (
    align_to_flag,
    contract,
    delete,
    flag_chain,
    is_independent,
    nbc_sets,
)
from .realization import ChiMap, chi_ot, circuits_from_vectors


# -- minors of chi-maps -----------------------------------------------------


def _labels_without(n, x):
    return tuple(e for e in range(1, n + 1) if e != x)


def chi_delete(chi, x):
    """chi on M \\ x: plain restriction, relabeled to 1..n-1."""
    labels = _labels_without(chi.n, x)

    def ev(key):
        return chi(tuple(labels[k - 1] for k in key))

    return ChiMap(chi.kind, chi.n - 1, ev, chi.beta_mode)


def chi_contract(chi, x):
    """chi on M / x: X maps to chi(X followed by x), relabeled."""
    if chi((x,)) == 0:
        raise LoopContraction(f"cannot contract loop {x}")
    labels = _labels_without(chi.n, x)

    def ev(key):
        return chi(tuple(labels[k - 1] for k in key) + (x,))

    return ChiMap(chi.kind, chi.n - 1, ev, chi.beta_mode)


def _parallel_to(M, x, I):
    return [y for y in I if y != x and (min(x, y), max(x, y)) in M.circuits]


def residue_step(M, chi, x, I):
    """Image of e_I under the residue map at x, as ``(coefficient, monomial)``.

    The monomial is sorted and named in the original labels (x removed);
    ``(0, None)`` when the image is zero.
    """
    if chi((x,)) == 0 or (x,) in M.circuits:
        raise LoopContraction(f"cannot contract loop {x}")
    I = tuple(sorted(I))
    if not is_independent(M, I):
        raise DependentInput(f"{I} is dependent")
    return _step(M, chi, x, I)


def _step(M, chi, x, I):
    if x in I:
        return Fraction(1), tuple(e for e in I if e != x)
    par = _parallel_to(M, x, I)
    if not par:
        return Fraction(0), None
    y = par[0]
    rest = tuple(e for e in I if e != y)
    return chi(rest + (x,)) / chi(rest + (y,)), rest


def residue_map(M, chi, x, f):
    """Residue map at x applied linearly to an element of A_Phi.

    Dependent monomials are zero in the algebra and are sent to zero.
    Returns the image in original labels (x removed).
    """
    out = {}
    for X, c in f.terms.items():
        if not is_independent(M, X):
            continue
        k, Y = _step(M, chi, x, X)
        if k:
            out[Y] = out.get(Y, 0) + c * k
    return AlgebraElement(out)


# -- flags and iterated residues --------------------------------------------


@dataclass(frozen=True)
class Flag:
    chain: tuple

    def __len__(self):
        return len(self.chain)


def flag(M, word):
    """Flag of an ordered independent set, read from its last entry."""
    word = tuple(word)
    if len(set(word)) != len(word) or not is_independent(M, word):
        raise DependentInput(f"{word} is dependent")
    return Flag(flag_chain(M, word))


def _check_pair(M, word, J):
    word, J = tuple(word), tuple(sorted(J))
    if len(word) != len(J):
        raise SizeMismatch(f"|{word}| != |{J}|")
    for S in (word, J):
        if len(set(S)) != len(S) or not is_independent(M, S):
            raise DependentInput(f"{S} is dependent")
    return word, J


def iterated_residue(M, chi, word, J):
    """Iterated residue along ``word`` evaluated on e_J.

    The residue at the last entry is applied first, inside M; the next one
    acts in the contraction, and so on down to the first entry.
    """
    word, J = _check_pair(M, word, J)
    coeff = Fraction(1)
    mono = J
    labels = M.ground  # labels[i - 1] = original name of current element i
    cur_M, cur_chi = M, chi
    rename = {e: e for e in M.ground}  # original -> current
    for x in reversed(word):
        cx = rename[x]
        cur_I = tuple(sorted(rename[e] for e in mono))
        if not is_independent(cur_M, cur_I):
            return Fraction(0)
        k, img = _step(cur_M, cur_chi, cx, cur_I)
        if not k:
            return Fraction(0)
        coeff *= k
        mono = tuple(labels[i - 1] for i in img)
        cur_M, sub = contract(cur_M, cx)
        cur_chi = chi_contract(cur_chi, cx)
        labels = tuple(labels[i - 1] for i in sub)
        rename = {orig: i + 1 for i, orig in enumerate(labels)}
    return coeff


def iterated_residue_closed(M, chi, word, J):
    """Closed form chi(word) / chi(J^tau) for the unique tau matching flags."""
    word, J = _check_pair(M, word, J)
    Jt = align_to_flag(M, J, flag_chain(M, word))
    return Fraction(0) if Jt is None else chi(word) / chi(Jt)


# -- diagonal bases ---------------------------------------------------------


def perm_from_cycles(text, ell):
    """One-line form of a permutation of 1..ell written in cycle notation,
    e.g. ``(132)`` or ``(1,3,2)(4,5)``; ``id`` is the identity."""
    img = list(range(1, ell + 1))
    text = text.strip()
    if text in ("", "id"):
        return tuple(img)
    for part in text.replace(")", " ").split("("):
        part = part.strip()
        if not part:
            continue
        cyc = [int(t) for t in (part.split(",") if "," in part else part)]
        if any(not 1 <= a <= ell for a in cyc) or len(set(cyc)) != len(cyc):
            raise ValueError(f"bad cycle ({part}) for a permutation of 1..{ell}")
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b
    if sorted(img) != list(range(1, ell + 1)):
        raise ValueError(f"{text!r} is not a permutation of 1..{ell}")
    return tuple(img)


def apply_perm(I, sigma):
    """The word I^sigma = (i_sigma(1), ..., i_sigma(l)) for one-line sigma."""
    I = tuple(sorted(I))
    if sorted(sigma) != list(range(1, len(I) + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{len(I)}")
    return tuple(I[s - 1] for s in sigma)


@dataclass(frozen=True)
class DiagonalBasisCandidate:
    """Ordered independent sets, one word per underlying set."""

    words: tuple
    sets: tuple = field(init=False)

    def __post_init__(self):
        words = tuple(tuple(w) for w in self.words)
        object.__setattr__(self, "words", words)
        object.__setattr__(self, "sets", tuple(tuple(sorted(w)) for w in words))
        if len(set(self.sets)) != len(self.sets):
            raise ValueError("repeated set in candidate")
        if len({len(w) for w in words}) > 1:
            raise SizeMismatch("candidate entries differ in size")
        for w in words:
            if len(set(w)) != len(w):
                raise ValueError(f"word {w} repeats an element")

    @classmethod
    def from_sets(cls, sets, sigmas=None):
        sets = [tuple(sorted(s)) for s in sets]
        sigmas = sigmas or {}
        words = []
        for s in sets:
            sigma = sigmas.get(s, tuple(range(1, len(s) + 1)))
            words.append(apply_perm(s, sigma))
        return cls(tuple(words))

    @property
    def degree(self):
        return len(self.words[0]) if self.words else 0

    def to_json(self):
        return {"entries": [{"set": list(s), "word": list(w)} for s, w in zip(self.sets, self.words)]}

    @classmethod
    def from_json(cls, data):
        words = []
        for e in data["entries"]:
            if "word" in e:
                words.append(tuple(e["word"]))
            else:
                s = tuple(sorted(e["set"]))
                sig = e.get("sigma", "id")
                if isinstance(sig, list):
                    words.append(apply_perm(s, tuple(sig)))
                else:
                    words.append(apply_perm(s, perm_from_cycles(sig, len(s))))
        return cls(tuple(words))


def nbc_candidate(M, ell, order=None):
    return DiagonalBasisCandidate.from_sets(nbc_sets(M, ell, order))


def diagonal_conditions(M, chi, cand):
    """Report on the three conditions: independence of every entry, enough
    entries, and no two entries sharing a flag under some reordering."""
    ell = cand.degree
    indep = all(is_independent(M, w) for w in cand.words)
    dim = len(nbc_sets(M, ell))
    enough = len(cand.words) >= dim
    clash = None
    if indep:
        flags = [flag_chain(M, w) for w in cand.words]
        for a, I in enumerate(cand.words):
            for b, J in enumerate(cand.words):
                if a == b:
                    continue
                if any(flag_chain(M, t) == flags[a] for t in permutations(J)
                       if is_independent(M, t)):
                    clash = (I, J)
                    break
            if clash:
                break
    return {"independent": indep, "size": len(cand.words), "dim": dim,
            "enough": enough, "separating": indep and clash is None, "clash": clash}


def is_diagonal_basis(M, chi, cand):
    r = diagonal_conditions(M, chi, cand)
    return r["independent"] and r["enough"] and r["separating"]


def dual_pairing_matrix(M, chi, cand):
    """Matrix of iterated residues [p_{I^sigma_I}(e_J)] over entries I, J."""
    if not is_diagonal_basis(M, chi, cand):
        raise NotDiagonal("candidate is not a diagonal basis")
    return [[iterated_residue(M, chi, w, J) for J in cand.sets] for w in cand.words]


def expand_in_diagonal_basis(M, chi, cand, J):
    """Coefficients of e_J over the candidate's sets, by iterated residues."""
    J = tuple(sorted(J))
    if not is_independent(M, J):
        raise DependentInput(f"{J} is dependent")
    out = {}
    for w, s in zip(cand.words, cand.sets):
        c = iterated_residue(M, chi, w, J)
        if c:
            out[s] = c
    return out


# -- the split exact sequence -----------------------------------------------


@dataclass
class ExactSequenceReport:
    element: int
    rows: list  # (ell, dim M, dim M\x, dim M/x at ell-1)
    failures: list

    @property
    def ok(self):
        return not self.failures


def exact_sequence_check(M, chi, x, beta=None):
    """Check the split sequence 0 -> A(M\\x) -> A(M) -> A(M/x) -> 0 at x.

    Uses the order with x last.  Checked per degree: the nbc partition, the
    dimension identity against the linear-algebra dimensions, vanishing of
    the residue on the image of the inclusion, that the splitting
    e_I -> e_{I+x} is a right inverse, and that the residue map sends the
    ideal of M into the ideal of M / x.
    """
    if not M.is_simple():
        raise NotSimple("exact sequence check needs a simple matroid")
    beta = beta or beta_for(chi)
    order = tuple(e for e in M.ground if e != x) + (x,)
    Md, dl = delete(M, x)
    Mc, cl = contract(M, x)
    chi_d, chi_c = chi_delete(chi, x), chi_contract(chi, x)
    rows, failures = [], []
    for ell in range(M.n + 1):
        big = set(nbc_sets(M, ell, order))
        left = {tuple(dl[i - 1] for i in I) for I in nbc_sets(Md, ell)}
        right = set()
        if ell:
            right = {tuple(sorted(tuple(cl[i - 1] for i in I) + (x,))) for I in nbc_sets(Mc, ell - 1)}
        if left & right or big != left | right:
            failures.append((ell, "nbc partition"))
        dims = (
            algebra_dimension(M, chi, beta, ell),
            algebra_dimension(Md, chi_d, beta, ell),
            algebra_dimension(Mc, chi_c, beta, ell - 1) if ell else 0,
        )
        rows.append((ell,) + dims)
        if dims[0] != dims[1] + dims[2] or dims[0] != len(big):
            failures.append((ell, "dimension"))
        for I in left:
            if residue_step(M, chi, x, I)[0]:
                failures.append((ell, f"residue of inclusion at {I}"))
        for I in right:
            k, img = residue_step(M, chi, x, I)
            if k != 1 or img != tuple(e for e in I if e != x):
                failures.append((ell, f"splitting at {I}"))
        if ell:
            back = {e: i + 1 for i, e in enumerate(cl)}
            for g in ideal_degree_basis(M, chi, beta, ell):
                img = residue_map(M, chi, x, g)
                rel = AlgebraElement({tuple(back[e] for e in X): c for X, c in img.terms.items()})
                if rel and not reduces_to_zero(Mc, chi_c, beta, rel):
                    failures.append((ell, f"ideal not preserved: {g}"))
    return ExactSequenceReport(x, rows, failures)


# -- affine configurations --------------------------------------------------


def residue_sum_check(V, cand, J, M=None, chi=None):
    """Sum of the coefficients of e_J over a diagonal basis of the
    determinant algebra of an affine configuration."""
    if not V.is_affine():
        raise NotAffineNormalized("some vector has last coordinate other than 1")
    M = M or circuits_from_vectors(V)
    chi = chi or chi_ot(V, M)
    return sum(expand_in_diagonal_basis(M, chi, cand, J).values(), Fraction(0))
