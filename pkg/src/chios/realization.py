"""Vector configurations, their matroids, and the classical chi-maps.

A chi-map is stored as an evaluator on *sorted* element tuples; calling the
:class:`ChiMap` on any word applies the antisymmetry rule
``chi(X^sigma) = sgn(sigma) * chi(X)``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
import json

from . import linalg
from .errors import NotAFlat, ParseError
from .matroid import (
    closure,
    is_flat,
    is_independent,
    matroid_from_circuits,
    rank,
    to_mask,
)


def sort_sign(word):
    """Return (sign of the sorting permutation, sorted tuple); sign 0 on repeats."""
    word = tuple(word)
    if len(set(word)) != len(word):
        return 0, tuple(sorted(set(word)))
    inv = sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])
    return (-1 if inv % 2 else 1), tuple(sorted(word))


@dataclass(frozen=True)
class VectorConfig:
    d: int
    vectors: tuple

    def __post_init__(self):
        vs = tuple(tuple(linalg.as_fraction(x) for x in v) for v in self.vectors)
        for i, v in enumerate(vs, 1):
            if len(v) != self.d:
                raise ValueError(f"vector {i} has dimension {len(v)}, expected {self.d}")
        object.__setattr__(self, "vectors", vs)

    @property
    def n(self):
        return len(self.vectors)

    def vector(self, i):
        return self.vectors[i - 1]

    def is_affine(self):
        return all(v[-1] == 1 for v in self.vectors)


def parse_vectors(text):
    """Parse ``n d`` followed by ``n`` lines of ``d`` rationals (``p/q`` or ints)."""
    lines = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((no, line))
    if not lines:
        raise ParseError("empty vector file")
    no, head = lines[0]
    try:
        n, d = (int(t) for t in head.split())
    except ValueError:
        raise ParseError(f"expected 'n d', got {head!r}", no) from None
    if len(lines) - 1 != n:
        raise ParseError(f"header announces {n} vectors, found {len(lines) - 1}", no)
    vectors = []
    for no, line in lines[1:]:
        toks = line.split()
        if len(toks) != d:
            raise ParseError(f"expected {d} entries, got {len(toks)}", no)
        try:
            vectors.append([Fraction(t) for t in toks])
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad rational in {line!r}", no) from None
    return VectorConfig(d, vectors)


def format_vectors(V):
    out = [f"{V.n} {V.d}"]
    out += [" ".join(str(x) for x in v) for v in V.vectors]
    return "\n".join(out) + "\n"


def _vec_rank(vs):
    return linalg.rank([list(v) for v in vs]) if vs else 0


def circuits_from_vectors(V):
    """Matroid of minimal supports of linear dependencies among the vectors."""
    found = []
    masks = []
    for size in range(1, min(V.n, V.d + 1) + 1):
        for S in combinations(range(1, V.n + 1), size):
            m = to_mask(S)
            if any(c & ~m == 0 for c in masks):
                continue
            if _vec_rank([V.vector(i) for i in S]) < size:
                found.append(S)
                masks.append(m)
    return matroid_from_circuits(V.n, found)


class FlatBasisAssignment:
    """Choice of an ordered basis for the span of each flat.

    Flats not listed explicitly get the default: the lexicographically least
    independent subset of the flat, its vectors in increasing index order.
    """

    def __init__(self, V, M, explicit=None):
        self.V = V
        self.M = M
        self.explicit = {}
        for F, basis in (explicit or {}).items():
            F = tuple(sorted(F))
            basis = [tuple(linalg.as_fraction(x) for x in b) for b in basis]
            self._validate(F, basis)
            self.explicit[F] = basis

    def _validate(self, F, basis):
        if not is_flat(self.M, F):
            raise NotAFlat(f"{F} is not a flat")
        r = rank(self.M, F)
        span = [self.V.vector(f) for f in F]
        if len(basis) != r or _vec_rank(basis) != r or _vec_rank(span + basis) != r:
            raise ValueError(f"basis for flat {F} does not span it exactly")

    def basis(self, F):
        F = tuple(sorted(F))
        if F in self.explicit:
            return self.explicit[F]
        return [self.V.vector(i) for i in flat_basis_indices(self.V, self.M, F)]


def flat_basis_indices(V, M, F):
    F = tuple(sorted(F))
    if not is_flat(M, F):
        raise NotAFlat(f"{F} is not a flat")
    r = rank(M, F)
    for S in combinations(F, r):
        if is_independent(M, S):
            return S
    raise AssertionError("flat without a basis")


def flat_basis(V, M, F):
    """Lex-least spanning independent subset of the flat, as vectors."""
    return [V.vector(i) for i in flat_basis_indices(V, M, F)]


def load_flat_basis(V, M, path):
    """Read ``{"flats": [{"flat": [...], "basis": [[...], ...]}, ...]}``."""
    with open(path) as fh:
        data = json.load(fh)
    explicit = {tuple(e["flat"]): e["basis"] for e in data.get("flats", [])}
    return FlatBasisAssignment(V, M, explicit)


@dataclass(frozen=True, eq=False)
class ChiMap:
    kind: str
    n: int
    evaluator: object = field(repr=False)
    beta_mode: str = "commutative"

    def __call__(self, word):
        word = tuple(word)
        for x in word:
            if not 1 <= x <= self.n:
                raise ValueError(f"element {x} not in 1..{self.n}")
        s, key = sort_sign(word)
        if s == 0:
            return Fraction(0)
        return s * self.evaluator(key)

    def sign(self, word):
        v = self(word)
        return (v > 0) - (v < 0)


def chi_os(M):
    """Orlik-Solomon: chi(I^sigma) = sgn(sigma) on independents."""

    def ev(key):
        return Fraction(1) if is_independent(M, key) else Fraction(0)

    return ChiMap("os", M.n, lru_cache(maxsize=None)(ev), "exterior")


def _restricted_rows(basis):
    """Coordinates (row indices) on which the basis has a nonzero square minor."""
    ell = len(basis)
    d = len(basis[0]) if basis else 0
    for R in combinations(range(d), ell):
        minor = [[b[r] for r in R] for b in basis]
        val = linalg.det(minor)
        if val:
            return R, val
    raise ValueError("degenerate flat basis")


def chi_ot(V, M=None, B=None):
    """Orlik-Solomon-Terao: determinant of coordinates in the flat's basis."""
    if M is None:
        M = circuits_from_vectors(V)
    if B is None:
        B = FlatBasisAssignment(V, M)

    def ev(key):
        if not key:
            return Fraction(1)
        if not is_independent(M, key):
            return Fraction(0)
        R, den = _restricted_rows(B.basis(closure(M, key)))
        num = linalg.det([[V.vector(i)[r] for r in R] for i in key])
        return num / den

    return ChiMap("ot", M.n, lru_cache(maxsize=None)(ev), "commutative")


def chi_cordovil(V, M=None, B=None):
    """Cordovil: sign of the Orlik-Solomon-Terao determinant."""
    ot = chi_ot(V, M, B)

    def ev(key):
        return Fraction(ot.sign(key))

    return ChiMap("cordovil", ot.n, ev, "commutative")


def chi_custom(n, values, beta_mode="commutative"):
    """Chi-map from explicit values on sorted sets; unlisted sets map to 0."""
    table = {tuple(sorted(k)): linalg.as_fraction(v) for k, v in values.items()}
    table.setdefault((), Fraction(1))

    def ev(key):
        return table.get(key, Fraction(0))

    return ChiMap("custom", n, ev, beta_mode)


def load_chi_file(n, path):
    """Read ``{"beta": ..., "values": [{"set": [...], "value": "p/q"}, ...]}``."""
    with open(path) as fh:
        data = json.load(fh)
    values = {tuple(e["set"]): e["value"] for e in data["values"]}
    return chi_custom(n, values, data.get("beta", "commutative"))
