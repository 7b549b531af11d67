"""Matroids given by their circuits.

Element-sets are passed in as any iterable of ints in ``1..n`` and returned as
ascending tuples.  Internally subsets are Python ints used as bitmasks (bit
``i`` is element ``i``), which keeps subset tests to a single ``&``.

A *term order permutation* is given as a sequence listing the ground set from
smallest to largest, e.g. ``(2, 3, 4, 5, 6, 1)`` makes 2 the least element and
1 the greatest.  ``None`` means the natural order.
"""

from dataclasses import dataclass, field
from itertools import combinations
import warnings

from .errors import (
    CircuitElimination,
    ComparableCircuits,
    ElementOutOfRange,
    LoopContraction,
    LoopPresent,
    NotUnidependent,
    ParseError,
)

ELIMINATION_CHECK_LIMIT = 12


def to_mask(X):
    m = 0
    for x in X:
        m |= 1 << x
    return m


def from_mask(m):
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


def popcount(m):
    return bin(m).count("1")


@dataclass(frozen=True)
class Matroid:
    n: int
    circuits: tuple
    # False when the circuit elimination axiom was not verified (n too large)
    elimination_checked: bool = True
    _masks: tuple = field(default=(), repr=False, compare=False)
    _indep: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_masks", tuple(to_mask(c) for c in self.circuits))
        object.__setattr__(self, "_indep", {})  # memo: mask -> independent?

    @property
    def ground(self):
        return tuple(range(1, self.n + 1))

    @property
    def full_mask(self):
        return to_mask(self.ground)

    @property
    def loops(self):
        return tuple(c[0] for c in self.circuits if len(c) == 1)

    @property
    def rank(self):
        return rank(self, self.ground)

    def is_loop_free(self):
        return not self.loops

    def is_simple(self):
        return all(len(c) > 2 for c in self.circuits)

    def __str__(self):
        cs = ", ".join("".join(map(str, c)) if self.n < 10 else str(c) for c in self.circuits)
        return f"Matroid(n={self.n}, circuits={{{cs}}})"


def _check_elements(n, X):
    for x in X:
        if not isinstance(x, int) or not 1 <= x <= n:
            raise ElementOutOfRange(f"element {x!r} not in 1..{n}")


def _satisfies_elimination(masks):
    mset = masks
    for a, b in combinations(mset, 2):
        common = a & b
        while common:
            low = common & -common
            union = (a | b) & ~low
            if not any(c & ~union == 0 for c in mset):
                return False
            common ^= low
    return True


def matroid_from_circuits(n, circuits, check_elimination=None):
    """Validate a circuit family and build the matroid.

    The elimination axiom is checked exhaustively for ``n <= 12`` (or when
    ``check_elimination`` is forced on); otherwise only incomparability is
    enforced and ``elimination_checked`` is False on the result.
    """
    cs = set()
    for c in circuits:
        c = tuple(sorted(set(c)))
        if not c:
            raise ValueError("empty circuit")
        _check_elements(n, c)
        cs.add(c)
    cs = sorted(cs, key=lambda c: (len(c), c))
    masks = [to_mask(c) for c in cs]
    for (i, a), (j, b) in combinations(enumerate(masks), 2):
        if a & b == a or a & b == b:
            raise ComparableCircuits(f"circuit {cs[i]} and circuit {cs[j]} are comparable")
    if check_elimination is None:
        check_elimination = n <= ELIMINATION_CHECK_LIMIT
    if check_elimination:
        if not _satisfies_elimination(masks):
            raise CircuitElimination("circuit family violates the elimination axiom")
    else:
        warnings.warn(f"elimination axiom not checked for n={n}", stacklevel=2)
    return Matroid(n, tuple(cs), bool(check_elimination))


def uniform_matroid(r, n):
    return matroid_from_circuits(n, combinations(range(1, n + 1), r + 1))


def free_matroid(n):
    return Matroid(n, ())


def _indep_mask(M, m):
    hit = M._indep.get(m)
    if hit is None:
        hit = M._indep[m] = not any(c & ~m == 0 for c in M._masks)
    return hit


def is_independent(M, X):
    return _indep_mask(M, to_mask(X))


def _rank_mask(M, m):
    basis = 0
    r = 0
    while m:
        low = m & -m
        m ^= low
        if _indep_mask(M, basis | low):
            basis |= low
            r += 1
    return r


def rank(M, X):
    return _rank_mask(M, to_mask(X))


def _closure_mask(M, m):
    r = _rank_mask(M, m)
    out = m
    for y in range(1, M.n + 1):
        b = 1 << y
        if not m & b and _rank_mask(M, m | b) == r:
            out |= b
    return out


def closure(M, X):
    return from_mask(_closure_mask(M, to_mask(X)))


def is_flat(M, X):
    m = to_mask(X)
    return _closure_mask(M, m) == m


def is_unidependent(M, U):
    return rank(M, U) == len(set(U)) - 1


def unique_circuit(M, U):
    """The single circuit inside a unidependent set."""
    m = to_mask(U)
    if _rank_mask(M, m) != popcount(m) - 1:
        raise NotUnidependent(f"{tuple(sorted(U))} is not unidependent")
    inside = [c for c in M._masks if c & ~m == 0]
    assert len(inside) == 1, "unidependent set holds more than one circuit"
    return from_mask(inside[0])


# -- orders -----------------------------------------------------------------


def check_order(n, order):
    if order is None:
        return tuple(range(1, n + 1))
    order = tuple(order)
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"{order} is not a permutation of 1..{n}")
    return order


def order_position(n, order):
    """Map element -> position (0 = least) under the order."""
    return {e: i for i, e in enumerate(check_order(n, order))}


def order_min(pos, X):
    return min(X, key=pos.__getitem__)


# -- broken circuits --------------------------------------------------------


def _broken(M, order):
    pos = order_position(M.n, order)
    out = []
    for c in M.circuits:
        if len(c) > 1:
            a = order_min(pos, c)
            out.append((c, a, tuple(e for e in c if e != a)))
    return out


def broken_circuits(M, order=None):
    """All order-broken circuits, as a sorted list of element tuples."""
    if M.loops:
        raise LoopPresent(f"matroid has loops {M.loops}")
    return sorted({b for _, _, b in _broken(M, order)}, key=lambda b: (len(b), b))


def _broken_masks(M, order):
    return [to_mask(b) for _, _, b in _broken(M, order)]


def is_nbc(M, X, order=None):
    m = to_mask(X)
    return _indep_mask(M, m) and not any(b & ~m == 0 for b in _broken_masks(M, order))


def nbc_sets(M, ell, order=None):
    """Independent ``ell``-sets containing no broken circuit, lex sorted."""
    bms = _broken_masks(M, order)
    out = []
    for X in combinations(M.ground, ell):
        m = to_mask(X)
        if _indep_mask(M, m) and not any(b & ~m == 0 for b in bms):
            out.append(X)
    return out


def minimal_broken_circuit_circuits(M, order=None):
    """Circuits whose broken circuit is inclusion-minimal.

    When several circuits share the same minimal broken circuit ``B`` (this
    happens as soon as a line carries four points) only the one whose removed
    element is the least element of ``cl(B) - B`` is kept, so the broken
    circuits of the result are pairwise distinct and incomparable.
    """
    if M.loops:
        raise LoopPresent(f"matroid has loops {M.loops}")
    pos = order_position(M.n, order)
    data = _broken(M, order)
    bms = [to_mask(b) for _, _, b in data]
    out = []
    for (c, a, b), bm in zip(data, bms):
        if any(o != bm and o & ~bm == 0 for o in bms):
            continue
        rest = from_mask(_closure_mask(M, bm) & ~bm)
        if order_min(pos, rest) == a:
            out.append(c)
    return sorted(out, key=lambda c: (len(c), c))


def active_elements(M, I, order=None):
    """Elements of cl(I) - I that are the least element of their circuit in I + a."""
    pos = order_position(M.n, order)
    m = to_mask(I)
    out = []
    for a in from_mask(_closure_mask(M, m) & ~m):
        c = unique_circuit(M, from_mask(m | 1 << a))
        if order_min(pos, c) == a:
            out.append(a)
    return out


def inactive_unidependents(M, ell, order=None):
    """Size-``ell`` unidependents U whose circuit minimum is the least active
    element of ``U - min C(U)``.  Only circuits of size > 1 are considered."""
    pos = order_position(M.n, order)
    out = []
    for U in combinations(M.ground, ell):
        m = to_mask(U)
        if _rank_mask(M, m) != ell - 1:
            continue
        c = unique_circuit(M, U)
        if len(c) < 2:
            continue
        alpha = order_min(pos, c)
        act = active_elements(M, [u for u in U if u != alpha], order)
        if act and order_min(pos, act) == alpha:
            out.append(U)
    return out


def dependent_sets(M, ell):
    return [X for X in combinations(M.ground, ell) if not is_independent(M, X)]


def independent_sets(M, ell):
    return [X for X in combinations(M.ground, ell) if is_independent(M, X)]


# -- flags ------------------------------------------------------------------


def flag_chain(M, word):
    """Closures of the growing suffixes of ``word``: cl{w_p}, cl{w_p, w_p-1}, ..."""
    word = tuple(word)
    return tuple(closure(M, word[k:]) for k in range(len(word) - 1, -1, -1))


def align_to_flag(M, J, chain):
    """The unique ordering of ``J`` whose flag is ``chain``, or None.

    An ordering exists iff ``J`` meets the k-th flat in exactly k elements;
    the element entering at step k is then forced.
    """
    J = set(J)
    if len(J) != len(chain):
        return None
    rev = []
    seen = set()
    for F in chain:
        hit = J.intersection(F)
        if len(hit) != len(seen) + 1 or not seen <= hit:
            return None
        (new,) = hit - seen
        rev.append(new)
        seen = hit
    return tuple(reversed(rev))


# -- minors -----------------------------------------------------------------


def _relabel(M, x, circuits):
    labels = tuple(e for e in M.ground if e != x)
    new = {old: i + 1 for i, old in enumerate(labels)}
    cs = [tuple(new[e] for e in c) for c in circuits]
    check = M.elimination_checked and M.n - 1 <= ELIMINATION_CHECK_LIMIT
    return matroid_from_circuits(M.n - 1, cs, check_elimination=check), labels


def delete(M, x):
    """Deletion M \\ x, relabeled to 1..n-1.

    Returns ``(minor, labels)`` with ``labels[i - 1]`` the original name of
    minor element ``i``.
    """
    _check_elements(M.n, [x])
    return _relabel(M, x, [c for c in M.circuits if x not in c])


def contract(M, x):
    """Contraction M / x, relabeled like :func:`delete`."""
    _check_elements(M.n, [x])
    if (x,) in M.circuits:
        raise LoopContraction(f"cannot contract loop {x}")
    cand = {to_mask(c) & ~(1 << x) for c in M.circuits}
    minimal = [m for m in cand if not any(o != m and o & ~m == 0 for o in cand)]
    return _relabel(M, x, sorted(from_mask(m) for m in minimal))


# -- text format ------------------------------------------------------------


def _content_lines(text):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def parse_circuits(text):
    """Parse the circuit-list format: ``n k`` then ``k`` circuit lines."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty circuit file")
    no, head = lines[0]
    try:
        n, k = (int(t) for t in head.split())
    except ValueError:
        raise ParseError(f"expected 'n k', got {head!r}", no) from None
    body = lines[1:]
    if len(body) != k:
        raise ParseError(f"header announces {k} circuits, found {len(body)}", no)
    circuits = []
    for no, line in body:
        try:
            c = [int(t) for t in line.split()]
        except ValueError:
            raise ParseError(f"bad circuit line {line!r}", no) from None
        if any(not 1 <= e <= n for e in c):
            raise ParseError(f"element out of range 1..{n} in {line!r}", no)
        circuits.append(c)
    return matroid_from_circuits(n, circuits)


def format_circuits(M):
    lines = [f"{M.n} {len(M.circuits)}"]
    lines += [" ".join(map(str, c)) for c in M.circuits]
    return "\n".join(lines) + "\n"
