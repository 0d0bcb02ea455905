"""
Tests and searches for membership in the group of mapping classes that extend to the handlebody
while preserving the trivial arcs ``A_1, ..., A_n``.

Three necessary conditions are available, cheapest first: the induced puncture permutation must
preserve the pairs ``{2k-1, 2k}``; the homology action must keep the span of the meridians; the
automorphism must preserve the kernel of the map onto the fundamental group of the handlebody
minus the arcs. A bounded meet-in-the-middle search over products of generators supplies
positive certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence, Union

from .automorphism import Automorphism
from .generators import MappingClass, format_word, generating_set, table
from .surface import Signature
from .words import Letters, conjugacy_key, mul, reduce_letters

PAIR_PARTITION = "PairPartitionViolated"
LAGRANGIAN = "LagrangianViolated"
KERNEL = "HandlebodyKernelViolated"


# ---- permutations -----------------------------------------------------------------------------


def sigma_prime_member(perm: Sequence[int], n: int) -> bool:
    """Does the permutation (``perm[j-1]`` = image of ``j``) preserve the pairs ``{2k-1, 2k}``?"""
    if sorted(perm) != list(range(1, 2 * n + 1)):
        raise ValueError(f"not a permutation of 1..{2 * n}")
    return all((perm[2 * k] + 1) // 2 == (perm[2 * k + 1] + 1) // 2 for k in range(n))


def _compose_perm(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """``p o q``: apply ``q`` first."""
    return tuple(p[q[j] - 1] for j in range(len(q)))


def sigma_prime_generators(n: int) -> list[tuple[int, ...]]:
    """The transposition ``(1 2)`` and the pair swaps ``(2i-1 2i+1)(2i 2i+2)``."""
    gens = []
    t = list(range(1, 2 * n + 1))
    t[0], t[1] = 2, 1
    gens.append(tuple(t))
    for i in range(1, n):
        s = list(range(1, 2 * n + 1))
        a, b, c, d = 2 * i - 1, 2 * i, 2 * i + 1, 2 * i + 2
        s[a - 1], s[c - 1], s[b - 1], s[d - 1] = c, a, d, b
        gens.append(tuple(s))
    return gens


def enumerate_subgroup(gens: Iterable[tuple[int, ...]], size: int) -> set[tuple[int, ...]]:
    """Closure of the generators inside the symmetric group on ``size`` letters."""
    gens = list(gens)
    ident = tuple(range(1, size + 1))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = _compose_perm(g, p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def verify_sigma_prime(n: int) -> bool:
    """Exhaustively compare the pair-partition test with the subgroup spanned by the generators."""
    group = enumerate_subgroup(sigma_prime_generators(n), 2 * n)
    for p in permutations(range(1, 2 * n + 1)):
        if (p in group) != sigma_prime_member(p, n):
            return False
    return True


# ---- homology and kernel tests ----------------------------------------------------------------


def lagrangian_test(matrix: Sequence[Sequence[int]], sig: Signature) -> bool:
    """Rows are abelianised generator images. Meridian rows must have no ``a``-components."""
    for i in range(1, sig.genus + 1):
        row = matrix[sig.b(i) - 1]
        if any(row[sig.a(j) - 1] for j in range(1, sig.genus + 1)):
            return False
    return True


def handlebody_quotient(sig: Signature, w: Sequence[int]) -> Letters:
    """Image in the free group on ``x_1..x_g, m_1..m_n`` (letters ``1..g`` and ``g+1..g+n``).

    The meridian ``b_i`` dies, ``a_i`` becomes ``x_i``, the loop around ``P_k1`` becomes the arc
    meridian ``m_k`` and the loop around ``P_k2`` becomes ``m_k^-1``.
    """
    g = sig.genus
    out: list[int] = []
    for x in w:
        y, s = abs(x), (1 if x > 0 else -1)
        if y <= 2 * g:
            if y % 2 == 1:
                out.append(s * ((y + 1) // 2))
        else:
            j = y - 2 * g
            k = (j + 1) // 2
            out.append(s * (g + k) if j % 2 == 1 else -s * (g + k))
    return reduce_letters(out)


def kernel_generators(sig: Signature) -> list[Letters]:
    """Normal generators of the kernel of :func:`handlebody_quotient`."""
    from .curves import arc_boundary

    return [(sig.b(i),) for i in range(1, sig.genus + 1)] + [
        arc_boundary(sig, k) for k in range(1, sig.arcs + 1)
    ]


def kernel_test(f: Automorphism) -> bool:
    sig = f.sig
    return all(not handlebody_quotient(sig, f.apply(r)) for r in kernel_generators(sig))


# ---- certificates -----------------------------------------------------------------------------


@dataclass(frozen=True)
class Member:
    expression: tuple[tuple[str, int], ...]

    def __str__(self):
        return f"Member({format_word(self.expression)})"


@dataclass(frozen=True)
class Refuted:
    reason: str

    def __str__(self):
        return f"Refuted({self.reason})"


@dataclass(frozen=True)
class Unknown:
    depth: int

    def __str__(self):
        return f"Unknown(depth={self.depth})"


Certificate = Union[Member, Refuted, Unknown]
Query = Union[MappingClass, Automorphism]


def _as_automorphism(q: Query) -> Automorphism:
    return q.automorphism if isinstance(q, MappingClass) else q


def refutation(f: Automorphism, pure: bool = False) -> str | None:
    """The first violated necessary condition, or ``None``."""
    sig = f.sig
    perm = f.induced_permutation()
    if not sigma_prime_member(perm, sig.arcs) or (pure and perm != tuple(range(1, sig.punctures + 1))):
        return PAIR_PARTITION
    if not lagrangian_test(f.homology_action(), sig):
        return LAGRANGIAN
    if not kernel_test(f):
        return KERNEL
    return None


def class_key(f: Automorphism) -> tuple:
    """Invariant of the outer class used to bucket candidates before an exact comparison."""
    sig = f.sig
    keys = [conjugacy_key(w) for w in f.images]
    for x in range(1, sig.rank):
        keys.append(conjugacy_key(mul(f.images[x - 1], f.images[x])))
    return tuple(keys)


class Searcher:
    """Balls of radius ``r`` in the generating set, bucketed by :func:`class_key`."""

    def __init__(self, sig: Signature, pure: bool):
        self.sig = sig
        self.pure = pure
        t = table(sig)
        names = generating_set(sig, pure)
        self.letters = []
        ident = Automorphism.identity(sig)
        for name in names:
            for k in (1, -1):
                f = t.power(name, k)
                if f.outer_equal(ident) is None:
                    self.letters.append(((name, k), f))
        self.levels: list[list[tuple[tuple, Automorphism]]] = [[((), ident)]]
        self.index: dict[tuple, list[tuple[tuple, Automorphism]]] = {class_key(ident): [((), ident)]}

    def _find(self, f: Automorphism):
        for word, h in self.index.get(class_key(f), ()):
            if f.outer_equal(h) is not None:
                return word
        return None

    def level(self, r: int) -> list[tuple[tuple, Automorphism]]:
        while len(self.levels) <= r:
            nxt = []
            for word, f in self.levels[-1]:
                for (name, k), g in self.letters:
                    if word and word[-1] == (name, -k):
                        continue
                    h = f @ g
                    if self._find(h) is not None:
                        continue
                    entry = (word + ((name, k),), h)
                    self.index.setdefault(class_key(h), []).append(entry)
                    nxt.append(entry)
            self.levels.append(nxt)
        return self.levels[r]

    def search(self, f: Automorphism, depth: int):
        for total in range(depth + 1):
            right = total // 2
            left = total - right
            self.level(left)
            for w2, g in self.level(right):
                target = f @ g.inverse()
                key = class_key(target)
                for w1, h in self.index.get(key, ()):
                    if len(w1) == left and target.outer_equal(h) is not None:
                        return w1 + w2
        return None


_searchers: dict[tuple[Signature, bool], Searcher] = {}


def searcher(sig: Signature, pure: bool) -> Searcher:
    key = (sig, pure)
    if key not in _searchers:
        _searchers[key] = Searcher(sig, pure)
    return _searchers[key]


def membership(query: Query, depth: int = 6, pure: bool = False) -> Certificate:
    f = _as_automorphism(query)
    reason = refutation(f, pure)
    if reason is not None:
        return Refuted(reason)
    word = searcher(f.sig, pure).search(f, depth)
    if word is None:
        return Unknown(depth)
    if table(f.sig).evaluate(word).outer_equal(f) is None:  # pragma: no cover - soundness guard
        raise AssertionError("search returned an expression that does not re-verify")
    return Member(_collapse(word))


def _collapse(word) -> tuple[tuple[str, int], ...]:
    out: list[tuple[str, int]] = []
    for name, k in word:
        if out and out[-1][0] == name:
            e = out[-1][1] + k
            out.pop()
            if e:
                out.append((name, e))
        else:
            out.append((name, k))
    return tuple(out)


def coset_equivalent(phi: Query, psi: Query, depth: int = 6) -> Certificate:
    """Do ``phi`` and ``psi`` lie in the same left coset, i.e. is ``phi^-1 psi`` a member?"""
    f, g = _as_automorphism(phi), _as_automorphism(psi)
    return membership(f.inverse() @ g, depth, pure=False)
