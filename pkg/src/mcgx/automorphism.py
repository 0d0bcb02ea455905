"""
Automorphisms of the free group ``pi_1(T_g - P_2n)`` and the invariants of the mapping classes
they represent.

Composition follows function composition: ``phi @ psi`` applies ``psi`` first. Two
automorphisms represent the same mapping class when they differ by an inner automorphism, which
:meth:`Automorphism.outer_equal` decides exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .surface import Signature
from .words import (
    Letters,
    Word,
    conjugacy_key,
    conjugator_letters,
    cyclic_split,
    inv,
    mul,
    power,
    root,
)


class NotInvertible(ValueError):
    pass


@dataclass(frozen=True)
class Move:
    """An invertible basic move: generator images together with the images of its inverse."""

    name: str
    images: tuple[Letters, ...]
    inverse_images: tuple[Letters, ...]


def substitute(images: Sequence[Letters], w: Sequence[int]) -> Letters:
    out: list[int] = []
    for x in w:
        piece = images[x - 1] if x > 0 else inv(images[-x - 1])
        for y in piece:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Automorphism:
    sig: Signature
    images: tuple[Letters, ...]
    moves: tuple[tuple[Move, int], ...] | None = None

    def __post_init__(self):
        if len(self.images) != self.sig.rank:
            raise ValueError(f"expected {self.sig.rank} images, got {len(self.images)}")

    @classmethod
    def identity(cls, sig: Signature) -> Automorphism:
        return cls(sig, tuple((x,) for x in range(1, sig.rank + 1)), ())

    @classmethod
    def from_move(cls, sig: Signature, move: Move, exponent: int = 1) -> Automorphism:
        base = cls(sig, move.images if exponent > 0 else move.inverse_images, ((move, 1 if exponent > 0 else -1),))
        out = cls.identity(sig)
        for _ in range(abs(exponent)):
            out = out @ base
        return out

    def apply(self, w):
        if isinstance(w, Word):
            if w.rank != self.sig.rank:
                raise ValueError("alphabet mismatch")
            return Word(substitute(self.images, w.letters), w.rank)
        return substitute(self.images, w)

    def __matmul__(self, other: Automorphism) -> Automorphism:
        if other.sig != self.sig:
            raise ValueError(f"signature mismatch: {self.sig} vs {other.sig}")
        moves = None
        if self.moves is not None and other.moves is not None:
            moves = self.moves + other.moves
        return Automorphism(self.sig, tuple(substitute(self.images, w) for w in other.images), moves)

    compose = __matmul__

    def inverse(self) -> Automorphism:
        if self.moves is None:
            raise NotInvertible("only automorphisms built from basic moves can be inverted")
        out = Automorphism.identity(self.sig)
        for move, e in reversed(self.moves):
            out = out @ Automorphism(self.sig, move.inverse_images if e > 0 else move.images, ((move, -e),))
        return out

    def __pow__(self, k: int) -> Automorphism:
        base = self if k >= 0 else self.inverse()
        out = Automorphism.identity(self.sig)
        for _ in range(abs(k)):
            out = out @ base
        return out

    def conjugate_by(self, h: Automorphism) -> Automorphism:
        """``h . self . h^-1``."""
        return h @ self @ h.inverse()

    def inner(self, t: Letters) -> Automorphism:
        """``inn_t . self``."""
        ti = inv(t)
        moves = self.moves
        return Automorphism(self.sig, tuple(mul(t, w, ti) for w in self.images), None if t else moves)

    @property
    def size(self) -> int:
        return sum(len(w) for w in self.images)

    # ---- mapping class invariants -------------------------------------------------------

    @cached_property
    def _peripheral(self) -> list[int] | None:
        keys = self.sig.puncture_keys
        perm = []
        for j in range(1, self.sig.punctures + 1):
            k = conjugacy_key(self.apply(self.sig.u(j)))
            if k not in keys:
                return None
            perm.append(keys[k])
        return perm

    def is_mapping_class(self) -> bool:
        """Puncture loops go to conjugates of distinct puncture loops and the map is onto."""
        perm = self._peripheral
        if perm is None or sorted(perm) != list(range(1, self.sig.punctures + 1)):
            return False
        return self.moves is not None or is_surjective(self.images, self.sig.rank)

    def induced_permutation(self) -> tuple[int, ...]:
        """``perm[j-1]`` is the puncture that puncture ``j`` is carried to."""
        perm = self._peripheral
        if perm is None:
            raise ValueError("not a mapping class: a puncture loop leaves the peripheral classes")
        return tuple(perm)

    def homology_action(self) -> list[list[int]]:
        """Row ``i`` is the abelianised image of generator ``i``; ``M(f @ g) = M(g) M(f)``."""
        return [self.sig.abelianize(w) for w in self.images]

    def outer_equal(self, other: Automorphism) -> Letters | None:
        """Return ``t`` with ``self(x) = t other(x) t^-1`` for every generator, else ``None``."""
        if other.sig != self.sig:
            raise ValueError("signature mismatch")
        if self.images == other.images:
            return ()
        if self.sig.rank == 1:
            return None
        order = sorted(range(self.sig.rank), key=lambda i: (len(other.images[i]), i))
        x0 = next(i for i in order if other.images[i])
        w0, v0 = other.images[x0], self.images[x0]
        s = conjugator_letters(w0, v0)
        if s is None:
            return None
        core, whisker = cyclic_split(w0)
        z = mul(whisker, root(core), inv(whisker))
        bound = (self.size + other.size + 2 * len(s) + 2 * len(whisker)) // len(root(core)) + 2
        rest = [i for i in order if i != x0]
        for k in sorted(range(-bound, bound + 1), key=abs):
            t = mul(s, power(z, k))
            ti = inv(t)
            if all(mul(t, other.images[i], ti) == self.images[i] for i in rest):
                return t
        return None

    def __eq__(self, other):
        return isinstance(other, Automorphism) and self.sig == other.sig and self.images == other.images

    def __hash__(self):
        return hash((self.sig, self.images))

    def format(self) -> str:
        names = self.sig.names
        return ", ".join(f"{names[i]} -> {self.sig.format(w)}" for i, w in enumerate(self.images))


def is_surjective(images: Sequence[Letters], rank: int) -> bool:
    """Stallings folding: the images generate the free group iff they fold to the rank-r rose."""
    parent: list[int] = [0]
    out_edges: list[dict[int, int]] = [{}]

    def new_vertex() -> int:
        parent.append(len(parent))
        out_edges.append({})
        return len(parent) - 1

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    pending: list[tuple[int, int, int]] = []
    for w in images:
        if not w:
            continue
        v = 0
        for idx, x in enumerate(w):
            nxt = 0 if idx == len(w) - 1 else new_vertex()
            pending.append((v, x, nxt))
            v = nxt

    def add(u: int, x: int, v: int):
        stack = [(u, x, v)]
        while stack:
            u, x, v = stack.pop()
            u, v = find(u), find(v)
            for a, y, b in ((u, x, v), (v, -x, u)):
                a, b = find(a), find(b)
                c = out_edges[a].get(y)
                if c is None:
                    out_edges[a][y] = b
                elif find(c) != b:
                    # fold: identify c and b, then re-add their edges
                    c, b = find(c), b
                    parent[c] = b
                    for z, d in out_edges[c].items():
                        stack.append((b, z, d))
                    out_edges[c] = {}

    for e in pending:
        add(*e)
    root_v = find(0)
    verts = {find(v) for v in range(len(parent)) if out_edges[find(v)]}
    if verts != {root_v}:
        return False
    edges = out_edges[root_v]
    return all(edges.get(x) is not None and find(edges[x]) == root_v for x in range(1, rank + 1))
