"""
Free-group words over a signed integer alphabet.

A letter is a nonzero integer: ``k`` stands for the generator with index ``k - 1`` and ``-k``
for its inverse. Most of the engine works directly on tuples of such integers (the ``*_letters``
functions below); :class:`Word` wraps a reduced tuple together with the rank of its alphabet so
that mismatched alphabets are caught at the boundary.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Letters = tuple[int, ...]


class AlphabetMismatch(ValueError):
    pass


def reduce_letters(letters: Iterable[int]) -> Letters:
    """Free reduction with a stack: cancel every adjacent pair x x^-1."""
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def mul(*words: Sequence[int]) -> Letters:
    out: list[int] = []
    for w in words:
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def inv(w: Sequence[int]) -> Letters:
    return tuple(-x for x in reversed(w))


def power(w: Sequence[int], k: int) -> Letters:
    if k < 0:
        w, k = inv(w), -k
    return mul(*([w] * k))


def cyclic_split(w: Sequence[int]) -> tuple[Letters, Letters]:
    """Split a reduced word as ``whisker . core . whisker^-1`` with ``core`` cyclically reduced."""
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return tuple(w[i:j + 1]), tuple(w[:i])


def rotations(w: Sequence[int]):
    for i in range(len(w)):
        yield i, tuple(w[i:]) + tuple(w[:i])


def min_rotation(w: Sequence[int]) -> Letters:
    """Lexicographically least cyclic rotation (Booth's algorithm would be overkill here)."""
    if not w:
        return ()
    return min(r for _, r in rotations(w))


def conjugacy_key(w: Sequence[int]) -> Letters:
    """A complete invariant of the conjugacy class of a reduced word."""
    core, _ = cyclic_split(w)
    return min_rotation(core)


def conjugator_letters(u: Sequence[int], v: Sequence[int]) -> Letters | None:
    """Return ``t`` with ``t u t^-1 = v`` (both reduced), or ``None`` if they are not conjugate."""
    cu, su = cyclic_split(u)
    cv, sv = cyclic_split(v)
    if len(cu) != len(cv):
        return None
    if not cu:
        return () if not u and not v else None
    for i, rot in rotations(cu):
        if rot == cv:
            # cu = p q, rot = q p = p^-1 cu p, so v = sv p^-1 su^-1 u su p sv^-1
            t = mul(sv, inv(cu[:i]), inv(su))
            assert mul(t, u, inv(t)) == tuple(v)
            return t
    return None


def is_cyclically_reduced(w: Sequence[int]) -> bool:
    return len(w) < 2 or w[0] != -w[-1]


def is_proper_power(core: Sequence[int]) -> bool:
    m = len(core)
    return any(m % d == 0 and tuple(core) == tuple(core[:d]) * (m // d) for d in range(1, m))


def root(core: Sequence[int]) -> Letters:
    """Primitive root of a cyclically reduced word."""
    m = len(core)
    for d in range(1, m + 1):
        if m % d == 0 and tuple(core) == tuple(core[:d]) * (m // d):
            return tuple(core[:d])
    return ()


def abelianize(w: Sequence[int], rank: int) -> list[int]:
    vec = [0] * rank
    for x in w:
        vec[abs(x) - 1] += 1 if x > 0 else -1
    return vec


@dataclass(frozen=True)
class Word:
    """An element of the free group of the given rank, stored freely reduced."""

    letters: Letters
    rank: int

    def __post_init__(self):
        red = reduce_letters(self.letters)
        for x in red:
            if x == 0 or abs(x) > self.rank:
                raise ValueError(f"letter {x} outside alphabet of rank {self.rank}")
        object.__setattr__(self, "letters", red)

    @classmethod
    def identity(cls, rank: int) -> Word:
        return cls((), rank)

    def _check(self, other: Word):
        if not isinstance(other, Word):
            raise TypeError(f"expected Word, got {type(other).__name__}")
        if other.rank != self.rank:
            raise AlphabetMismatch(f"rank {self.rank} vs rank {other.rank}")

    def __mul__(self, other: Word) -> Word:
        self._check(other)
        return Word(mul(self.letters, other.letters), self.rank)

    def __invert__(self) -> Word:
        return Word(inv(self.letters), self.rank)

    def inverse(self) -> Word:
        return ~self

    def __pow__(self, k: int) -> Word:
        return Word(power(self.letters, k), self.rank)

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def conjugate(self, t: Word) -> Word:
        """``t . self . t^-1``."""
        self._check(t)
        return Word(mul(t.letters, self.letters, inv(t.letters)), self.rank)

    def cyclic_reduce(self) -> tuple[Word, Word]:
        core, whisker = cyclic_split(self.letters)
        return Word(core, self.rank), Word(whisker, self.rank)

    def conjugacy_witness(self, other: Word) -> Word | None:
        self._check(other)
        t = conjugator_letters(self.letters, other.letters)
        return None if t is None else Word(t, self.rank)

    def is_conjugate(self, other: Word) -> bool:
        return self.conjugacy_witness(other) is not None

    def abelianize(self) -> list[int]:
        return abelianize(self.letters, self.rank)

    def format(self, names: Sequence[str]) -> str:
        return format_letters(self.letters, names)


def concat(u: Word, v: Word) -> Word:
    return u * v


def invert(u: Word) -> Word:
    return ~u


def conjugate(u: Word, t: Word) -> Word:
    return u.conjugate(t)


def cyclic_reduce(u: Word) -> tuple[Word, Word]:
    return u.cyclic_reduce()


def conjugacy_witness(u: Word, v: Word) -> Word | None:
    return u.conjugacy_witness(v)


def format_letters(letters: Sequence[int], names: Sequence[str]) -> str:
    """Render letters in the literal grammar, collapsing runs into exponents: ``a1^2 u3^-1``."""
    parts = []
    i = 0
    while i < len(letters):
        x = letters[i]
        j = i
        while j < len(letters) and letters[j] == x:
            j += 1
        k = (j - i) * (1 if x > 0 else -1)
        name = names[abs(x) - 1]
        parts.append(name if k == 1 else f"{name}^{k}")
        i = j
    return " ".join(parts)


_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def parse_letters(text: str, names: Sequence[str]) -> Letters:
    """Parse a whitespace separated word literal such as ``a1 b1^-1 u3``."""
    index = {name: i + 1 for i, name in enumerate(names)}
    out = []
    for pos, tok in enumerate(text.split()):
        m = _TOKEN.match(tok)
        if not m or m.group(1) not in index:
            raise ValueError(f"token {pos} ({tok!r}): not a letter of {', '.join(names)}")
        k = int(m.group(2)) if m.group(2) is not None else 1
        x = index[m.group(1)]
        out.extend([x if k > 0 else -x] * abs(k))
    return reduce_letters(out)
