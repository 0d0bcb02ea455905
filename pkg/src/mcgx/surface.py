"""
Combinatorial model of the punctured surface ``T_g - P_2n``.

Picture the surface as a disc with the base point on top and a row of features below it: the two
feet of each handle (handle 1 leftmost), then the punctures ``P_11, P_12, P_21, P_22, ...``; the
arc shadow ``A'_k`` is the straight segment joining ``P_k1`` to ``P_k2``. The fundamental group
is free on ``a_1, b_1, ..., a_g, b_g, u_1, ..., u_(2n-1)``. Here ``b_i`` is the meridian of
handle i (it bounds the disc ``B_i`` inside the handlebody), ``a_i`` runs once through the
handle, and ``u_j`` is a counterclockwise loop around puncture j. The loop around the last
puncture is ``U = (prod [a_i, b_i] u_1 ... u_(2n-1))^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .ribbon import RibbonSurface
from .words import Letters, Word, abelianize, conjugacy_key, inv, mul, parse_letters


@dataclass(frozen=True)
class Signature:
    genus: int
    arcs: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        if self.arcs < 1:
            raise ValueError("at least one arc (two punctures) is required")

    @property
    def rank(self) -> int:
        return 2 * self.genus + 2 * self.arcs - 1

    @property
    def punctures(self) -> int:
        return 2 * self.arcs

    def a(self, i: int) -> int:
        self._check_handle(i)
        return 2 * i - 1

    def b(self, i: int) -> int:
        self._check_handle(i)
        return 2 * i

    def u(self, j: int) -> Letters:
        """Loop around puncture ``j`` (1-based, ``1 <= j <= 2n``) as a word."""
        if not 1 <= j <= self.punctures:
            raise IndexError(f"puncture {j} out of range 1..{self.punctures}")
        if j < self.punctures:
            return (2 * self.genus + j,)
        return self.last_loop

    def _check_handle(self, i: int):
        if not 1 <= i <= self.genus:
            raise IndexError(f"handle {i} out of range 1..{self.genus}")

    @cached_property
    def names(self) -> tuple[str, ...]:
        out = []
        for i in range(1, self.genus + 1):
            out += [f"a{i}", f"b{i}"]
        out += [f"u{j}" for j in range(1, self.punctures)]
        return tuple(out)

    @cached_property
    def relator(self) -> Letters:
        """``prod [a_i, b_i] . u_1 ... u_(2n-1)``, the loop around the last puncture read backwards."""
        w: list[int] = []
        for i in range(1, self.genus + 1):
            a, b = 2 * i - 1, 2 * i
            w += [a, b, -a, -b]
        w += [2 * self.genus + j for j in range(1, self.punctures)]
        return tuple(w)

    @cached_property
    def last_loop(self) -> Letters:
        return inv(self.relator)

    @cached_property
    def puncture_keys(self) -> dict[Letters, int]:
        return {conjugacy_key(self.u(j)): j for j in range(1, self.punctures + 1)}

    @cached_property
    def ribbon(self) -> RibbonSurface:
        order: list[int] = []
        for j in range(self.punctures - 1, 0, -1):
            x = 2 * self.genus + j
            order += [-x, x]
        for i in range(self.genus, 0, -1):
            a, b = 2 * i - 1, 2 * i
            order += [b, -a, -b, a]
        return RibbonSurface(order)

    def word(self, text: str) -> Word:
        return Word(parse_letters(text, self.names), self.rank)

    def letters(self, text: str) -> Letters:
        return parse_letters(text, self.names)

    def format(self, letters) -> str:
        from .words import format_letters
        if isinstance(letters, Word):
            letters = letters.letters
        return format_letters(letters, self.names) or "1"

    def abelianize(self, letters: Letters) -> list[int]:
        return abelianize(letters, self.rank)


def build_signature(g: int, n: int) -> Signature:
    return Signature(g, n)


def puncture_loop(sig: Signature, i: int, j: int) -> Word:
    """Loop around ``P_ij``, the puncture numbered ``2i + j - 2``."""
    if not 1 <= i <= sig.arcs or j not in (1, 2):
        raise IndexError(f"no puncture P_{i}{j} for n={sig.arcs}")
    return Word(sig.u(2 * i + j - 2), sig.rank)
