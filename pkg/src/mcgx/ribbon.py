"""
Dehn twists on a one-vertex ribbon graph.

The punctured surface retracts onto a rose whose petals are the free generators of pi_1. The
rose is thickened into a vertex disc with one band per petal; the cyclic order in which the band
ends meet the vertex disc determines the surface. A closed curve given by a cyclically reduced word
is pulled tight: it runs along the bands named by its letters and crosses the vertex disc in
chords. Strand order inside every band is forced by where two parallel strands eventually part
company, and the curve is simple exactly when the resulting chords are pairwise unlinked.

A based petal loop is pushed along the boundary of the vertex disc, so the points where it meets
the curve are the chord endpoints it passes; the twist inserts a copy of the curve at each of
them.

Half-edges are labelled by the letter read when leaving the vertex through them: ``x`` is the
outgoing end of petal ``x`` and ``-x`` its incoming end.
"""

from __future__ import annotations

from functools import cmp_to_key
from typing import Sequence

from .words import Letters, cyclic_split, inv, is_proper_power, mul


class CurveError(ValueError):
    """Raised when a word cannot be realised as a simple closed curve in the ribbon model."""


class RibbonSurface:
    def __init__(self, order: Sequence[int]):
        self.order = tuple(order)
        self.rank = len(self.order) // 2
        if sorted(abs(h) for h in self.order) != sorted(list(range(1, self.rank + 1)) * 2):
            raise ValueError("cyclic order must contain both ends of every petal once")
        self.pos = {h: i for i, h in enumerate(self.order)}

    def boundary_words(self) -> list[Letters]:
        """Words read along the boundary components (one per puncture)."""
        n = len(self.order)
        seen: set[int] = set()
        out = []
        for h in self.order:
            if h in seen:
                continue
            w = []
            x = h
            while x not in seen:
                seen.add(x)
                w.append(x)
                x = self.order[(self.pos[-x] + 1) % n]
            out.append(tuple(w))
        return out

    def _dist(self, a: int, b: int) -> int:
        return (self.pos[b] - self.pos[a]) % len(self.order)

    def strand_positions(self, c: Letters) -> dict[int, int]:
        """Transverse position of each occurrence of ``c`` inside its band (0 = first at the outgoing end)."""
        m = len(c)

        def forward(k: int, t: int) -> int:
            return c[(k + 1 + t) % m] if c[k] > 0 else -c[(k - 1 - t) % m]

        def compare(ka: int, kb: int) -> int:
            h = -abs(c[ka])
            for t in range(2 * m + 1):
                fa, fb = forward(ka, t), forward(kb, t)
                if fa == fb:
                    h = -fa
                    continue
                return 1 if self._dist(h, fb) < self._dist(h, fa) else -1
            raise CurveError("strands never separate; the word is not primitive")

        bands: dict[int, list[int]] = {}
        for k, y in enumerate(c):
            bands.setdefault(abs(y), []).append(k)
        s = {}
        for ks in bands.values():
            for rank, k in enumerate(sorted(ks, key=cmp_to_key(compare))):
                s[k] = rank
        return s

    def crossing_data(self, c: Letters):
        """Chord endpoints of the tightened curve as ``(coordinate, chord index, is_arrival)``.

        Coordinates are ``(index of half-edge in the cyclic order, position inside it)``.
        """
        core, _ = cyclic_split(c)
        if tuple(core) != tuple(c) or not c:
            raise CurveError("curve word must be nonempty and cyclically reduced")
        if is_proper_power(c):
            raise CurveError("a proper power is not a simple closed curve")
        m = len(c)
        s = self.strand_positions(c)
        width: dict[int, int] = {}
        for y in c:
            width[abs(y)] = width.get(abs(y), 0) + 1

        def coord(label: int, k: int):
            x = abs(label)
            p = s[k] if label > 0 else width[x] - 1 - s[k]
            return (self.pos[label], p)

        ends = []
        chords = []
        for k in range(m):
            arr = coord(-c[k], k)
            dep = coord(c[(k + 1) % m], (k + 1) % m)
            ends.append((arr, k, True))
            ends.append((dep, k, False))
            chords.append((min(arr, dep), max(arr, dep)))
        chords.sort()
        for i in range(len(chords)):
            p1, q1 = chords[i]
            for j in range(i + 1, len(chords)):
                p2, q2 = chords[j]
                if p2 >= q1:
                    break
                if q2 > q1:
                    raise CurveError("curve is not simple in this surface")
        ends.sort()
        return ends, width

    def twist_images(self, c: Letters, handedness: int = 1) -> tuple[Letters, ...]:
        """Images of the petal generators under the Dehn twist along ``c``.

        ``handedness=+1`` is the right-handed twist for the orientation in which the cyclic order
        runs counterclockwise.
        """
        ends, width = self.crossing_data(c)
        m = len(c)
        rots = [tuple(c[k + 1:]) + tuple(c[:k + 1]) for k in range(m)]
        rot_inv = [inv(r) for r in rots]

        def inserts(lo, hi):
            out = []
            for coord, k, arrival in ends:
                if lo < coord < hi:
                    sign = -1 if arrival else 1
                    out.append(rots[k] if sign * handedness > 0 else rot_inv[k])
            return out

        images = []
        start, finish = (-1, 0), (len(self.order), 0)
        for x in range(1, self.rank + 1):
            out_pt = (self.pos[x], -1)
            in_pt = (self.pos[-x], width.get(x, 0))
            images.append(mul(*inserts(start, out_pt), (x,), *inserts(in_pt, finish)))
        return tuple(images)

    def is_simple(self, c: Letters) -> bool:
        try:
            self.crossing_data(c)
        except CurveError:
            return False
        return True
