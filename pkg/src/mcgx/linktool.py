"""
Link complements from gluing mapping classes.

Gluing the lower pair ``(H_g, A_1 u ... u A_n)`` to a mirror copy of itself along a mapping class
``phi`` of the boundary produces a link in a closed 3-manifold. Its complement has the
presentation with generators ``x_1..x_g, m_1..m_n`` (lower side), ``X_1..X_g, M_1..M_n`` (upper
side) and one relator ``q(w) q'(phi(w))^-1`` per surface generator ``w``, where ``q`` and ``q'``
are the two handlebody quotients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import sympy

from .automorphism import Automorphism
from .extension import handlebody_quotient
from .generators import MappingClass
from .surface import Signature
from .words import Letters, format_letters, inv, mul


class OrientationError(ValueError):
    pass


def quotient_to_handlebody(sig: Signature, w: Sequence[int], side: str = "lower") -> Letters:
    """Image of a surface word in the lower (letters ``1..g+n``) or upper (``g+n+1..``) group."""
    q = handlebody_quotient(sig, w)
    if side == "lower":
        return q
    if side == "upper":
        shift = sig.genus + sig.arcs
        return tuple(x + shift if x > 0 else x - shift for x in q)
    raise ValueError("side must be 'lower' or 'upper'")


@dataclass(frozen=True)
class LinkPresentation:
    sig: Signature
    relators: tuple[Letters, ...]
    upper_to_lower: tuple[int, ...]  # puncture permutation of the gluing

    @property
    def generators(self) -> tuple[str, ...]:
        g, n = self.sig.genus, self.sig.arcs
        return tuple(
            [f"x{i}" for i in range(1, g + 1)]
            + [f"m{k}" for k in range(1, n + 1)]
            + [f"X{i}" for i in range(1, g + 1)]
            + [f"M{k}" for k in range(1, n + 1)]
        )

    @property
    def rank(self) -> int:
        return len(self.generators)

    def relator_matrix(self) -> list[list[int]]:
        rows = []
        for r in self.relators:
            row = [0] * self.rank
            for x in r:
                row[abs(x) - 1] += 1 if x > 0 else -1
            rows.append(row)
        return rows

    def ambient(self) -> LinkPresentation:
        """Presentation of the closed manifold: every arc meridian is killed."""
        g, n = self.sig.genus, self.sig.arcs
        kill = [g + k for k in range(1, n + 1)] + [2 * g + n + k for k in range(1, n + 1)]
        rels = tuple(tuple(x for x in r if abs(x) not in kill) for r in self.relators)
        return LinkPresentation(self.sig, rels + tuple((k,) for k in kill), self.upper_to_lower)

    # -- link components -------------------------------------------------------------------

    @cached_property
    def components(self) -> list[list[tuple[str, int, int]]]:
        """Oriented components as cycles of ``(side, arc, sign)``.

        Each component is labelled by its smallest upper arc, which it runs from ``P_l1`` to
        ``P_l2``. ``sign`` is +1 when the component runs along that arc from its first to its
        second endpoint.
        """
        n = self.sig.arcs
        perm = self.upper_to_lower
        seen_upper: set[int] = set()
        comps = []
        for l in range(1, n + 1):
            if l in seen_upper:
                continue
            cycle = []
            # walk: upper arc l from upper puncture 2l-1 to 2l, cross to the lower side at the
            # puncture matched with upper puncture 2l, run along that lower arc, and so on
            up_start = 2 * l - 1
            p = up_start
            while True:
                arc = (p + 1) // 2
                q = p + 1 if p % 2 == 1 else p - 1
                cycle.append(("upper", arc, 1 if p % 2 == 1 else -1))
                seen_upper.add(arc)
                low = perm.index(q) + 1  # lower puncture glued to upper puncture q
                larc = (low + 1) // 2
                low_other = low + 1 if low % 2 == 1 else low - 1
                cycle.append(("lower", larc, 1 if low % 2 == 1 else -1))
                p = perm[low_other - 1]
                if p == up_start:
                    break
            comps.append(cycle)
        return comps

    def export(self) -> str:
        names = self.generators
        rels = [format_letters(r, names).replace(" ", "*") or "1" for r in self.relators]
        return f"gens: {', '.join(names)}\nrels: {', '.join(rels)}\n"

    def export_lines(self) -> str:
        names = self.generators
        return "\n".join(format_letters(r, names).replace(" ", "*") or "1" for r in self.relators) + "\n"


def link_presentation(phi) -> LinkPresentation:
    f: Automorphism = phi.automorphism if isinstance(phi, MappingClass) else phi
    sig = f.sig
    rels = []
    for x in range(1, sig.rank + 1):
        lower = quotient_to_handlebody(sig, (x,), "lower")
        upper = quotient_to_handlebody(sig, f.images[x - 1], "upper")
        rels.append(mul(lower, inv(upper)))
    perm = f.induced_permutation()
    # lower puncture j is glued to upper puncture perm[j-1]
    return LinkPresentation(sig, tuple(rels), tuple(perm))


# ---- Smith normal form ------------------------------------------------------------------------


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors ``d_1 | d_2 | ...`` (zeros last) of an integer matrix."""
    a = [list(r) for r in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // a[t][t]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // a[t][t]
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                if a[t][j]:
                    done = False
            if done:
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % a[t][t]),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest non-zero entry of row/column t to the pivot
            best = (t, t)
            for i in range(t, rows):
                if a[i][t] and abs(a[i][t]) < abs(a[best[0]][best[1]]):
                    best = (i, t)
            for j in range(t, cols):
                if a[t][j] and abs(a[t][j]) < abs(a[best[0]][best[1]]):
                    best = (t, j)
            i, j = best
            a[t], a[i] = a[i], a[t]
            for r in a:
                r[t], r[j] = r[j], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag + [0] * (min(rows, cols) - len(diag))


@dataclass(frozen=True)
class Abelianization:
    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self):
        parts = [f"Z^{self.free_rank}" if self.free_rank != 1 else "Z"] if self.free_rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def abelianization(p: LinkPresentation) -> Abelianization:
    m = p.relator_matrix()
    factors = smith_normal_form(m) if m else []
    nonzero = [d for d in factors if d]
    return Abelianization(p.rank - len(nonzero), tuple(d for d in nonzero if d != 1))


# ---- Fox calculus -----------------------------------------------------------------------------


def component_map(p: LinkPresentation) -> list[tuple[int, ...]]:
    """Images of the generators in ``Z^c`` (c = number of components).

    Upper handle generators go to zero, each upper arc meridian to plus or minus its component
    variable, and the lower generators are solved for from the relators.
    """
    sig = p.sig
    g, n = sig.genus, sig.arcs
    comps = p.components
    c = len(comps)
    images: dict[int, tuple[int, ...]] = {}
    for ci, cyc in enumerate(comps):
        for side, arc, sign in cyc:
            if side == "upper":
                v = [0] * c
                v[ci] = sign
                images[2 * g + n + arc] = tuple(v)
    for i in range(1, g + 1):
        images[g + n + i] = (0,) * c
    unknown = [x for x in range(1, p.rank + 1) if x not in images]
    sym = {x: sympy.symbols(f"v{x}_0:{c}") for x in unknown}
    eqs = []
    for r in p.relators:
        tot = [0] * c
        for x in r:
            s = 1 if x > 0 else -1
            vec = images.get(abs(x))
            for k in range(c):
                tot[k] += s * (vec[k] if vec is not None else sym[abs(x)][k])
        eqs += [e for e in tot if e != 0]
    flat = [s for x in unknown for s in sym[x]]
    sol = sympy.solve(eqs, flat, dict=True) if eqs else [{}]
    if not sol:
        raise OrientationError("meridians cannot be consistently assigned to components")
    sol = sol[0]
    for x in unknown:
        vec = []
        for s in sym[x]:
            val = sympy.sympify(sol.get(s, 0)).subs({t: 0 for t in flat})
            if not val.is_integer:
                raise OrientationError("non-integral meridian assignment")
            vec.append(int(val))
        images[x] = tuple(vec)
    for r in p.relators:
        tot = [sum((1 if x > 0 else -1) * images[abs(x)][k] for x in r) for k in range(c)]
        if any(tot):
            raise OrientationError("relators are not balanced under the component map")
    return [images[x] for x in range(1, p.rank + 1)]


def _monomial(vec, ts):
    out = sympy.Integer(1)
    for e, t in zip(vec, ts):
        out *= t**e
    return out


def alexander_matrix(p: LinkPresentation):
    """Fox derivatives of the relators under the component map, as a sympy Matrix."""
    cmap = component_map(p)
    c = len(cmap[0]) if cmap else 0
    ts = sympy.symbols(f"t1:{c + 1}")
    rows = []
    for r in p.relators:
        row = [sympy.Integer(0)] * p.rank
        prefix = [0] * c
        for x in r:
            j = abs(x) - 1
            if x > 0:
                row[j] += _monomial(prefix, ts)
                prefix = [a + b for a, b in zip(prefix, cmap[j])]
            else:
                prefix = [a - b for a, b in zip(prefix, cmap[j])]
                row[j] -= _monomial(prefix, ts)
        rows.append([sympy.expand(e) for e in row])
    return sympy.Matrix(rows) if rows else sympy.zeros(0, p.rank), ts


def elementary_ideal(p: LinkPresentation, k: int = 1):
    """Reduced Groebner basis (over Q, Laurent variables inverted) of the k-th elementary ideal."""
    from itertools import combinations

    m, ts = alexander_matrix(p)
    size = p.rank - k
    inverses = sympy.symbols(f"s1:{len(ts) + 1}")
    gens = []
    if size <= 0:
        gens = [sympy.Integer(1)]
    elif size <= m.rows:
        for rows in combinations(range(m.rows), size):
            for cols in combinations(range(m.cols), size):
                d = sympy.expand(m.extract(list(rows), list(cols)).det(method="berkowitz"))
                if d != 0:
                    gens.append(d)
    if not gens:
        return ("zero",)
    polys = []
    for d in gens:
        d = sympy.expand(d * sympy.Mul(*[t ** _neg_degree(d, t) for t in ts]))
        polys.append(d)
    polys += [t * s - 1 for t, s in zip(ts, inverses)]
    basis = sympy.groebner(polys, *ts, *inverses, order="grevlex", domain="QQ")
    return tuple(str(b) for b in basis.exprs)


def _neg_degree(expr, t) -> int:
    lowest = 0
    for term in sympy.Add.make_args(expr):
        powers = term.as_powers_dict()
        lowest = min(lowest, int(powers.get(t, 0)))
    return -lowest


def link_invariants(phi) -> dict:
    p = link_presentation(phi)
    return {
        "components": len(p.components),
        "abelianization": str(abelianization(p)),
        "ambient": str(abelianization(p.ambient())),
        "first_elementary_ideal": elementary_ideal(p, 1),
    }
