"""
Planar recipes for the simple closed curves used by the generator tables.

The surface is drawn as a disc with the base point on top. Along a horizontal row sit, from left
to right, the two feet ``L_i, R_i`` of every handle (handle i is a tube glued to them) and then the
punctures ``P_1, ..., P_2n``. Every feature has a counterclockwise loop hanging down from the base
point; a path is encoded by the features it passes underneath (crossing the downward ray of the
feature) and by the tubes it runs through.

The right foot ``R_i`` is the foot ``B_i`` whose boundary is the meridian ``b_i``; its loop is
``b_i^-1``. The loop around ``L_i`` is ``a_i b_i a_i^-1`` and a passage through tube i from the top
of ``L_i`` to the top of ``R_i`` reads ``a_i``.

A set of features is enclosed by the boundary of a regular neighbourhood of the features joined
by short bands. The band between consecutive chosen features passes either above the skipped
features (on the base point side) or below them; ``below=True`` selects the second routing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .surface import Signature
from .words import Letters, cyclic_split, inv, mul, reduce_letters


@dataclass(frozen=True)
class Feature:
    kind: str  # "L", "R" or "P"
    index: int


def features(sig: Signature) -> list[Feature]:
    out: list[Feature] = []
    for i in range(1, sig.genus + 1):
        out += [Feature("L", i), Feature("R", i)]
    out += [Feature("P", j) for j in range(1, sig.punctures + 1)]
    return out


def feature_loop(sig: Signature, f: Feature) -> Letters:
    if f.kind == "P":
        return sig.u(f.index)
    a, b = sig.a(f.index), sig.b(f.index)
    if f.kind == "R":
        return (-b,)
    if f.kind == "L":
        return (a, b, -a)
    raise ValueError(f"unknown feature kind {f.kind!r}")


def foot(i: int) -> Feature:
    return Feature("R", i)


def cofoot(i: int) -> Feature:
    return Feature("L", i)


def pt(j: int) -> Feature:
    return Feature("P", j)


def arc_ends(k: int) -> tuple[Feature, Feature]:
    return pt(2 * k - 1), pt(2 * k)


def enclose(sig: Signature, chosen, below: bool = False) -> Letters:
    """Counterclockwise boundary word of a disc containing exactly the chosen features."""
    row = features(sig)
    chosen = set(chosen)
    picked = [k for k, f in enumerate(row) if f in chosen]
    if len(picked) != len(chosen):
        raise ValueError("unknown feature in enclosure")
    if not below:
        return reduce_letters(x for k in picked for x in feature_loop(sig, row[k]))
    word: Letters = ()
    for k in picked:
        skipped = [row[m] for m in range(picked[0], k) if row[m] not in chosen]
        pre = mul(*(feature_loop(sig, f) for f in skipped))
        word = mul(word, pre, feature_loop(sig, row[k]), inv(pre))
    return word


def longitude(sig: Signature, i: int) -> Letters:
    return (sig.a(i),)


def meridian(sig: Signature, i: int) -> Letters:
    return (sig.b(i),)


def handle_boundary(sig: Signature, i: int) -> Letters:
    a, b = sig.a(i), sig.b(i)
    return (a, b, -a, -b)


def pair_boundary(sig: Signature, i: int) -> Letters:
    return mul(handle_boundary(sig, i), handle_boundary(sig, i + 1))


def arc_boundary(sig: Signature, k: int) -> Letters:
    return enclose(sig, arc_ends(k))


def core(w: Letters) -> Letters:
    return cyclic_split(reduce_letters(w))[0]
