"""
The named mapping classes of ``MCG_2n(T_g)`` that preserve the arc system ``A_1, ..., A_n``:
half twists, arc exchanges, spins and slides of arcs, Dehn twists on handles, handle exchanges
and slides of meridian discs.

Every entry is assembled from Dehn twists along explicit curve words (see :mod:`mcgx.curves`) or
from two algebraic basic moves, the puncture half twist and the handle swap. The conventions
below (which side a band passes a skipped feature on, the direction of each slide) are the ones
under which the full relation catalog in :mod:`mcgx.relations` holds; the tests re-check it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

from . import curves as cv
from .automorphism import Automorphism, Move
from .ribbon import CurveError
from .surface import Signature
from .words import Letters, inv, mul


class UnknownGenerator(KeyError):
    pass


class Unsupported(ValueError):
    pass


# ---- basic moves ------------------------------------------------------------------------------


def dehn_twist(sig: Signature, curve, handedness: int = 1) -> Automorphism:
    """Right-handed (``handedness=1``) or left-handed Dehn twist along a simple closed curve."""
    letters = curve.letters if hasattr(curve, "letters") else tuple(curve)
    c = cv.core(letters)
    if not c:
        return Automorphism.identity(sig)
    try:
        right = sig.ribbon.twist_images(c, 1)
        left = sig.ribbon.twist_images(c, -1)
    except CurveError as err:
        raise Unsupported(f"no crossing data for {sig.format(c)}: {err}") from err
    move = Move(f"twist:{sig.format(c)}", right, left)
    return Automorphism.from_move(sig, move, 1 if handedness > 0 else -1)


def half_twist(sig: Signature, p: int) -> Automorphism:
    """Right-handed half twist exchanging punctures ``p`` and ``p+1`` along the straight segment."""
    if not 1 <= p < sig.punctures:
        raise UnknownGenerator(f"sigma_{p}")
    g = sig.genus
    ident = [(x,) for x in range(1, sig.rank + 1)]
    fwd, back = list(ident), list(ident)
    x = 2 * g + p
    if p < sig.punctures - 1:
        y = x + 1
        fwd[x - 1], fwd[y - 1] = (y,), (-y, x, y)
        back[x - 1], back[y - 1] = (x, y, -x), (x,)
    else:
        fwd[x - 1] = sig.last_loop
        back[x - 1] = mul((x,), sig.last_loop, (-x,))
    return Automorphism.from_move(sig, Move(f"sigma_{p}", tuple(fwd), tuple(back)))


def handle_swap(sig: Signature, i: int) -> Automorphism:
    """The exchange of handles i and i+1 whose square is ``t_dC t_dT_i^-1 t_dT_(i+1)^-1``."""
    if not 1 <= i < sig.genus:
        raise UnknownGenerator(f"rho_{i}")
    a, b, A, B = sig.a(i), sig.b(i), sig.a(i + 1), sig.b(i + 1)
    c, d = cv.handle_boundary(sig, i), cv.handle_boundary(sig, i + 1)
    fwd = [(x,) for x in range(1, sig.rank + 1)]
    back = list(fwd)
    fwd[a - 1], fwd[b - 1] = (A,), (B,)
    fwd[A - 1], fwd[B - 1] = mul(inv(d), (a,), d), mul(inv(d), (b,), d)
    back[a - 1], back[b - 1] = mul(c, (A,), inv(c)), mul(c, (B,), inv(c))
    back[A - 1], back[B - 1] = (a,), (b,)
    return Automorphism.from_move(sig, Move(f"rho_{i}", tuple(fwd), tuple(back)))


def spin(sig: Signature, base_puncture: int, c1, c2) -> Automorphism:
    """``t_c1^-1 t_c2`` for the two boundary curves of an annulus around the spin curve."""
    if not 1 <= base_puncture <= sig.punctures:
        raise IndexError(f"puncture {base_puncture} out of range")
    return dehn_twist(sig, c1, -1) @ dehn_twist(sig, c2)


def push(sig: Signature, outer, inner) -> Automorphism:
    """Push a fat point once around a loop; ``inner``/``outer`` are its two pushoffs.

    ``outer`` is the pushoff that misses the fat point and ``inner`` the one enclosing it.
    """
    return dehn_twist(sig, outer, -1) @ dehn_twist(sig, inner)


# ---- loops used by the slides -----------------------------------------------------------------


def _star(sig: Signature, *feats) -> Letters:
    return cv.enclose(sig, feats)


def _wrap(sig: Signature, i: int, p: int, lead: Letters) -> Letters:
    """Band from handle i to puncture p passing below every foot and every earlier puncture.

    ``lead`` is the loop the band leaves from (``y_(L_i)^-1`` for the foot ``B_i``, ``dT_i^-1``
    after running through tube i).
    """
    everything = mul(*(cv.handle_boundary(sig, j) for j in range(1, sig.genus + 1)))
    before = mul(*(sig.u(q) for q in range(1, p)))
    return mul(lead, everything, before)


def _foot_lead(sig: Signature, i: int) -> Letters:
    return inv(cv.feature_loop(sig, cv.cofoot(i)))


def spin_curves(sig: Signature, j: int, i: int) -> tuple[Letters, Letters]:
    """Boundary curves of the spin of ``P_j2`` around ``A'_i`` (around ``P_j1`` when i = j)."""
    if i == j:
        return sig.u(2 * j - 1), cv.arc_boundary(sig, j)
    return cv.arc_boundary(sig, i), _star(sig, *cv.arc_ends(i), cv.pt(2 * j))


def slide_arc_curves(sig: Signature, j: int, p: int) -> tuple[Letters, Letters, Letters]:
    """Pushoffs ``(e, f, d)`` of a loop through ``A'_j`` around puncture ``p``.

    ``e`` misses the arc, ``f`` passes between its endpoints and ``d`` encloses it.
    """
    lo, hi = cv.arc_ends(j)
    near = hi if p > 2 * j else lo
    return sig.u(p), _star(sig, near, cv.pt(p)), _star(sig, lo, hi, cv.pt(p))


def slide_arc(sig: Signature, j: int, e, f, d) -> Automorphism:
    """Slide of ``A_j``: the spins of its two endpoints along the pushoffs ``e -> f -> d``."""
    if not 1 <= j <= sig.arcs:
        raise IndexError(f"arc {j} out of range")
    return spin(sig, 2 * j - 1, e, f) @ spin(sig, 2 * j, f, d)


def disc_loop(sig: Signature, i: int, kind: str, j: int) -> tuple[Letters, Letters]:
    """Pushoffs ``(outer, inner)`` of the catalog i-loop ``kind_i_j``.

    ``e``: through tube j, ``g``: around the foot ``B_j``, ``f``: around ``P_j1``,
    ``l``: around ``P_j2``.
    """
    sig._check_handle(i)
    foot = cv.feature_loop(sig, cv.foot(i))
    if kind in ("e", "g"):
        sig._check_handle(j)
        if j == i:
            raise ValueError("an i-loop cannot run over handle i itself")
        if kind == "e":
            outer = (sig.a(j),)
            return outer, mul(foot, outer)
        return cv.feature_loop(sig, cv.foot(j)), _star(sig, cv.foot(i), cv.foot(j))
    if kind in ("f", "l"):
        if not 1 <= j <= sig.arcs:
            raise IndexError(f"arc {j} out of range")
        p = 2 * j - 1 if kind == "f" else 2 * j
        w = _wrap(sig, i, p, _foot_lead(sig, i))
        return sig.u(p), mul(foot, w, sig.u(p), inv(w))
    raise ValueError(f"unknown i-loop kind {kind!r}")


def slide_disc(sig: Signature, i: int, kind: str, j: int, primed: bool = False) -> Automorphism:
    outer, inner = disc_loop(sig, i, kind, j)
    out = push(sig, outer, inner)
    if primed:
        w = omega(sig, i)
        out = w.inverse() @ out @ w
    return out


def arc_handle_loop(sig: Signature, k: int, i: int, kind: str) -> tuple[Letters, Letters]:
    """Pushoffs of the loop from ``A'_k`` through tube i (``e``) or around ``B_i`` (``g``)."""
    sig._check_handle(i)
    x = cv.arc_boundary(sig, k)
    if kind == "e":
        a = (sig.a(i),)
        w = _wrap(sig, i, 2 * k - 1, inv(cv.handle_boundary(sig, i)))
        return a, mul(a, w, x, inv(w))
    if kind == "g":
        foot = cv.feature_loop(sig, cv.foot(i))
        w = _wrap(sig, i, 2 * k - 1, _foot_lead(sig, i))
        return foot, mul(foot, w, x, inv(w))
    raise ValueError(f"unknown loop kind {kind!r}")


def omega(sig: Signature, i: int) -> Automorphism:
    return (dehn_twist(sig, cv.longitude(sig, i)) @ dehn_twist(sig, cv.meridian(sig, i))) ** 3


# ---- the table --------------------------------------------------------------------------------

_NAME = re.compile(r"^([A-Za-z]+)((?:_\d+)*)$")


def _indices(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.split("_") if t)


@dataclass
class GeneratorTable:
    """Lazily built, memoized table of every named mapping class for one signature."""

    sig: Signature
    _cache: dict = field(default_factory=dict, repr=False)

    def __getitem__(self, name: str) -> Automorphism:
        if name not in self._cache:
            self._cache[name] = self._build(name)
        return self._cache[name]

    def power(self, name: str, k: int) -> Automorphism:
        return self[name] ** k

    def evaluate(self, word) -> Automorphism:
        out = Automorphism.identity(self.sig)
        for name, k in word:
            out = out @ self.power(name, k)
        return out

    def _build(self, name: str) -> Automorphism:
        sig = self.sig
        if name.startswith("twist:"):
            return dehn_twist(sig, catalog_curve(sig, name[len("twist:"):]))
        m = _NAME.match(name)
        if not m:
            raise UnknownGenerator(name)
        head, idx = m.group(1), _indices(m.group(2))
        try:
            return self._dispatch(head, idx)
        except (IndexError, ValueError, TypeError) as err:
            raise UnknownGenerator(f"{name}: {err}") from err

    def _dispatch(self, head: str, idx: tuple[int, ...]) -> Automorphism:
        sig, n, g = self.sig, self.sig.arcs, self.sig.genus
        one = len(idx) == 1
        two = len(idx) == 2
        if head == "sigma" and one:
            return half_twist(sig, idx[0])
        if head == "iota" and one:
            _check(1 <= idx[0] <= n)
            return half_twist(sig, 2 * idx[0] - 1)
        if head == "lambdabar" and one:
            k = idx[0]
            _check(1 <= k < n)
            h = [self[f"sigma_{2 * k - 1 + r}"] for r in range(3)]
            return h[0] @ h[1] @ h[2] @ h[0] @ h[1] @ h[0]
        if head == "lambda" and one:
            k = idx[0]
            _check(1 <= k < n)
            return self[f"iota_{k + 1}"].inverse() @ self[f"iota_{k}"].inverse() @ self[f"lambdabar_{k}"]
        if head == "Lambda" and one:
            i = idx[0]
            _check(1 <= i <= n)
            out = Automorphism.identity(sig)
            for k in range(1, i):
                out = out @ self[f"lambda_{k}"].inverse()
            return out
        if head == "s" and two:
            j, i = idx
            _check(1 <= j <= n and 1 <= i <= n)
            return spin(sig, 2 * j, *spin_curves(sig, j, i))
        if head in ("S", "Sp") and two:
            j, i = idx
            _check(1 <= j <= n and 1 <= i <= n and i != j)
            p = 2 * i if head == "S" else 2 * i - 1
            return slide_arc(sig, j, *slide_arc_curves(sig, j, p))
        if head == "tau" and one:
            return dehn_twist(sig, cv.meridian(sig, idx[0]))
        if head == "omega" and one:
            sig._check_handle(idx[0])
            return omega(sig, idx[0])
        if head == "rho" and one:
            return handle_swap(sig, idx[0])
        if head == "rhobar" and one:
            i = idx[0]
            return self[f"omega_{i + 1}"] @ self[f"omega_{i}"] @ self[f"rho_{i}"]
        if head == "rho" and two:
            i, j = idx
            _check(1 <= i <= j <= g)
            out = Automorphism.identity(sig)
            if i == j:
                return out
            # diagrammatic reading of rho_i ... rho_(j-1) ... rho_i^-1
            steps = [self[f"rho_{k}"] for k in range(i, j)]
            for s in steps[:-1]:
                out = out @ s.inverse()
            for s in reversed(steps):
                out = out @ s
            return out
        if head in ("theta", "eta", "xi", "zeta") and two:
            i, j = idx
            kind = {"theta": "e", "eta": "g", "xi": "f", "zeta": "l"}[head]
            return slide_disc(sig, i, kind, j)
        if head in ("L", "M") and two:
            k, i = idx
            _check(1 <= k <= n)
            return push(sig, *arc_handle_loop(sig, k, i, "e" if head == "L" else "g"))
        raise UnknownGenerator(head + "".join(f"_{x}" for x in idx))


def _check(ok: bool):
    if not ok:
        raise IndexError("index out of range for this signature")


@lru_cache(maxsize=None)
def table(sig: Signature) -> GeneratorTable:
    return GeneratorTable(sig)


# ---- curve catalog ----------------------------------------------------------------------------


def catalog(sig: Signature) -> dict[str, Letters]:
    """Named simple closed curves available to ``twist:<name>``."""
    out: dict[str, Letters] = {}
    for i in range(1, sig.genus + 1):
        out[f"alpha_{i}"] = cv.longitude(sig, i)
        out[f"beta_{i}"] = cv.meridian(sig, i)
        out[f"dT_{i}"] = cv.handle_boundary(sig, i)
    for i in range(1, sig.genus):
        out[f"dC_{i}"] = cv.pair_boundary(sig, i)
    for k in range(1, sig.arcs + 1):
        out[f"dA_{k}"] = cv.arc_boundary(sig, k)
    for j in range(1, sig.punctures + 1):
        out[f"p_{j}"] = sig.u(j)
    return out


def catalog_curve(sig: Signature, name: str) -> Letters:
    cat = catalog(sig)
    if name in cat:
        return cat[name]
    try:
        return sig.letters(name)
    except ValueError:
        raise UnknownGenerator(f"twist:{name}") from None


# ---- mapping classes as generator words -------------------------------------------------------

_TOKEN = re.compile(r"^(twist:[^\^]+|[A-Za-z]+(?:_\d+)*)(?:\^(-?\d+))?$")


def parse_word(text: str) -> tuple[tuple[str, int], ...]:
    """Parse ``"iota_1^2 lambda_1 S_1_2^-1"``; ``1`` or an empty string is the identity."""
    out = []
    for tok in text.replace("*", " ").split():
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise UnknownGenerator(tok)
        out.append((m.group(1), int(m.group(2) or 1)))
    return tuple(out)


def format_word(word) -> str:
    if not word:
        return "1"
    return " ".join(name if k == 1 else f"{name}^{k}" for name, k in word)


@dataclass(frozen=True)
class MappingClass:
    """A product of table generators, leftmost factor applied last."""

    sig: Signature
    gen_word: tuple[tuple[str, int], ...]

    def __post_init__(self):
        t = table(self.sig)
        for name, _ in self.gen_word:
            t[name]

    @property
    def automorphism(self) -> Automorphism:
        return table(self.sig).evaluate(self.gen_word)

    def __matmul__(self, other: MappingClass) -> MappingClass:
        return MappingClass(self.sig, self.gen_word + other.gen_word)

    def inverse(self) -> MappingClass:
        return MappingClass(self.sig, tuple((n, -k) for n, k in reversed(self.gen_word)))

    def __str__(self):
        return format_word(self.gen_word)


def named(sig: Signature, name: str) -> MappingClass:
    return MappingClass(sig, parse_word(name))


def generating_set(sig: Signature, pure: bool) -> list[str]:
    """Generators of the arc-preserving group (``pure=False``) or of its pure subgroup."""
    g, n = sig.genus, sig.arcs
    out: list[str] = []
    if g == 0:
        if pure:
            if n == 1:
                return out  # the pure group of the twice-punctured sphere is trivial
            out += [f"s_{j}_{j}" for j in range(1, n + 1)]
            out += [f"S_{j}_{i}" for j in range(1, n + 1) for i in range(1, n + 1) if i != j]
            out += [f"Sp_{j}_{i}" for j in range(1, n + 1) for i in range(1, n + 1) if i != j]
            return out
        out += ["iota_1"] + [f"lambda_{k}" for k in range(1, n)] + ["s_1_1"]
        if n >= 2:
            out += ["S_1_2", "Sp_1_2"]
        return out
    if pure:
        out += ["tau_1", "omega_1"] + [f"rho_{i}" for i in range(1, g)]
        if g >= 2:
            out += ["theta_1_2", "eta_1_2"]
        out += [f"xi_1_{k}" for k in range(1, n + 1)] + [f"zeta_1_{k}" for k in range(1, n + 1)]
        out += [f"s_{k}_{k}" for k in range(1, n + 1)]
        out += [f"S_{k}_{l}" for k in range(1, n + 1) for l in range(1, n + 1) if k != l]
        out += [f"Sp_{k}_{l}" for k in range(1, n + 1) for l in range(1, n + 1) if k != l]
        out += [f"L_{k}_1" for k in range(1, n + 1)]
        return out
    out += ["iota_1"] + [f"lambda_{k}" for k in range(1, n)]
    out += ["tau_1", "omega_1"] + [f"rho_{i}" for i in range(1, g)]
    if g >= 2:
        out += ["theta_1_2", "eta_1_2"]
    out += ["xi_1_1"]
    if n >= 2:
        out += ["S_1_2"]
    out += ["L_1_1"]
    return out
