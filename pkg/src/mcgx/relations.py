"""
The relation catalog satisfied by the generator tables, and a checker that evaluates both sides
of every instantiable relation and compares them as mapping classes.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .automorphism import Automorphism
from .generators import format_word, parse_word, table
from .surface import Signature
from .words import Letters, conjugacy_key


@dataclass(frozen=True)
class Relation:
    ident: str
    lhs: tuple[tuple[str, int], ...]
    rhs: tuple[tuple[str, int], ...]
    source: str
    modulo_tau: int | None = None  # handle index whose twist may absorb a discrepancy


@dataclass
class RelationResult:
    ident: str
    passed: bool
    lhs: str
    rhs: str
    conjugator: str | None = None
    witness: str | None = None
    tau_power: int | None = None

    def line(self) -> str:
        tail = ""
        if self.passed and self.conjugator is not None:
            tail = f" conjugator={self.conjugator}"
            if self.tau_power:
                tail += f" tau^{self.tau_power}"
        elif not self.passed and self.witness is not None:
            tail = f" witness={self.witness}"
        return f"RELATION {self.ident} {'PASS' if self.passed else 'FAIL'}{tail}"


def _w(text: str) -> tuple[tuple[str, int], ...]:
    return parse_word(text)


def _lam_chain(h: int) -> str:
    return " ".join(f"lambda_{k}" for k in range(1, h))


def _lam_chain_inv(h: int) -> str:
    return " ".join(f"lambda_{k}^-1" for k in range(h - 1, 0, -1))


def relation_catalog(sig: Signature, derived: bool = True) -> list[Relation]:
    """Every relation of the catalog whose indices are in range for ``sig``.

    With ``derived=True`` the list also contains consequences that the tables are expected to
    satisfy beyond the quoted catalog (handle-swap square, the remaining slide conjugations).
    """
    g, n = sig.genus, sig.arcs
    rel: list[Relation] = []

    def add(ident, lhs, rhs, source, modulo_tau=None):
        rel.append(Relation(ident, _w(lhs), _w(rhs), source, modulo_tau))

    # arcs on the sphere
    if g == 0:
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    add(f"spin_reduction[j={j},i={i}]", f"s_{j}_{i}", f"S_{i}_{j} s_{i}_{i}^-1", "reduction of spins to slides")
    for i in range(2, n + 1):
        add(f"spin_conjugation[i={i}]", f"s_{i}_{i}", f"Lambda_{i}^-1 s_1_1 Lambda_{i}", "spins are conjugate")
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            if i == j or (j, i) == (1, 2):
                continue
            if j < i:
                c = f"lambda_1 Lambda_{i} Lambda_{j}"
                ci = f"Lambda_{j}^-1 Lambda_{i}^-1 lambda_1^-1"
            else:
                c = f"Lambda_{j} Lambda_{i}"
                ci = f"Lambda_{i}^-1 Lambda_{j}^-1"
            add(f"slide_conjugation[j={j},i={i}]", f"S_{j}_{i}", f"{ci} S_1_2 {c}", "slides are conjugate")
            if derived:
                add(f"primed_slide_conjugation[j={j},i={i}]", f"Sp_{j}_{i}", f"{ci} Sp_1_2 {c}", "derived")
    if n >= 1:
        add("spin_square", "s_1_1", "iota_1^2", "final generation argument")
    if n >= 2:
        add("primed_slide", "Sp_1_2", "iota_1^4 lambda_1^2 S_1_2^-1", "final generation argument")

    # handles
    for i in range(1, g + 1):
        add(f"omega_square[i={i}]", f"omega_{i}^2", f"twist:dT_{i}", "half rotation squares to boundary twist")
    for i in range(2, g + 1):
        add(f"tau_conjugation[i={i}]", f"tau_{i}", f"rho_1_{i} tau_1 rho_1_{i}^-1", "handle exchange")
        add(f"omega_conjugation[i={i}]", f"omega_{i}", f"rho_1_{i} omega_1 rho_1_{i}^-1", "handle exchange")
    if derived:
        for i in range(1, g):
            add(f"rho_square[i={i}]", f"rho_{i}^2", f"twist:dC_{i} twist:dT_{i}^-1 twist:dT_{i+1}^-1", "derived")
    for head in ("theta", "eta"):
        if head == "eta" and not derived:
            continue
        for i in range(1, g + 1):
            for j in range(1, g + 1):
                if i == j or (i, j) == (1, 2):
                    continue
                if i < j:
                    c = f"rho_1_{i} rho_2_{j}"
                    ci = f"rho_2_{j}^-1 rho_1_{i}^-1"
                    add(f"{head}_conjugation[i={i},j={j}]", f"{head}_{i}_{j}", f"{c} {head}_1_2 {ci}", "disc slides over handles")
                else:
                    add(
                        f"{head}_conjugation[i={i},j={j}]",
                        f"{head}_{i}_{j}",
                        f"rho_{j}_{i}^-1 omega_{i}^-2 {head}_{j}_{i} omega_{i}^2 rho_{j}_{i}",
                        "disc slides over handles",
                    )
    for i in range(2, g + 1):
        for k in range(1, n + 1):
            add(f"L_conjugation[k={k},i={i}]", f"L_{k}_{i}", f"rho_1_{i} L_{k}_1 rho_1_{i}^-1", "arc slides over handles")
            add(f"M_conjugation[k={k},i={i}]", f"M_{k}_{i}", f"rho_1_{i} M_{k}_1 rho_1_{i}^-1", "arc slides around discs")
            if derived:
                for head in ("xi", "zeta"):
                    add(f"{head}_handle_conjugation[i={i},k={k}]", f"{head}_{i}_{k}", f"rho_1_{i} {head}_1_{k} rho_1_{i}^-1", "derived")
    if g >= 1:
        for k in range(1, n + 1):
            add(f"M_decomposition[k={k}]", f"M_{k}_1", f"tau_1^-2 zeta_1_{k} xi_1_{k} s_{k}_{k}", "slide around a disc")
        for h in range(1, n + 1):
            add(f"zeta_from_xi[h={h}]", f"zeta_1_{h}", f"iota_{h}^-1 xi_1_{h} iota_{h}", "final generation argument")
        for h in range(2, n + 1):
            add(f"xi_conjugation[h={h}]", f"xi_1_{h}", f"{_lam_chain_inv(h)} xi_1_1 {_lam_chain(h)}", "final generation argument")
            add(f"L_arc_conjugation[h={h}]", f"L_{h}_1", f"{_lam_chain_inv(h)} L_1_1 {_lam_chain(h)}", "final generation argument")
    return rel


def _witness(lhs: Automorphism, rhs: Automorphism) -> str:
    names = lhs.sig.names
    for x, (u, v) in enumerate(zip(lhs.images, rhs.images)):
        if conjugacy_key(u) != conjugacy_key(v):
            return names[x]
    for x, (u, v) in enumerate(zip(lhs.images, rhs.images)):
        if u != v:
            return names[x]
    return names[0]


def tau_discrepancy(lhs: Automorphism, rhs: Automorphism, tau: Automorphism, bound: int = 4):
    """Smallest ``p`` (by ``|p|``, then sign) with ``lhs = rhs . tau^p`` or ``lhs = tau^p . rhs``."""
    for p in sorted(range(-bound, bound + 1), key=lambda p: (abs(p), p < 0)):
        tp = tau ** p
        for cand in (rhs @ tp, tp @ rhs):
            t = lhs.outer_equal(cand)
            if t is not None:
                return p, t
    return None


def check(sig: Signature, relation: Relation) -> RelationResult:
    t = table(sig)
    lhs, rhs = t.evaluate(relation.lhs), t.evaluate(relation.rhs)
    res = RelationResult(relation.ident, False, format_word(relation.lhs), format_word(relation.rhs))
    conj = lhs.outer_equal(rhs)
    if conj is not None:
        res.passed, res.conjugator = True, sig.format(conj)
        return res
    if relation.modulo_tau is not None:
        found = tau_discrepancy(lhs, rhs, t[f"tau_{relation.modulo_tau}"])
        if found is not None:
            res.passed, res.tau_power, res.conjugator = True, found[0], sig.format(found[1])
            return res
    res.witness = _witness(lhs, rhs)
    return res


def relation_suite(sig: Signature, derived: bool = True) -> list[RelationResult]:
    return [check(sig, r) for r in relation_catalog(sig, derived)]


def format_report(results: list[RelationResult]) -> str:
    return "\n".join(r.line() for r in results)


def report_json(sig: Signature, results: list[RelationResult]) -> str:
    return json.dumps(
        {"genus": sig.genus, "arcs": sig.arcs, "relations": [asdict(r) for r in results]}, indent=2
    )
