"""Command-line front end: ``mcgx -g G -n N <command> ...``."""

from __future__ import annotations

import argparse
import json
import random
import sys

from .extension import Member, Refuted, Unknown, coset_equivalent, membership, sigma_prime_member
from .generators import (
    MappingClass,
    UnknownGenerator,
    Unsupported,
    catalog,
    format_word,
    generating_set,
    parse_word,
    table,
)
from .linktool import OrientationError, abelianization, elementary_ideal, link_presentation
from .relations import relation_suite
from .surface import Signature

EXIT_OK, EXIT_FAIL, EXIT_UNKNOWN, EXIT_ERROR = 0, 1, 2, 3


class ParseError(ValueError):
    pass


def parse_class(sig: Signature, text: str) -> MappingClass:
    """Parse a generator word, reporting the offending token and its column on failure."""
    col = 0
    word = []
    t = table(sig)
    for pos, tok in enumerate(text.split(), start=1):
        col = text.index(tok, col)
        try:
            parsed = parse_word(tok)
            for name, _ in parsed:
                t[name]
        except (UnknownGenerator, Unsupported, ValueError) as err:
            raise ParseError(f"token {pos} '{tok}' at column {col + 1}: {err}") from None
        word += parsed
        col += len(tok)
    return MappingClass(sig, tuple(word))


def _certificate_json(c) -> dict:
    if isinstance(c, Member):
        return {"verdict": "Member", "expression": format_word(c.expression)}
    if isinstance(c, Refuted):
        return {"verdict": "Refuted", "reason": c.reason}
    return {"verdict": "Unknown", "depth": c.depth}


def _certificate_exit(c) -> int:
    return {Member: EXIT_OK, Refuted: EXIT_FAIL, Unknown: EXIT_UNKNOWN}[type(c)]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mcgx", description="Arc-preserving mapping classes of punctured surfaces")
    p.add_argument("-g", type=int, required=True, help="genus")
    p.add_argument("-n", type=int, required=True, help="number of arcs (2n punctures)")
    p.add_argument("--depth", type=int, default=6, help="membership search depth")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized commands")
    p.add_argument("--pure", action="store_true", help="use the pure subgroup")
    p.add_argument("--emit-presentation", metavar="FILE", help="write the link presentation to FILE")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("compose", "perm", "homology"):
        sub.add_parser(name).add_argument("word", nargs="?", default="")
    act = sub.add_parser("act")
    act.add_argument("word")
    act.add_argument("loop", help="word in a1 b1 ... u1 ...")
    sub.add_parser("relations")
    mem = sub.add_parser("member")
    mem.add_argument("word", nargs="?", default="")
    mem.add_argument("--pure", action="store_true", dest="pure_member")
    mem.add_argument("--depth", type=int, dest="depth_member")
    cos = sub.add_parser("coset")
    cos.add_argument("word1")
    cos.add_argument("word2")
    link = sub.add_parser("link")
    link.add_argument("word", nargs="?", default="")
    link.add_argument("--invariants", action="store_true")
    sub.add_parser("catalog")
    gens = sub.add_parser("gens")
    gens.add_argument("--pure", action="store_true", dest="pure_gens")
    sample = sub.add_parser("sample", help="random products: check the induced permutations")
    sample.add_argument("--count", type=int, default=100)
    sample.add_argument("--length", type=int, default=8)
    return p


def run(args) -> tuple[int, object, str]:
    """Execute a parsed query; returns (exit code, JSON payload, text)."""
    sig = Signature(args.g, args.n)
    cmd = args.command
    if cmd in ("compose", "perm", "homology"):
        f = parse_class(sig, args.word).automorphism
        if cmd == "compose":
            data = {sig.names[i]: sig.format(w) for i, w in enumerate(f.images)}
            return EXIT_OK, data, f.format()
        if cmd == "perm":
            perm = list(f.induced_permutation())
            return EXIT_OK, {"permutation": perm, "pair_partition": sigma_prime_member(perm, sig.arcs)}, " ".join(map(str, perm))
        m = f.homology_action()
        return EXIT_OK, {"rows": m}, "\n".join(" ".join(f"{x:3d}" for x in r) for r in m)
    if cmd == "act":
        f = parse_class(sig, args.word).automorphism
        w = sig.letters(args.loop)
        out = sig.format(f.apply(w))
        return EXIT_OK, {"image": out}, out
    if cmd == "relations":
        res = relation_suite(sig)
        ok = all(r.passed for r in res)
        data = {"genus": sig.genus, "arcs": sig.arcs, "relations": [{"id": r.ident, "pass": r.passed} for r in res]}
        return (EXIT_OK if ok else EXIT_FAIL), data, "\n".join(r.line() for r in res)
    if cmd == "member":
        pure = args.pure or args.pure_member
        depth = args.depth_member if args.depth_member is not None else args.depth
        c = membership(parse_class(sig, args.word), depth, pure)
        return _certificate_exit(c), _certificate_json(c), str(c)
    if cmd == "coset":
        c = coset_equivalent(parse_class(sig, args.word1), parse_class(sig, args.word2), args.depth)
        return _certificate_exit(c), _certificate_json(c), str(c)
    if cmd == "link":
        p = link_presentation(parse_class(sig, args.word))
        data = {"generators": list(p.generators), "relators": p.export_lines().split()}
        text = p.export()
        if args.invariants:
            data["abelianization"] = str(abelianization(p))
            data["ambient"] = str(abelianization(p.ambient()))
            data["components"] = len(p.components)
            data["first_elementary_ideal"] = list(elementary_ideal(p, 1))
            text += f"H1: {data['abelianization']}\nambient H1: {data['ambient']}\ncomponents: {data['components']}\n"
            text += f"first elementary ideal: {', '.join(data['first_elementary_ideal'])}\n"
        if args.emit_presentation:
            with open(args.emit_presentation, "w") as fh:
                fh.write(p.export_lines())
        return EXIT_OK, data, text.rstrip("\n")
    if cmd == "catalog":
        cat = catalog(sig)
        data = {k: {"word": sig.format(v), "homology": sig.abelianize(v)} for k, v in cat.items()}
        return EXIT_OK, data, "\n".join(f"{k}: {v['word']}  [{' '.join(map(str, v['homology']))}]" for k, v in data.items())
    if cmd == "gens":
        names = generating_set(sig, args.pure or args.pure_gens)
        return EXIT_OK, {"generators": names}, " ".join(names)
    if cmd == "sample":
        rng = random.Random(args.seed)
        full, pure = generating_set(sig, False), generating_set(sig, True)
        bad = 0
        for pool, need_identity in ((full, False), (pure, True)):
            if not pool:
                continue
            for _ in range(args.count):
                L = rng.randint(0, args.length)
                w = tuple((rng.choice(pool), rng.choice((1, -1))) for _ in range(L))
                perm = MappingClass(sig, w).automorphism.induced_permutation()
                ok = sigma_prime_member(perm, sig.arcs)
                if need_identity:
                    ok = perm == tuple(range(1, sig.punctures + 1))
                bad += not ok
        return (EXIT_OK if not bad else EXIT_FAIL), {"violations": bad}, f"violations: {bad}"
    raise ParseError(f"unknown command {cmd}")  # pragma: no cover


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, data, text = run(args)
    except (ParseError, UnknownGenerator, Unsupported, OrientationError, ValueError, IndexError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR
    print(json.dumps(data, indent=2) if args.json else text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
