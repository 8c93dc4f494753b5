"""Command-line entry point wiring all modules together.

One subcommand per capability: word problem (nf, eq), presentation
verification, primitivity testing, tree export, quotient and stabilizer
reports, simplicial-complex utilities on JSON files, the Farey fixture,
and contraction-certificate demos.  Every subcommand has a
machine-readable (--json) mode next to the human one, and output is
byte-identical for identical (argv, seed).

Exit codes: 0 success, 1 verification failure (including a negative
answer to a yes/no query), 2 usage error.  The GOERITZ_FUEL environment
variable overrides the default move budget of the contract subcommand.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import amalgam, contract, farey, simplicial, stabilizers, tree, words

__all__ = ["main"]


def _emit(args: argparse.Namespace, lines: list[str], payload: dict) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, default=str))
    else:
        for line in lines:
            print(line)


def _cmd_nf(args: argparse.Namespace) -> int:
    nf = amalgam.normal_form(amalgam.parse(args.word))
    payload = {
        "claim": "alternating normal form of the given word",
        "word": args.word,
        "normal_form": str(nf),
        "syllables": [{"factor": s.factor, "power": s.power} for s in nf.syllables],
        "tail": str(nf.tail),
        "is_identity": nf.is_identity(),
    }
    _emit(args, [str(nf)], payload)
    return 0


def _cmd_eq(args: argparse.Namespace) -> int:
    equal = amalgam.are_equal(amalgam.parse(args.left), amalgam.parse(args.right))
    payload = {
        "claim": "the two words have the same normal form",
        "left": args.left,
        "right": args.right,
        "equal": equal,
    }
    _emit(args, ["true" if equal else "false"], payload)
    return 0 if equal else 1


def _cmd_verify_presentation(args: argparse.Namespace) -> int:
    report = amalgam.verify_presentation(
        consequences=args.consequences, max_len=args.max_len, seed=args.seed
    )
    lines = [
        f"{name}: {'ok' if ok else 'FAIL'}" for name, ok in report.relator_results
    ]
    lines.append(
        f"consequences: {report.consequences_checked - len(report.consequence_failures)}"
        f"/{report.consequences_checked} ok"
    )
    payload = {
        "claim": "defining relators and random consequences normal-form to the identity",
        "relators": [{"name": n, "ok": ok} for n, ok in report.relator_results],
        "consequences_checked": report.consequences_checked,
        "consequence_failures": report.consequence_failures,
        "ok": report.ok,
    }
    _emit(args, lines, payload)
    return 0 if report.ok else 1


def _cmd_primitive(args: argparse.Namespace) -> int:
    word = words.parse_word(args.word)
    primitive = words.is_primitive(word)
    criterion = None
    if len(words.cyclic_reduce(word)) > 0:
        criterion = words.mixed_sign_criterion(words.cyclic_reduce(word))
    certified = criterion is words.Primitivity.CERTIFIED_NON_PRIMITIVE
    if primitive:
        line = "primitive"
    elif certified:
        line = "not primitive (mixed-sign certificate)"
    else:
        line = "not primitive"
    payload = {
        "claim": "greedy length descent decides primitivity",
        "word": args.word,
        "primitive": primitive,
        "mixed_sign_certificate": certified,
    }
    _emit(args, [line], payload)
    return 0 if primitive else 1


def _cmd_tree(args: argparse.Namespace) -> int:
    b = tree.ball(args.radius, args.max_power)
    good = tree.is_tree(b)
    if args.dot:
        Path(args.dot).write_text(tree.to_dot(b))
    lines = [
        f"ball(radius={args.radius}, max_power={args.max_power}): "
        f"{len(b.vertices)} vertices, {len(b.edges)} edges",
        f"is_tree: {'true' if good else 'false'}",
    ]
    if args.dot:
        lines.append(f"dot written to {args.dot}")
    payload = {
        "claim": "the coset ball is connected with edges = vertices - 1",
        "radius": args.radius,
        "max_power": args.max_power,
        "vertices": len(b.vertices),
        "edges": len(b.edges),
        "is_tree": good,
        "dot": args.dot,
    }
    _emit(args, lines, payload)
    return 0 if good else 1


def _cmd_quotient(args: argparse.Namespace) -> int:
    b = tree.ball(args.radius, args.max_power)
    report = tree.quotient(b, witness_samples=args.witnesses)
    lines = [
        f"quotient vertices: {', '.join(report.vertices)}",
        f"quotient edges: {len(report.edges)}",
    ]
    for vertex, word, good in report.witnesses:
        shown = word if word else "1"
        lines.append(f"  {vertex} = ({shown}) . base  [{'ok' if good else 'FAIL'}]")
    lines.append(f"ok: {'true' if report.ok else 'false'}")
    payload = {
        "claim": "the action collapses the ball to a single edge",
        "radius": args.radius,
        "max_power": args.max_power,
        "vertices": list(report.vertices),
        "edges": [list(e) for e in report.edges],
        "witnesses": [
            {"vertex": v, "word": w, "ok": good} for v, w, good in report.witnesses
        ],
        "ok": report.ok,
    }
    _emit(args, lines, payload)
    return 0 if report.ok else 1


def _element_word(elem) -> str:
    """A defining word for a stabilizer element, in the b/g/d alphabet."""
    if isinstance(elem, stabilizers.TripleStabilizer):
        return "d" * elem.d + "g" * elem.g + "a" * elem.a
    if isinstance(elem, stabilizers.PairStabilizer):
        power = "b" * elem.k if elem.k >= 0 else "B" * (-elem.k)
        return power + "t" * elem.t + "g" * elem.g
    return "g" * elem.g + "a" * elem.a


def _cmd_stabilizers(args: argparse.Namespace) -> int:
    triple = stabilizers.triple_elements()
    edge = stabilizers.edge_elements()
    base_p, base_t = tree.base_pair_vertex(), tree.base_triple_vertex()
    triple_fix = all(
        tree.act(amalgam.parse(_element_word(e)), base_t) == base_t for e in triple
    )
    pair_fix = {
        name: tree.act(amalgam.parse(word), base_p) == base_p
        for name, word in (("b", "b"), ("g", "g"), ("t", "t"))
    }
    d_moves = tree.act("d", base_p) != base_p
    ok = triple_fix and all(pair_fix.values()) and d_moves
    lines = [
        f"triple-vertex stabilizer: {len(triple)} elements",
        "  " + ", ".join(str(e) for e in triple),
        f"edge stabilizer: {len(edge)} elements",
        "  " + ", ".join(str(e) for e in edge),
        f"all triple elements fix the base triple vertex: {str(triple_fix).lower()}",
        "pair generators fix the base pair vertex: "
        + ", ".join(f"{n}={str(v).lower()}" for n, v in pair_fix.items()),
        f"d moves the base pair vertex: {str(d_moves).lower()}",
    ]
    payload = {
        "claim": "stabilizer enumerations and their fixed base vertices",
        "triple_count": len(triple),
        "triple_elements": [str(e) for e in triple],
        "edge_count": len(edge),
        "edge_elements": [str(e) for e in edge],
        "triple_fixes_base_triple": triple_fix,
        "pair_generators_fix_base_pair": pair_fix,
        "d_moves_base_pair": d_moves,
        "ok": ok,
    }
    _emit(args, lines, payload)
    return 0 if ok else 1


def _cmd_simplicial(args: argparse.Namespace) -> int:
    complex_ = simplicial.Complex.from_json(Path(args.file).read_text())
    if args.action == "flag":
        flag = complex_.is_flag()
        payload = {
            "claim": "every pairwise-adjacent vertex set spans a simplex",
            "file": args.file,
            "is_flag": flag,
        }
        _emit(args, ["true" if flag else "false"], payload)
        return 0 if flag else 1
    if args.action == "barycentric":
        out = complex_.barycentric()
    else:  # remove-stars
        out = simplicial.remove_open_stars(
            complex_.barycentric(), complex_.vertices()
        )
    text = out.to_json()
    if args.output:
        Path(args.output).write_text(text)
        lines = [f"written to {args.output}"]
    else:
        lines = [text]
    payload = {
        "claim": "subdivision (and open-star removal) of the input complex",
        "file": args.file,
        "action": args.action,
        "vertices": len(out.vertices()),
        "edges": len(out.simplices(1)),
        "triangles": len(out.simplices(2)),
        "output": args.output,
        "complex": json.loads(text) if not args.output else None,
    }
    _emit(args, lines, payload)
    return 0


def _cmd_farey(args: argparse.Namespace) -> int:
    complex_ = farey.build(args.n, tuple(args.window))
    lines = [
        f"build({args.n}, window={tuple(args.window)}): "
        f"{len(complex_.vertices())} vertices, {len(complex_.simplices(1))} edges, "
        f"{len(complex_.simplices(2))} triangles",
        f"flag: {str(complex_.is_flag()).lower()}",
        f"connected: {str(complex_.is_connected()).lower()}",
    ]
    payload = {
        "claim": "the truncated slope complex is a connected flag complex",
        "n": args.n,
        "window": list(args.window),
        "vertices": len(complex_.vertices()),
        "edges": len(complex_.simplices(1)),
        "triangles": len(complex_.simplices(2)),
        "is_flag": complex_.is_flag(),
        "is_connected": complex_.is_connected(),
    }
    code = 0
    if args.verify_axioms:
        report = farey.verify_axioms(args.n, args.samples, args.seed)
        lines.append(
            f"axioms: {report.samples} samples, {len(report.violations)} violations"
        )
        lines.extend("  " + v for v in report.violations)
        payload["axioms"] = {
            "samples": report.samples,
            "violations": report.violations,
            "ok": report.ok,
        }
        code = 0 if report.ok else 1
    _emit(args, lines, payload)
    return code


def _cmd_contract(args: argparse.Namespace) -> int:
    fuel = args.fuel
    if fuel is None:
        fuel = int(os.environ.get("GOERITZ_FUEL", contract.DEFAULT_FUEL))
    loop = farey.random_based_loop(args.seed, args.max_denominator)
    try:
        certificate = contract.contract_loop(
            farey.adjacent, farey.remoteness, farey.blocking, loop, farey.BASE,
            fuel=fuel,
        )
    except contract.FuelExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = contract.validate(farey.adjacent, certificate, loop, farey.BASE)
    if args.output:
        Path(args.output).write_text(certificate.to_json())
    lines = [
        "loop: " + " ".join(str(v) for v in loop),
        f"moves: {len(certificate.moves)}",
        "final: " + " ".join(str(v) for v in certificate.final),
        f"validated: {str(report.ok).lower()}",
    ]
    if args.output:
        lines.append(f"certificate written to {args.output}")
    payload = {
        "claim": "the certified moves contract the loop into the base star",
        "seed": args.seed,
        "max_denominator": args.max_denominator,
        "fuel": fuel,
        "loop": [str(v) for v in loop],
        "moves": len(certificate.moves),
        "validated": report.ok,
        "certificate": certificate.to_json_dict(),
        "output": args.output,
    }
    _emit(args, lines, payload)
    return 0 if report.ok else 1


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goeritz",
        description="Normal forms, coset-tree reports, and contraction certificates.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name: str, func, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("nf", _cmd_nf, "normal form of a word in letters b B g d D (a, t macros)")
    p.add_argument("word")

    p = add("eq", _cmd_eq, "decide whether two words are equal")
    p.add_argument("left")
    p.add_argument("right")

    p = add("verify-presentation", _cmd_verify_presentation,
            "check relators and random consequences")
    p.add_argument("--consequences", type=int, default=1000)
    p.add_argument("--max-len", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)

    p = add("primitive", _cmd_primitive,
            "decide primitivity of a rank-2 word in letters x X y Y")
    p.add_argument("word")

    p = add("tree", _cmd_tree, "coset-tree ball report")
    p.add_argument("--radius", type=int, default=3)
    p.add_argument("--max-power", type=int, default=2)
    p.add_argument("--dot", metavar="PATH", help="write the ball as DOT")

    p = add("quotient", _cmd_quotient, "quotient of a ball by the action")
    p.add_argument("--radius", type=int, default=3)
    p.add_argument("--max-power", type=int, default=2)
    p.add_argument("--witnesses", type=int, default=20)

    add("stabilizers", _cmd_stabilizers, "stabilizer enumerations and fixed vertices")

    p = add("simplicial", _cmd_simplicial, "operations on a JSON complex file")
    p.add_argument("action", choices=("flag", "barycentric", "remove-stars"))
    p.add_argument("file")
    p.add_argument("-o", "--output", metavar="PATH")

    p = add("farey", _cmd_farey, "truncated slope-complex fixture report")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--window", type=int, nargs=2, default=(0, 1))
    p.add_argument("--verify-axioms", action="store_true")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)

    p = add("contract", _cmd_contract, "contract a seeded random based loop")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-denominator", type=int, default=50)
    p.add_argument("--fuel", type=int, default=None,
                   help="move budget (default GOERITZ_FUEL or 1000000)")
    p.add_argument("-o", "--output", metavar="PATH", help="write certificate JSON")

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for flag in ("radius", "max_power", "witnesses", "n", "samples",
                 "max_denominator", "fuel", "consequences", "max_len"):
        value = getattr(args, flag, None)
        if value is not None and value <= 0:
            print(f"error: --{flag.replace('_', '-')} must be positive",
                  file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
