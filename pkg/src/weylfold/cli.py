"""Command-line interface: ``weylfold <command> --type A3 ...``.

Exit status is 0 on success, 2 on usage errors (bad arguments, malformed
rationals, rank mismatch, unknown lattice generators) and 1 when ``verify``
finds a failing property.  All numbers are printed as exact ``p/q`` strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import prod

from .domains import (
    DomainError,
    alcove,
    complex_F_Y,
    fold_full,
    fundamental_polytope,
    polytope_to_json,
)
from .exact import fmt, fmt_vec, parse_vec
from .lattices import LatticeError, enumerate_lattices, omega_subgroup, parse_lattice
from .omega import OmegaError, omega_elements, omega_group, to_cycles
from .rootsys import RootSystemError, build, fundamental_group, fundamental_group_label
from .torus import canonicalize
from .verify import run_suite, weyl_degrees


class UsageError(Exception):
    pass


def _root_system(args):
    if not args.type:
        raise UsageError("--type is required")
    return build(args.type)


def _lattice(rs, args):
    return parse_lattice(rs, args.lattice or "adjoint")


def _point(rs, args):
    if args.point is None:
        raise UsageError("--point is required")
    try:
        lam = parse_vec(args.point)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    if len(lam) != rs.rank:
        raise UsageError(f"point has {len(lam)} coordinates but {rs.name} has rank {rs.rank}")
    return lam


def _emit(args, data: dict, text: str):
    if args.format == "json":
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print(text)


def _witness_json(a) -> dict:
    return {"translation": [fmt(x) for x in a.translation], "weyl": list(a.weyl), "text": str(a)}


def cmd_info(args) -> int:
    rs = _root_system(args)
    data = {
        "type": rs.name,
        "rank": rs.rank,
        "cartan": [list(r) for r in rs.cartan],
        "highest_root": list(rs.highest_root),
        "marks": list(rs.marks),
        "minuscule": sorted(rs.J),
        "positive_roots": len(rs.positive_roots),
        "weyl_order": prod(weyl_degrees(rs)),
        "fundamental_group": fundamental_group(rs),
        "fundamental_group_label": fundamental_group_label(rs),
    }
    lines = [
        f"type: {rs.name}",
        f"rank: {rs.rank}",
        "cartan:",
        *("  " + " ".join(f"{x:>2}" for x in row) for row in rs.cartan),
        f"highest root: {fmt_vec(rs.highest_root)}",
        f"marks: {fmt_vec(rs.marks)}",
        f"minuscule nodes J: {{{', '.join(map(str, sorted(rs.J)))}}}",
        f"positive roots: {len(rs.positive_roots)}",
        f"|W|: {data['weyl_order']}",
        f"fundamental group P/Q: {data['fundamental_group_label']}",
    ]
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_fold(args) -> int:
    rs = _root_system(args)
    spec = _lattice(rs, args)
    lam = _point(rs, args)
    pt, a = fold_full(rs, spec, lam)
    data = {"type": rs.name, "lattice": spec.label, "input": [fmt(x) for x in lam],
            "point": [fmt(x) for x in pt], "witness": _witness_json(a)}
    _emit(args, data, f"point: {fmt_vec(pt)}\nwitness: {a}")
    return 0


def cmd_canon(args) -> int:
    rs = _root_system(args)
    spec = _lattice(rs, args)
    lam = _point(rs, args)
    tp = canonicalize(rs, spec, lam)
    data = {"type": rs.name, "lattice": spec.label, "input": [fmt(x) for x in lam],
            "canonical": [fmt(x) for x in tp.rep], "witness": _witness_json(tp.witness)}
    _emit(args, data, f"canonical: {fmt_vec(tp.rep)}\nwitness: {tp.witness}")
    return 0


def cmd_vertices(args) -> int:
    rs = _root_system(args)
    spec = _lattice(rs, args)
    _, JY = omega_subgroup(rs, spec)
    p = fundamental_polytope(rs, JY)
    if args.format == "json":
        print(json.dumps(polytope_to_json(rs, p, spec.label), indent=2))
    else:
        print(f"F_Y' for {rs.name}, {spec.label}, J_Y = {{{', '.join(map(str, sorted(JY)))}}}")
        for v in p.vertices:
            print(fmt_vec(v))
    return 0


def cmd_omega(args) -> int:
    rs = _root_system(args)
    grp = omega_group(rs)
    elems = [om for om in omega_elements(rs) if om.index]
    data = {
        "type": rs.name,
        "order": grp.order,
        "invariant_factors": list(grp.invariant_factors),
        "elements": [
            {"index": om.index, "sigma": to_cycles(om.sigma), "element": _witness_json(om.affine)}
            for om in elems
        ],
    }
    lines = [f"Omega({rs.name}): order {grp.order}"]
    lines += [f"σ_{om.index} = {to_cycles(om.sigma)}    ω_{om.index} = {om.affine}" for om in elems]
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_lattices(args) -> int:
    rs = _root_system(args)
    out = []
    for spec in enumerate_lattices(rs):
        _, JY = omega_subgroup(rs, spec)
        out.append({"label": spec.label, "index": spec.index, "J_Y": sorted(JY),
                    "basis": [list(r) for r in spec.basis]})
    lines = [f"{'subgroup':<16} {'[P:Y]':>5}  J_Y"]
    lines += [f"{d['label']:<16} {d['index']:>5}  {d['J_Y']}" for d in out]
    _emit(args, {"type": rs.name, "lattices": out}, "\n".join(lines))
    return 0


def cmd_export(args) -> int:
    rs = _root_system(args)
    spec = _lattice(rs, args)
    if args.domain == "alcove":
        data = polytope_to_json(rs, alcove(rs), spec.label)
    elif args.domain == "prime":
        _, JY = omega_subgroup(rs, spec)
        data = polytope_to_json(rs, fundamental_polytope(rs, JY), spec.label)
    else:
        data = [polytope_to_json(rs, c, spec.label) for c in complex_F_Y(rs, spec)]
    text = json.dumps(data, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_verify(args) -> int:
    rs = _root_system(args)
    results = run_suite(rs, seed=args.seed, points=args.points)
    failed = False
    for r in results:
        print(r.line())
        for ce in r.counterexamples:
            print(f"    counterexample: {ce}")
        failed |= r.passed is False
    print(f"{rs.name}: {'FAIL' if failed else 'PASS'}")
    return 1 if failed else 0


COMMANDS = {
    "info": (cmd_info, "root data and the fundamental group"),
    "fold": (cmd_fold, "fold a point into F_Y' with a witness in W_Y"),
    "canon": (cmd_canon, "canonical representative on the torus V*/Y"),
    "vertices": (cmd_vertices, "vertices of F_Y'"),
    "omega": (cmd_omega, "elements of Omega and their diagram permutations"),
    "lattices": (cmd_lattices, "intermediate lattices between Q and P"),
    "export": (cmd_export, "JSON export of the alcove, F_Y' or the complex F_Y"),
    "verify": (cmd_verify, "run the brute-force property checks"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylfold", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--type", required=True, help="root system type, e.g. A3, D4, E6")
        p.add_argument("--format", choices=["text", "json"], default="text")
        if name in ("fold", "canon", "vertices", "export"):
            p.add_argument("--lattice", default="adjoint", help="adjoint, sc, or H=j1,j2,...")
        if name in ("fold", "canon"):
            p.add_argument("--point", required=True, help="comma-separated rationals p/q")
        if name == "export":
            p.add_argument("--domain", choices=["alcove", "prime", "complex"], default="prime")
            p.add_argument("--output", help="write to this file instead of stdout")
        if name == "verify":
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--points", type=int, default=None, help="samples per randomized check")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command][0](args)
    except (UsageError, RootSystemError, LatticeError, OmegaError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
