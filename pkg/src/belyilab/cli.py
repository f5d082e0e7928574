"""Command-line front end.

Commands: analyze, descend, chartab, cohomology, relmod, gaschuetz,
genus1, corpus.  Input is JSON (covers, groups, modules); output is JSON
(--json) or an aligned text report (default).  Exit codes: 0 success,
1 precondition or input error, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chartab import character_table
from .cohomology import Cocycle2, FiniteHModule, h2
from .corpus import DEFAULT_SEED, run_corpus
from .cover import BelyiCover, analysis_report
from .descent import descent_report
from .errors import InternalError, PreconditionError
from .gaschuetz import SurjectionProblem, count_lifts, lift_generators
from .genus1 import (
    cm_stable_subgroups,
    inertia_orders,
    inertia_triples,
    j_invariant_degree,
    kummer_cover,
)
from .permgroup import PermGroup, Permutation
from .relmod import (
    extension_cocycle,
    rational_character,
    schreier_data,
    verify_main_theorem,
)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise PreconditionError("cannot read %s: %s" % (path, exc)) from exc
    except json.JSONDecodeError as exc:
        raise PreconditionError(
            "malformed JSON in %s at line %d column %d"
            % (path, exc.lineno, exc.colno)
        ) from exc


def _parse_group(data):
    try:
        gens = [Permutation(images) for images in data["generators"]]
    except (KeyError, TypeError) as exc:
        raise PreconditionError("group JSON needs a 'generators' list") from exc
    if not gens:
        raise PreconditionError("group JSON needs at least one generator")
    if "degree" in data and any(g.degree != data["degree"] for g in gens):
        raise PreconditionError("declared degree does not match the generators")
    return PermGroup(gens)


def _parse_module(data):
    H = _parse_group(data.get("group", {}))
    try:
        shape = tuple(data["shape"])
        mats = data["action"]
    except (KeyError, TypeError) as exc:
        raise PreconditionError("module JSON needs 'shape' and 'action'") from exc
    elts = H.elements
    if len(mats) != len(elts):
        raise PreconditionError(
            "module JSON needs one action matrix per group element (%d)" % len(elts)
        )
    return FiniteHModule(H, shape, dict(zip(elts, mats)))


def _parse_cocycle(data, module):
    elts = module.H.elements
    try:
        rows = data["table"]
    except (KeyError, TypeError) as exc:
        raise PreconditionError("cocycle JSON needs a 'table'") from exc
    if len(rows) != len(elts) or any(len(r) != len(elts) for r in rows):
        raise PreconditionError("cocycle table must be |H| x |H|")
    table = {}
    for i, h1 in enumerate(elts):
        for j, h2 in enumerate(elts):
            table[(h1, h2)] = tuple(rows[i][j])
    return Cocycle2(module, table)


def _cyclotomic_json(value):
    return {
        "conductor": value.conductor,
        "num": [c.numerator for c in value.coords],
        "den": [c.denominator for c in value.coords],
    }


def _cyc_str(value):
    if value.is_rational():
        return str(value.coords[0])
    body = repr(value)
    return body[len("Cyclotomic(") : -1]


def _table_json(tab):
    return {
        "order": tab.group.order,
        "classes": [
            {"rep": [list(c) for c in rep.cycles()], "size": size}
            for rep, size in tab.classes
        ],
        "degrees": list(tab.degrees),
        "values": [[_cyclotomic_json(v) for v in row] for row in tab.rows],
    }


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _aligned(rows, header):
    widths = [len(h) for h in header]
    srows = [[str(c) for c in row] for row in rows]
    for row in srows:
        for i, c in enumerate(row):
            widths[i] = max(widths[i], len(c))
    fmt = "  ".join("%%-%ds" % w for w in widths)
    out = [fmt % tuple(header), fmt % tuple("-" * w for w in widths)]
    out += [fmt % tuple(row) for row in srows]
    return out


# -- command handlers -------------------------------------------------------


def _cmd_analyze(args):
    cover = BelyiCover.from_json(_load_json(args.input))
    rep = analysis_report(cover)
    lines = ["%s: %s" % (k, v) for k, v in rep.items() if k != "branch"]
    for b in ("0", "1", "inf"):
        recs = ", ".join(
            "(e=%d, ord d=%d)" % (r["e"], r["order_d"]) for r in rep["branch"][b]
        )
        lines.append("branch %s: %s" % (b, recs))
    _emit(args, rep, lines)
    return 0


def _cmd_descend(args):
    cover = BelyiCover.from_json(_load_json(args.input))
    rep = descent_report(cover, refine=args.refine)
    data = rep.to_json()
    rows = [
        (r["degree"], r["n_V"], r["m_V"], "yes" if r["passes"] else "no")
        for r in rep.rows
    ]
    lines = _aligned(rows, ("dim V", "n_V", "m_V", "passes"))
    lines.append("verdict: %s" % rep.verdict)
    if data["certificates"]:
        lines.append("certificates: %s" % ", ".join(data["certificates"]))
    _emit(args, data, lines)
    return 0


def _cmd_chartab(args):
    G = _parse_group(_load_json(args.group))
    try:
        tab = character_table(G)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from exc
    data = _table_json(tab)
    rows = []
    for i, row in enumerate(tab.rows):
        rows.append([tab.degrees[i]] + [_cyc_str(v) for v in row])
    header = ("deg",) + tuple("C%d(%d)" % (j, size) for j, (_, size) in enumerate(tab.classes))
    _emit(args, data, _aligned(rows, header))
    return 0


def _cmd_cohomology(args):
    M = _parse_module(_load_json(args.module))
    data = h2(M)
    payload = {
        "shape": list(M.shape),
        "order_H": M.H.order,
        "invariants": data.invariants,
        "order_H2": data.order,
    }
    lines = [
        "H^2 invariant factors: %s" % (data.invariants or "trivial"),
        "order of H^2: %d" % data.order,
    ]
    if args.cocycle:
        beta = _parse_cocycle(_load_json(args.cocycle), M)
        cls = data.class_of(beta)
        payload["class"] = list(cls)
        lines.append("cocycle class: %s" % (list(cls),))
    _emit(args, payload, lines)
    return 0


def _cmd_relmod(args):
    H = _parse_group(_load_json(args.group))
    gens = list(H.generators)
    if len(gens) > args.rank:
        raise PreconditionError(
            "rank %d is below the %d group generators" % (args.rank, len(gens))
        )
    images = gens + [H.identity()] * (args.rank - len(gens))
    rm = schreier_data(H, images)
    chi = rational_character(rm)
    payload = {
        "order_H": H.order,
        "rank": rm.rank,
        "character": list(chi.mults),
        "degrees": list(chi.table.degrees),
    }
    lines = [
        "rank: %d" % rm.rank,
        "character multiplicities: %s" % (chi.mults,),
    ]
    if args.mod is not None:
        beta = extension_cocycle(rm, args.mod)
        data = h2(beta.module)
        cls = data.class_of(beta)
        payload["modulus"] = args.mod
        payload["h2_invariants"] = data.invariants
        payload["cocycle_class"] = list(cls)
        lines.append("H^2 invariants mod %d: %s" % (args.mod, data.invariants))
        lines.append("extension cocycle class: %s" % (list(cls),))
        if args.verify_main:
            report = verify_main_theorem(rm, args.mod)
            payload["verify_main"] = report
            lines.append(
                "main theorem: %s (stabilizer %d, restrictions %d)"
                % (
                    "EQUAL" if report["equal"] else "MISMATCH",
                    report["stabilizer_count"],
                    report["restriction_count"],
                )
            )
            if not report["equal"]:
                raise InternalError("main-theorem verification failed")
    elif args.verify_main:
        raise PreconditionError("--verify-main requires --mod")
    _emit(args, payload, lines)
    return 0


def _cmd_gaschuetz(args):
    if args.subcommand != "lift":
        raise PreconditionError("unknown gaschuetz subcommand %r" % args.subcommand)
    G1 = _parse_group(_load_json(args.g1))
    G2 = _parse_group(_load_json(args.g2))
    psi_images = [Permutation(images) for images in _load_json(args.psi)]
    if len(psi_images) != len(G1.generators):
        raise PreconditionError("psi must list one image per generator of G1")
    psi = dict(zip(G1.generators, psi_images))
    S2 = tuple(Permutation(images) for images in _load_json(args.tuple))
    problem = SurjectionProblem(G1, G2, psi, S2)
    lift = lift_generators(problem)
    count = count_lifts(problem)
    payload = {
        "lift": [g.images for g in lift],
        "count": count,
    }
    lines = ["lift: %s" % (payload["lift"],), "generating lifts over S2: %d" % count]
    _emit(args, payload, lines)
    return 0


def _cmd_genus1(args):
    sub = args.subcommand
    if sub == "triples":
        triples = inertia_triples()
        _emit(args, {"triples": [list(t) for t in triples]}, [str(t) for t in triples])
    elif sub == "kummer":
        cover = kummer_cover(args.a, args.b, args.d)
        from .cover import genus

        payload = {
            "cover": cover.to_json(),
            "genus": genus(cover),
            "inertia_orders": list(inertia_orders(args.a, args.b, args.d)),
        }
        lines = [
            "x: %s" % (cover.x.images,),
            "y: %s" % (cover.y.images,),
            "genus: %d" % payload["genus"],
            "inertia orders: %s" % (tuple(payload["inertia_orders"]),),
        ]
        _emit(args, payload, lines)
    elif sub == "cm":
        subs = cm_stable_subgroups(args.d, args.n)
        payload = {"stable_subgroups": [[list(v) for v in S] for S in subs]}
        lines = ["%d stable subgroups:" % len(subs)]
        lines += ["  order %d: %s" % (len(S), S) for S in subs]
        _emit(args, payload, lines)
    elif sub == "jdeg":
        deg = j_invariant_degree(args.t)
        _emit(args, {"t": args.t, "degree": deg}, ["degree of j over Q: %d" % deg])
    return 0


def _cmd_corpus(args):
    results = run_corpus(seed=args.seed)
    lines = []
    for r in results:
        lines.append(
            "criterion %2d: %s  %s -- %s"
            % (r["criterion"], "PASS" if r["pass"] else "FAIL", r["description"], r["detail"])
        )
    ok = all(r["pass"] for r in results)
    lines.append("corpus: %s" % ("all PASS" if ok else "FAILURES PRESENT"))
    _emit(args, {"results": results, "pass": ok}, lines)
    return 0 if ok else 1


# -- argument parsing -------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="belyilab",
        description="exact computational algebra for Belyi covers and descent",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON output")
    parser.add_argument(
        "--text", action="store_true", help="emit text output (default)"
    )
    parser.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help="seed for randomized searches"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="closure and genus report for a cover")
    p.add_argument("--input", required=True)
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("descend", help="run the descent criterion")
    p.add_argument("--input", required=True)
    p.add_argument("--refine", action="store_true")
    p.set_defaults(fn=_cmd_descend)

    p = sub.add_parser("chartab", help="character table of a group")
    p.add_argument("--group", required=True)
    p.set_defaults(fn=_cmd_chartab)

    p = sub.add_parser("cohomology", help="H^2 of a finite module")
    p.add_argument("--module", required=True)
    p.add_argument("--cocycle")
    p.set_defaults(fn=_cmd_cohomology)

    p = sub.add_parser("relmod", help="relation module of a surjection")
    p.add_argument("--group", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--mod", type=int)
    p.add_argument("--verify-main", action="store_true", dest="verify_main")
    p.set_defaults(fn=_cmd_relmod)

    p = sub.add_parser("gaschuetz", help="generator lifting")
    p.add_argument("subcommand", choices=["lift"])
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--psi", required=True)
    p.add_argument("--tuple", required=True)
    p.set_defaults(fn=_cmd_gaschuetz)

    p = sub.add_parser("genus1", help="genus-1 classification tools")
    g1sub = p.add_subparsers(dest="subcommand", required=True)
    g1sub.add_parser("triples").set_defaults(fn=_cmd_genus1)
    pk = g1sub.add_parser("kummer")
    pk.add_argument("a", type=int)
    pk.add_argument("b", type=int)
    pk.add_argument("d", type=int)
    pk.set_defaults(fn=_cmd_genus1)
    pc = g1sub.add_parser("cm")
    pc.add_argument("d", type=int)
    pc.add_argument("n", type=int)
    pc.set_defaults(fn=_cmd_genus1)
    pj = g1sub.add_parser("jdeg")
    pj.add_argument("t", type=int)
    pj.set_defaults(fn=_cmd_genus1)

    p = sub.add_parser("corpus", help="run the bundled acceptance corpus")
    p.set_defaults(fn=_cmd_corpus)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.json and args.text:
        parser.error("--json and --text are mutually exclusive")
    try:
        return args.fn(args)
    except PreconditionError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except InternalError as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, KeyError, TypeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
