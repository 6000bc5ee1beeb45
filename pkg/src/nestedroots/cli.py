"""Command-line interface.

    nestedroots roots enumerate --type 2,3,8 --depth 4
    nestedroots pair classify --type 2,4,6 --a 0:1 --b 12:0
    nestedroots interval --type 2,4,6 --a 0:1 --b -12:0
    nestedroots triangle scan --type 3,3,4 --depth 6
    nestedroots lemma verify complete-fundamental --type 3,3,4 --depth 6
    nestedroots polygon verify octagon-Ba --field F8
    nestedroots witness 246 --char 5
    nestedroots figure find --type 2,4,6 --depth 8
    nestedroots emit walls-svg --type 2,3,8 --depth 6 --out walls.svg

A root is written ``[-]WORD:s`` for the root w(a_s), where WORD lists the
generators of w (``""`` or ``e`` for the identity), e.g. ``-021:1``.

JSON lines go to stdout (or ``--out``), the human summary to stderr.
Exit status: 0 all checks pass, 1 a check failed, 2 only inconclusive
results, 64 usage error.
"""

from __future__ import annotations

import argparse
import sys
import time

from nestedroots import __version__
from nestedroots.config import ConfigError, load_config, resolve_field
from nestedroots.coxeter import ADMITTED_LABELS, DEFAULT_DEPTH, CoxeterType
from nestedroots.report import EXIT_USAGE, Report

__all__ = ["main", "UsageError"]

LEMMA_NAMES = ("angle-half", "complete-fundamental", "unique-chamber", "prop-238", "aux-238")
POLYGON_NAMES = ("hexagon-A", "octagon-Ba", "octagon-Bb")
WITNESS_NAMES = ("246", "266", "248", "268")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def parse_type(text: str) -> CoxeterType:
    try:
        return CoxeterType.parse(text)
    except ValueError as exc:
        raise UsageError(
            f"bad Coxeter type {text!r}: {exc}. Give one label (rank 2) or three labels m01,m02,m12 "
            f"from {ADMITTED_LABELS}"
        ) from None


def parse_root(ct: CoxeterType, text: str):
    from nestedroots.roots import Root

    neg = text.startswith("-")
    body = text[1:] if neg else text
    word, sep, s = body.partition(":")
    if not sep or not s.isdigit() or int(s) >= ct.rank:
        raise UsageError(f"bad root {text!r}; expected [-]WORD:s with s < {ct.rank}")
    if word in ("", "e"):
        letters = []
    elif word.isdigit() and all(int(c) < ct.rank for c in word):
        letters = [int(c) for c in word]
    else:
        raise UsageError(f"bad word {word!r} in root {text!r}")
    w = ct.element(letters)
    r = Root(ct, w.column(int(s)))
    return -r if neg else r


def _root_json(r) -> dict:
    return {"vector": list(r.float_vec()), "exact": [list(x) for x in r.vec], "positive": r.is_positive}


def _depth(args, cfg, fallback=DEFAULT_DEPTH) -> int:
    if args.depth is not None:
        return args.depth
    return cfg.defaults.get("depth", fallback)


# subcommands


def cmd_roots_enumerate(args, cfg) -> Report:
    from nestedroots.roots import enumerate_roots

    ct = parse_type(args.type)
    depth = _depth(args, cfg)
    rep = Report("roots enumerate", {"type": str(ct), "depth": depth})
    roots = enumerate_roots(ct, depth)
    if args.positive:
        roots = [r for r in roots if r.is_positive]
    for r in roots:
        rep.item(depth=r.depth, **_root_json(r))
    rep.note(f"{len(roots)} roots of type ({ct}) from chambers of length <= {depth}")
    return rep


def cmd_pair_classify(args, cfg) -> Report:
    from nestedroots.roots import classify_pair

    ct = parse_type(args.type)
    a, b = parse_root(ct, args.a), parse_root(ct, args.b)
    c = classify_pair(a, b)
    rep = Report("pair classify", {"type": str(ct)})
    rep.item(a=_root_json(a), b=_root_json(b), relation=c.kind.value, order=c.order, first_inside=c.first_inside)
    rep.note(f"{args.a} vs {args.b}: {c}")
    return rep


def cmd_interval(args, cfg) -> Report:
    from nestedroots.roots import IntervalError, interval_closed, interval_open_any

    ct = parse_type(args.type)
    a, b = parse_root(ct, args.a), parse_root(ct, args.b)
    rep = Report("interval", {"type": str(ct), "closed": bool(args.closed)})
    try:
        roots = interval_closed(a, b) if args.closed else interval_open_any(a, b)
    except IntervalError as exc:
        raise UsageError(str(exc)) from None
    for r in roots:
        rep.item(**_root_json(r))
    rep.note(f"{'[' if args.closed else '('}{args.a}, {args.b}{']' if args.closed else ')'} has {len(roots)} roots")
    return rep


def _lemma_report(rep: Report, scan, names):
    from nestedroots.triangles import CT2_TEST

    for name in names:
        res = scan.results[name]
        status = {"pass": "pass", "fail": "fail", "skipped": None}[res.status]
        d = res.as_dict()
        if status is None:
            rep.item(**d)
            rep.note(f"{name}: not applicable")
            continue
        rep.check(name, status, bound={"depth": scan.depth}, ct2_test=CT2_TEST, **{k: v for k, v in d.items() if k not in ("lemma", "status")})
        rep.note(f"{name}: {status}, {res.configurations} configurations, {len(res.violations)} violations")


def cmd_triangle_scan(args, cfg) -> Report:
    from nestedroots.triangles import LEMMAS, scan_lemmas

    ct = parse_type(args.type)
    depth = _depth(args, cfg, 6)
    scan = scan_lemmas(ct, depth, LEMMAS)
    rep = Report("triangle scan", {"type": str(ct), "depth": depth})
    d = scan.as_dict()
    rep.item(
        walls=d["walls"],
        reflection_triangles=d["reflection_triangles"],
        combinatorial_triangles=d["combinatorial_triangles"],
        ct2_test=d["ct2_test"],
    )
    rep.note(f"{d['walls']} walls, {d['reflection_triangles']} reflection triangles, {d['combinatorial_triangles']} combinatorial")
    _lemma_report(rep, scan, LEMMAS)
    return rep


def cmd_lemma_verify(args, cfg) -> Report:
    from nestedroots.triangles import scan_lemmas

    ct = parse_type(args.type)
    depth = _depth(args, cfg, 6)
    scan = scan_lemmas(ct, depth, [args.lemma])
    rep = Report(f"lemma verify {args.lemma}", {"type": str(ct), "depth": depth})
    _lemma_report(rep, scan, [args.lemma])
    if not rep.counts()["pass"] and not rep.counts()["fail"]:
        raise UsageError(f"lemma {args.lemma} does not apply to type ({ct})")
    return rep


def _sweep_check(rep: Report, res, bound):
    rep.check(res.name, "pass" if res.ok else "fail", bound=bound, **res.as_dict())
    rep.note(f"{res.name} over {res.field}: {res.cases - res.mismatches}/{res.cases} agree")


def cmd_polygon_verify(args, cfg) -> Report:
    from nestedroots.polygon import verify as pv

    name = args.identity
    samples = args.samples if args.samples is not None else cfg.defaults.get("samples", 1000)
    seed = args.seed if args.seed is not None else cfg.defaults.get("seed", 0)
    if name == "hexagon-A":
        fields = [args.field] if args.field else ["F5", "F7"]
        rep = Report("polygon verify hexagon-A", {"fields": fields})
        for f in fields:
            try:
                _, K = resolve_field(f, cfg)
            except ConfigError as exc:
                raise UsageError(str(exc)) from None
            p = getattr(K, "p", None)
            if p is None or p in (2, 3):
                raise UsageError(f"hexagon-A needs a prime field of characteristic other than 2 and 3, got {f}")
            for which in pv.HEXAGON_IDENTITIES:
                _sweep_check(rep, pv.hexagon_A(p, which), {"exhaustive": f"F{p}"})
            res = pv.hexagon_A(p, "sharp-preimage-published")
            rep.item(**res.as_dict())
            rep.note(
                f"published constant k' = (2N(v^#))^-1 reaches x3(v) for {res.cases - res.mismatches}/{res.cases} "
                f"nonzero v over F{p} (informational)"
            )
        return rep
    fields = [args.field] if args.field else ["F2", "F8"]
    rep = Report(f"polygon verify {name}", {"fields": fields, "corrected": bool(args.corrected)})
    for f in fields:
        key = {"F2-id": "F2", "F8-t4": "F8"}.get(f, f)
        if key not in pv.OCTAGON_FIELDS:
            raise UsageError(f"octagon identities run over F2 or F8, got {f!r}")
        if name == "octagon-Ba":
            res = pv.octagon_Ba(key, corrected=args.corrected)
            _sweep_check(rep, res, {"exhaustive": key})
        else:
            res = pv.octagon_Bb(key, samples=samples, seed=seed, corrected=args.corrected)
            exhaustive = res.cases == 64 and key == "F2"
            _sweep_check(rep, res, {"exhaustive": key} if exhaustive else {"samples": samples, "seed": seed, "field": key})
        if res.coordinates:
            rep.note(f"  mismatched coordinates: {res.coordinates}")
    return rep


def cmd_witness(args, cfg) -> Report:
    from nestedroots import witnesses as wt
    from nestedroots.algebra.fields import PrimeField

    which = args.witness
    rep = Report(f"witness {which}", {})
    if which in ("246", "266"):
        p = args.char
        try:
            K = PrimeField(p)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        v, w, k = K(args.v), K(args.w), K(args.k)
        pairs = [(w, k)]
        if which == "246":
            value = wt.witness_246(v, pairs, K)
            other = wt.witness_246_general(v, pairs, K)
            cfgw = wt.WitnessConfig((2, 4, 6), f"F{p}", "id", "K0-4-K-6-E")
        else:
            value = wt.witness_266(v, pairs, K)
            other = wt.witness_266_general(v, pairs, K)
            cfgw = wt.WitnessConfig((2, 6, 6), f"F{p}", None, "K=6=K=6=V")
        rep.params.update({"char": p})
    else:
        setup = "F8ab-swap" if args.tau == "swap" else "F8ab-id"
        try:
            _, R = resolve_field(args.field or setup, cfg)
        except ConfigError as exc:
            raise UsageError(str(exc)) from None
        if which == "248":
            value = wt.witness_248((0, 1), [(1, (1, R.a))], R)
            other = wt.witness_248_general((0, 1), [(1, (1, R.a))], R)
            cfgw = wt.WitnessConfig((2, 4, 8), args.field or setup, "swap" if R.swap else "id", "E0-4-E-8-ExE")
        else:
            value = wt.witness_268((0, 1), [(1, (0, 1))], R)
            other = wt.witness_268_general((0, 1), [(1, (0, 1))], R)
            cfgw = wt.WitnessConfig((2, 6, 8), args.field or setup, None, "E=6=E-8-ExE")
        rep.params.update({"structure": cfgw.structure})
    verdict = wt.classify(value)
    res = wt.WitnessResult(which, cfgw, value, verdict)
    rep.check(f"witness-{which}", "pass" if value == other else "fail", **res.as_dict(), second_route=str(other))
    rep.note(f"{verdict}: value {value}")
    if verdict == wt.WITNESS_VANISHES:
        rep.note("a vanishing witness does not establish that nested root groups commute")
    return rep


def cmd_figure_find(args, cfg) -> Report:
    from nestedroots.witnesses import FIGURES, verify_figure

    ct = parse_type(args.type)
    key = tuple(sorted(ct.labels))
    if key not in FIGURES:
        raise UsageError(f"no figure for type ({ct}); admitted: {', '.join(','.join(map(str, k)) for k in sorted(FIGURES))}")
    depth = _depth(args, cfg)
    res = verify_figure(key, depth)
    rep = Report("figure find", {"type": ",".join(map(str, key)), "depth": depth})
    d = res.as_dict()
    rep.check("figure", res.status, bound={"depth": depth}, roots=d["roots"], checks=d["checks"], candidates=d["candidates"])
    rep.note("quintuple found" if res.found else f"no quintuple within depth {depth} (inconclusive, not a refutation)")
    return rep


def cmd_emit_svg(args, cfg) -> Report:
    from nestedroots.svg import walls_svg

    ct = parse_type(args.type)
    depth = _depth(args, cfg, 6)
    try:
        text = walls_svg(ct, depth)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = Report("emit walls-svg", {"type": str(ct), "depth": depth})
    if args.svg_out:
        with open(args.svg_out, "w", encoding="utf-8") as fh:
            fh.write(text)
        rep.item(path=args.svg_out, walls=text.count("<line"))
        rep.note(f"wrote {args.svg_out}")
    else:
        sys.stdout.write(text)
        rep.note("svg written to stdout")
    return rep


def _common(parser, default):
    parser.add_argument("--config", default=default(None), help="INI file with [defaults] and [setup NAME] sections")
    parser.add_argument("--out", default=default(None), help="write JSON lines here instead of stdout")
    parser.add_argument("--quiet", action="store_true", default=default(False), help="suppress the human summary")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nestedroots", description="Roots, triangles and root-group identities in rank 3 Coxeter complexes.")
    p.add_argument("--version", action="version", version=f"nestedroots {__version__}")
    _common(p, lambda d: d)
    # the same flags after the subcommand; SUPPRESS keeps the top-level values
    common = _Parser(add_help=False)
    _common(common, lambda d: argparse.SUPPRESS)
    sub = p.add_subparsers(dest="group", required=True, parser_class=_Parser)
    _add = sub.add_parser

    def leaf(group, name):
        return group.add_parser(name, parents=[common])

    def typed(sp, depth=True):
        sp.add_argument("--type", required=True, help="labels m01,m02,m12 (or a single label)")
        if depth:
            sp.add_argument("--depth", type=int, default=None)

    roots = _add("roots").add_subparsers(dest="action", required=True, parser_class=_Parser)
    sp = leaf(roots, "enumerate")
    typed(sp)
    sp.add_argument("--positive", action="store_true")
    sp.set_defaults(func=cmd_roots_enumerate)

    pair = _add("pair").add_subparsers(dest="action", required=True, parser_class=_Parser)
    sp = leaf(pair, "classify")
    typed(sp, depth=False)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.set_defaults(func=cmd_pair_classify)

    sp = leaf(sub, "interval")
    typed(sp, depth=False)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--closed", action="store_true")
    sp.set_defaults(func=cmd_interval)

    tri = _add("triangle").add_subparsers(dest="action", required=True, parser_class=_Parser)
    sp = leaf(tri, "scan")
    typed(sp)
    sp.set_defaults(func=cmd_triangle_scan)

    lem = _add("lemma").add_subparsers(dest="action", required=True, parser_class=_Parser)
    sp = leaf(lem, "verify")
    sp.add_argument("lemma", choices=LEMMA_NAMES)
    typed(sp)
    sp.set_defaults(func=cmd_lemma_verify)

    pol = _add("polygon").add_subparsers(dest="action", required=True, parser_class=_Parser)
    sp = leaf(pol, "verify")
    sp.add_argument("identity", choices=POLYGON_NAMES)
    sp.add_argument("--field", help="F2, F8 (octagon) or F5, F7, F<p> (hexagon), or a setup name")
    sp.add_argument("--samples", type=int, default=None)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--corrected", action="store_true", help="compare with the corrected a6 closed form")
    sp.set_defaults(func=cmd_polygon_verify)

    sp = leaf(sub, "witness")
    sp.add_argument("witness", choices=WITNESS_NAMES)
    sp.add_argument("--char", type=int, default=5)
    sp.add_argument("--v", type=int, default=1)
    sp.add_argument("--w", type=int, default=1)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--tau", choices=("swap", "id"), default="swap")
    sp.add_argument("--field", help="setup name for 248/268 (default F8ab-swap or F8ab-id)")
    sp.set_defaults(func=cmd_witness)

    fig = _add("figure").add_subparsers(dest="action", required=True, parser_class=_Parser)
    sp = leaf(fig, "find")
    typed(sp)
    sp.set_defaults(func=cmd_figure_find)

    emit = _add("emit").add_subparsers(dest="action", required=True, parser_class=_Parser)
    sp = leaf(emit, "walls-svg")
    typed(sp)
    sp.add_argument("--svg-out", help="SVG file (stdout when omitted)")
    sp.set_defaults(func=cmd_emit_svg)
    return p


def _glue_roots(argv):
    """Let ``--a -12:0`` through: argparse would read ``-12:0`` as a flag."""
    out, it = [], iter(argv)
    for tok in it:
        if tok in ("--a", "--b"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    t0 = time.perf_counter()
    try:
        args = parser.parse_args(_glue_roots(argv))
        cfg = load_config(args.config)
        rep = args.func(args, cfg)
    except (UsageError, ConfigError) as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    rep.started = t0
    text = rep.json_lines()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    elif not (args.group == "emit" and not getattr(args, "svg_out", None)):
        sys.stdout.write(text)
    if not args.quiet:
        sys.stderr.write(rep.human())
    return rep.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
