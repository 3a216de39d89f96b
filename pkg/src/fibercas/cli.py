"""Command-line driver.

Exit codes: 0 success, 1 a scenario check failed, 2 usage, parse or cap error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .algebra import parse_order
from .blowup import chart, rees_ideal, simplify_presentation, symmetric_algebra_ideal, with_rees
from .hilbert import INFINITE, colength, hilbert_series
from .ideals import Ideal, intersect, krull_dim, saturate
from .parser import IdealDecl, ParseError, RingDecl, SourceDocument, parse_file
from .report import emit_json, emit_text
from .resolution import NotGradedError, betti_table, free_resolution
from .ringprops import classify
from .scenarios import SCENARIOS, CapExceeded, ScenarioConfig, run_scenario

ORDERS = ("lex", "grevlex", "wgrevlex")


class UsageError(Exception):
    pass


def _order_arg(text: str):
    if text not in ORDERS and not text.startswith("elim:"):
        raise argparse.ArgumentTypeError(f"order must be one of {', '.join(ORDERS)} or elim:<k>")
    try:
        return parse_order(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # the same flags are accepted before and after the subcommand; the copy
    # on each subparser uses SUPPRESS so it does not clobber an earlier value
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--order", type=_order_arg, default=d(None),
                   help="monomial order: lex, grevlex, wgrevlex (default) or elim:<k>")
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument("--seed", type=int, default=d(None), help="seed for randomized sampling")
    p.add_argument("--long", action="store_true", default=d(False), help="lift the parameter caps")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibercas",
        description="Exact commutative algebra for blow-up fibers over punctual schemes.",
        parents=[_global_flags(False)],
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True
    common = _global_flags(True)

    def add(name, help, ideal=True):
        p = sub.add_parser(name, help=help, parents=[common])
        if ideal:
            p.add_argument("file", help=".ca input file")
            p.add_argument("--ideal", help="ideal name (default: last declared)")
        return p

    add("gb", "reduced Groebner basis")
    add("props", "classify R/I")
    add("hilbert", "Hilbert series and colength")
    add("dim", "Krull dimension")
    add("betti", "graded Betti table")
    p = add("blowup", "symmetric (or Rees) algebra presentation of the blow-up along I")
    p.add_argument("--rees", action="store_true", help="Rees ideal instead of the symmetric one")
    p = add("chart", "affine chart u_j = 1 of the blow-up along I")
    p.add_argument("--u", type=int, required=True, dest="u", help="0-based chart index")
    p.add_argument("--rees", action="store_true")
    p = add("saturate", "saturation I : J^inf")
    p.add_argument("--by", required=True, help="name of the ideal J")
    p = add("intersect", "intersection of two ideals")
    p.add_argument("--with", required=True, dest="other", help="name of the second ideal")

    p = sub.add_parser("paper", help="run the verification scenarios", parents=[common])
    p.add_argument("--scenario", required=True, choices=sorted(SCENARIOS) + ["all"])
    p.add_argument("--n", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--ell-max", type=int, dest="ell_max")
    p.add_argument("--timing", action="store_true", help="include wall-clock timings")
    return parser


# --------------------------------------------------------------------------
# output helpers


def _doc_text(I: Ideal, name: str = "I", ring_name: str = "R") -> str:
    doc = SourceDocument()
    doc.rings[ring_name] = RingDecl(ring_name, I.ring)
    doc.ideals[name] = IdealDecl(name, ring_name, tuple(I.generators))
    return str(doc)


def _emit(out, args, payload: dict, text: str):
    if args.json:
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def _load(args) -> tuple[SourceDocument, Ideal]:
    doc = parse_file(args.file)
    try:
        return doc, doc.ideal(args.ideal)
    except KeyError as e:
        raise UsageError(e.args[0])


def _other(doc: SourceDocument, name: str, I: Ideal) -> Ideal:
    try:
        J = doc.ideal(name)
    except KeyError as e:
        raise UsageError(e.args[0])
    if J.ring != I.ring:
        raise UsageError(f"ideal {name} lives in a different ring")
    return J


def _polys(gens, order) -> list[str]:
    return [g.to_string(order) for g in gens]


# --------------------------------------------------------------------------
# commands


def cmd_gb(args, out) -> int:
    _, I = _load(args)
    G = I.gb(args.order)
    _emit(out, args, {"order": str(args.order), "basis": _polys(G, args.order)}, G.serialize())
    return 0


def cmd_props(args, out) -> int:
    _, I = _load(args)
    props = classify(I)
    s = {k: (str(v) if v is not None and not isinstance(v, bool) else v) for k, v in props.summary().items()}
    if props.betti is not None:
        s["betti"] = [str(t) for t in props.betti.totals()]
    if props.weights is not None:
        s["weights"] = [str(w) for w in props.weights]
    width = max(map(len, s))
    text = "\n".join(f"{k:<{width}}  {_txt(v)}" for k, v in s.items())
    _emit(out, args, s, text)
    return 0


def _txt(v) -> str:
    if isinstance(v, list):
        return " ".join(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return "none" if v is None else str(v)


def cmd_hilbert(args, out) -> int:
    _, I = _load(args)
    H = hilbert_series(I, args.order)
    c = colength(I, args.order)
    length = "infinite" if c == INFINITE else str(c)
    payload = {"numerator": [str(a) for a in H.numerator],
               "denominator_weights": [str(w) for w in H.denominator_weights],
               "coefficients": [str(a) for a in H.coefficients(10)],
               "colength": length}
    text = f"H(t) = {H}\nh_0..h_10 = {' '.join(payload['coefficients'])}\ncolength = {length}"
    _emit(out, args, payload, text)
    return 0


def cmd_dim(args, out) -> int:
    _, I = _load(args)
    d = krull_dim(I, args.order)
    _emit(out, args, {"dim": str(d)}, str(d))
    return 0


def cmd_betti(args, out) -> int:
    _, I = _load(args)
    B = betti_table(free_resolution(I, args.order))
    payload = {"totals": [str(t) for t in B.totals()],
               "graded": [[str(i), str(d), str(c)] for (i, d), c in sorted(B.entries.items())]}
    _emit(out, args, payload, str(B))
    return 0


def cmd_blowup(args, out) -> int:
    _, I = _load(args)
    if args.rees:
        J = rees_ideal(I)
    else:
        J = symmetric_algebra_ideal(I).sym_ideal
    name = "Rees" if args.rees else "Sym"
    _emit(out, args, {"ring": list(J.ring.variables), "generators": _polys(J.generators, args.order)},
          _doc_text(J, name, "T"))
    return 0


def cmd_chart(args, out) -> int:
    _, I = _load(args)
    B = symmetric_algebra_ideal(I)
    if args.rees:
        B = with_rees(B)
    try:
        C = chart(B, "rees" if args.rees else "sym", args.u)
    except IndexError as e:
        raise UsageError(str(e))
    core = C.core
    payload = {"chart": C.u_name, "cell_dim": str(C.cell_dim),
               "eliminated": [[v, str(g)] for v, g in C.simplified.eliminated],
               "ring": list(core.ring.variables), "generators": _polys(core.ideal.generators, args.order)}
    text = f"# chart {C.u_name} = 1, affine cell of dimension {C.cell_dim}\n"
    for v, g in C.simplified.eliminated:
        text += f"# {v} = {g}\n"
    text += _doc_text(core.ideal, "C", "S")
    _emit(out, args, payload, text)
    return 0


def cmd_saturate(args, out) -> int:
    doc, I = _load(args)
    J = _other(doc, args.by, I)
    S, k = saturate(I, J)
    G = S.gb(args.order)
    _emit(out, args, {"index": str(k), "basis": _polys(G, args.order)},
          f"# stabilised at power {k}\n" + _doc_text(Ideal(I.ring, list(G)), "S"))
    return 0


def cmd_intersect(args, out) -> int:
    doc, I = _load(args)
    J = _other(doc, args.other, I)
    G = intersect(I, J).gb(args.order)
    _emit(out, args, {"basis": _polys(G, args.order)}, _doc_text(Ideal(I.ring, list(G)), "K"))
    return 0


def cmd_paper(args, out) -> int:
    config = ScenarioConfig(long=args.long)
    ids = sorted(SCENARIOS) if args.scenario == "all" else [args.scenario]
    reports = [run_scenario(sid, n=args.n, ell=args.ell, ell_max=args.ell_max, config=config) for sid in ids]
    if args.json:
        out.write(emit_json(reports if len(reports) > 1 else reports[0], args.timing))
    else:
        out.write("\n".join(emit_text(r, args.timing) for r in reports))
    return 0 if all(r.passed for r in reports) else 1


COMMANDS = {
    "gb": cmd_gb, "props": cmd_props, "hilbert": cmd_hilbert, "dim": cmd_dim, "betti": cmd_betti,
    "blowup": cmd_blowup, "chart": cmd_chart, "saturate": cmd_saturate, "intersect": cmd_intersect,
    "paper": cmd_paper,
}


def run_command(argv: list[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    if args.order is None:
        args.order = parse_order("wgrevlex")
    if args.seed is not None:
        random.seed(args.seed)
    try:
        return COMMANDS[args.command](args, out)
    except ParseError as e:
        err.write(f"{getattr(args, 'file', '<input>')}: {e}\n")
    except (OSError, UsageError, CapExceeded, NotGradedError) as e:
        err.write(f"error: {e}\n")
    except ValueError as e:
        err.write(f"error: {e}\n")
    return 2


def main(argv=None) -> None:
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
