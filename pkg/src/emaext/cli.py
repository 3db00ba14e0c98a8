"""Command line front end.

Exit codes: 0 success, 2 invalid input, 3 a nonfinite block enumeration was
requested, 4 the oracle disagrees with the formula.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import Optional, Sequence

from .blocks import NonFiniteBlocks, NotFaithful, enumerate_blocks, same_block, spectral_character
from .chars import IrrepLabel, NotDominant, RankMismatch, adjoint_expr, hom_dim, tensor_decompose
from .chars import weight_multiplicities
from .emalg import ValidationError, load_document
from .ext import ext_dim
from .intlinalg import quotient_of
from .rootsys import RootSystemError, build, root_lattice, span_of_weights

EXIT_OK, EXIT_INVALID, EXIT_NONFINITE, EXIT_DISAGREE = 0, 2, 3, 4


class _Out:
    def __init__(self, porcelain: bool, stream):
        self.porcelain = porcelain
        self.stream = stream

    def field(self, key: str, value) -> None:
        if self.porcelain:
            print(f"{key}={value}", file=self.stream)

    def human(self, text: str) -> None:
        if not self.porcelain:
            print(text, file=self.stream)


def _weight(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad weight {text!r}; use a comma list like 1,0") from None


def _fmt_weight(w) -> str:
    return ",".join(map(str, w))


def _cmd_ext(args, out: _Out) -> int:
    doc = load_document(args.config)
    r = ext_dim(doc.config, doc.rep(args.from_), doc.rep(args.to))
    out.field("finite_dim", r.finite_dim)
    out.field("infinite", " + ".join(map(str, r.infinite_summands)))
    for i, (what, n) in enumerate(r.breakdown):
        out.field(f"breakdown.{i}.what", what)
        out.field(f"breakdown.{i}.dim", n)
    sym = "".join(f" + {t}" for t in r.infinite_summands)
    out.human(f"dim Ext^1({args.from_}, {args.to}) = {r.finite_dim}{sym}")
    for what, n in r.breakdown:
        out.human(f"  {n:>4}  {what}")
    for note in r.notes:
        out.human(f"  note: {note}")
    return EXIT_OK


def _cmd_blocks(args, out: _Out) -> int:
    doc = load_document(args.config)
    pids = [p for p in args.points.split(",") if p]
    chars = enumerate_blocks(doc.config, [doc.config.point(p) for p in pids])
    out.field("count", len(chars))
    for i, ch in enumerate(chars):
        out.field(f"block.{i}", str(ch))
    out.human(f"{len(chars)} blocks supported on {', '.join(pids) or 'no points'}")
    for ch in chars:
        out.human(f"  {ch}")
    return EXIT_OK


def _cmd_spectral(args, out: _Out) -> int:
    doc = load_document(args.config)
    rep = doc.rep(args.rep)
    ch = spectral_character(doc.config, rep)
    for pid, cls in ch.values:
        out.field(f"point.{pid}", cls.normal_form())
    out.field("noneval", ch.noneval_tag)
    out.human(f"spectral character of {args.rep}: {ch}")
    return EXIT_OK


def _cmd_sameblock(args, out: _Out) -> int:
    doc = load_document(args.config)
    same = same_block(doc.config, doc.rep(args.a), doc.rep(args.b))
    out.field("same_block", "yes" if same else "no")
    out.human("yes" if same else "no")
    return EXIT_OK


def _cmd_tensor(args, out: _Out) -> int:
    cd = build(args.g)
    expr = tensor_decompose(cd, args.l, args.m)
    total = 0
    for lab, mult in expr:
        out.field(f"term.{_fmt_weight(lab.highest_weight)}", mult)
    from .chars import expr_dim
    total = expr_dim(cd, expr)
    out.field("dim", total)
    out.human(f"V({_fmt_weight(args.l)}) x V({_fmt_weight(args.m)}) = {expr}   [dim {total}]")
    return EXIT_OK


def _cmd_homdim(args, out: _Out) -> int:
    cd = build(args.g)
    if args.u == "adjoint":
        U = adjoint_expr(cd)
    else:
        from .chars import ModuleExpr
        U = ModuleExpr.of(IrrepLabel(_weight(args.u)))
    n = hom_dim(cd, U, IrrepLabel(args.v), IrrepLabel(args.w))
    out.field("hom_dim", n)
    out.human(str(n))
    return EXIT_OK


def _cmd_oracle(args, out: _Out) -> int:
    from .oracle.scenario import OracleUnsupported, oracle_ext
    doc = load_document(args.config)
    a, b = doc.rep(args.from_), doc.rep(args.to)
    formula = ext_dim(doc.config, a, b)
    try:
        o = oracle_ext(doc.config, a, b)
    except OracleUnsupported as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    agree = not formula.infinite_summands and o == formula.finite_dim
    out.field("oracle_dim", o)
    out.field("formula_dim", formula.finite_dim)
    out.field("agree", "yes" if agree else "no")
    out.human(f"oracle_dim={o} formula_dim={formula.finite_dim} agree={'yes' if agree else 'no'}")
    return EXIT_OK if agree else EXIT_DISAGREE


def _cmd_quotient(args, out: _Out) -> int:
    cd = build(args.g)
    if args.span_of is None:
        sub = root_lattice(cd)
    elif args.span_of == "adjoint":
        sub = span_of_weights(cd, [w for theta in cd.highest_roots
                                   for w in weight_multiplicities(cd, theta).weights()])
    else:
        sub = span_of_weights(cd, weight_multiplicities(cd, _weight(args.span_of)).weights())
    q = quotient_of(sub)
    factors = q.nontrivial_factors or (1,)
    out.field("factors", ",".join(map(str, factors)))
    out.field("order", q.order if q.is_finite else "infinite")
    name = " x ".join("Z" if f == 0 else f"Z/{f}" for f in factors) if q.nontrivial_factors else "trivial"
    out.human(f"{name}  (invariant factors {','.join(map(str, factors))})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--porcelain", action="store_true", default=argparse.SUPPRESS,
                        help="one key=value line per field")
    p = argparse.ArgumentParser(prog="emaext", description="Ext^1 and blocks for equivariant map algebras")
    p.add_argument("--porcelain", action="store_true", default=False)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ext", parents=[common], help="dimension of Ext^1 between two reps")
    s.add_argument("config")
    s.add_argument("--from", dest="from_", required=True)
    s.add_argument("--to", required=True)
    s.set_defaults(run=_cmd_ext)

    s = sub.add_parser("blocks", parents=[common], help="enumerate blocks supported on points")
    s.add_argument("config")
    s.add_argument("--points", required=True, help="comma separated point ids")
    s.set_defaults(run=_cmd_blocks)

    s = sub.add_parser("spectral", parents=[common], help="spectral character of a rep")
    s.add_argument("config")
    s.add_argument("--rep", required=True)
    s.set_defaults(run=_cmd_spectral)

    s = sub.add_parser("sameblock", parents=[common], help="do two reps lie in the same block")
    s.add_argument("config")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.set_defaults(run=_cmd_sameblock)

    s = sub.add_parser("tensor", parents=[common], help="decompose V(l) (x) V(m)")
    s.add_argument("--g", required=True)
    s.add_argument("--l", type=_weight, required=True)
    s.add_argument("--m", type=_weight, required=True)
    s.set_defaults(run=_cmd_tensor)

    s = sub.add_parser("homdim", parents=[common], help="dim Hom(U (x) V, W)")
    s.add_argument("--g", required=True)
    s.add_argument("--u", required=True, help="'adjoint' or a highest weight")
    s.add_argument("--v", type=_weight, required=True)
    s.add_argument("--w", type=_weight, required=True)
    s.set_defaults(run=_cmd_homdim)

    s = sub.add_parser("oracle", parents=[common], help="brute-force H^1 against the formula")
    s.add_argument("config")
    s.add_argument("--from", dest="from_", required=True)
    s.add_argument("--to", required=True)
    s.set_defaults(run=_cmd_oracle)

    s = sub.add_parser("quotient", parents=[common], help="invariant factors of P/Q or P/span")
    s.add_argument("--g", required=True)
    s.add_argument("--span-of", dest="span_of", default=None, help="'adjoint' or a highest weight")
    s.set_defaults(run=_cmd_quotient)
    return p


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    out = _Out(args.porcelain, stdout)
    try:
        return args.run(args, out)
    except NonFiniteBlocks as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_NONFINITE
    except ValidationError as exc:
        for d in exc.diagnostics:
            print(f"error: {d}", file=stderr)
        return EXIT_INVALID
    except (RootSystemError, NotDominant, RankMismatch, NotFaithful, OSError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
