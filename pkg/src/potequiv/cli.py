"""Command-line entry point: ``potequiv <subcommand> ...``.

Exit codes: 0 when every checked fact holds, 1 when a mathematical check
fails (or no twist character exists), 2 for usage and input errors,
3 when twist detection is inconclusive.
"""

from __future__ import annotations

import argparse
import ast
import math
import random
import sys
from fractions import Fraction

from .algebra import ContractError, Matrix
from .core import exponent_bound, in_X_m, in_Y_m
from .density import density_report
from .frobenius import (
    APTable,
    ECModel,
    InsufficientData,
    TableFormatError,
    ap_table_from_curve,
    cm_pair_table,
    detect_twist_character,
    kronecker_character,
    parse_ap_table,
    parse_frobenius_table,
    table_verdicts,
    twist_ap_table,
    write_ap_table,
    write_frobenius_table,
)
from .powermap import DEFAULT_SEED, semisimple_noncollapse_demo, torus_collapse_demo
from .torus import (
    LatticeAutomorphism,
    SemidirectGroup,
    coset_element_order,
    decompose,
    invariant_order,
    random_torus_point,
)

OK, FAILED, USAGE, INCONCLUSIVE = 0, 1, 2, 3


class Output:
    """Collects human text and ``@key=value`` lines; prints one kind."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def say(self, text: str = ""):
        if self.fmt == "human":
            print(text, file=self.stream)

    def kv(self, key: str, value):
        if self.fmt == "kv":
            if isinstance(value, bool):
                value = str(value).lower()
            print(f"@{key}={value}", file=self.stream)

    def kv_lines(self, lines):
        if self.fmt == "kv":
            for line in lines:
                print(line, file=self.stream)


def _fmt_vecs(vecs) -> str:
    return "[" + ", ".join("(" + ", ".join(str(a) for a in v) + ")" for v in vecs) + "]"


def _fmt_order(m) -> str:
    return "inf" if m == math.inf else str(m)


# --- subcommands -----------------------------------------------------------

def cmd_bound(args, out: Output) -> int:
    if args.degree < 1:
        raise ContractError("--degree must be >= 1")
    M = exponent_bound(args.degree)
    out.say(f"exponent bound for degree {args.degree}: {M}")
    out.kv("degree", args.degree)
    out.kv("bound", M)
    if args.factorial:
        F = exponent_bound(args.degree, factorial=True)
        out.say(f"factorial variant: {F}")
        out.kv("factorial_bound", F)
    return OK


def cmd_cm_demo(args, out: Output) -> int:
    if args.xmax < 10:
        raise ContractError("--xmax must be >= 10")
    T = cm_pair_table(args.xmax)
    if args.write_table:
        write_frobenius_table(T, args.write_table)
    verdicts = table_verdicts(T, workers=args.workers)
    inert = [(e.p, v) for e, (_, v) in zip(T.entries, verdicts) if e.record.tags["class"] == "inert"]
    split = [(e.p, v) for e, (_, v) in zip(T.entries, verdicts) if e.record.tags["class"] == "split"]
    bad_inert = next((p for p, v in inert if not (v.equivalent and v.minimal_exponent == 4)), None)
    bad_split = next((p for p, v in split if v.equivalent), None)
    report = density_report(verdicts, Fraction(1, 2), args.xmax)

    out.say(f"CM pair chi+chi vs Ind(psi^2), odd good primes p <= {args.xmax}")
    out.say(f"  excluded: {', '.join(f'{p} ({r})' for p, r in T.excluded) or 'none'}")
    out.say(f"  inert primes (p = 3 mod 4): {len(inert)}, all equivalent with m = 4: {bad_inert is None}")
    out.say(f"  split primes (p = 1 mod 4): {len(split)}, all inequivalent: {bad_split is None}")
    out.say(f"  {report}")
    out.kv("command", "cm-demo")
    out.kv("xmax", args.xmax)
    out.kv("excluded", ",".join(str(p) for p, _ in T.excluded) or "-")
    out.kv("inert", len(inert))
    out.kv("split", len(split))
    out.kv("inert_all_m4", bad_inert is None)
    out.kv("split_all_inequivalent", bad_split is None)
    out.kv_lines(report.kv_lines())
    if bad_inert is not None or bad_split is not None:
        first = min(p for p in (bad_inert, bad_split) if p is not None)
        out.say(f"FAILED at p = {first}")
        out.kv("status", f"failed:{first}")
        return FAILED
    out.kv("status", "ok")
    return OK


def cmd_compare(args, out: Output) -> int:
    T = parse_frobenius_table(args.table)
    if not T.entries:
        raise ContractError(f"table {args.table} has no entries")
    out.kv("command", "compare")
    out.kv("degree", T.degree)
    if args.force_m is not None:
        m = args.force_m
        if m < 1:
            raise ContractError("--force-m must be >= 1")
        hits = 0
        for e in T.entries:
            x, y = in_X_m(e.charpoly1, e.charpoly2, m), in_Y_m(e.charpoly1, e.charpoly2, m)
            hits += y
            out.say(f"{e.p:>8}  X_{m}={'yes' if x else 'no ':3}  Y_{m}={'yes' if y else 'no'}")
            out.kv(f"prime.{e.p}", f"X:{'yes' if x else 'no'},Y:{'yes' if y else 'no'}")
        freq = Fraction(hits, len(T.entries))
        out.say(f"Y_{m} frequency: {hits}/{len(T.entries)} = {float(freq):.4f}")
        out.kv("forced_m", m)
        out.kv("hits", hits)
        out.kv("total_primes", len(T.entries))
        out.kv("observed", freq)
        return OK
    verdicts = table_verdicts(T, mode=args.mode, workers=args.workers)
    for p, v in verdicts:
        word = "equivalent" if v.equivalent else "inequivalent"
        m = v.minimal_exponent if v.equivalent else "-"
        out.say(f"{p:>8}  {word:<12}  m={m}")
        out.kv(f"prime.{p}", f"{word}/{m}")
    report = density_report(verdicts, args.predicted, T.entries[-1].p)
    out.say(str(report))
    out.kv_lines(report.kv_lines())
    return OK


def _parse_matrix(text: str) -> Matrix:
    try:
        rows = ast.literal_eval(text)
        return Matrix([[int(a) for a in r] for r in rows])
    except (ValueError, SyntaxError, TypeError) as exc:
        raise ContractError(f"cannot parse matrix literal {text!r}: {exc}") from None


def cmd_lattice(args, out: Output) -> int:
    A = _parse_matrix(args.matrix)
    theta = LatticeAutomorphism(A, cap=args.order_cap)
    L0 = None
    if args.L0:
        L0 = [tuple(int(a) for a in v) for v in ast.literal_eval(args.L0)]
    d = decompose(theta, L0)
    m = invariant_order(theta)
    out.say(f"theta = {A}")
    out.say(f"  order n = {theta.n}")
    out.say(f"  X^theta basis (rank {d.fixed_rank}): {_fmt_vecs(d.fixed_basis)}")
    out.say(f"  Y = ker N_theta basis (rank {d.y_rank}): {_fmt_vecs(d.y_basis)}")
    out.say(f"  L0 basis: {_fmt_vecs(d.L0)}")
    out.say(f"  L_theta basis: {_fmt_vecs(d.Ltheta_basis)}")
    out.say(f"  invariant order m = {_fmt_order(m)}; on L_theta: {_fmt_order(d.invariant_order)}")
    out.kv("command", "lattice")
    out.kv("n", theta.n)
    out.kv("fixed_rank", d.fixed_rank)
    out.kv("fixed_basis", _fmt_vecs(d.fixed_basis))
    out.kv("y_rank", d.y_rank)
    out.kv("y_basis", _fmt_vecs(d.y_basis))
    out.kv("ltheta_basis", _fmt_vecs(d.Ltheta_basis))
    out.kv("invariant_order", _fmt_order(m))
    out.kv("ltheta_invariant_order", _fmt_order(d.invariant_order))
    status = OK
    if m != math.inf:
        rng = random.Random(args.seed)
        G = SemidirectGroup(theta)
        orders = [coset_element_order(G.element(random_torus_point(theta.k, rng), 1))
                  for _ in range(args.samples)]
        ok = all((m * theta.n) % k == 0 for k in orders)
        out.say(f"  coset orders over {args.samples} samples: {sorted(set(orders))}; "
                f"all divide m*n = {m * theta.n}: {ok}")
        out.kv("coset_orders", ",".join(map(str, sorted(set(orders)))))
        out.kv("coset_bound", m * theta.n)
        out.kv("coset_bound_ok", ok)
        status = OK if ok else FAILED
    else:
        out.say("  theta-invariants infinite: coset elements are not uniformly bounded")
        out.kv("coset_bound", "inf")
    return status


def cmd_powermap(args, out: Output) -> int:
    if args.demo == "torus":
        r = torus_collapse_demo(args.samples, args.seed)
        ok = r.collapse and r.distinct_images == 1
        out.say(f"torus demo: {r.samples} samples, images {{{', '.join(str(w) for w in r.witnessed_neighborhood)}}}")
        out.say(f"  collapse = {r.collapse}")
    else:
        r = semisimple_noncollapse_demo(args.samples, args.seed)
        ok = not r.collapse and r.witnesses_verified == r.samples
        out.say(f"swap demo: {r.samples} samples, {r.distinct_images} distinct diagonal images (g, g)")
        out.say(f"  exact preimages ((g,1)J)^2 = (g,g) verified: {r.witnesses_verified}/{r.samples}")
        out.say(f"  collapse = {r.collapse}")
    out.kv("command", "powermap")
    out.kv("demo", args.demo)
    out.kv("seed", args.seed)
    out.kv_lines(r.kv_lines())
    return OK if ok else FAILED


def cmd_twist(args, out: Output) -> int:
    A, B = parse_ap_table(args.f), parse_ap_table(args.g)
    out.kv("command", "twist")
    out.kv("modulus", args.q)
    try:
        chi = detect_twist_character(A, B, args.q, min_per_class=args.min_per_class)
    except InsufficientData as exc:
        out.say(f"inconclusive: residue classes lacking data: "
                + ", ".join(f"{r} ({n} primes)" for r, n in sorted(exc.missing.items())))
        out.kv("result", "inconclusive")
        out.kv("missing", ",".join(str(r) for r in sorted(exc.missing)))
        return INCONCLUSIVE
    if chi is None:
        out.say("no character")
        out.kv("result", "no-character")
        return FAILED
    out.say(f"character mod {args.q} with a_p(f) = chi(p) a_p(g):")
    for r in sorted(chi.values):
        out.say(f"  chi({r}) = {chi.values[r]}   ({chi.support[r]} primes)")
        out.kv(f"chi.{r}", chi.values[r])
    if chi.weight_mismatch:
        out.say(f"  note: weights differ ({A.weight} vs {B.weight})")
    out.kv("result", "character")
    out.kv("weight_mismatch", chi.weight_mismatch)
    return OK


def cmd_ap_table(args, out: Output) -> int:
    try:
        coeffs = [int(a) for a in args.curve.split(",")]
    except ValueError:
        raise ContractError(f"--curve needs five comma-separated integers, got {args.curve!r}") from None
    if len(coeffs) == 2:
        coeffs = [0, 0, 0] + coeffs
    if len(coeffs) != 5:
        raise ContractError("--curve needs a1,a2,a3,a4,a6 or a4,a6")
    E = ECModel(*coeffs)
    table = ap_table_from_curve(E, args.xmax, args.level, label=args.label or "")
    if args.twist is not None:
        q = args.twist_modulus or abs(args.twist) * (1 if abs(args.twist) % 4 == 0 else 4)
        table = twist_ap_table(table, kronecker_character(args.twist, q), q)
    write_ap_table(table, args.out)
    out.say(f"wrote {len(table.ap)} a_p values to {args.out}")
    out.kv("command", "ap-table")
    out.kv("primes", len(table.ap))
    out.kv("level", table.level)
    return OK


# --- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "kv"), default="human",
                        help="human-readable text or '@key=value' lines")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for all samplers (64-bit)")

    parser = argparse.ArgumentParser(prog="potequiv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", parents=[common], help="uniform exponent bound for a degree bound D")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--factorial", action="store_true", help="also print the m0! variant")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("cm-demo", parents=[common], help="CM counterexample: chi+chi vs Ind(psi^2)")
    p.add_argument("--xmax", type=int, default=1000)
    p.add_argument("--write-table", metavar="PATH")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_cm_demo)

    p = sub.add_parser("compare", parents=[common], help="verdicts for a Frobenius table file")
    p.add_argument("--table", required=True)
    p.add_argument("--force-m", type=int, dest="force_m")
    p.add_argument("--mode", choices=("exact", "default"), default="exact")
    p.add_argument("--predicted", type=Fraction)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("lattice", parents=[common], help="character-lattice decomposition for theta")
    p.add_argument("--matrix", required=True, help='integer matrix literal, e.g. "[[0,1],[-1,0]]"')
    p.add_argument("--L0", help="basis of L0 inside Y, e.g. \"[[1,-1,0]]\"")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--order-cap", type=int, default=1000)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("powermap", parents=[common], help="power-map experiments")
    p.add_argument("--demo", choices=("torus", "swap"), required=True)
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(func=cmd_powermap)

    p = sub.add_parser("twist", parents=[common], help="detect a Dirichlet twist between a_p tables")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--min-per-class", type=int, default=3)
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("ap-table", parents=[common], help="write an a_p table by point counting")
    p.add_argument("--curve", required=True, help="a1,a2,a3,a4,a6 (or a4,a6)")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--xmax", type=int, default=2000)
    p.add_argument("--out", required=True)
    p.add_argument("--label")
    p.add_argument("--twist", type=int, help="twist by the Kronecker character (D/.)")
    p.add_argument("--twist-modulus", type=int)
    p.set_defaults(func=cmd_ap_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format)
    try:
        return args.func(args, out)
    except (ContractError, TableFormatError, OSError, ValueError) as exc:
        print(f"potequiv {args.command}: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
