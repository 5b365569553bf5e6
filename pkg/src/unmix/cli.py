"""Command-line front door: parse, reduce, saturate, and decompose systems.

Every subcommand reads a system file (or '-' for standard input) in the plain
vars/polynomials format and writes deterministic text to standard output.
Errors go to standard error with an "error:" prefix; exit codes are 0 on
success, 2 for usage/input errors, and 3 for resource-limit aborts.
"""

from __future__ import annotations

import argparse
import io
import logging
import os
import sys
from contextlib import redirect_stdout

from .charset import charser_a, wu_charset
from .decomp import (
    Component,
    sat_classic,
    sat_improved,
    saturate_by,
    unm_var_dec,
    verify_decomposition,
)
from .elimination import prem_chain, resultant_chain
from .groebner import (
    DEFAULT_LIMITS,
    Limits,
    ResourceLimitError,
    TermOrder,
    buchberger,
)
from .parser_io import (
    ParseError,
    SystemFile,
    emit_result,
    parse_polynomial,
    parse_system,
    render_polynomial,
    render_system,
)
from .polyring import PolyError, VarOrder, normalize
from .triset import TriangularSet, classify_triset, u_set

log = logging.getLogger("unmix")


class CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        self.message = message
        super().__init__(message)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(2, message)


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise CliError(2, f"{name} must be an integer, got {raw!r}") from None


def _limits(args) -> Limits:
    pairs = args.max_pairs or _env_int("UNMIX_MAX_PAIRS", DEFAULT_LIMITS.max_gb_pairs)
    bits = args.max_coeff_bits or _env_int(
        "UNMIX_MAX_COEFF_BITS", DEFAULT_LIMITS.max_coeff_bits
    )
    pops = args.max_pops or _env_int(
        "UNMIX_MAX_POPS", DEFAULT_LIMITS.max_worklist_pops
    )
    try:
        return Limits(pairs, bits, pops)
    except ValueError as e:
        raise CliError(2, str(e)) from None


def _read_system(path: str, stdin_text: str | None) -> SystemFile:
    if path == "-":
        text = stdin_text if stdin_text is not None else sys.stdin.read()
        name = "<stdin>"
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise CliError(2, str(e)) from None
        name = path
    try:
        return parse_system(text, name)
    except ParseError as e:
        raise CliError(2, f"{name}: {e}") from None


def _as_chain(system: SystemFile) -> TriangularSet:
    try:
        return TriangularSet(system.polys)
    except PolyError as e:
        raise CliError(2, f"input is not a triangular set: {e}") from None


def _extra_poly(args, order: VarOrder):
    try:
        return parse_polynomial(args.poly, order)
    except ParseError as e:
        raise CliError(2, f"--poly: {e}") from None


def _parse_order_spec(spec: str, order: VarOrder) -> TermOrder:
    names = [n.strip() for n in spec.split(">")]
    try:
        return TermOrder(names, order)
    except PolyError as e:
        raise CliError(2, str(e)) from None


# ---- subcommand handlers ---------------------------------------------------


def _cmd_parse(args, system: SystemFile, limits: Limits) -> str:
    canonical = SystemFile(
        system.order,
        tuple(p if p.is_zero() else normalize(p) for p in system.polys),
        system.name,
    )
    return render_system(canonical)


def _cmd_prem(args, system: SystemFile, limits: Limits) -> str:
    chain = _as_chain(system)
    p = _extra_poly(args, system.order)
    result = prem_chain(p, chain)
    lines = [
        f"remainder: {render_polynomial(result.remainder)}",
        "exponents: " + " ".join(str(d) for d in result.exponents),
    ]
    return "\n".join(lines) + "\n"


def _cmd_res(args, system: SystemFile, limits: Limits) -> str:
    chain = _as_chain(system)
    p = _extra_poly(args, system.order)
    return render_polynomial(resultant_chain(p, chain)) + "\n"


def _cmd_uset(args, system: SystemFile, limits: Limits) -> str:
    chain = _as_chain(system)
    report = classify_triset(chain)
    lines = []
    for i, f in enumerate(chain.chain):
        lines.append(f"element {i + 1}: {render_polynomial(f)}")
        lines.append(
            "  coeffs: " + "; ".join(render_polynomial(c) for c in report.coeff_sets[i])
        )
        rs = report.resultant_sets[i]
        lines.append(
            "  resultants: " + ("; ".join(render_polynomial(r) for r in rs) if rs else "(none)")
        )
    members = "; ".join(render_polynomial(u) for u in report.u_set)
    lines.append(f"u_set: {members if members else '(empty)'}")
    flags = []
    for label, value in [
        ("triangular", report.triangular),
        ("ascending", report.noncontradictory_ascending),
        ("regular", report.regular),
        ("normal", report.normal),
    ]:
        flags.append(f"{label}={'yes' if value else 'no'}")
    lines.append("flags: " + " ".join(flags))
    return "\n".join(lines) + "\n"


def _cmd_charset(args, system: SystemFile, limits: Limits) -> str:
    outcome = wu_charset(system.polys, limits)
    if outcome.is_contradiction:
        return f"contradiction: {render_polynomial(outcome.contradiction)}\n"
    return "\n".join(render_polynomial(f) for f in outcome.chain) + "\n"


def _cmd_charser(args, system: SystemFile, limits: Limits) -> str:
    branches = charser_a(system.polys, limits)
    lines = [f"branches: {len(branches)}"]
    for i, br in enumerate(branches, start=1):
        lines.append("")
        lines.append(f"branch {i}:")
        for f in br.triset.chain:
            lines.append(f"  chain: {render_polynomial(f)}")
        if br.u_set:
            for u in br.u_set:
                lines.append(f"  u: {render_polynomial(u)}")
        else:
            lines.append("  u: (empty)")
    return "\n".join(lines) + "\n"


def _cmd_gb(args, system: SystemFile, limits: Limits) -> str:
    if args.order:
        term_order = _parse_order_spec(args.order, system.order)
    else:
        term_order = TermOrder.lex(system.order)
    basis = buchberger(system.polys, term_order, limits)
    if not basis.generators:
        return "0\n"
    return "\n".join(render_polynomial(g) for g in basis.generators) + "\n"


def _cmd_sat(args, system: SystemFile, limits: Limits) -> str:
    chain = _as_chain(system)
    if args.by is not None:
        h = _extra_poly_by(args.by, system.order)
        basis = saturate_by(chain.chain, h, limits)
    elif args.method == "classic":
        basis = sat_classic(chain, limits)
    else:
        basis = sat_improved(chain, limits)
    if basis.is_unit():
        return "1\n"
    if not basis.generators:
        return "0\n"
    return "\n".join(render_polynomial(g) for g in basis.generators) + "\n"


def _extra_poly_by(text: str, order: VarOrder):
    try:
        return parse_polynomial(text, order)
    except ParseError as e:
        raise CliError(2, f"--by: {e}") from None


def _cmd_decompose(args, system: SystemFile, limits: Limits) -> str:
    components = unm_var_dec(
        system.polys, method=args.method, limits=limits, threads=args.threads
    )
    if args.verify:
        problems = verify_decomposition(system.polys, components, limits)
        if problems:
            raise CliError(1, "verification failed: " + "; ".join(problems))
        print("verify: ok", file=sys.stderr)
    return emit_result(system.order, components, args.format)


_HANDLERS = {
    "parse": _cmd_parse,
    "prem": _cmd_prem,
    "res": _cmd_res,
    "uset": _cmd_uset,
    "charset": _cmd_charset,
    "charser": _cmd_charser,
    "gb": _cmd_gb,
    "sat": _cmd_sat,
    "decompose": _cmd_decompose,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="unmix",
        description="Unmixed decomposition of polynomial varieties over Q "
        "(triangular chains, characteristic series, saturation ideals).",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", metavar="subcommand")

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="system file path, or '-' for standard input")
        p.add_argument("--max-pairs", type=int, default=0, help="basis pair-queue ceiling")
        p.add_argument("--max-coeff-bits", type=int, default=0, help="coefficient size ceiling (bits)")
        p.add_argument("--max-pops", type=int, default=0, help="worklist pop ceiling")
        return p

    add("parse", "parse a system and echo it in canonical form")
    p = add("prem", "chain pseudo-remainder of --poly against the input chain")
    p.add_argument("--poly", required=True, help="polynomial expression")
    p = add("res", "chain resultant of --poly against the input chain")
    p.add_argument("--poly", required=True, help="polynomial expression")
    add("uset", "coefficient sets, chain resultants, and the u-set of a chain")
    add("charset", "Ritt-Wu characteristic set of the system")
    add("charser", "characteristic series (branches with u-sets)")
    p = add("gb", "reduced lexicographic Groebner basis")
    p.add_argument("--order", help="variable order, greatest first, e.g. 'x5>x4>x3>x2>x1'")
    p = add("sat", "saturation ideal of the input chain")
    p.add_argument("--method", choices=["classic", "improved"], default="improved")
    p.add_argument("--by", help="saturate by this polynomial instead of a method")
    p = add("decompose", "full unmixed variety decomposition")
    p.add_argument("--method", choices=["classic", "improved"], default="improved")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--threads", type=int, default=None, help="parallel saturations (default UNMIX_THREADS or 1)")
    p.add_argument("--verify", action="store_true", help="run expensive self-checks")
    return parser


def run_cli(argv: list[str], stdin_text: str | None = None) -> tuple[int, str]:
    """Run one invocation; returns (exit code, standard output text)."""
    out = io.StringIO()
    parser = build_parser()
    try:
        with redirect_stdout(out):
            try:
                args = parser.parse_args(argv)
            except SystemExit as e:  # --help and friends
                return (e.code or 0, out.getvalue())
            if args.command is None:
                raise CliError(2, "a subcommand is required (see --help)")
            if args.verbose:
                logging.basicConfig(stream=sys.stderr, level=logging.INFO)
            limits = _limits(args)
            system = _read_system(args.input, stdin_text)
            text = _HANDLERS[args.command](args, system, limits)
            out.write(text)
        return (0, out.getvalue())
    except CliError as e:
        print(f"error: {e.message}", file=sys.stderr)
        return (e.code, out.getvalue())
    except ResourceLimitError as e:
        print(f"error: resource limit: {e}", file=sys.stderr)
        return (3, out.getvalue())
    except (ParseError, PolyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return (2, out.getvalue())


def main() -> None:
    code, text = run_cli(sys.argv[1:])
    sys.stdout.write(text)
    sys.exit(code)


if __name__ == "__main__":
    main()
