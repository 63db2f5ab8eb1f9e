"""Command-line surface for superhc"""

import argparse
import asyncio
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import aiofiles

from src.algebra.borel import kac_weight, kac_weight_11, reflection_trace, verify_fd
from src.algebra.exactpoly import format_scalar, to_scalar
from src.algebra.interp import (
    InterpolationError, evaluation_table, solve_general, solve_interpolation, table_to_csv, verify_extra_vanishing,
)
from src.algebra.kacrep import (
    format_kac_vector, quasi_spherical_check, quasi_spherical_vector, spherical_vectors, typicality,
)
from src.algebra.partitions import HookProfile, Partition
from src.algebra.shimura import PAIRING_CONVENTION, gamma_of_shimura, proportionality_constant, verify_shimura
from src.algebra.superlie import DecompositionError, check_bracket_table, check_super_jacobi
from src.algebra.susyring import DeformedParams, SusyProfile, hook_count, lambda0_basis
from src.core.config import Config
from src.core.plugin_manager import PluginManager
from src.plugins.verification import ALL_SUITES

logger = logging.getLogger(__name__)

# Rendered result: JSON payload, text form, and whether the command passed
Outcome = Tuple[Any, str, bool]


def dumps(value: Any) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def parse_args(argv: Sequence[str]) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog="superhc", description="Exact computations for the gl(2|2) symmetric pair.")
    parser.add_argument("--config", default=None, help="Path to config.yaml; built-in defaults when absent.")
    parser.add_argument("--format", choices=("json", "text"), default=None, help="Output format.")
    parser.add_argument("--out", default=None, help="Write the output to this file instead of stdout.")
    sub = parser.add_subparsers(dest="command", required=True)

    interp = sub.add_parser("interp", help="Interpolation polynomial I_mu, or J_mu with --k/--h.")
    interp.add_argument("--p", type=int, required=True)
    interp.add_argument("--q", type=int, required=True)
    interp.add_argument("--mu", default="")
    interp.add_argument("--k", default=None)
    interp.add_argument("--h", default=None)
    interp.add_argument("--slack", type=int, default=None)
    interp.add_argument("--table", type=int, default=None, metavar="D",
                        help="Emit the evaluation matrix over all hooks of size <= D as CSV.")

    basis = sub.add_parser("basis", help="Basis of Lambda0 in degree <= 2d.")
    basis.add_argument("--p", type=int, required=True)
    basis.add_argument("--q", type=int, required=True)
    basis.add_argument("--degree", type=int, required=True, metavar="D")

    reflect = sub.add_parser("reflect", help="Odd reflection path for a hook.")
    reflect.add_argument("--p", type=int, required=True)
    reflect.add_argument("--q", type=int, required=True)
    reflect.add_argument("--lambda", dest="lam", required=True)

    kac = sub.add_parser("kac", help="Spherical vectors of the Kac module at p = q = 1.")
    kac.add_argument("--a", type=int, required=True)
    kac.add_argument("--b", type=int, required=True)
    kac.add_argument("--quasi", action="store_true", help="Run the quasi-spherical checks (b = a-1).")

    shimura = sub.add_parser("shimura", help="Γ(D_mu) and its proportionality constant.")
    shimura.add_argument("--mu", required=True)
    shimura.add_argument("--verify", action="store_true")

    brackets = sub.add_parser("brackets", help="Superbracket table of gl(2|2).")
    brackets.add_argument("--check-table", action="store_true", required=True)

    verify = sub.add_parser("verify-all", help="Run every enabled verification suite.")
    verify.add_argument("--suite", action="append", default=None, help="Restrict to this suite (repeatable).")
    return parser.parse_args(list(argv))


def cmd_interp(args: argparse.Namespace, config: Config) -> Outcome:
    prof = SusyProfile(args.p, args.q)
    slack = args.slack if args.slack is not None else config.get('interp.slack', 3)
    params = None
    if args.k is not None or args.h is not None:
        if args.k is None or args.h is None:
            raise ValueError("--k and --h must be given together")
        params = DeformedParams(to_scalar(args.k), to_scalar(args.h))
    if args.table is not None:
        hooks, table = evaluation_table(prof, args.table, params, slack)
        text = table_to_csv(hooks, table)
        return text, text, True
    mu = Partition.parse(args.mu)
    if params is None:
        res = solve_interpolation(mu, prof, slack)
    else:
        res = solve_general(mu, prof, params, slack)
    failures = verify_extra_vanishing(res, mu, prof, config.get('interp.enlarge_slack', 3))
    payload = res.to_json()
    payload["extra_vanishing_failures"] = [f"{lam}:{format_scalar(v)}" for lam, v in failures]
    text = (f"mu = {mu}  profile = ({prof.p},{prof.q})\n"
            f"poly = {res.poly}\n"
            f"normalization = {format_scalar(res.normalization_value)}"
            + ("  (degenerate)" if res.degenerate_flag else "")
            + f"\nextra vanishing failures = {len(failures)}")
    return payload, text, not failures


def cmd_basis(args: argparse.Namespace, config: Config) -> Outcome:
    prof = SusyProfile(args.p, args.q)
    basis = lambda0_basis(prof, args.degree)
    payload = {
        "p": prof.p,
        "q": prof.q,
        "degree": args.degree,
        "dim": len(basis),
        "hooks": hook_count(prof, args.degree),
        "basis": [f.to_json() for f in basis],
    }
    text = "\n".join([f"dim = {len(basis)} (hooks: {payload['hooks']})"] + [str(f) for f in basis])
    return payload, text, True


def cmd_reflect(args: argparse.Namespace, config: Config) -> Outcome:
    prof = HookProfile(args.p, args.q)
    lam = Partition.parse(args.lam)
    report = verify_fd(lam, prof)
    rows = reflection_trace(report.trace)
    payload = report.to_json()
    payload["rows"] = rows
    payload["kac_weight"] = kac_weight(lam, prof).to_json()
    text = "\n".join(rows + [f"dominant = {report.dominant}  case = {report.case}  tau = {report.tau}  l = {report.l}"])
    return payload, text, report.ok


def cmd_kac(args: argparse.Namespace, config: Config) -> Outcome:
    hw = kac_weight_11(args.a, args.b)
    if args.quasi:
        if args.b != args.a - 1:
            raise ValueError(f"Quasi-spherical checks need b = a-1, got ({args.a}|{args.b})")
        quasi_hw, omega = quasi_spherical_vector(args.a)
        report = quasi_spherical_check(quasi_hw, omega, config.get('kac.word_length', 2))
        payload = report.to_json()
        payload["omega"] = format_kac_vector(omega)
        text = "\n".join(f"{key}: {value}" for key, value in sorted(payload.items()))
        return payload, text, report.ok
    vectors = spherical_vectors(hw)
    payload = {
        "a": args.a,
        "b": args.b,
        "hw": list(hw),
        "typical": typicality(hw),
        "spherical_dim": len(vectors),
        "spherical": [format_kac_vector(v) for v in vectors],
    }
    text = f"hw = {hw}  typical = {payload['typical']}  spherical dim = {len(vectors)}"
    return payload, text, True


def cmd_shimura(args: argparse.Namespace, config: Config) -> Outcome:
    mu = Partition.parse(args.mu)
    if args.verify:
        report = verify_shimura(mu)
        payload = report.to_json()
        text = (f"Γ(D_{mu}) = {report.gamma}\nc_mu = {payload['c_mu']}  in Λ⁰ = {report.in_lambda0}"
                f"  vanishing failures = {len(report.vanishing_failures)}")
        return payload, text, report.ok
    poly = gamma_of_shimura(mu)
    constant, degenerate = proportionality_constant(mu)
    payload = {
        "mu": mu.to_json(),
        "gamma": poly.to_json(),
        "c_mu": None if constant is None else format_scalar(constant),
        "degenerate": degenerate,
        "pairing": PAIRING_CONVENTION,
    }
    text = f"Γ(D_{mu}) = {poly}\nc_mu = {payload['c_mu']}"
    return payload, text, constant is not None


def cmd_brackets(args: argparse.Namespace, config: Config) -> Outcome:
    records = check_bracket_table()
    jacobi = check_super_jacobi()
    passed = sum(1 for r in records if r.ok)
    payload = {
        "passed": passed,
        "total": len(records),
        "entries": [r.to_json() for r in records],
        "super_jacobi_failures": [list(t) for t in jacobi],
    }
    lines = [f"{passed}/{len(records)} pass"]
    lines += [f"[{r.row},{r.column}] expected {r.expected} got {r.actual}" for r in records if not r.ok]
    lines.append(f"super-Jacobi failures: {len(jacobi)}")
    return payload, "\n".join(lines), passed == len(records) and not jacobi


async def run_verification(config: Config, names: Optional[List[str]] = None) -> Outcome:
    """Register the enabled suites, run them and aggregate their reports"""
    plugin_manager = PluginManager()
    logger.info("✓ Plugin manager initialized")
    for suite in ALL_SUITES:
        await plugin_manager.register(suite(), config.data)
    try:
        reports = await plugin_manager.run_all(names)
    finally:
        await plugin_manager.shutdown_all()
    ok = bool(reports) and all(r.ok for r in reports)
    payload = {"ok": ok, "suites": [r.to_json() for r in reports]}
    lines = []
    for r in reports:
        lines.append(f"{'PASS' if r.ok else 'FAIL'} {r.suite} {r.passed}/{len(r.checks)}")
        lines += [f"  {c.id}: expected {c.expected}, got {c.actual}" for c in r.failed]
    lines.append("-" * 40)
    lines += [r.summary() for r in reports]
    return payload, "\n".join(lines), ok


COMMANDS: Dict[str, Callable[[argparse.Namespace, Config], Outcome]] = {
    "interp": cmd_interp,
    "basis": cmd_basis,
    "reflect": cmd_reflect,
    "kac": cmd_kac,
    "shimura": cmd_shimura,
    "brackets": cmd_brackets,
}


async def emit(text: str, out: Optional[str]):
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    async with aiofiles.open(out, "w", encoding="utf-8") as f:
        await f.write(text if text.endswith("\n") else text + "\n")
    logger.info(f"Output written to {out}")


async def _run(args: argparse.Namespace, config: Config) -> int:
    if args.command == "verify-all":
        payload, text, ok = await run_verification(config, args.suite)
    else:
        payload, text, ok = await asyncio.to_thread(COMMANDS[args.command], args, config)
    fmt = args.format or config.get('output.format', 'json')
    if isinstance(payload, str):
        rendered = payload
    else:
        rendered = dumps(payload) if fmt == "json" else text
    await emit(rendered, args.out)
    return 0 if ok else 1


def run_subcommand(argv: Sequence[str], config: Optional[Config] = None) -> int:
    """
    Parse argv, run one subcommand and emit its output

    Returns:
        0 on success, 1 when a check or a solver fails, 2 on invalid input
    """
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        config = config or Config.locate(args.config)
        return asyncio.run(_run(args, config))
    except InterpolationError as e:
        logger.error(f"Interpolation failed (solution dim {e.solution_dim}): {e}")
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (ValueError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except DecompositionError as e:
        logger.error(f"Decomposition failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> int:
    return run_subcommand(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
