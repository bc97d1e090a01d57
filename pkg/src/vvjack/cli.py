"""Command-line frontend: ``vvjack <command> [options]``.

Every command builds a report dictionary with a fixed key order and prints it
either as JSON (``--json``) or as readable text.  Wall-clock measurements live
only in the trailing ``timings`` field, so two runs with the same arguments
differ at most there.  The exit status is 0 when every check passes, 1 when a
check fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from math import comb, factorial, prod

from . import __version__
from .combin import (
    RSYT,
    InvalidPartition,
    enumerate_rsyt,
    hook_data,
    min_antisymmetric_label,
    min_symmetric_label,
    parse_int_list,
    validate_partition,
)
from .exactnum import format_qk
from .irrep import ConditionViolated, irrep, norm0
from .jack import MemoBudgetExceeded, set_memo_budget, spectral, triangular_oracle, verify_eigen, zeta, zeta_norm
from .suites import SUITES, run_suites
from .symmetrize import (
    NotColumnStrict,
    NotRowStrict,
    antisymmetric_constant,
    antisymmetric_hook_norm,
    f_antisymmetric,
    f_symmetric,
    factored_norm,
    hook_products,
    norm_antisymmetric,
    norm_symmetric,
    singular_scan,
    symmetric_constant,
    symmetric_hook_norm,
)

DEFAULT_SIZE_MAX = 20000


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report instead of text")
    common.add_argument("--workers", type=_positive, default=None,
                        help="worker threads (env VVJACK_WORKERS, default 1)")
    common.add_argument("--memo-budget", type=_positive, default=None,
                        help="max memoised Jack polynomials per shape (env VVJACK_MEMO_BUDGET)")
    common.add_argument("--size-max", type=_positive, default=DEFAULT_SIZE_MAX,
                        help="skip building polynomials whose monomial basis exceeds this size")

    p = argparse.ArgumentParser(prog="vvjack", description="Vector-valued nonsymmetric Jack polynomials.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    s = sub.add_parser("rsyt", parents=[common], help="list reversed standard Young tableaux of a shape")
    s.add_argument("shape", nargs="?", help="partition, e.g. 2,1")
    s.add_argument("--tau", help="partition (alternative to the positional argument)")

    for name, text in (("jack", "build zeta_(alpha,T) and check its eigenvalues"),
                       ("norm", "closed-form norm of zeta_(alpha,T)")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("--tau", required=True)
        s.add_argument("--alpha", required=True, help="composition, e.g. 0,1,0")
        s.add_argument("--tableau", help="reading-word id such as 3,1,2 (default: first tableau)")
        s.add_argument("--oracle", action="store_true", help="also compare with an independent computation")

    for name, kind in (("symmetric", "W-invariant"), ("antisymmetric", "W-alternating")):
        s = sub.add_parser(name, parents=[common], help=f"{kind} polynomial f for a label (minimal by default)")
        s.add_argument("--tau", required=True)
        s.add_argument("--lambda", dest="lam", help="partition label; default is the minimal one")
        s.add_argument("--tableau", help="tableau id; default is the canonical one for the minimal label")
        s.add_argument("--oracle", action="store_true", help="also evaluate the norm by the contravariant form")

    s = sub.add_parser("verify", parents=[common], help="run the property suites for a shape")
    s.add_argument("--tau", required=True)
    s.add_argument("--nmax", type=_nonneg, default=2, help="maximal polynomial degree (default 2)")
    s.add_argument("--suites", default=",".join(SUITES), help=f"comma list from {', '.join(SUITES)}")

    s = sub.add_parser("singular-scan", parents=[common], help="Gram corank of the form at rational kappa values")
    s.add_argument("--tau", required=True)
    s.add_argument("--dmax", type=_nonneg, default=2, help="maximal degree (default 2)")
    s.add_argument("--candidates", help="comma list of rationals such as -1/2,1/2 (default: n/hook)")
    return p


# --------------------------------------------------------------------------
# helpers
# --------------------------------------------------------------------------


def _tau(text: str | None) -> tuple[int, ...]:
    if text is None:
        raise UsageError("a partition is required (e.g. --tau 2,1)")
    return validate_partition(text)


def _tableau(tau, ident: str | None) -> RSYT:
    ctx = irrep(tau)
    if ident is None:
        return ctx.tableaux[0]
    try:
        return ctx.tableaux[ctx.lookup(ident)]
    except (KeyError, ValueError, IndexError):
        raise UsageError(f"{ident!r} is not a reversed standard tableau of shape {','.join(map(str, tau))}") from None


def _alpha(text: str, n: int) -> tuple[int, ...]:
    try:
        alpha = parse_int_list(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(alpha) != n or any(a < 0 for a in alpha):
        raise UsageError(f"alpha must be {n} nonnegative integers, got {text!r}")
    return alpha


def _basis_size(n: int, degree: int, dim: int) -> int:
    return comb(degree + n - 1, n - 1) * dim


def _candidates(text: str | None):
    if text is None:
        return None
    try:
        return [Fraction(c.strip()) for c in text.split(",") if c.strip()]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse candidates {text!r}") from None


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def cmd_rsyt(args, cfg) -> dict:
    tau = _tau(args.tau or args.shape)
    tabs = enumerate_rsyt(tau)
    n = sum(tau)
    hook_count = factorial(n) // prod(node.hook for node in hook_data(tau))
    return {
        "tau": list(tau),
        "count": len(tabs),
        "hook_count": hook_count,
        "status": "pass" if len(tabs) == hook_count else "fail",
        "tableaux": [{"id": T.id, "rows": [list(r) for r in T.rows], "contents": list(T.contents())}
                     for T in tabs],
    }


def cmd_jack(args, cfg) -> dict:
    tau = _tau(args.tau)
    T = _tableau(tau, args.tableau)
    alpha = _alpha(args.alpha, sum(tau))
    size = _basis_size(len(alpha), sum(alpha), len(irrep(tau).tableaux))
    if size > cfg["size_max"]:
        raise UsageError(f"polynomial space has {size} basis elements (> --size-max {cfg['size_max']})")
    z = zeta(alpha, T)
    rep = verify_eigen(alpha, T, z.poly)
    checks = [{"name": "eigenvalues", "status": "pass" if rep["pass"] else "fail", "failing": rep["failing"]}]
    if args.oracle:
        same = triangular_oracle(alpha, T) == z.poly
        checks.append({"name": "triangular oracle", "status": "pass" if same else "fail"})
    return {
        "tau": list(tau),
        "alpha": list(alpha),
        "tableau": T.id,
        "spectral": [format_qk(x) for x in z.spectral],
        "norm": format_qk(z.norm),
        "checks": checks,
        "status": "pass" if all(c["status"] == "pass" for c in checks) else "fail",
        "polynomial": z.poly.to_json_obj(),
    }


def cmd_norm(args, cfg) -> dict:
    tau = _tau(args.tau)
    T = _tableau(tau, args.tableau)
    alpha = _alpha(args.alpha, sum(tau))
    value = zeta_norm(alpha, T)
    out = {
        "tau": list(tau),
        "alpha": list(alpha),
        "tableau": T.id,
        "spectral": [format_qk(x) for x in spectral(alpha, T)],
        "norm": format_qk(value),
        "status": "pass",
    }
    if args.oracle:
        from .cherednik import form_via_gram

        z = zeta(alpha, T).poly
        oracle = form_via_gram(z, z)
        out["oracle"] = format_qk(oracle)
        out["status"] = "pass" if oracle == value else "fail"
    return out


def _cmd_family(args, cfg, kind: str) -> dict:
    tau = _tau(args.tau)
    n = sum(tau)
    if kind == "s":
        dlam, dT = min_symmetric_label(tau)
        build, assembled_norm, hook_norm, const = f_symmetric, norm_symmetric, symmetric_hook_norm, symmetric_constant
    else:
        dlam, dT = min_antisymmetric_label(tau)
        build, assembled_norm, hook_norm, const = (f_antisymmetric, norm_antisymmetric, antisymmetric_hook_norm,
                                                   antisymmetric_constant)
    if args.lam is None:
        lam = tuple(dlam)
        T = _tableau(tau, args.tableau) if args.tableau else dT
    else:
        lam = validate_partition(args.lam)
        lam = lam + (0,) * (n - len(lam))
        if len(lam) != n:
            raise UsageError(f"lambda must have at most {n} parts")
        if args.tableau is None:
            raise UsageError("--tableau is required together with --lambda")
        T = _tableau(tau, args.tableau)
    minimal = lam == tuple(dlam)
    degree = sum(lam)
    norm = assembled_norm(lam, T)
    checks = []
    out = {
        "kind": "symmetric" if kind == "s" else "antisymmetric",
        "tau": list(tau),
        "lambda": list(lam),
        "tableau": T.id,
        "degree": degree,
        "minimal": minimal,
        "norm": format_qk(norm),
    }
    if minimal:
        closed = hook_norm(tau)
        out["norm_factored"] = factored_norm(tau, kind)
        out["constant"] = format_qk(const(tau))
        out["norm0"] = format_qk(norm0(dT))
        checks.append({"name": "hook formula equals assembled norm",
                       "status": "pass" if closed == norm else "fail"})
    if kind == "s":
        out["hook_products"] = hook_products(tau).as_dict()
    size = _basis_size(n, degree, len(irrep(tau).tableaux))
    if size <= cfg["size_max"]:
        f = build(lam, T)
        if args.oracle:
            from .cherednik import contravariant_form

            checks.append({"name": "form oracle equals assembled norm",
                           "status": "pass" if contravariant_form(f, f) == norm else "fail"})
        out["polynomial"] = f.to_json_obj()
    else:
        out["polynomial"] = None
        out["polynomial_skipped"] = f"basis size {size} exceeds --size-max {cfg['size_max']}"
    out["checks"] = checks
    out["status"] = "pass" if all(c["status"] == "pass" for c in checks) else "fail"
    return out


def cmd_symmetric(args, cfg) -> dict:
    return _cmd_family(args, cfg, "s")


def cmd_antisymmetric(args, cfg) -> dict:
    return _cmd_family(args, cfg, "a")


def cmd_verify(args, cfg) -> dict:
    tau = _tau(args.tau)
    names = [s.strip() for s in args.suites.split(",") if s.strip()]
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}")
    results = run_suites(tau, args.nmax, names, workers=cfg["workers"])
    ok = all(c["status"] == "pass" for r in results for c in r["checks"])
    return {"tau": list(tau), "nmax": args.nmax, "status": "pass" if ok else "fail", "suites": results}


def cmd_singular_scan(args, cfg) -> dict:
    tau = _tau(args.tau)
    report = singular_scan(tau, args.dmax, _candidates(args.candidates), workers=cfg["workers"])
    report["status"] = "pass"
    return report


COMMANDS = {
    "rsyt": cmd_rsyt,
    "jack": cmd_jack,
    "norm": cmd_norm,
    "symmetric": cmd_symmetric,
    "antisymmetric": cmd_antisymmetric,
    "verify": cmd_verify,
    "singular-scan": cmd_singular_scan,
}


# --------------------------------------------------------------------------
# output
# --------------------------------------------------------------------------


def _config_echo(args, cfg) -> dict:
    skip = {"command", "json", "workers", "memo_budget", "size_max"}
    echo = {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}
    echo["workers"] = cfg["workers"]
    echo["size_max"] = cfg["size_max"]
    return echo


def _text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    body = report["result"]
    cmd = report["command"]
    if cmd == "rsyt":
        lines.append(f"shape {body['tau']}: {body['count']} tableaux (hook formula {body['hook_count']})")
        for t in body["tableaux"]:
            lines.append(f"  {t['id']:<20} rows={t['rows']} contents={t['contents']}")
    elif cmd == "verify":
        for suite in body["suites"]:
            lines.append(f"[{suite['suite']}]")
            for c in suite["checks"]:
                lines.append(f"  {c['status'].upper():4} {c['name']} ({c['count']} cases)")
                for f in c["failures"]:
                    lines.append(f"       counterexample: {json.dumps(f)}")
    elif cmd == "singular-scan":
        for c in body["cells"]:
            lines.append(f"  kappa={c['kappa']:>8} degree={c['degree']} dim={c['dimension']} corank={c['corank']}")
        for s in body["summary"]:
            lines.append(f"  kappa={s['kappa']:>8} singular={s['singular_evidence']} first_degree={s['first_degree']}")
    else:
        for key, value in body.items():
            if key == "polynomial" and value is not None:
                lines.append(f"polynomial: {len(value)} monomials (use --json for coefficients)")
            elif key == "checks":
                for c in value:
                    lines.append(f"check: {c['status'].upper()} {c['name']}")
            else:
                lines.append(f"{key}: {value}")
    lines.append(f"status: {report['status']}")
    lines.append("timings: " + ", ".join(f"{k}={v:.3f}s" for k, v in report["timings"].items()))
    return "\n".join(lines)


def run(args: argparse.Namespace) -> tuple[dict, int]:
    """Run a parsed command and return (report, exit code)."""
    cfg = {
        "workers": args.workers or _env_int("VVJACK_WORKERS", 1),
        "size_max": args.size_max,
    }
    if cfg["workers"] < 1:
        raise UsageError("worker count must be positive")
    budget = args.memo_budget or _env_int("VVJACK_MEMO_BUDGET", 0)
    if budget:
        set_memo_budget(budget)
    start = time.perf_counter()
    result = COMMANDS[args.command](args, cfg)
    elapsed = time.perf_counter() - start
    status = result.pop("status", "pass")
    report = {
        "command": args.command,
        "version": __version__,
        "config": _config_echo(args, cfg),
        "status": status,
        "result": result,
        "timings": {"total": round(elapsed, 6)},
    }
    return report, (0 if status == "pass" else 1)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)  # exits with status 2 on usage errors
    try:
        report, code = run(args)
    except (UsageError, InvalidPartition, ConditionViolated, NotColumnStrict, NotRowStrict, ValueError) as exc:
        print(f"vvjack: error: {exc}", file=sys.stderr)
        return 2
    except MemoBudgetExceeded as exc:
        print(f"vvjack: memo budget exceeded: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(_text(report))
    return code


def strip_timings(text: str) -> str:
    """Drop the timings field from a JSON report (used by the determinism check)."""
    data = json.loads(text)
    data.pop("timings", None)
    return json.dumps(data, indent=2)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
