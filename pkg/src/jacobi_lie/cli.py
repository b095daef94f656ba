"""``jacobi-lie`` command line: verify, eval, table, invert.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
All numbers are printed with 15 significant digits.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field

from . import biortho, ellint, jacobiode, oracle
from .algebra2 import commutator, inner, mat_norm
from .errors import DegenerateSystem, JacobiLieError

DEFAULT_GAMMA_GRID = (0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99)
ROUTES = ("ode", "integral", "oracle")
CSV_HEADER = "u,kappa,sn,cn,dn,disagreement"


class UsageError(Exception):
    pass


def default_tol() -> float:
    raw = os.environ.get("JACOBI_LIE_TOL")
    if raw is None:
        return 1e-12
    try:
        tol = float(raw)
    except ValueError:
        raise UsageError(f"JACOBI_LIE_TOL={raw!r} is not a number") from None
    if not tol > 0:
        raise UsageError("JACOBI_LIE_TOL must be positive")
    return tol


def fmt(x: float) -> str:
    s = format(x, ".15g")
    return "0" if s == "-0" else s


def _round(obj):
    """Round every float in a JSON-able tree to 15 significant digits."""
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return None
        return float(fmt(obj))
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    return obj


def dump_json(obj) -> str:
    return json.dumps(_round(obj), indent=2, sort_keys=False)


# verify ----------------------------------------------------------------------

def verify_gamma(gamma: float, tol: float) -> dict:
    g = biortho.explicit_generators(gamma)
    structure = biortho.verify_structure_constants(g, tol)
    case: dict = {"gamma": gamma, "degenerate": False, "structure": structure.to_dict()}
    ok = structure.passed

    cas = biortho.matrix_casimir(g)
    expected = -0.75 * (1.0 - gamma * gamma)
    prop_res = max(abs(cas.a11 - expected), abs(cas.a22 - expected), abs(cas.a12), abs(cas.a21))
    central = max(mat_norm(commutator(cas, t)) for t in g)
    cas_ok = prop_res <= tol and central <= tol
    case["casimir"] = {"expected_scalar": expected, "proportionality_residual": prop_res,
                       "centrality_residual": central, "pass": cas_ok}
    ok = ok and cas_ok

    theta = math.asin(gamma)
    try:
        sys_ = biortho.build_biortho(theta)
    except DegenerateSystem as exc:
        case["degenerate"] = True
        reason = str(exc)
        case["generator_agreement"] = {"skipped": True, "reason": reason}
        case["biorthogonality"] = {"skipped": True, "reason": reason}
        case["l3_coefficient"] = structure.coefficient(1, 2, 3)
        case["pass"] = ok
        return case

    built = biortho.build_generators(sys_)
    agree = max(mat_norm(a - b) for a, b in zip(built, g))
    case["generator_agreement"] = {"theta": theta, "max_residual": agree, "pass": agree <= tol}
    bio = max(abs(inner(sys_.phi[j], sys_.chi[k]) - (sys_.omega if j == k else 0.0))
              for j in range(2) for k in range(2))
    case["biorthogonality"] = {"omega": sys_.omega, "max_residual": bio, "pass": bio <= tol}
    case["pass"] = ok and agree <= tol and bio <= tol
    return case


def cmd_verify(gammas, tol: float) -> tuple[int, dict]:
    cases = [verify_gamma(g, tol) for g in gammas]
    passed = all(c["pass"] for c in cases)
    return (0 if passed else 1), {"tol": tol, "pass": passed, "cases": cases}


# eval / table ----------------------------------------------------------------

@dataclass
class OutputRecord:
    u: float
    kappa: float
    routes: dict[str, tuple[float, float, float]] = field(default_factory=dict)

    @property
    def max_route_disagreement(self) -> float:
        vals = list(self.routes.values())
        return max((abs(a[i] - b[i]) for n, a in enumerate(vals) for b in vals[n + 1:]
                    for i in range(3)), default=0.0)

    def primary(self) -> tuple[float, float, float]:
        for name in ROUTES:
            if name in self.routes:
                return self.routes[name]
        raise ValueError("record has no routes")

    def to_dict(self) -> dict:
        d = {"u": self.u, "kappa": self.kappa}
        for name, (s, c, dn) in self.routes.items():
            d[name] = {"sn": s, "cn": c, "dn": dn}
        d["max_route_disagreement"] = self.max_route_disagreement
        return d

    def csv_row(self) -> str:
        s, c, d = self.primary()
        return ",".join(fmt(x) for x in (self.u, self.kappa, s, c, d, self.max_route_disagreement))


_ROUTE_FUNCS = {
    "ode": jacobiode.jacobi,
    "integral": ellint.jacobi_integral,
    "oracle": oracle.jacobi_agm,
}


def cmd_eval(u: float, kappa: float, route: str = "all") -> OutputRecord:
    jacobiode.check_modulus(kappa)
    if not math.isfinite(u):
        raise UsageError(f"u must be finite, got {u}")
    names = ROUTES if route == "all" else (route,)
    return OutputRecord(u, kappa, {n: _ROUTE_FUNCS[n](u, kappa) for n in names})


def u_grid(start: float, stop: float, step: float) -> list[float]:
    if not step > 0:
        raise UsageError("step must be positive")
    if stop < start:
        raise UsageError(f"empty u range {start}:{stop}")
    n = int(math.floor((stop - start) / step + 1e-9))
    return [start + i * step for i in range(n + 1)]


def cmd_table(start: float, stop: float, kappas, step: float, route: str = "all"):
    """Records in kappa-major, u-ascending order."""
    us = u_grid(start, stop, step)
    if not kappas:
        raise UsageError("empty kappa list")
    for k in kappas:
        for u in us:
            yield cmd_eval(u, k, route)


def render_csv(records) -> str:
    return "".join(line + "\n" for line in [CSV_HEADER, *(r.csv_row() for r in records)])


def cmd_invert(x: float, kappa: float, which: str, paper_literal: bool = False) -> float:
    if which == "sn":
        return ellint.asn(x, kappa)
    if which == "cn":
        return ellint.acn(x, kappa)
    return ellint.adn(x, kappa, paper_literal=paper_literal)


# argument parsing --------------------------------------------------------------

def _float_list(text: str) -> list[float]:
    try:
        vals = [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _range(text: str) -> tuple[float, float]:
    try:
        a, b = text.split(":")
        return float(a), float(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected START:STOP, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jacobi-lie",
                                description="Jacobi elliptic functions from a deformed so(2,1) algebra.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check generators, structure constants and Casimir")
    v.add_argument("--gamma", type=_float_list, default=list(DEFAULT_GAMMA_GRID),
                   help="comma-separated deformation parameters in [0, 1]")
    v.add_argument("--tol", type=float, default=None)

    e = sub.add_parser("eval", help="evaluate sn, cn, dn at one point")
    e.add_argument("--u", type=float, required=True)
    e.add_argument("--kappa", type=float, default=0.0)
    e.add_argument("--route", choices=(*ROUTES, "all"), default="all")

    t = sub.add_parser("table", help="tabulate sn, cn, dn over a u range")
    t.add_argument("--u-range", type=_range, required=True, metavar="START:STOP")
    t.add_argument("--step", type=float, required=True)
    t.add_argument("--kappa", type=_float_list, default=[0.0])
    t.add_argument("--route", choices=(*ROUTES, "all"), default="all")
    t.add_argument("--format", choices=("csv", "json"), default="csv")

    i = sub.add_parser("invert", help="evaluate an inverse elliptic function")
    i.add_argument("--x", type=float, required=True)
    i.add_argument("--kappa", type=float, default=0.0)
    i.add_argument("--which", choices=("sn", "cn", "dn"), default="sn")
    i.add_argument("--paper-literal", action="store_true",
                   help="use the literal (1 + k^2 x^2) integrand for dn")
    return p


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            tol = args.tol if args.tol is not None else default_tol()
            if not tol > 0:
                raise UsageError("tol must be positive")
            bad = [g for g in args.gamma if not 0.0 <= g <= 1.0]
            if bad:
                raise UsageError(f"gamma values outside [0, 1]: {bad}")
            code, report = cmd_verify(args.gamma, tol)
            out.write(dump_json(report) + "\n")
            return code
        if args.command == "eval":
            out.write(dump_json(cmd_eval(args.u, args.kappa, args.route).to_dict()) + "\n")
            return 0
        if args.command == "table":
            start, stop = args.u_range
            records = list(cmd_table(start, stop, args.kappa, args.step, args.route))
            if args.format == "csv":
                out.write(render_csv(records))
            else:
                out.write(dump_json([r.to_dict() for r in records]) + "\n")
            return 0
        if args.command == "invert":
            out.write(fmt(cmd_invert(args.x, args.kappa, args.which, args.paper_literal)) + "\n")
            return 0
    except (UsageError, JacobiLieError) as exc:
        print(f"jacobi-lie: error: {exc}", file=sys.stderr)
        return 2
    return 2


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
