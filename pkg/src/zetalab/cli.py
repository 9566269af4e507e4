"""Command-line surface. Every subcommand builds the same request model
the HTTP endpoint consumes and calls the shared handler, so CLI and
service output are byte-for-byte the same payloads.

Conventions: polynomial coefficients are written HIGH-to-low degree
(`--f 1,0,1,1,-1,-1` is x^5 + x^3 + x^2 - x - 1); groups and observables
are JSON; exit codes are 0 ok, 1 usage, 2 domain error, 3 size/cap error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from pydantic import ValidationError

from zetalab.errors import DomainError, SizeError
from zetalab.jsonfmt import SCHEMA_VERSION, dumps
from zetalab.service import handlers, schemas

SUBCOMMANDS = (
    "curve-count",
    "curve-zeta",
    "split-compare",
    "dedekind",
    "gassmann",
    "bc-act",
    "bc-state",
    "bc-check-iso",
    "lseries",
    "l-fingerprint",
    "epstein",
    "eisenstein",
    "dilog",
    "torus-zeta",
    "torus-distance",
    "paper-check",
)

# Which library operations each subcommand reaches; the coverage test
# checks every public operation appears exactly once.
COMMAND_OPERATIONS: dict[str, tuple[str, ...]] = {
    "curve-count": ("ff_curves.make_extension_field", "ff_curves.count_points"),
    "curve-zeta": ("ff_curves.zeta_numerator", "ff_curves.predict_counts"),
    "split-compare": (
        "arith_equiv.factor_degrees_mod_p",
        "arith_equiv.splitting_types_equal",
    ),
    "dedekind": ("arith_equiv.partial_dedekind_zeta",),
    "gassmann": (
        "arith_equiv.group_closure",
        "arith_equiv.conjugacy_classes",
        "arith_equiv.gassmann_check",
    ),
    "bc-act": ("bc_system.act", "bc_system.time_evolution_phase"),
    "bc-state": (
        "bc_system.gibbs_state",
        "bc_system.partition_function",
        "numeric_core.riemann_zeta",
        "numeric_core.hurwitz_zeta",
        "numeric_core.bernoulli_numbers",
    ),
    "bc-check-iso": ("bc_system.check_iso_candidate",),
    "lseries": ("dirichlet.unit_group_structure", "dirichlet.evaluate", "dirichlet.l_series"),
    "l-fingerprint": ("dirichlet.l_fingerprint",),
    "epstein": ("spectral_torus.epstein_direct", "spectral_torus.epstein_accelerated"),
    "eisenstein": ("spectral_torus.eisenstein",),
    "dilog": ("numeric_core.dilog", "numeric_core.bloch_wigner"),
    "torus-zeta": ("spectral_torus.spectral_zeta_flat_torus",),
    "torus-distance": ("spectral_torus.torus_length_bound",),
    "paper-check": ("spectral_torus.paper_constant_check",),
}


@dataclass(frozen=True)
class CommandResult:
    status: str  # "ok" | "error"
    payload: dict
    human_text: str


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we want exit 1
        raise UsageError(message)


def _ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v != ""]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v != ""]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated reals, got {text!r}") from exc


def _json_arg(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON argument: {exc}") from exc


def build_parser() -> _Parser:
    parser = _Parser(prog="zetalab", description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit the JSON payload")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("curve-count", help="|X(F_{q^n})| for n = 1..n_max")
    p.add_argument("--p", type=int)
    p.add_argument("--f", type=str, help="coefficients, high-to-low degree")
    p.add_argument("--n", type=int, default=7)
    p.add_argument("--demo", choices=["howe"], help="Howe twin curve preset")
    p.add_argument("--sign", choices=["plus", "minus"], default="plus")

    p = sub.add_parser("curve-zeta", help="zeta numerator P(T) from point counts")
    p.add_argument("--p", type=int)
    p.add_argument("--f", type=str)
    p.add_argument("--predict", type=int, default=0)
    p.add_argument("--demo", choices=["howe"])
    p.add_argument("--sign", choices=["plus", "minus"], default="plus")

    p = sub.add_parser("split-compare", help="splitting-type fingerprints of two polynomials")
    p.add_argument("--f", type=str)
    p.add_argument("--g", type=str)
    p.add_argument("--bound", type=int, default=10_000)
    p.add_argument("--demo", choices=["perlis", "komatsu"])

    p = sub.add_parser("dedekind", help="truncated Dedekind zeta Euler product")
    p.add_argument("--f", type=str, required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--bound", type=int, default=10_000)

    p = sub.add_parser("gassmann", help="conjugacy-class intersection check")
    p.add_argument("--group", type=str, help='JSON {"domain_size": n, "generators": [[...]]}')
    p.add_argument("--h1", type=str, help='JSON {"elements": [...]} or {"generators": [...]}')
    p.add_argument("--h2", type=str)
    p.add_argument("--demo", choices=["gl32"])

    p = sub.add_parser("bc-act", help="semigroup action n * x at level M")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--t", type=float, default=None, help="also report the phase n^{it}")

    p = sub.add_parser("bc-state", help="Gibbs state value at inverse temperature beta")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--x0", type=int, default=1)
    p.add_argument("--f", type=str, required=True, help="JSON [[re, im], ...] of length M")
    p.add_argument("--cutoff", type=int, default=None, help="direct-summation oracle path")
    p.add_argument("--tol", type=float, default=None, help="Hurwitz evaluator tolerance")

    p = sub.add_parser("bc-check-iso", help="equivariance + norm check for a candidate map")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--point-map", type=str, required=True, help="JSON list, a bijection of 0..M-1")
    p.add_argument("--prime-map", type=str, default="{}", help='JSON {"2": 2, ...}')
    p.add_argument("--bound", type=int, default=30)

    p = sub.add_parser("lseries", help="Dirichlet L(s, chi)")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--chi", type=str, default="", help="exponent vector, comma-separated")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--tol", type=float, default=None, help="Hurwitz evaluator tolerance")

    p = sub.add_parser("l-fingerprint", help="table of L(s, chi) over all characters mod M")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--s-values", type=str, default="2", help="comma-separated integers >= 2")
    p.add_argument("--tol", type=float, default=None, help="Hurwitz evaluator tolerance")

    p = sub.add_parser("epstein", help="Epstein zeta of a positive definite form")
    p.add_argument("--form", type=str, required=True, help="a,b,c")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--method", choices=["accelerated", "direct"], default="accelerated")
    p.add_argument("--radius", type=float, default=400.0)

    p = sub.add_parser("eisenstein", help="real-analytic Eisenstein series E(tau, s)")
    p.add_argument("--tau", type=str, required=True, help="x,y with y > 0")
    p.add_argument("--s", type=float, required=True)

    p = sub.add_parser("dilog", help="Li_2 and the Bloch-Wigner function")
    p.add_argument("--z", type=str, required=True, help="re,im")

    p = sub.add_parser("torus-zeta", help="spectral zeta of a flat torus")
    p.add_argument("--lattice", type=str, required=True, help="v1x,v1y,v2x,v2y")
    p.add_argument("--s", type=float, required=True)

    p = sub.add_parser("torus-distance", help="sup_s |log zeta ratio| between two tori")
    p.add_argument("--lattice1", type=str, required=True)
    p.add_argument("--lattice2", type=str, required=True)
    p.add_argument("--grid", type=int, default=1000)
    p.add_argument("--s-lo", type=float, default=2.0)
    p.add_argument("--s-hi", type=float, default=3.0)

    sub.add_parser("paper-check", help="the three torus-distance ratios, independently")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", type=str, default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _howe_coeffs(sign: str) -> list[int]:
    return [1, 0, 1 if sign == "plus" else -1, 1, -1, -1]


def _dispatch(args: argparse.Namespace) -> dict:
    cmd = args.command
    if cmd == "curve-count":
        if args.demo == "howe":
            return handlers.handle_curve_count(
                schemas.CurveCountRequest(p=3, f=_howe_coeffs(args.sign), n_max=args.n)
            )
        if args.p is None or args.f is None:
            raise UsageError("curve-count needs --p and --f (or --demo howe)")
        return handlers.handle_curve_count(
            schemas.CurveCountRequest(p=args.p, f=_ints(args.f), n_max=args.n)
        )
    if cmd == "curve-zeta":
        if args.demo == "howe":
            return handlers.handle_curve_zeta(
                schemas.CurveZetaRequest(p=3, f=_howe_coeffs(args.sign), predict=args.predict)
            )
        if args.p is None or args.f is None:
            raise UsageError("curve-zeta needs --p and --f (or --demo howe)")
        return handlers.handle_curve_zeta(
            schemas.CurveZetaRequest(p=args.p, f=_ints(args.f), predict=args.predict)
        )
    if cmd == "split-compare":
        if args.demo == "perlis":
            f, g = [1, 0, 0, 0, 0, 0, -7, 3], [1, 0, 0, 14, 0, -42, -21, 9]
        elif args.demo == "komatsu":
            f, g = [1, 0, 0, 0, 0, 0, 0, 0, -18], [1, 0, 0, 0, 0, 0, 0, 0, -288]
        else:
            if args.f is None or args.g is None:
                raise UsageError("split-compare needs --f and --g (or --demo)")
            f, g = _ints(args.f), _ints(args.g)
        return handlers.handle_split_compare(
            schemas.SplitCompareRequest(f=f, g=g, bound=args.bound)
        )
    if cmd == "dedekind":
        return handlers.handle_dedekind(
            schemas.DedekindRequest(f=_ints(args.f), s=args.s, bound=args.bound)
        )
    if cmd == "gassmann":
        if args.demo == "gl32":
            return handlers.gassmann_demo_payload()
        if args.group is None or args.h1 is None or args.h2 is None:
            raise UsageError("gassmann needs --group, --h1, --h2 (or --demo gl32)")
        return handlers.handle_gassmann(
            schemas.GassmannRequest(
                group=schemas.PermGroupSpec(**_json_arg(args.group)),
                h1=schemas.SubgroupSpec(**_json_arg(args.h1)),
                h2=schemas.SubgroupSpec(**_json_arg(args.h2)),
            )
        )
    if cmd == "bc-act":
        return handlers.handle_bc_act(
            schemas.BcActRequest(level=args.level, n=args.n, x=args.x, t=args.t)
        )
    if cmd == "bc-state":
        f = _json_arg(args.f)
        return handlers.handle_bc_state(
            schemas.BcStateRequest(
                level=args.level,
                beta=args.beta,
                x0=args.x0,
                f=f,
                cutoff=args.cutoff,
                tol=args.tol,
            )
        )
    if cmd == "bc-check-iso":
        return handlers.handle_bc_check_iso(
            schemas.BcCheckIsoRequest(
                level=args.level,
                point_map=_json_arg(args.point_map),
                prime_map={int(k): int(v) for k, v in _json_arg(args.prime_map).items()},
                prime_bound=args.bound,
            )
        )
    if cmd == "lseries":
        return handlers.handle_lseries(
            schemas.LSeriesRequest(
                modulus=args.modulus, exponents=_ints(args.chi), s=args.s, tol=args.tol
            )
        )
    if cmd == "l-fingerprint":
        return handlers.handle_l_fingerprint(
            schemas.LFingerprintRequest(
                modulus=args.modulus, s_values=_ints(args.s_values), tol=args.tol
            )
        )
    if cmd == "epstein":
        form = _floats(args.form)
        if len(form) != 3:
            raise UsageError("--form needs exactly a,b,c")
        return handlers.handle_epstein(
            schemas.EpsteinRequest(
                a=form[0], b=form[1], c=form[2], s=args.s, method=args.method, radius=args.radius
            )
        )
    if cmd == "eisenstein":
        tau = _floats(args.tau)
        if len(tau) != 2:
            raise UsageError("--tau needs exactly x,y")
        return handlers.handle_eisenstein(schemas.EisensteinRequest(x=tau[0], y=tau[1], s=args.s))
    if cmd == "dilog":
        z = _floats(args.z)
        if len(z) != 2:
            raise UsageError("--z needs exactly re,im")
        return handlers.handle_dilog(schemas.DilogRequest(re=z[0], im=z[1]))
    if cmd == "torus-zeta":
        return handlers.handle_torus_zeta(
            schemas.TorusZetaRequest(basis=_floats(args.lattice), s=args.s)
        )
    if cmd == "torus-distance":
        return handlers.handle_torus_distance(
            schemas.TorusDistanceRequest(
                basis1=_floats(args.lattice1),
                basis2=_floats(args.lattice2),
                s_lo=args.s_lo,
                s_hi=args.s_hi,
                grid=args.grid,
            )
        )
    if cmd == "paper-check":
        return handlers.handle_paper_check()
    raise UsageError(f"unknown subcommand {cmd!r}")


def _human_text(payload: dict) -> str:
    lines = []
    cmd = payload.get("command", "")
    for key, value in payload.items():
        if key in ("schema", "command"):
            continue
        if key == "counts":
            lines.append("  n   N_n")
            for i, c in enumerate(value, start=1):
                lines.append(f"  {i:<3} {c}")
            continue
        if key == "table" and cmd == "gassmann":
            lines.append("  class_size  h1_count  h2_count")
            for row in value:
                lines.append(
                    f"  {row['class_size']:<11} {row['h1_count']:<9} {row['h2_count']}"
                )
            continue
        if key == "table" and cmd == "l-fingerprint":
            for row in value:
                exps = ",".join(row["exponents"])
                vals = "  ".join(f"s={s}: {v[0]}+{v[1]}i" for s, v in row["values"].items())
                lines.append(f"  chi=({exps})  {vals}")
            continue
        if isinstance(value, list):
            value = json.dumps(value)
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def run(argv: list[str]) -> tuple[CommandResult, int]:
    """Parse argv, execute, and return (CommandResult, exit_code)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        if args.command == "serve":
            raise UsageError("serve does not produce a CommandResult; call main()")
        payload = _dispatch(args)
        return CommandResult("ok", payload, _human_text(payload)), 0
    except (UsageError, ValidationError) as exc:
        payload = {"schema": SCHEMA_VERSION, "status": "error", "kind": "usage", "detail": str(exc)}
        return CommandResult("error", payload, f"usage error: {exc}"), 1
    except SizeError as exc:
        payload = {"schema": SCHEMA_VERSION, "status": "error", "kind": "size", "detail": str(exc)}
        return CommandResult("error", payload, f"size error: {exc}"), 3
    except DomainError as exc:
        payload = {"schema": SCHEMA_VERSION, "status": "error", "kind": "domain", "detail": str(exc)}
        return CommandResult("error", payload, f"domain error: {exc}"), 2


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if "serve" in argv[:2]:
        parser = build_parser()
        try:
            args = parser.parse_args(argv)
        except UsageError as exc:
            print(f"usage error: {exc}", file=sys.stderr)
            return 1
        import uvicorn

        from zetalab.service import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return 0
    want_json = "--json" in argv
    result, code = run(argv)
    if want_json:
        sys.stdout.write(dumps(result.payload))
    else:
        print(result.human_text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
