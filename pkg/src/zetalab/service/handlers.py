"""One handler per operation surface. Handlers validate domain logic (the
pydantic layer only checks shapes), call the library, and build the
canonical ordered payload with stringified numerics. Both the HTTP routes
and the CLI go through these functions, so the two surfaces can never
drift apart."""

from __future__ import annotations

import math

from zetalab import arith_equiv, bc_system, demos, dirichlet, ff_curves, spectral_torus
from zetalab.errors import DomainError, SizeError
from zetalab.jsonfmt import SCHEMA_VERSION, fmt_complex, fmt_float, fmt_int
from zetalab.numeric_core import DEFAULT_POLICY, PrecisionPolicy
from zetalab.service import schemas


def _policy(tol: float | None) -> PrecisionPolicy:
    if tol is None:
        return DEFAULT_POLICY
    return PrecisionPolicy(target_abs_tol=tol)


def _poly_from_high(coeffs: list[int]) -> arith_equiv.NumberFieldPoly:
    return arith_equiv.NumberFieldPoly.from_high_to_low(coeffs)


def _curve_from_high(p: int, coeffs: list[int]) -> ff_curves.HyperellipticCurve:
    return ff_curves.HyperellipticCurve(p, tuple(reversed([int(c) for c in coeffs])))


def handle_curve_count(req: schemas.CurveCountRequest) -> dict:
    curve = _curve_from_high(req.p, req.f)
    if req.n_max < 1:
        raise DomainError("n_max must be >= 1")
    if req.p**req.n_max > ff_curves.ENUMERATION_CAP:
        raise SizeError(
            f"counting over F_{req.p}^{req.n_max} exceeds the enumeration cap"
        )
    counts = [ff_curves.count_points(curve, n) for n in range(1, req.n_max + 1)]
    return {
        "schema": SCHEMA_VERSION,
        "command": "curve-count",
        "p": fmt_int(req.p),
        "f_high_to_low": [fmt_int(c) for c in req.f],
        "genus": fmt_int(curve.genus),
        "counts": [fmt_int(c) for c in counts],
    }


def handle_curve_zeta(req: schemas.CurveZetaRequest) -> dict:
    curve = _curve_from_high(req.p, req.f)
    if req.predict > 0 and req.p**req.predict > ff_curves.ENUMERATION_CAP:
        raise SizeError("prediction range exceeds the enumeration cap")
    zn = ff_curves.zeta_numerator(curve)
    predicted = (
        ff_curves.predict_counts(zn, zn.genus, req.predict) if req.predict > 0 else []
    )
    return {
        "schema": SCHEMA_VERSION,
        "command": "curve-zeta",
        "p": fmt_int(req.p),
        "f_high_to_low": [fmt_int(c) for c in req.f],
        "q": fmt_int(zn.q),
        "genus": fmt_int(zn.genus),
        "numerator_low_to_high": [fmt_int(c) for c in zn.coeffs],
        "predicted_counts": [fmt_int(c) for c in predicted],
    }


def handle_split_compare(req: schemas.SplitCompareRequest) -> dict:
    rep = arith_equiv.splitting_types_equal(
        _poly_from_high(req.f), _poly_from_high(req.g), req.bound
    )
    return {
        "schema": SCHEMA_VERSION,
        "command": "split-compare",
        "f_high_to_low": [fmt_int(c) for c in req.f],
        "g_high_to_low": [fmt_int(c) for c in req.g],
        "bound": fmt_int(req.bound),
        "agree": rep.agree,
        "first_mismatch": None if rep.first_mismatch is None else fmt_int(rep.first_mismatch),
        "skipped": [fmt_int(p) for p in rep.skipped],
    }


def handle_dedekind(req: schemas.DedekindRequest) -> dict:
    value = arith_equiv.partial_dedekind_zeta(_poly_from_high(req.f), req.s, req.bound)
    return {
        "schema": SCHEMA_VERSION,
        "command": "dedekind",
        "f_high_to_low": [fmt_int(c) for c in req.f],
        "s": fmt_float(req.s),
        "bound": fmt_int(req.bound),
        "value": fmt_float(value),
    }


def _subgroup_from_spec(
    G: arith_equiv.PermGroup, spec: schemas.SubgroupSpec
) -> arith_equiv.Subgroup:
    if (spec.elements is None) == (spec.generators is None):
        raise DomainError("give a subgroup as either elements or generators")
    if spec.elements is not None:
        return arith_equiv.subgroup_from_elements(G, spec.elements)
    return arith_equiv.subgroup_from_generators(G, spec.generators)


def handle_gassmann(req: schemas.GassmannRequest) -> dict:
    G = arith_equiv.group_closure(req.group.domain_size, req.group.generators)
    h1 = _subgroup_from_spec(G, req.h1)
    h2 = _subgroup_from_spec(G, req.h2)
    rep = arith_equiv.gassmann_check(G, h1, h2)
    return _gassmann_payload(G, h1, h2, rep)


def gassmann_demo_payload() -> dict:
    G = demos.gl32_group()
    h1, h2 = demos.gl32_point_and_plane_stabilizers(G)
    rep = arith_equiv.gassmann_check(G, h1, h2)
    return _gassmann_payload(G, h1, h2, rep)


def _gassmann_payload(G, h1, h2, rep) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "command": "gassmann",
        "group_order": fmt_int(G.order),
        "h1_order": fmt_int(h1.order),
        "h2_order": fmt_int(h2.order),
        "equivalent": rep.equivalent,
        "conjugate": rep.conjugate,
        "table": [
            {
                "class_size": fmt_int(size),
                "h1_count": fmt_int(c1),
                "h2_count": fmt_int(c2),
            }
            for size, c1, c2 in rep.table
        ],
    }


def handle_bc_act(req: schemas.BcActRequest) -> dict:
    sys_m = bc_system.FiniteLevelSystem(req.level)
    result = bc_system.act(sys_m, req.n, req.x % req.level)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "bc-act",
        "level": fmt_int(req.level),
        "n": fmt_int(req.n),
        "x": fmt_int(req.x % req.level),
        "result": fmt_int(result),
    }
    if req.t is not None:
        payload["t"] = fmt_float(req.t)
        payload["phase"] = fmt_complex(bc_system.time_evolution_phase(req.n, req.t))
    return payload


def handle_bc_state(req: schemas.BcStateRequest) -> dict:
    sys_m = bc_system.FiniteLevelSystem(req.level)
    obs = bc_system.Observable(sys_m, tuple(complex(re, im) for re, im in req.f))
    policy = _policy(req.tol)
    value = bc_system.gibbs_state(
        sys_m, req.beta, req.x0, obs, cutoff=req.cutoff, policy=policy
    )
    z = bc_system.partition_function(req.beta, policy)
    return {
        "schema": SCHEMA_VERSION,
        "command": "bc-state",
        "level": fmt_int(req.level),
        "beta": fmt_float(req.beta),
        "x0": fmt_int(req.x0),
        "cutoff": None if req.cutoff is None else fmt_int(req.cutoff),
        "partition_function": fmt_float(z),
        "value": fmt_complex(value),
    }


def handle_bc_check_iso(req: schemas.BcCheckIsoRequest) -> dict:
    sys_m = bc_system.FiniteLevelSystem(req.level)
    cand = bc_system.IsoCandidate(tuple(req.point_map), dict(req.prime_map))
    rep = bc_system.check_iso_candidate(sys_m, sys_m, cand, req.prime_bound)
    return {
        "schema": SCHEMA_VERSION,
        "command": "bc-check-iso",
        "level": fmt_int(req.level),
        "prime_bound": fmt_int(req.prime_bound),
        "equivariant": rep.equivariant,
        "norm_preserving": rep.norm_preserving,
        "equivariance_witness": None
        if rep.equivariance_witness is None
        else [fmt_int(rep.equivariance_witness[0]), fmt_int(rep.equivariance_witness[1])],
        "norm_witness": None if rep.norm_witness is None else fmt_int(rep.norm_witness),
    }


def handle_lseries(req: schemas.LSeriesRequest) -> dict:
    group = dirichlet.unit_group_structure(req.modulus)
    chi = dirichlet.DirichletCharacter(group, tuple(req.exponents))
    value = dirichlet.l_series(chi, req.s, _policy(req.tol))
    return {
        "schema": SCHEMA_VERSION,
        "command": "lseries",
        "modulus": fmt_int(req.modulus),
        "exponents": [fmt_int(e) for e in req.exponents],
        "generators": [[fmt_int(g), fmt_int(o)] for g, o in group.components],
        "s": fmt_float(req.s),
        "value": fmt_complex(value),
    }


def handle_l_fingerprint(req: schemas.LFingerprintRequest) -> dict:
    group = dirichlet.unit_group_structure(req.modulus)
    table = dirichlet.l_fingerprint(req.modulus, req.s_values, _policy(req.tol))
    rows = []
    for exps in sorted(table):
        rows.append(
            {
                "exponents": [fmt_int(e) for e in exps],
                "values": {
                    fmt_int(s): fmt_complex(v) for s, v in sorted(table[exps].items())
                },
            }
        )
    return {
        "schema": SCHEMA_VERSION,
        "command": "l-fingerprint",
        "modulus": fmt_int(req.modulus),
        "s_values": [fmt_int(s) for s in req.s_values],
        "generators": [[fmt_int(g), fmt_int(o)] for g, o in group.components],
        "table": rows,
    }


def handle_epstein(req: schemas.EpsteinRequest) -> dict:
    q = spectral_torus.BinaryQuadraticForm(req.a, req.b, req.c)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "epstein",
        "form": [fmt_float(req.a), fmt_float(req.b), fmt_float(req.c)],
        "s": fmt_float(req.s),
        "method": req.method,
    }
    if req.method == "direct":
        value, bound = spectral_torus.epstein_direct(q, req.s, req.radius)
        payload["radius"] = fmt_float(req.radius)
        payload["value"] = fmt_float(value)
        payload["error_bound"] = fmt_float(bound)
    else:
        payload["value"] = fmt_float(spectral_torus.epstein_accelerated(q, req.s))
    return payload


def handle_eisenstein(req: schemas.EisensteinRequest) -> dict:
    tau = spectral_torus.UpperHalfPoint(req.x, req.y)
    value = spectral_torus.eisenstein(tau, req.s)
    return {
        "schema": SCHEMA_VERSION,
        "command": "eisenstein",
        "tau": [fmt_float(req.x), fmt_float(req.y)],
        "s": fmt_float(req.s),
        "value": fmt_float(value),
    }


def handle_dilog(req: schemas.DilogRequest) -> dict:
    from zetalab.numeric_core import bloch_wigner, dilog

    z = complex(req.re, req.im)
    return {
        "schema": SCHEMA_VERSION,
        "command": "dilog",
        "z": [fmt_float(req.re), fmt_float(req.im)],
        "li2": fmt_complex(dilog(z)),
        "bloch_wigner": fmt_float(bloch_wigner(z)),
    }


def _lattice_from_flat(vals: list[float]) -> spectral_torus.Lattice2D:
    if len(vals) != 4:
        raise DomainError("a lattice needs exactly four reals: v1x, v1y, v2x, v2y")
    return spectral_torus.Lattice2D((vals[0], vals[1]), (vals[2], vals[3]))


def handle_torus_zeta(req: schemas.TorusZetaRequest) -> dict:
    lat = _lattice_from_flat(req.basis)
    value = spectral_torus.spectral_zeta_flat_torus(lat, req.s)
    return {
        "schema": SCHEMA_VERSION,
        "command": "torus-zeta",
        "basis": [fmt_float(v) for v in req.basis],
        "covolume": fmt_float(abs(lat.covolume)),
        "s": fmt_float(req.s),
        "value": fmt_float(value),
    }


def handle_torus_distance(req: schemas.TorusDistanceRequest) -> dict:
    l1 = _lattice_from_flat(req.basis1)
    l2 = _lattice_from_flat(req.basis2)
    bound = spectral_torus.torus_length_bound(l1, l2, req.s_lo, req.s_hi, req.grid)
    return {
        "schema": SCHEMA_VERSION,
        "command": "torus-distance",
        "basis1": [fmt_float(v) for v in req.basis1],
        "basis2": [fmt_float(v) for v in req.basis2],
        "s_window": [fmt_float(req.s_lo), fmt_float(req.s_hi)],
        "grid": fmt_int(req.grid),
        "bound": fmt_float(bound),
        "exp_bound": fmt_float(math.exp(bound)),
    }


def handle_paper_check() -> dict:
    rep = spectral_torus.paper_constant_check()
    return {
        "schema": SCHEMA_VERSION,
        "command": "paper-check",
        "dilog_ratio": fmt_float(rep.dilog_ratio),
        "epstein_ratio_s2": fmt_float(rep.epstein_ratio_s2),
        "eisenstein_ratio_s2": fmt_float(rep.eisenstein_ratio_s2),
        "epstein_square_s2": fmt_float(rep.epstein_square_s2),
        "epstein_hex_minus_s2": fmt_float(rep.epstein_hex_minus_s2),
        "epstein_hex_plus_s2": fmt_float(rep.epstein_hex_plus_s2),
        "eisenstein_i_s2": fmt_float(rep.eisenstein_i_s2),
        "eisenstein_rho_s2": fmt_float(rep.eisenstein_rho_s2),
    }
