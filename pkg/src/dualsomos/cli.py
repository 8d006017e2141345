"""Command-line front end: every pipeline behind one executable, JSON out.

Exit codes: 0 on success, 2 on usage errors (argparse), 3 on mathematical
failures (non-unit divisors, singular curves, ...) with a diagnostic JSON
object on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .dualnum import DualScalar, dual
from .errors import DualSomosError
from .hankel import (
    MomentSpec,
    bordered_det,
    hankel_det,
    moments,
    params_from_moments,
    shadow_iii_from_bordered,
    v_from_hankel,
)
from .laurentpoly import verify_laurent
from .somos import (
    MapState,
    SomosOrbit,
    SomosParams,
    dtoda_invariant,
    dtoda_jacobian_det,
    dtoda_step,
    extend_orbit,
    j_dual,
    j_even,
    j_odd,
    map_state_for_orbit,
)


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    n = int(text)
    return n, n


def _parse_seed(text: str) -> list[DualScalar]:
    return [DualScalar.parse(part) for part in text.split(",")]


def _term_doc(n: int, value: DualScalar) -> dict:
    return {"n": n, "even": str(value.even), "odd": str(value.odd)}


def _rat_doc(n: int, value: Fraction) -> dict:
    return {"n": n, "value": str(value)}


def _orbit_from_args(args) -> SomosOrbit:
    if getattr(args, "classical", False):
        params = SomosParams(dual(1), dual(1))
        return SomosOrbit.from_seed(params, [dual(1)] * 4, base=-1)
    params = SomosParams(DualScalar.parse(args.alpha), DualScalar.parse(args.beta))
    seed = _parse_seed(args.seed)
    return SomosOrbit.from_seed(params, seed, base=args.base)


def _add_orbit_flags(sub, need_range=True):
    sub.add_argument("--classical", action="store_true", help="alpha=beta=1, seed of ones at -1..2")
    sub.add_argument("--alpha", default="1", help="dual literal, e.g. 1 or 1+1e")
    sub.add_argument("--beta", default="1", help="dual literal")
    sub.add_argument("--seed", default="1,1,1,1", help="four dual literals, comma separated")
    sub.add_argument("--base", type=int, default=-1, help="index of the first seed term")
    if need_range:
        sub.add_argument("--from", dest="lo", type=int, default=None)
        sub.add_argument("--to", dest="hi", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dualsomos")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    commands = parser.add_subparsers(dest="command", required=True)

    somos_cmd = commands.add_parser("somos", help="iterate the dual recurrence")
    _add_orbit_flags(somos_cmd)

    shadow_cmd = commands.add_parser("shadow", help="shadow rows of an orbit")
    _add_orbit_flags(shadow_cmd)
    shadow_cmd.add_argument("--rows", default="i,ii,iii,iv")
    shadow_cmd.add_argument("--iii-route", choices=("map", "hankel"), default="map")
    shadow_cmd.add_argument("--iv-route", choices=("recurrence", "vop"), default="recurrence")
    shadow_cmd.add_argument("--j1", default="-1", help="odd invariant fixing the fourth row")

    hankel_cmd = commands.add_parser("hankel", help="moments and Hankel determinants")
    hankel_cmd.add_argument("--spec", required=True, help="a,b,c,s0,s1 as dual literals")
    hankel_cmd.add_argument("--moments", type=int, default=None, metavar="N")
    hankel_cmd.add_argument("--dets", default=None, metavar="LO..HI")
    hankel_cmd.add_argument("--bordered", default=None, metavar="LO..HI")
    hankel_cmd.add_argument("--params", action="store_true")
    hankel_cmd.add_argument("--v", default=None, metavar="LO..HI", help="map variables from determinant ratios")

    inv_cmd = commands.add_parser("invariants", help="first integrals along an orbit")
    _add_orbit_flags(inv_cmd, need_range=False)
    inv_cmd.add_argument("--steps", type=int, default=20)
    inv_cmd.add_argument("--back", type=int, default=5)

    laurent_cmd = commands.add_parser("laurent-verify", help="symbolic membership check")
    laurent_cmd.add_argument("--depth", type=int, default=10)
    laurent_cmd.add_argument("--specializations", type=int, default=20)

    elliptic_cmd = commands.add_parser("elliptic-verify", help="analytic solution report")
    _add_orbit_flags(elliptic_cmd)

    map_cmd = commands.add_parser("map", help="iterate the continued-fraction map")
    map_cmd.add_argument("--u", default=None, help="rational; defaults from --orbit data")
    map_cmd.add_argument("--f", default=None)
    map_cmd.add_argument("--v0", default=None)
    map_cmd.add_argument("--d1", default=None)
    map_cmd.add_argument("--classical", action="store_true")
    map_cmd.add_argument("--steps", type=int, default=12)

    return parser


# ---------------------------------------------------------------------------
# Handlers.
# ---------------------------------------------------------------------------


def _run_somos(args) -> dict:
    orbit = _orbit_from_args(args)
    lo = orbit.base if args.lo is None else args.lo
    hi = orbit.base + 13 if args.hi is None else args.hi
    orbit = extend_orbit(orbit, lo, hi)
    return {
        "command": "somos",
        "alpha": str(orbit.params.alpha),
        "beta": str(orbit.params.beta),
        "terms": [_term_doc(n, orbit.term(n)) for n in range(lo, hi + 1)],
    }


def _positivity(row: dict[int, Fraction], lo: int, hi: int):
    start = None
    for n in range(lo, hi + 1):
        if all(row[m] > 0 for m in range(n, hi + 1)):
            start = n
            break
    return start


def _run_shadow(args) -> dict:
    from .shadow import ShadowBasis, shadow_basis, shadow_iii_from_map, shadow_iv

    orbit = _orbit_from_args(args)
    lo = -1 if args.lo is None else args.lo
    hi = 12 if args.hi is None else args.hi
    j1 = Fraction(args.j1)
    basis = shadow_basis(orbit, lo, hi, j1=j1, iv_route=args.iv_route)
    rows = basis.rows()
    if args.iii_route == "hankel":
        spec = _classical_like_spec(orbit)
        seq = moments(spec, 2 * (hi + 2))
        reps = shadow_iii_from_bordered(seq, extend_orbit(orbit, lo, hi + 1), count=hi)
        rows = dict(rows)
        rows["iii"] = {n: reps[n] for n in reps}
    wanted = [r.strip() for r in args.rows.split(",") if r.strip()]
    doc_rows = {}
    for name in wanted:
        if name not in rows:
            raise ValueError(f"unknown row {name!r}")
        row = rows[name]
        doc_rows[name] = [
            _rat_doc(n, row[n]) for n in sorted(k for k in row if lo <= k <= hi)
        ]
    positivity = {
        name: _positivity(rows[name], max(lo, min(rows[name])), hi)
        for name in wanted
    }
    return {"command": "shadow", "rows": doc_rows, "positive_from": positivity}


def _classical_like_spec(orbit) -> MomentSpec:
    # The bordered route needs a moment spec; only the classical orbit has a
    # canonical one built in.
    from .somos import classical_orbit

    classical = classical_orbit(4)
    work = extend_orbit(orbit, -1, 4)
    if any(work.term(n) != classical.term(n) for n in range(-1, 4)):
        raise DualSomosError(
            "the hankel route has a built-in moment spec only for the classical orbit"
        )
    return MomentSpec(dual(1), dual(1), dual(1), dual(1), dual(0))


def _run_hankel(args) -> dict:
    spec = MomentSpec.parse(args.spec)
    doc: dict = {"command": "hankel", "spec": args.spec}
    needed = 2
    det_range = _parse_range(args.dets) if args.dets else None
    bordered_range = _parse_range(args.bordered) if args.bordered else None
    v_range = _parse_range(args.v) if args.v else None
    if args.moments:
        needed = max(needed, args.moments)
    if det_range:
        needed = max(needed, 2 * det_range[1] - 1)
    if bordered_range:
        needed = max(needed, 2 * bordered_range[1])
    if v_range:
        needed = max(needed, 2 * v_range[1])
    seq = moments(spec, needed)
    if args.moments:
        doc["moments"] = [_term_doc(j, seq[j]) for j in range(args.moments)]
    if det_range:
        doc["hankel"] = [
            _term_doc(n, hankel_det(seq, n)) for n in range(det_range[0], det_range[1] + 1)
        ]
    if bordered_range:
        doc["bordered"] = [
            _term_doc(n, bordered_det(seq, n))
            for n in range(bordered_range[0], bordered_range[1] + 1)
        ]
    if v_range:
        doc["v"] = [
            _rat_doc(n, v_from_hankel(seq, n)) for n in range(v_range[0], v_range[1] + 1)
        ]
    if args.params:
        alpha, beta, j = params_from_moments(spec)
        doc["params"] = {"alpha": str(alpha), "beta": str(beta), "J": str(j)}
    return doc


def _run_invariants(args) -> dict:
    orbit = _orbit_from_args(args)
    lo = orbit.base - args.back
    hi = orbit.base + 3 + args.steps
    orbit = extend_orbit(orbit, lo, hi)
    windows = []
    j_values = set()
    for n in range(lo, hi - 2):
        window = orbit.window(n)
        value = j_dual(window, orbit.params)
        j_values.add(value)
        windows.append(
            {
                "n": n,
                "j_even": str(j_even([w.even for w in window], orbit.params.a0, orbit.params.b0)),
                "j_odd": str(
                    j_odd(
                        [w.even for w in window],
                        [w.odd for w in window],
                        orbit.params,
                    )
                ),
                "j_dual": str(value),
            }
        )
    j = next(iter(j_values)) if len(j_values) == 1 else None
    return {
        "command": "invariants",
        "windows": windows,
        "constant": len(j_values) == 1,
        "J": None if j is None else str(j),
        "H": None if j is None else str(-j.even / 2),
    }


def _run_laurent(args) -> dict:
    started = time.perf_counter()
    report = verify_laurent(depth=args.depth, specializations=args.specializations)
    return {
        "command": "laurent-verify",
        "depth": report.depth,
        "term_counts": {str(n): list(c) for n, c in sorted(report.term_counts.items())},
        "even_parts_free_of_odd_generators": report.even_parity_ok,
        "odd_parts_affine_linear": report.odd_linear_ok,
        "specializations_checked": report.specialization_checks,
        "specializations_match": report.specialization_ok,
        "backward_forward_identity": report.backward_ok,
        "ok": report.ok,
        "elapsed_s": round(time.perf_counter() - started, 3),
    }


def _run_elliptic(args) -> dict:
    from .elliptic import verify_sigma_solution

    orbit = _orbit_from_args(args)
    lo = -1 if args.lo is None else args.lo
    hi = 12 if args.hi is None else args.hi
    report = verify_sigma_solution(orbit, lo, hi)
    doc = report.to_dict()
    doc["command"] = "elliptic-verify"
    return doc


def _run_map(args) -> dict:
    if args.classical:
        state = MapState(Fraction(-1), Fraction(-3), Fraction(-1), Fraction(1))
    elif None not in (args.u, args.f, args.v0, args.d1):
        state = MapState(Fraction(args.u), Fraction(args.f), Fraction(args.v0), Fraction(args.d1))
    else:
        raise ValueError("provide --classical or all of --u --f --v0 --d1")
    h0 = dtoda_invariant(state)
    rows = []
    conserved = True
    unit_jacobian = True
    for n in range(args.steps + 1):
        rows.append(
            {
                "n": n,
                "v": str(state.v),
                "d": str(state.d),
                "H": str(dtoda_invariant(state)),
            }
        )
        if dtoda_invariant(state) != h0:
            conserved = False
        if n < args.steps:
            if dtoda_jacobian_det(state) != 1:
                unit_jacobian = False
            state = dtoda_step(state)
    return {
        "command": "map",
        "states": rows,
        "H_conserved": conserved,
        "jacobian_unit": unit_jacobian,
    }


_HANDLERS = {
    "somos": _run_somos,
    "shadow": _run_shadow,
    "hankel": _run_hankel,
    "invariants": _run_invariants,
    "laurent-verify": _run_laurent,
    "elliptic-verify": _run_elliptic,
    "map": _run_map,
}


def _emit(doc: dict, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(doc, out, indent=2)
        out.write("\n")
        return
    # CSV: emit term-like sections as rows, everything else as key,value.
    writer_rows: list[list[str]] = []
    for key, value in doc.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            header = list(value[0].keys())
            writer_rows.append([key] + header)
            for item in value:
                writer_rows.append([""] + [str(item[h]) for h in header])
        elif isinstance(value, dict):
            for sub, item in value.items():
                writer_rows.append([f"{key}.{sub}", json.dumps(item)])
        else:
            writer_rows.append([key, str(value)])
    for row in writer_rows:
        out.write(",".join(row) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        doc = _HANDLERS[args.command](args)
    except (DualSomosError, ZeroDivisionError, ValueError) as exc:
        json.dump({"error": type(exc).__name__, "detail": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 3
    _emit(doc, args.format, sys.stdout)
    return 0


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
