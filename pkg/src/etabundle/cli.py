"""Command-line front end.

Subcommands read a JSON manifest (positional path, ``-`` or standard input)
where they need one. Machine output is canonical JSON: sorted keys, exact
rationals as ``"p/q"`` strings, polynomials in rho as arrays of such
strings. ``--format table`` prints aligned ``key = value`` lines with a
decimal approximation after each rational.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping, Sequence

from . import __version__
from .algebra import RadiusPolynomial, ahat_series, bc_density, ch_series, format_rational, tanh_series
from .errors import EtaBundleError, InvalidModuli, ManifestError, ValidationError, exit_code
from .eta_coupled import xi_coupled_adiabatic, xi_coupled_LC, xi_flat
from .eta_spin import adiabatic_limit_eta, xi_spin_adiabatic, xi_spin_LC
from .geometry import (
    CoupledLine,
    FourManifoldData,
    IrreducibleAsymptote,
    moduli_dim,
    parse_asymptote,
    parse_end,
    parse_manifest,
    read_int,
    reduce_residue,
)
from .moduli import (
    DimensionReport,
    beta_irreducible,
    beta_reducible_formal,
    dim_v_irreducible,
    dimension_report,
    signature_eta_end,
    transgression_c2,
    tunneling_dim,
    tunneling_from_reducible,
    tunneling_from_reducible_beta_assembly,
)
from .resonance import ker_counts, sf_minus, sf_plus, sf_plus_from_resonance
from .verify import run_all

COMMANDS = ("invariants", "dimension", "tunneling", "sf", "series", "verify")


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str | None = None
    format: str = "json"
    truncation: int = 8
    seed: int = 0
    strict_integer: bool = False
    assume_beta_additivity: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValidationError(f"unknown command {self.command!r}")
        if self.truncation < 1:
            raise ValidationError("--truncation must be >= 1")
        if self.format not in ("json", "table"):
            raise ValidationError("--format must be json or table")


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return format_rational(obj)
    if isinstance(obj, RadiusPolynomial):
        return obj.to_json()
    if isinstance(obj, DimensionReport):
        return obj.to_json()
    if isinstance(obj, Mapping):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, float):
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def render_json(report: Any) -> str:
    return json.dumps(to_jsonable(report), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _table_value(v: Any) -> str:
    if isinstance(v, bool) or v is None:
        return str(v).lower()
    if isinstance(v, (int, Fraction)):
        q = Fraction(v)
        text = format_rational(q)
        return text if q.denominator == 1 else f"{text} ({float(q):.12g})"
    if isinstance(v, RadiusPolynomial):
        return str(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_table_value(x) for x in v) + "]"
    return str(v)


def _flatten(obj: Any, prefix: str = "") -> list[tuple[str, Any]]:
    if isinstance(obj, DimensionReport):
        obj = {
            "ind_Ow": obj.ind_Ow,
            "dim_v": obj.dim_v,
            "betas": list(obj.betas),
            "assembly_residual": obj.assembly_residual,
            "audit": obj.audit,
        }
    if isinstance(obj, Mapping):
        rows = []
        for k in sorted(obj):
            rows.extend(_flatten(obj[k], f"{prefix}.{k}" if prefix else str(k)))
        return rows
    if isinstance(obj, list) and obj and all(isinstance(x, Mapping) for x in obj):
        rows = []
        for i, x in enumerate(obj):
            rows.extend(_flatten(x, f"{prefix}[{i}]"))
        return rows
    return [(prefix, obj)]


def render_table(report: Any) -> str:
    rows = _flatten(report)
    width = max((len(k) for k, _ in rows), default=0)
    return "".join(f"{k.ljust(width)} = {_table_value(v)}\n" for k, v in rows)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _end_invariants(obj: Mapping[str, Any], where: str) -> dict:
    end = parse_end(obj, where)
    ell, g = end.degree, end.genus
    out: dict[str, Any] = {"genus": g, "degree": ell}
    h = read_int(obj, "h_half", where) if "h_half" in obj else 0
    out["h_half"] = h
    out["eta_adiabatic_limit"] = adiabatic_limit_eta(ell, h)
    out["xi_spin_LC"] = xi_spin_LC(ell, g, h).value
    out["xi_spin_adiabatic"] = xi_spin_adiabatic(ell, g, h).value
    out["signature_eta"] = signature_eta_end(ell, g)
    k = None
    coupling = obj.get("coupling")
    if coupling is not None:
        if not isinstance(coupling, Mapping):
            raise ManifestError(f"{where}.coupling: expected an object")
        k = read_int(coupling, "k", f"{where}.coupling")
        line = CoupledLine(k, read_int(coupling, "h_star", f"{where}.coupling"))
        out["xi_coupled_LC"] = xi_coupled_LC(ell, g, line).value
        out["xi_coupled_adiabatic"] = xi_coupled_adiabatic(ell, g, line).value
    asy = obj.get("asymptote")
    if k is None and isinstance(asy, Mapping) and asy.get("type") == "reducible":
        k = read_int(asy, "kappa", f"{where}.asymptote")
    if k is not None:
        k0, _ = reduce_residue(k, ell)
        if k0 != 0:
            out["xi_flat"] = xi_flat(ell, k0)
            out["eta_flat"] = 2 * out["xi_flat"]
    if end.radius_sq is not None:
        rho = end.radius_sq
        out["at_rho"] = {
            key: out[key](rho) for key in ("xi_spin_LC", "signature_eta", "xi_coupled_LC") if key in out
        }
    return out


def cmd_invariants(cfg: RunConfig, data: Any) -> dict:
    ends = data.get("ends") if isinstance(data, Mapping) else None
    if not isinstance(ends, list) or not ends:
        raise ManifestError("'ends' must be a nonempty list")
    return {"ends": [_end_invariants(e, f"ends[{i}]") for i, e in enumerate(ends)]}


def cmd_dimension(cfg: RunConfig, data: Any) -> DimensionReport:
    return dimension_report(parse_manifest(data), cfg.assume_beta_additivity)


def cmd_tunneling(cfg: RunConfig, data: Any) -> DimensionReport:
    """Two ends of ``R x N``: the limit at -infinity first, then +infinity.

    Degrees are given with the induced boundary orientation, so the two
    entries carry opposite signs; ``ell`` is the degree at +infinity.
    """
    ends_raw = data.get("ends") if isinstance(data, Mapping) else None
    if not isinstance(ends_raw, list) or len(ends_raw) != 2:
        raise ManifestError("tunneling needs exactly two ends (-infinity first)")
    minus, plus = (parse_asymptote(e, f"ends[{i}]") for i, e in enumerate(ends_raw))
    ell, g = plus.end.degree, plus.end.genus
    if minus.end.degree != -ell or minus.end.genus != g:
        raise ManifestError("the two ends must have equal genus and opposite degrees")
    if not isinstance(plus, IrreducibleAsymptote):
        raise ManifestError("the limit at +infinity must be irreducible")
    n = plus.n
    if isinstance(minus, IrreducibleAsymptote):
        tau = tunneling_dim(ell, g, minus.n, n)
        man = FourManifoldData(0, 0, 4 * transgression_c2(ell, minus.n, n), (minus, plus))
        rep = dim_v_irreducible(man)
        return DimensionReport(
            rep.ind_Ow,
            tau,
            rep.betas,
            rep.dim_v - tau + rep.assembly_residual,
            {**rep.audit, "transgression_c2": transgression_c2(ell, minus.n, n)},
        )
    kappa = minus.kappa
    tau = tunneling_from_reducible(ell, g, kappa, n)
    betas = (beta_reducible_formal(g, -ell, kappa), beta_irreducible(g, ell, n))
    correction = (2 * g - 1) + moduli_dim(g, n)
    return DimensionReport(
        tau - correction,
        tau,
        betas,
        tau - tunneling_from_reducible_beta_assembly(ell, g, kappa, n),
        {"transgression_c2": transgression_c2(ell, 0, n), "limit_set_adjustment": correction},
    )


def cmd_sf(cfg: RunConfig, data: Any) -> dict:
    man = parse_manifest(data)
    rows = []
    for a in man.ends:
        if not isinstance(a, IrreducibleAsymptote):
            raise ManifestError("sf needs irreducible limits")
        ell, g = a.end.degree, a.end.genus
        h_star, h_L = a.line.h_star, a.line.h_L
        row: dict[str, Any] = {
            "genus": g,
            "degree": ell,
            "n": a.n,
            "h_star": h_star,
            "h_L": h_L,
            "sf_plus": sf_plus(ell, h_star),
            "sf_minus": sf_minus(ell, h_star),
        }
        if h_L >= 1:
            res = sf_plus_from_resonance(ell, g, h_star, h_L)
            row["resonance"] = {k: list(v) if isinstance(v, tuple) else v for k, v in res.items()}
        try:
            ker_h, ker_r = ker_counts(g, a.n)
            row["ker_H"], row["ker_R"] = ker_h, ker_r
        except InvalidModuli:
            row["ker_H"] = row["ker_R"] = None
        rows.append(row)
    return {"ends": rows}


def cmd_series(cfg: RunConfig, data: Any = None) -> dict:
    T = cfg.truncation
    series = {
        "bc_density": bc_density(T),
        "ahat": ahat_series(T),
        "ch": ch_series(T),
        "tanh": tanh_series(T),
    }
    return {"truncation": T, "series": {k: [s[d] for d in range(T + 1)] for k, s in series.items()}}


def cmd_verify(cfg: RunConfig, data: Any = None) -> dict:
    results = run_all(cfg.seed)
    return {
        "seed": cfg.seed,
        "passed": all(r.passed for r in results),
        "checks": [r.to_json() for r in results],
    }


HANDLERS = {
    "invariants": cmd_invariants,
    "dimension": cmd_dimension,
    "tunneling": cmd_tunneling,
    "sf": cmd_sf,
    "series": cmd_series,
    "verify": cmd_verify,
}
NEEDS_INPUT = {"invariants", "dimension", "tunneling", "sf"}


def load_manifest(path: str | None, stdin=None) -> Any:
    try:
        if path is None or path == "-":
            text = (stdin or sys.stdin).read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ManifestError(f"cannot read manifest: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ManifestError(f"invalid JSON: {exc}") from None


def run(cfg: RunConfig, manifest: Any = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        report = HANDLERS[cfg.command](cfg, manifest)
    except EtaBundleError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return exit_code(exc)
    if cfg.command == "verify" and cfg.format == "table":
        for c in report["checks"]:
            print(f"{'PASS' if c['passed'] else 'FAIL'}  {c['name']:<26} cases={c['cases']:<5} {c['detail']}", file=out)
    else:
        out.write(render_json(report) if cfg.format == "json" else render_table(report))
    if cfg.strict_integer and isinstance(report, DimensionReport) and not report.is_integer:
        print(f"warning: dim_v = {format_rational(report.dim_v)} is not an integer", file=err)
    if cfg.command == "verify" and not report["passed"]:
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--truncation", type=int, default=8, help="series order T (>= 1)")
    common.add_argument("--seed", type=int, default=0, help="seed for verify sweeps")
    common.add_argument("--strict-integer", action="store_true", help="warn when dim_v is not an integer")
    common.add_argument(
        "--assume-beta-additivity",
        action="store_true",
        help="assemble multi-end manifolds with reducible limits as bulk + sum of betas",
    )
    parser = argparse.ArgumentParser(prog="etabundle", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "invariants": "eta and xi invariants of each end",
        "dimension": "virtual dimension of a cylindrical-end manifold",
        "tunneling": "virtual dimension of tunnelings on R x N",
        "sf": "spectral flows at irreducible limits",
        "series": "characteristic-class series coefficients",
        "verify": "run all identity sweeps",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common], help=helps[name])
        if name in NEEDS_INPUT:
            p.add_argument("input", nargs="?", default=None, help="manifest path (default: stdin)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            input_path=getattr(args, "input", None),
            format=args.format,
            truncation=args.truncation,
            seed=args.seed,
            strict_integer=args.strict_integer,
            assume_beta_additivity=args.assume_beta_additivity,
        )
        manifest = load_manifest(cfg.input_path) if cfg.command in NEEDS_INPUT else None
    except EtaBundleError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exit_code(exc)
    return run(cfg, manifest)


if __name__ == "__main__":
    sys.exit(main())
