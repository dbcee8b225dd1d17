"""Seeded sweeps over every identity the library relies on.

Each check returns a :class:`CheckResult`; :func:`run_all` evaluates them in
a fixed order so that output is deterministic for a given seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .algebra import bc_density, signature
from .errors import EtaBundleError, exit_code
from .eta_coupled import (
    coupled_sf,
    eta_flat,
    flat_coupling_sf,
    third_transgression,
    xi_coupled_LC,
    xi_flat,
    xi_flat_assembled,
    xi_flat_formula,
)
from .eta_spin import (
    adiabatic_limit_eta,
    adiabatic_limit_via_series,
    second_transgression,
    sf_adiabatic_deformation,
    xi_spin_LC,
)
from .geometry import (
    CircleBundleEnd,
    CoupledLine,
    FourManifoldData,
    IrreducibleAsymptote,
    is_degenerate_reducible,
    parse_manifest,
)
from .moduli import (
    dim_v_irreducible,
    l_genus_transgression,
    signature_eta_end,
    tunneling_dim,
    tunneling_dim_beta_assembly,
    tunneling_from_reducible,
    tunneling_from_reducible_beta_assembly,
)
from .resonance import (
    degenerate_contribution,
    nondegenerate_sf,
    perturbation_pairing,
    q1_gram,
    q2_gram,
    random_instance,
    resonance_pairing,
    sf_plus,
)
from .zeta import eta_arithmetic_progression


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""

    def to_json(self) -> dict:
        return {"cases": self.cases, "detail": self.detail, "name": self.name, "passed": self.passed}


def _degree(rng: random.Random, bound: int = 12) -> int:
    ell = 0
    while ell == 0:
        ell = rng.randint(-bound, bound)
    return ell


def random_irreducible_end(rng: random.Random, max_genus: int = 8, max_degree: int = 12) -> IrreducibleAsymptote:
    """A valid irreducible end: ``1 <= |n| <= g`` and ``|n| <= h_star <= g``."""
    g = rng.randint(1, max_genus)
    n = -rng.randint(1, g)
    h_star = rng.randint(-n, g)
    return IrreducibleAsymptote(CircleBundleEnd(g, _degree(rng, max_degree)), CoupledLine(n, h_star))


def random_irreducible_manifold(rng: random.Random, max_ends: int = 4) -> FourManifoldData:
    ends = tuple(random_irreducible_end(rng) for _ in range(rng.randint(1, max_ends)))
    c2 = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
    return FourManifoldData(rng.randint(-10, 10), rng.randint(-10, 10), c2, ends)


def check_series_density(rng: random.Random) -> CheckResult:
    s = bc_density(7)
    c = 1e-2
    closed = 1.0 / c - 0.5 / math.tanh(c / 2)
    err = abs(s(c) - closed)
    ok = s[1] == Fraction(-1, 12) and s[3] == Fraction(1, 720) and err <= 1e-12
    return CheckResult("series_density", ok, 1, f"c1={s[1]} c3={s[3]} float_err={err:.2e}")


def check_adiabatic_limit(rng: random.Random, cases: int = 100) -> CheckResult:
    bad = 0
    for _ in range(cases):
        ell, h = _degree(rng, 50), rng.randint(0, 20)
        bad += adiabatic_limit_via_series(ell, h) != adiabatic_limit_eta(ell, h)
    return CheckResult("adiabatic_limit", bad == 0, cases, f"mismatches={bad}")


def check_spin_pipeline(rng: random.Random, cases: int = 200) -> CheckResult:
    bad = 0
    for _ in range(cases):
        ell, g, h = _degree(rng, 30), rng.randint(0, 10), rng.randint(0, 10)
        total = xi_spin_LC(ell, g, h).value + sf_adiabatic_deformation(ell, h) + second_transgression(ell, g)
        eta = 2 * total - 2 * h
        bad += total != Fraction(ell, 12) + h or eta != Fraction(ell, 6)
    return CheckResult("spin_pipeline", bad == 0, cases, f"mismatches={bad}")


def _random_coupled(rng: random.Random) -> tuple[int, int, CoupledLine]:
    ell = _degree(rng, 15)
    while abs(ell) < 2:
        ell = _degree(rng, 15)
    g = rng.randint(0, 8)
    k = rng.randint(1, abs(ell) - 1)
    return ell, g, CoupledLine(k, rng.randint(0, 8))


def check_coupled_pipeline(rng: random.Random, cases: int = 200) -> CheckResult:
    bad = 0
    for _ in range(cases):
        ell, g, line = _random_coupled(rng)
        step2 = xi_coupled_LC(ell, g, line).value + coupled_sf(ell, line) + second_transgression(ell, g)
        bad += step2 != Fraction(ell, 12) + Fraction(line.kernel_dim, 2)
        step3 = step2.constant_term() + flat_coupling_sf(ell, line) + third_transgression(line.deg, ell)
        bad += step3 != xi_flat(ell, line.deg) or xi_flat_assembled(ell, g, line) != step3
        bad += eta_flat(ell, line.deg) != 2 * step3
    return CheckResult("coupled_pipeline", bad == 0, cases, f"mismatches={bad}")


def check_residue_shadow(rng: random.Random, cases: int = 200) -> CheckResult:
    bad = 0
    for _ in range(cases):
        ell = _degree(rng, 30)
        k = rng.randint(-60, 60)
        diff = xi_flat_formula(ell, k + abs(ell)) - xi_flat_formula(ell, k)
        bad += diff.denominator != 1
    return CheckResult("residue_shadow", bad == 0, cases, f"non-integer shifts={bad}")


def check_resonance_signatures(rng: random.Random) -> CheckResult:
    bad = cases = 0
    for d in range(1, 9):
        cases += 1
        bad += signature(q1_gram(d)).as_tuple() != (1, 1, 2 * d - 1)
    for g in range(0, 9):
        for m in range(0, g + 1):
            cases += 1
            bad += signature(q2_gram(g, m)).as_tuple() != (2 * m, 2 * m, 2 * g - 2 * m)
    for ell in range(-10, 11):
        if ell == 0:
            continue
        for h in range(0, 11):
            cases += 1
            bad += nondegenerate_sf(h) + degenerate_contribution(ell) != sf_plus(ell, h)
    return CheckResult("resonance_signatures", bad == 0, cases, f"mismatches={bad}")


def check_pairing_identity(rng: random.Random, cases: int = 1000, tol: float = 1e-12) -> CheckResult:
    np_rng = _numpy_rng(rng)
    worst = 0.0
    for _ in range(cases):
        inst, xi = random_instance(np_rng)
        worst = max(worst, abs(perturbation_pairing(inst, xi) - resonance_pairing(inst, xi)))
    return CheckResult("pairing_identity", worst <= tol, cases, f"max_abs_diff={worst:.3e}")


def _numpy_rng(rng: random.Random) -> np.random.Generator:
    return np.random.default_rng(rng.getrandbits(63))


def check_virtual_dimension(rng: random.Random, cases: int = 300) -> CheckResult:
    bad = 0
    for _ in range(cases):
        man = random_irreducible_manifold(rng)
        rep = dim_v_irreducible(man)
        bad += rep.assembly_residual != 0
        for a in man.ends:
            fold = a.line.h_L + a.line.h_star + sf_plus(a.end.degree, a.line.h_star)
            bad += fold != a.n - 1 - a.end.epsilon
    return CheckResult("virtual_dimension_routes", bad == 0, cases, f"mismatches={bad}")


def check_tunneling(rng: random.Random, cases: int = 500) -> CheckResult:
    bad = 0
    for _ in range(cases):
        ell, g = _degree(rng), rng.randint(1, 8)
        n1, n2 = -rng.randint(1, 8), -rng.randint(1, 8)
        expected = Fraction(n1 * n1 - n2 * n2, ell) + n1 + n2 + 2 * g - 2
        bad += tunneling_dim(ell, g, n1, n2) != expected
        bad += tunneling_dim_beta_assembly(ell, g, n1, n2) != expected
    red = 0
    while red < cases:
        ell, g = _degree(rng), rng.randint(1, 8)
        if is_degenerate_reducible(g, ell):
            continue
        red += 1
        kappa, n = rng.randint(-10, 10), -rng.randint(1, 8)
        direct = tunneling_from_reducible(ell, g, kappa, n)
        bad += direct != tunneling_from_reducible_beta_assembly(ell, g, kappa, n)
    return CheckResult("tunneling", bad == 0, 2 * cases, f"mismatches={bad}")


def check_l_genus_telescoping(rng: random.Random, cases: int = 200) -> CheckResult:
    bad = 0
    for _ in range(cases):
        ends = [(_degree(rng, 20), rng.randint(0, 10)) for _ in range(rng.randint(1, 6))]
        total = sum((signature_eta_end(l, g) + l_genus_transgression(l, g) for l, g in ends), Fraction(0))
        expected = sum((Fraction(l, 3) - (1 if l > 0 else -1) for l, _ in ends), Fraction(0))
        bad += total != expected
    return CheckResult("l_genus_telescoping", bad == 0, cases, f"mismatches={bad}")


def check_zeta_oracle(rng: random.Random) -> CheckResult:
    worst = anti = 0.0
    for j in range(1, 10):
        a = j / 10
        worst = max(worst, abs(eta_arithmetic_progression(a) - (1 - 2 * a)))
        anti = max(anti, abs(eta_arithmetic_progression(a) + eta_arithmetic_progression(1 - a)))
    ok = worst <= 1e-9 and anti <= 1e-8
    return CheckResult("zeta_oracle", ok, 9, f"max_err={worst:.2e} antisym={anti:.2e}")


def _manifest(end: dict) -> dict:
    return {"manifold": {"chi": 0, "sign": 0, "c2": "0"}, "ends": [end]}


REJECTION_CASES: tuple[tuple[str, dict, str, int], ...] = (
    (
        "riemann_roch",
        _manifest({"genus": 2, "degree": 2, "asymptote": {"type": "irreducible", "n": -2, "h_star": 1}}),
        "RiemannRochViolation",
        2,
    ),
    (
        "clifford",
        _manifest({"genus": 2, "degree": 2, "asymptote": {"type": "irreducible", "n": -1, "h_star": 3}}),
        "CliffordViolation",
        2,
    ),
    (
        "trivial_bundle",
        _manifest({"genus": 2, "degree": 0, "asymptote": {"type": "irreducible", "n": -1, "h_star": 1}}),
        "TrivialBundle",
        3,
    ),
    (
        "degenerate_reducible",
        _manifest({"genus": 3, "degree": 2, "asymptote": {"type": "reducible", "kappa": 1}}),
        "DegenerateReducible",
        3,
    ),
)


def check_validation(rng: random.Random) -> CheckResult:
    bad = []
    for label, manifest, expected, code in REJECTION_CASES:
        try:
            parse_manifest(manifest)
        except EtaBundleError as exc:
            if type(exc).__name__ != expected or exit_code(exc) != code:
                bad.append(label)
        else:
            bad.append(label)
    return CheckResult("validation", not bad, len(REJECTION_CASES), "failed: " + ",".join(bad) if bad else "")


CHECKS: tuple[Callable[[random.Random], CheckResult], ...] = (
    check_series_density,
    check_adiabatic_limit,
    check_spin_pipeline,
    check_coupled_pipeline,
    check_residue_shadow,
    check_resonance_signatures,
    check_pairing_identity,
    check_virtual_dimension,
    check_tunneling,
    check_l_genus_telescoping,
    check_zeta_oracle,
    check_validation,
)


def run_all(seed: int = 0) -> list[CheckResult]:
    results = []
    for i, check in enumerate(CHECKS):
        rng = random.Random(seed * 1000 + i)
        try:
            results.append(check(rng))
        except EtaBundleError as exc:
            name = check.__name__.removeprefix("check_")
            results.append(CheckResult(name, False, 0, f"{type(exc).__name__}: {exc}"))
    return results
