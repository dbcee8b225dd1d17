"""Topological input records: circle-bundle ends, line bundles, monopole
asymptotes and cylindrical-end 4-manifolds, plus the JSON manifest reader.

Conventions: the Euler class is normalized by ``int_Sigma c = degree``; the
fiber radius enters only through ``rho = r**2`` (``radius_sq=None`` keeps it
symbolic).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Union

from .algebra import as_rational, parse_rational, sign
from .errors import (
    CliffordViolation,
    DegenerateReducible,
    ManifestError,
    RiemannRochViolation,
    TrivialBundle,
    UnsupportedSign,
    ValidationError,
)


def require_nontrivial(degree: int) -> int:
    if degree == 0:
        raise TrivialBundle("circle bundle of degree 0 is trivial")
    return sign(degree)


@dataclass(frozen=True)
class CircleBundleEnd:
    genus: int
    degree: int
    radius_sq: Fraction | None = None

    def __post_init__(self):
        if self.genus < 0:
            raise ValidationError(f"genus must be >= 0, got {self.genus}")
        require_nontrivial(self.degree)
        if self.radius_sq is not None:
            rho = as_rational(self.radius_sq)
            if rho <= 0:
                raise ValidationError("radius_sq must be positive")
            object.__setattr__(self, "radius_sq", rho)

    @property
    def chi(self) -> int:
        return 2 - 2 * self.genus

    @property
    def sign(self) -> int:
        return sign(self.degree)

    @property
    def epsilon(self) -> int:
        return (1 + self.sign) // 2


@dataclass(frozen=True)
class SpinData:
    """``h_half`` is the dimension of holomorphic sections of ``K^{1/2}``."""

    h_half: int

    def __post_init__(self):
        if self.h_half < 0:
            raise ValidationError("h_half must be >= 0")

    @property
    def kernel_dim(self) -> int:
        return 2 * self.h_half


def small_eigenvalue(degree: int, r: Fraction) -> Fraction:
    """The O(r) eigenvalue ``lambda_r / 2 = -r * degree / 2``."""
    require_nontrivial(degree)
    return -as_rational(r) * degree / 2


@dataclass(frozen=True)
class CoupledLine:
    """Line bundle of degree ``deg`` with ``h_star = h_{1/2}(L*)``.

    ``h_L = h_star + deg`` is forced by Riemann-Roch.
    """

    deg: int
    h_star: int

    def __post_init__(self):
        if self.h_star < 0:
            raise RiemannRochViolation(f"h_{{1/2}}(L*) = {self.h_star} < 0")
        if self.h_L < 0:
            raise RiemannRochViolation(
                f"h_{{1/2}}(L) = h_star + deg = {self.h_L} < 0 (deg={self.deg}, h_star={self.h_star})"
            )

    @property
    def h_L(self) -> int:
        return self.h_star + self.deg

    @property
    def kernel_dim(self) -> int:
        return self.h_star + self.h_L


def validate_coupled(deg: int, h_L_star: int) -> CoupledLine:
    return CoupledLine(deg, h_L_star)


def reduce_residue(k: int, ell: int) -> tuple[int, int]:
    """Return ``(k0, shift)`` with ``0 <= k0 < |ell|`` and ``k = k0 + shift*|ell|``."""
    require_nontrivial(ell)
    shift, k0 = divmod(k, abs(ell))
    return k0, shift


def is_degenerate_reducible(genus: int, degree: int) -> bool:
    return (genus - 1) % degree == 0


def moduli_dim(g: int, n: int, serre_dual: bool = False) -> int:
    """Dimension ``2(g - 1 + n)`` of the irreducible moduli component.

    Only ``n < 0`` is covered directly. With ``serre_dual=True`` a positive
    ``n`` is handled by the substitution ``L -> L*`` (``n -> -n``); that
    branch is an interpretation, not a derived formula.
    """
    if g < 1:
        raise ValidationError("moduli dimensions need genus >= 1")
    if n >= 0:
        if not (serre_dual and n > 0):
            raise UnsupportedSign(f"n = {n}: only n < 0 is supported")
        n = -n
    return 2 * (g - 1 + n)


def _require_positive_genus(end: CircleBundleEnd) -> None:
    if end.genus < 1:
        raise ValidationError("monopole asymptotes need genus >= 1")


@dataclass(frozen=True)
class IrreducibleAsymptote:
    end: CircleBundleEnd
    line: CoupledLine

    def __post_init__(self):
        _require_positive_genus(self.end)
        if self.line.deg >= 0:
            raise UnsupportedSign(f"irreducible limits need n < 0, got n = {self.line.deg}")
        if self.line.h_star > self.end.genus:
            raise CliffordViolation(
                f"h_{{1/2}}(L*) = {self.line.h_star} exceeds genus {self.end.genus}"
            )

    @property
    def n(self) -> int:
        return self.line.deg


@dataclass(frozen=True)
class ReducibleAsymptote:
    end: CircleBundleEnd
    kappa: int

    def __post_init__(self):
        _require_positive_genus(self.end)
        if is_degenerate_reducible(self.end.genus, self.end.degree):
            raise DegenerateReducible(
                f"g - 1 = {self.end.genus - 1} is divisible by degree {self.end.degree}"
            )


MonopoleAsymptote = Union[IrreducibleAsymptote, ReducibleAsymptote]


@dataclass(frozen=True)
class FourManifoldData:
    chi_hat: int
    sign_hat: int
    c2_integral: Fraction
    ends: tuple[MonopoleAsymptote, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "c2_integral", as_rational(self.c2_integral))
        object.__setattr__(self, "ends", tuple(self.ends))
        if not self.ends:
            raise ValidationError("a cylindrical-end manifold needs at least one end")

    @property
    def all_irreducible(self) -> bool:
        return all(isinstance(e, IrreducibleAsymptote) for e in self.ends)


# ---------------------------------------------------------------------------
# manifest
# ---------------------------------------------------------------------------


def read_int(obj: Mapping[str, Any], key: str, where: str) -> int:
    if key not in obj:
        raise ManifestError(f"{where}: missing field {key!r}")
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise ManifestError(f"{where}.{key}: expected an integer, got {v!r}")
    return v


def _rational(v: Any, where: str) -> Fraction:
    if isinstance(v, bool):
        raise ManifestError(f"{where}: expected a rational, got {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return parse_rational(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise ManifestError(f"{where}: {exc}") from None
    raise ManifestError(f"{where}: expected a rational string 'p/q', got {v!r}")


def parse_end(obj: Mapping[str, Any], where: str = "end") -> CircleBundleEnd:
    if not isinstance(obj, Mapping):
        raise ManifestError(f"{where}: expected an object")
    rho_raw = obj.get("rho", "symbolic")
    rho = None if rho_raw == "symbolic" else _rational(rho_raw, f"{where}.rho")
    return CircleBundleEnd(read_int(obj, "genus", where), read_int(obj, "degree", where), rho)


def parse_asymptote(obj: Mapping[str, Any], where: str = "end") -> MonopoleAsymptote:
    end = parse_end(obj, where)
    asy = obj.get("asymptote")
    if not isinstance(asy, Mapping):
        raise ManifestError(f"{where}: missing 'asymptote' object")
    kind = asy.get("type")
    if kind == "irreducible":
        n = read_int(asy, "n", f"{where}.asymptote")
        h_star = read_int(asy, "h_star", f"{where}.asymptote")
        return IrreducibleAsymptote(end, CoupledLine(n, h_star))
    if kind == "reducible":
        return ReducibleAsymptote(end, read_int(asy, "kappa", f"{where}.asymptote"))
    raise ManifestError(f"{where}.asymptote.type: expected 'irreducible' or 'reducible', got {kind!r}")


def parse_manifest(data: Mapping[str, Any]) -> FourManifoldData:
    """Build a validated :class:`FourManifoldData` from decoded manifest JSON.

    Validation errors from the records (Riemann-Roch, Clifford, trivial or
    degenerate ends) propagate unchanged so callers can report them by name.
    """
    if not isinstance(data, Mapping):
        raise ManifestError("manifest must be a JSON object")
    man = data.get("manifold", {})
    if not isinstance(man, Mapping):
        raise ManifestError("'manifold' must be an object")
    ends_raw = data.get("ends")
    if not isinstance(ends_raw, list) or not ends_raw:
        raise ManifestError("'ends' must be a nonempty list")
    ends = tuple(parse_asymptote(e, f"ends[{i}]") for i, e in enumerate(ends_raw))
    return FourManifoldData(
        chi_hat=read_int(man, "chi", "manifold") if "chi" in man else 0,
        sign_hat=read_int(man, "sign", "manifold") if "sign" in man else 0,
        c2_integral=_rational(man.get("c2", "0"), "manifold.c2"),
        ends=ends,
    )
