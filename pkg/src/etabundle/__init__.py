"""Exact eta invariants, spectral flows and Seiberg-Witten virtual
dimensions for circle bundles over Riemann surfaces."""

__version__ = "0.1.0"

from .algebra import (
    RHO,
    PowerSeries,
    RadiusPolynomial,
    SignatureTriple,
    SymmetricForm,
    ahat_series,
    bc_density,
    ch_series,
    format_rational,
    parse_rational,
    signature,
    tanh_series,
)
from .errors import (
    AssemblyMismatch,
    CliffordViolation,
    DegenerateReducible,
    EtaBundleError,
    InvariantDomainError,
    ManifestError,
    RiemannRochViolation,
    TrivialBundle,
    ValidationError,
)
from .eta_coupled import eta_flat, xi_coupled_adiabatic, xi_coupled_LC, xi_flat
from .eta_spin import adiabatic_limit_eta, xi_spin_adiabatic, xi_spin_LC
from .geometry import (
    CircleBundleEnd,
    CoupledLine,
    FourManifoldData,
    IrreducibleAsymptote,
    ReducibleAsymptote,
    parse_manifest,
)
from .moduli import (
    DimensionReport,
    beta_irreducible,
    beta_reducible,
    dim_v_irreducible,
    dim_v_reducible,
    dimension_report,
    l_genus_integral,
    tunneling_dim,
    tunneling_from_reducible,
)
from .resonance import sf_plus, sf_plus_from_resonance
from .zeta import eta_arithmetic_progression, hurwitz_zeta


__all__ = [
    "adiabatic_limit_eta",
    "ahat_series",
    "AssemblyMismatch",
    "bc_density",
    "beta_irreducible",
    "beta_reducible",
    "ch_series",
    "CircleBundleEnd",
    "CliffordViolation",
    "CoupledLine",
    "DegenerateReducible",
    "dim_v_irreducible",
    "dim_v_reducible",
    "dimension_report",
    "DimensionReport",
    "eta_arithmetic_progression",
    "eta_flat",
    "EtaBundleError",
    "format_rational",
    "FourManifoldData",
    "hurwitz_zeta",
    "InvariantDomainError",
    "IrreducibleAsymptote",
    "l_genus_integral",
    "ManifestError",
    "parse_manifest",
    "parse_rational",
    "PowerSeries",
    "RadiusPolynomial",
    "ReducibleAsymptote",
    "RHO",
    "RiemannRochViolation",
    "sf_plus",
    "sf_plus_from_resonance",
    "signature",
    "SignatureTriple",
    "SymmetricForm",
    "tanh_series",
    "TrivialBundle",
    "tunneling_dim",
    "tunneling_from_reducible",
    "ValidationError",
    "xi_coupled_adiabatic",
    "xi_coupled_LC",
    "xi_flat",
    "xi_spin_adiabatic",
    "xi_spin_LC",
]
