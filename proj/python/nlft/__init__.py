"""Two-dimensional nonlinear Fourier transform and defocusing DSII solvers."""

from ._nlft import (
    CflViolation,
    ExcessiveHoles,
    Field,
    FormatError,
    IncommensurateLattices,
    Lattice,
    LatticeMismatch,
    NyquistViolation,
    ScatteringData,
    SolverConfig,
    WindowViolation,
    besov_norm,
    dbar_inv,
    evolve_direct,
    forward,
    inverse,
    linear_propagate,
    load_scattering,
    maximal_function,
    ek_transform,
    position_lattice,
    potential,
    read_field,
    set_threads,
    sobolev_norm,
    spectral_lattice,
    write_field,
)

__all__ = [name for name in dir() if not name.startswith("_")]
