"""Ro-vibrational levels of the rotating Morse oscillator.

Analytic route: Pekeris approximation of the centrifugal barrier followed by
the Nikiforov-Uvarov method.  Numerical route: Numerov shooting on the exact
radial equation.
"""
from .io import MoleculeFile, fixture_path, load_molecule
from .nu import NuBranch, NuProblem, Poly2
from .oracle import RadialGrid, ShootingResult, default_grid, numerov_integrate, solve_level
from .potential import (
    CO,
    LIH,
    MoleculeParams,
    PekerisCoefficients,
    effective_potential,
    morse_potential,
    pekeris_coefficients,
    pekeris_rotational_potential,
)
from .spectrum import (
    DimensionlessParams,
    EnergyLevel,
    RadialWavefunction,
    UnboundStateError,
    dimensionless_params,
    energy_level,
    laguerre,
    max_bound_n,
    radial_wavefunction,
)
from .units import CONSTANTS, cm1_to_ev, rotational_unit

__version__ = "0.1.0"
