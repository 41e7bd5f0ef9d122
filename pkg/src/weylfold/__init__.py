"""Exact root data, the alcove stabilizer Omega, and fundamental domains for
(extended) affine Weyl groups and intermediate coweight lattices."""

from .rootsys import RootSystem, RootSystemError, RootSystemType, build, fundamental_group
from .weyl import AffineElement, affine_apply, fold_to_alcove, fold_to_chamber, reduce
from .omega import OmegaElement, omega_element, omega_group, sigma_permutation
from .lattices import LatticeSpec, enumerate_lattices, parse_lattice
from .domains import Polytope, alcove, fold_full, fold_omega, fundamental_polytope
from .torus import TorusPoint, canonicalize, torus_equal

__all__ = [
    "AffineElement",
    "LatticeSpec",
    "OmegaElement",
    "Polytope",
    "RootSystem",
    "RootSystemError",
    "RootSystemType",
    "TorusPoint",
    "affine_apply",
    "alcove",
    "build",
    "canonicalize",
    "enumerate_lattices",
    "fold_full",
    "fold_omega",
    "fold_to_alcove",
    "fold_to_chamber",
    "fundamental_group",
    "fundamental_polytope",
    "omega_element",
    "omega_group",
    "parse_lattice",
    "reduce",
    "sigma_permutation",
    "torus_equal",
]
