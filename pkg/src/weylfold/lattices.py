"""W-stable lattices between the coroot lattice and the coweight lattice.

Such a lattice ``Y`` corresponds to the subgroup ``Omega_Y = {omega_j : varpi_j^vee in Y}``
of Omega, and conversely ``Y = Q^vee + sum_{omega_j in H} Z varpi_j^vee``.
Lattices are stored by a Hermite normal form basis written in
fundamental-coweight coordinates (so the basis is an integer matrix and its
determinant is the index ``[P^vee : Y]``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import determinant, hermite_normal_form, hnf_solve, inverse
from .omega import OmegaElement, omega_element, omega_group
from .rootsys import Coweight, RootSystem


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class LatticeSpec:
    """An intermediate lattice ``Q^vee ⊆ Y ⊆ P^vee``.

    ``subgroup`` holds Omega indices (0 = identity, j = omega_j); ``basis`` is
    the HNF of ``Y`` with rows in fundamental-coweight coordinates.
    """

    type_name: str
    subgroup: frozenset
    basis: tuple

    @property
    def label(self) -> str:
        nontrivial = sorted(self.subgroup - {0})
        return "H=<" + ",".join(map(str, nontrivial)) + ">"

    @property
    def index(self) -> int:
        """``[P^vee : Y]``."""
        return abs(int(determinant(self.basis)))


@lru_cache(maxsize=None)
def _class_table(rs: RootSystem):
    """Fractional coroot coordinates of each minuscule coweight, keyed to its Omega index."""
    cinv = _cartan_inverse(rs)
    table = {}
    for j in [0] + sorted(rs.J):
        mu = rs.origin() if j == 0 else rs.fundamental_coweight(j)
        table[_frac_class(mu, cinv)] = j
    return table


@lru_cache(maxsize=None)
def _cartan_inverse(rs: RootSystem):
    return tuple(tuple(row) for row in inverse(rs.cartan))


def _frac_class(mu, cinv) -> tuple:
    # coroot coordinates x with sum_i x_i C[i] = mu, i.e. x = mu C^{-1}
    r = len(mu)
    x = [sum(Fraction(mu[i]) * cinv[i][k] for i in range(r)) for k in range(r)]
    return tuple(v - (v.numerator // v.denominator) for v in x)


def coroot_coordinates(rs: RootSystem, mu: Coweight) -> tuple:
    """Coordinates of ``mu`` in the simple-coroot basis."""
    cinv = _cartan_inverse(rs)
    r = rs.rank
    return tuple(sum(Fraction(mu[i]) * cinv[i][k] for i in range(r)) for k in range(r))


def pq_class(rs: RootSystem, mu: Coweight) -> int:
    """Omega index of the class of ``mu`` in ``P^vee / Q^vee``."""
    _require_integral(rs, mu)
    key = _frac_class(mu, _cartan_inverse(rs))
    table = _class_table(rs)
    if key not in table:
        raise AssertionError(f"{rs.name}: no minuscule representative for class of {mu}")
    return table[key]


def _require_integral(rs: RootSystem, mu):
    if len(mu) != rs.rank:
        raise LatticeError(f"rank mismatch: {len(mu)} vs {rs.rank}")
    if any(Fraction(x).denominator != 1 for x in mu):
        raise LatticeError(f"{tuple(map(str, mu))} is not in the coweight lattice")


def subgroup_to_lattice(rs: RootSystem, H) -> LatticeSpec:
    grp = omega_group(rs)
    H = frozenset(H) | {0}
    unknown = H - set(grp.indices)
    if unknown:
        raise LatticeError(f"{sorted(unknown)} are not Omega indices of {rs.name}")
    if not grp.is_subgroup(H):
        raise LatticeError(f"{sorted(H)} is not a subgroup of Omega({rs.name})")
    gens = [list(row) for row in rs.cartan]
    gens += [[int(k == j - 1) for k in range(rs.rank)] for j in sorted(H - {0})]
    basis = tuple(tuple(row) for row in hermite_normal_form(gens))
    spec = LatticeSpec(rs.name, H, basis)
    if spec.index * len(H) != grp.order:
        raise AssertionError(f"{rs.name}: index law fails for H = {sorted(H)}")
    return spec


def lattice_to_subgroup(rs: RootSystem, basis) -> frozenset:
    grp = omega_group(rs)
    classes = [pq_class(rs, row) for row in basis]
    return grp.generated(classes)


def lattice_from_basis(rs: RootSystem, rows) -> LatticeSpec:
    """Lattice spanned by ``rows`` (fundamental-coweight coordinates) together with ``Q^vee``."""
    for row in rows:
        _require_integral(rs, row)
    gens = [list(r) for r in rs.cartan] + [[int(x) for x in row] for row in rows]
    basis = tuple(tuple(r) for r in hermite_normal_form(gens))
    return LatticeSpec(rs.name, lattice_to_subgroup(rs, basis), basis)


def lattice_contains(rs: RootSystem, spec: LatticeSpec, mu: Coweight) -> bool:
    _require_integral(rs, mu)
    return hnf_solve(spec.basis, [int(x) for x in mu]) is not None


def adjoint(rs: RootSystem) -> LatticeSpec:
    return subgroup_to_lattice(rs, omega_group(rs).indices)


def simply_connected(rs: RootSystem) -> LatticeSpec:
    return subgroup_to_lattice(rs, {0})


def enumerate_lattices(rs: RootSystem) -> list[LatticeSpec]:
    return [subgroup_to_lattice(rs, H) for H in omega_group(rs).subgroups()]


def omega_subgroup(rs: RootSystem, spec: LatticeSpec) -> tuple[frozenset, frozenset]:
    """``(Omega_Y, J_Y)`` as index sets; ``J_Y = {j in J : varpi_j^vee in Y}``."""
    JY = frozenset(j for j in rs.J if lattice_contains(rs, spec, rs.fundamental_coweight(j)))
    return JY | {0}, JY


def coset_representatives(rs: RootSystem, spec: LatticeSpec) -> list[OmegaElement]:
    """One Omega element per coset of ``Omega_Y``: identity first, otherwise the least index."""
    grp = omega_group(rs)
    sub, _ = omega_subgroup(rs, spec)
    reps = []
    covered = set()
    for k in grp.indices:
        if k in covered:
            continue
        reps.append(omega_element(rs, k))
        covered |= {grp.mul(k, h) for h in sub}
    return reps


def parse_lattice(rs: RootSystem, text: str) -> LatticeSpec:
    """Parse ``adjoint``, ``sc`` or ``H=j1,j2,...`` (minuscule node generators)."""
    t = text.strip()
    if t == "adjoint":
        return adjoint(rs)
    if t in ("sc", "simply-connected"):
        return simply_connected(rs)
    m = re.fullmatch(r"H\s*=\s*<?\s*([\d,\s]*)>?", t)
    if not m:
        raise LatticeError(f"cannot parse lattice {text!r}; use adjoint, sc or H=j1,j2,...")
    gens = [int(x) for x in re.split(r"[,\s]+", m.group(1).strip()) if x]
    bad = [g for g in gens if g != 0 and g not in rs.J]
    if bad:
        raise LatticeError(f"unknown lattice generators {bad}; minuscule nodes of {rs.name} are {sorted(rs.J)}")
    return subgroup_to_lattice(rs, omega_group(rs).generated(gens))
