"""Fundamental alcove, the polytopes F_Y', the complexes F_Y, and folding into them.

Half-spaces are linear functionals written as root-lattice vectors ``beta``
(simple-root coefficients), evaluated as ``<lam, beta>``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exact import fm_feasible, fmt, frac
from .lattices import LatticeSpec, coset_representatives, omega_subgroup
from .omega import OmegaElement, omega_element, perm_inverse
from .rootsys import Coweight, RootSystem, pairing
from .weyl import (
    AffineElement,
    affine_apply,
    apply_word_root,
    compose,
    fold_to_alcove,
    in_alcove,
    inverse,
)


class DomainError(ValueError):
    pass


class Location(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Halfspace:
    coeffs: tuple
    bound: Fraction
    sense: str = "le"  # "le": <lam, coeffs> <= bound; "ge": >= bound

    def value(self, lam) -> Fraction:
        return pairing(lam, self.coeffs)

    def le_form(self) -> tuple[tuple, Fraction]:
        if self.sense == "le":
            return tuple(Fraction(c) for c in self.coeffs), Fraction(self.bound)
        return tuple(-Fraction(c) for c in self.coeffs), -Fraction(self.bound)

    def slack(self, lam) -> Fraction:
        a, b = self.le_form()
        return b - pairing(lam, a)


@dataclass(frozen=True)
class Polytope:
    halfspaces: tuple
    vertices: tuple = ()

    @property
    def dim(self) -> int:
        return len(self.halfspaces[0].coeffs)

    def le_system(self) -> list[tuple[tuple, Fraction]]:
        return [h.le_form() for h in self.halfspaces]

    def vertex_set(self) -> frozenset:
        return frozenset(tuple(Fraction(x) for x in v) for v in self.vertices)


def _hs(coeffs, bound, sense="le") -> Halfspace:
    return Halfspace(tuple(int(c) for c in coeffs), Fraction(bound), sense)


def _alcove_halfspaces(rs: RootSystem) -> list[Halfspace]:
    out = [_hs(rs.simple_root(i), 0, "ge") for i in range(1, rs.rank + 1)]
    out.append(_hs(rs.highest_root, 1, "le"))
    return out


def alcove(rs: RootSystem) -> Polytope:
    return Polytope(tuple(_alcove_halfspaces(rs)), tuple(rs.alcove_vertices()))


def _check_JY(rs: RootSystem, JY) -> frozenset:
    JY = frozenset(rs.J if JY is None else JY)
    if not JY <= rs.J:
        raise DomainError(f"{sorted(JY - rs.J)} are not minuscule nodes of {rs.name}")
    return JY


def vertex_formula(rs: RootSystem, JY=None) -> list[Coweight]:
    """Barycentres of ``{0} u {varpi_j : j in S}`` for ``S ⊆ J_Y`` plus ``varpi_i/n_i`` for ``i ∉ J_Y``."""
    JY = sorted(_check_JY(rs, JY))
    out = []
    for k in range(len(JY) + 1):
        for sub in combinations(JY, k):
            pt = [Fraction(0)] * rs.rank
            for j in sub:
                pt[j - 1] = Fraction(1, k + 1)
            out.append(tuple(pt))
    for i in range(1, rs.rank + 1):
        if i not in JY:
            out.append(rs.alcove_vertex(i))
    return out


def fundamental_polytope(rs: RootSystem, JY=None) -> Polytope:
    """``F_Y' = {lam in A_0 : <lam, alpha_0 + alpha_j> <= 1 for j in J_Y}``; ``J_Y = J`` gives F_{P^vee}."""
    JY = _check_JY(rs, JY)
    hs = _alcove_halfspaces(rs)
    for j in sorted(JY):
        beta = list(rs.highest_root)
        beta[j - 1] += 1
        hs.append(_hs(beta, 1, "le"))
    return Polytope(tuple(hs), tuple(vertex_formula(rs, JY)))


def classify(p: Polytope, lam) -> Location:
    slacks = [h.slack(lam) for h in p.halfspaces]
    if any(s < 0 for s in slacks):
        return Location.OUTSIDE
    if any(s == 0 for s in slacks):
        return Location.BOUNDARY
    return Location.INTERIOR


def contains(p: Polytope, lam) -> bool:
    return classify(p, lam) is not Location.OUTSIDE


def image(rs: RootSystem, a: AffineElement, p: Polytope) -> Polytope:
    """``a(p)``: ``<x, beta> <= c`` becomes ``<y, w beta> <= c + <t, w beta>``."""
    hs = []
    for h in p.halfspaces:
        wb = apply_word_root(rs, a.weyl, h.coeffs)
        hs.append(Halfspace(wb, h.bound + pairing(a.translation, wb), h.sense))
    verts = tuple(affine_apply(rs, a, v) for v in p.vertices)
    return Polytope(tuple(hs), verts)


def translate(p: Polytope, mu) -> Polytope:
    hs = tuple(Halfspace(h.coeffs, h.bound + pairing(mu, h.coeffs), h.sense) for h in p.halfspaces)
    verts = tuple(tuple(Fraction(x) + y for x, y in zip(v, mu)) for v in p.vertices)
    return Polytope(hs, verts)


def intersection_empty(p: Polytope, q: Polytope) -> bool:
    """Exact emptiness of ``p ∩ q`` (Fourier-Motzkin)."""
    if p.vertices and q.vertices:
        # disjoint bounding boxes settle it without elimination
        for k in range(p.dim):
            if max(v[k] for v in p.vertices) < min(v[k] for v in q.vertices):
                return True
            if max(v[k] for v in q.vertices) < min(v[k] for v in p.vertices):
                return True
    return not fm_feasible(p.le_system() + q.le_system())


# --------------------------------------------------------------------------
# folding


def _require_alcove(rs: RootSystem, lam):
    if len(lam) != rs.rank:
        raise DomainError(f"rank mismatch: {len(lam)} vs {rs.rank}")
    if not in_alcove(rs, lam):
        raise DomainError("point is not in the fundamental alcove")


def fold_omega(rs: RootSystem, JY, lam: Coweight) -> tuple[Coweight, OmegaElement]:
    """Move ``lam ∈ A_0`` into ``F_Y'`` with one element of ``Omega_Y``.

    Returns ``(pt, omega)`` with ``omega(pt) == lam``.  ``omega`` is ``omega_i``
    for ``i ∈ J_Y`` maximizing ``<lam, alpha_i>`` (least such ``i``), or the
    identity when ``lam`` already lies in ``F_Y'``.
    """
    JY = _check_JY(rs, JY)
    lam = tuple(Fraction(x) for x in lam)
    _require_alcove(rs, lam)
    if not JY:
        return lam, omega_element(rs, 0)
    best = max(lam[j - 1] for j in JY)
    i = min(j for j in JY if lam[j - 1] == best)
    if pairing(lam, rs.highest_root) + lam[i - 1] <= 1:
        return lam, omega_element(rs, 0)
    om = omega_element(rs, i)
    pt = affine_apply(rs, inverse(rs, om.affine), lam)
    return pt, om


def _on_facet(rs: RootSystem, j: int, lam) -> bool:
    return pairing(lam, rs.highest_root) + lam[j - 1] == 1


def explicit_action(rs: RootSystem, j: int, lam: Coweight) -> Coweight:
    """``omega_j^{-1}(lam)`` by permuting coordinates along ``sigma_j``.

    Coordinate ``i`` of the result is ``lam[sigma_j(i)]``, except that the node
    sent to 0 receives ``lam_j``.  Valid on the facet ``<lam, alpha_j + alpha_0> = 1``.
    """
    om = omega_element(rs, j)
    lam = tuple(Fraction(x) for x in lam)
    if not _on_facet(rs, j, lam):
        raise DomainError(f"point is not on the facet <λ, α_0 + α_{j}> = 1")
    sigma = om.sigma
    out = []
    for i in range(1, rs.rank + 1):
        k = sigma[i]
        out.append(lam[j - 1] if k == 0 else lam[k - 1])
    return tuple(out)


def fold_full(rs: RootSystem, spec: LatticeSpec, lam: Coweight) -> tuple[Coweight, AffineElement]:
    """Fold any ``lam`` into ``F_Y'``; the witness lies in ``W_Y = t(Y) ⋊ W``."""
    if len(lam) != rs.rank:
        raise DomainError(f"rank mismatch: {len(lam)} vs {rs.rank}")
    _, JY = omega_subgroup(rs, spec)
    pt, a = fold_to_alcove(rs, lam)
    pt2, om = fold_omega(rs, JY, pt)
    if om.index == 0:
        return pt2, a
    return pt2, compose(rs, inverse(rs, om.affine), a)


def complex_F_Y(rs: RootSystem, spec: LatticeSpec) -> list[Polytope]:
    """The cells ``omega F_{P^vee}`` over the chosen coset representatives of ``Omega_Y``."""
    F = fundamental_polytope(rs)
    return [image(rs, om.affine, F) for om in coset_representatives(rs, spec)]


def preimage_of_zero(rs: RootSystem, j: int) -> int:
    """The node ``k`` with ``omega_j(varpi_k / n_k) = 0``."""
    return perm_inverse(omega_element(rs, j).sigma)[0]


# --------------------------------------------------------------------------
# JSON export


def polytope_to_json(rs: RootSystem, p: Polytope, lattice: str) -> dict:
    return {
        "type": rs.name,
        "lattice": lattice,
        "halfspaces": [
            {"coeffs": [fmt(c) for c in h.coeffs], "bound": fmt(h.bound), "sense": h.sense}
            for h in p.halfspaces
        ],
        "vertices": [[fmt(x) for x in v] for v in p.vertices],
    }


def polytope_from_json(data) -> Polytope:
    if isinstance(data, str):
        data = json.loads(data)
    hs = []
    for h in data["halfspaces"]:
        if h["sense"] not in ("le", "ge"):
            raise DomainError(f"bad sense {h['sense']!r}")
        hs.append(Halfspace(tuple(frac(c) for c in h["coeffs"]), frac(h["bound"]), h["sense"]))
    verts = tuple(tuple(frac(x) for x in v) for v in data["vertices"])
    return Polytope(tuple(hs), verts)


POLYTOPE_SCHEMA = {
    "type": "object",
    "required": ["type", "lattice", "halfspaces", "vertices"],
    "properties": {
        "type": {"type": "string", "pattern": "^[A-G][0-9]+$"},
        "lattice": {"type": "string"},
        "halfspaces": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["coeffs", "bound", "sense"],
                "properties": {
                    "coeffs": {"type": "array", "items": {"$ref": "#/$defs/rational"}},
                    "bound": {"$ref": "#/$defs/rational"},
                    "sense": {"enum": ["le", "ge"]},
                },
            },
        },
        "vertices": {
            "type": "array",
            "items": {"type": "array", "items": {"$ref": "#/$defs/rational"}},
        },
    },
    "$defs": {"rational": {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"}},
}
