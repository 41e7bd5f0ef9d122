"""Canonical representatives of W-orbits on the torus ``V*/Y``.

A point of the torus is a ``W_Y``-orbit in ``V*`` with ``W_Y = t(Y) ⋊ W``.
Folding into the alcove lands in the orbit's intersection with ``A_0``, which
is exactly one ``Omega_Y``-orbit; its lexicographically least member is the
canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattices import LatticeSpec, omega_subgroup
from .omega import omega_element
from .rootsys import Coweight, RootSystem, RootSystemError
from .weyl import AffineElement, affine_apply, compose, fold_to_alcove


@dataclass(frozen=True)
class TorusPoint:
    """``rep`` is the canonical representative; ``witness(lam) == rep`` for the input ``lam``."""

    rep: Coweight
    lattice: LatticeSpec
    witness: AffineElement


def canonicalize(rs: RootSystem, spec: LatticeSpec, lam: Coweight) -> TorusPoint:
    if len(lam) != rs.rank:
        raise RootSystemError(f"rank mismatch: {len(lam)} vs {rs.rank}")
    lam = tuple(Fraction(x) for x in lam)
    pt, a = fold_to_alcove(rs, lam)
    sub, _ = omega_subgroup(rs, spec)
    best, best_om = None, None
    for k in sorted(sub):
        om = omega_element(rs, k)
        img = affine_apply(rs, om.affine, pt)
        if best is None or img < best:
            best, best_om = img, om
    witness = a if best_om.index == 0 else compose(rs, best_om.affine, a)
    return TorusPoint(best, spec, witness)


def torus_equal(rs: RootSystem, spec: LatticeSpec, lam: Coweight, mu: Coweight) -> bool:
    return canonicalize(rs, spec, lam).rep == canonicalize(rs, spec, mu).rep
