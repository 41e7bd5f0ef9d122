"""Brute-force verifiers, independent of the main folding code.

The oracles work with explicit integer matrices and exhaustive searches, never
with reduced words, folding, or the Hermite normal form.  They are exponential
and capped; use them on small ranks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import ceil, floor

from .exact import fm_feasible, solve
from .rootsys import Coweight, RootSystem

Matrix = tuple  # tuple of row tuples, acting on column vectors of coweight coordinates

DEFAULT_CAP = 51840


class OracleError(RuntimeError):
    pass


@dataclass(frozen=True)
class WeylEnumeration:
    """All elements of W as integer matrices on fundamental-coweight coordinates.

    ``lengths[k]`` is the word length of ``elements[k]`` (its BFS depth).
    """

    elements: tuple
    lengths: tuple

    @property
    def order(self) -> int:
        return len(self.elements)


def _reflect_left(cartan, i0: int, m: Matrix) -> Matrix:
    """``s_i @ m``: row ``k`` of the product is ``m[k] - C[i][k] * m[i]``."""
    pivot = m[i0]
    row_c = cartan[i0]
    return tuple(
        row if not row_c[k] else tuple(x - row_c[k] * y for x, y in zip(row, pivot))
        for k, row in enumerate(m)
    )


def mat_apply(m: Matrix, v) -> tuple:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in m)


def enumerate_weyl(rs: RootSystem, cap: int = DEFAULT_CAP) -> WeylEnumeration:
    """Closure of the simple reflections by breadth-first search."""
    ident = tuple(tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank))
    seen = {ident: 0}
    order = [ident]
    queue = deque([ident])
    while queue:
        m = queue.popleft()
        d = seen[m]
        for i0 in range(rs.rank):
            n = _reflect_left(rs.cartan, i0, m)
            if n not in seen:
                if len(seen) >= cap:
                    raise OracleError(f"{rs.name}: |W| exceeds cap {cap}")
                seen[n] = d + 1
                order.append(n)
                queue.append(n)
    return WeylEnumeration(tuple(order), tuple(seen[m] for m in order))


# --------------------------------------------------------------------------
# vertex enumeration


def vertex_enumeration(p) -> set:
    """Extreme points of ``{x : a.x <= b}`` by intersecting every r-subset of facets.

    ``p`` is a :class:`~weylfold.domains.Polytope` (only its H-representation
    is read) or a list of ``(a, b)`` pairs.  Raises :class:`OracleError` if the
    region is unbounded (a recession direction exists).
    """
    halfspaces = p.le_system() if hasattr(p, "le_system") else p
    hs = [(tuple(Fraction(x) for x in a), Fraction(b)) for a, b in halfspaces]
    if not hs:
        raise OracleError("no constraints")
    r = len(hs[0][0])
    for k in range(r):
        for sign in (1, -1):
            # is there d with A d <= 0 and sign * d_k >= 1 ?
            unit = tuple(Fraction(-sign if j == k else 0) for j in range(r))
            system = [(a, Fraction(0)) for a, _ in hs] + [(unit, Fraction(-1))]
            if fm_feasible(system):
                raise OracleError("polytope is unbounded")
    verts = set()
    for sub in combinations(hs, r):
        x = solve([a for a, _ in sub], [b for _, b in sub])
        if x is None:
            continue
        if all(sum(ai * xi for ai, xi in zip(a, x)) <= b for a, b in hs):
            verts.add(x)
    return verts


# --------------------------------------------------------------------------
# canonical forms by exhaustive search


def _in_alcove(rs: RootSystem, x) -> bool:
    return all(v >= 0 for v in x) and sum(n * v for n, v in zip(rs.marks, x)) <= 1


def lattice_member(rs: RootSystem, subgroup, y) -> bool:
    """``y ∈ Q^vee + sum_{j in subgroup} Z varpi_j^vee`` by direct rational solves."""
    cartan_t = [[rs.cartan[i][k] for i in range(rs.rank)] for k in range(rs.rank)]
    for j in subgroup:
        shifted = [Fraction(v) - int(j != 0 and k == j - 1) for k, v in enumerate(y)]
        c = solve(cartan_t, shifted)
        if all(v.denominator == 1 for v in c):
            return True
    return False


def brute_canonicalize(rs: RootSystem, spec, lam: Coweight, box_radius: int = 40,
                       weyl: WeylEnumeration | None = None) -> Coweight:
    """Lexicographic minimum of ``{w(lam) + y in A_0 : w in W, y in Y, |y_i| <= box_radius}``."""
    weyl = weyl or enumerate_weyl(rs)
    lam = tuple(Fraction(v) for v in lam)
    best = None
    for m in weyl.elements:
        x = mat_apply(m, lam)
        ranges = []
        for v in x:
            lo = max(ceil(-v), -box_radius)
            hi = min(floor(1 - v), box_radius)
            ranges.append(range(lo, hi + 1))
        for y in product(*ranges):
            pt = tuple(a + b for a, b in zip(x, y))
            if not _in_alcove(rs, pt):
                continue
            if best is not None and pt >= best:
                continue
            if lattice_member(rs, spec.subgroup, y):
                best = pt
    if best is None:
        raise OracleError("no orbit point found in the box; increase box_radius")
    return best


# --------------------------------------------------------------------------
# seeded random points


class SplitMix64:
    """SplitMix64 generator, reproducible in any language.

    ``state += 0x9E3779B97F4A7C15``; then with ``z = state``:
    ``z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9``,
    ``z = (z ^ (z >> 27)) * 0x94D049BB133111EB``,
    output ``z ^ (z >> 31)``, all modulo ``2**64``.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """``next() mod n`` (the bias is below ``2**-50`` for the sizes used here)."""
        return self.next() % n


def random_rational(gen: SplitMix64, denom_bound: int) -> Fraction:
    """Denominator ``q = 1 + below(denom_bound)``, numerator ``below(6q+1) - 3q``."""
    q = 1 + gen.below(denom_bound)
    return Fraction(gen.below(6 * q + 1) - 3 * q, q)


def random_rational_point(rs: RootSystem, seed: int, denom_bound: int = 12) -> Coweight:
    if denom_bound < 1:
        raise ValueError("denom_bound must be >= 1")
    gen = SplitMix64(seed)
    return tuple(random_rational(gen, denom_bound) for _ in range(rs.rank))


def random_points(rs: RootSystem, seed: int, count: int, denom_bound: int = 12) -> list:
    gen = SplitMix64(seed)
    return [tuple(random_rational(gen, denom_bound) for _ in range(rs.rank)) for _ in range(count)]


def random_alcove_point(rs: RootSystem, gen: SplitMix64, denom: int = 60) -> Coweight:
    """A point of ``A_0`` as a random convex combination of its vertices."""
    weights = [gen.below(denom) + 1 for _ in range(rs.rank + 1)]
    total = sum(weights)
    pt = [Fraction(0)] * rs.rank
    for k in range(1, rs.rank + 1):
        pt[k - 1] = Fraction(weights[k], total * rs.marks[k - 1])
    return tuple(pt)
