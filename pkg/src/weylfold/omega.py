"""The stabilizer Omega of the fundamental alcove in the extended affine Weyl group.

For a minuscule node ``i`` (mark 1), ``omega_i = t_{varpi_i^vee} w_0^i w_0`` where
``w_0^i`` is the longest element of the parabolic subgroup omitting ``i``.
Each ``omega_i`` permutes the alcove vertices ``{0} u {varpi_k^vee / n_k}`` and
hence the nodes ``0..r`` of the extended Dynkin diagram; that permutation is
``sigma_i``.  Permutations are tuples ``p`` with ``p[k]`` the image of ``k`` and
compose as ``(p q)(x) = p(q(x))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rootsys import Coweight, RootSystem, RootSystemError, fundamental_group
from .weyl import (
    AffineElement,
    affine_apply,
    affine_equal,
    compose,
    fold_to_chamber,
    identity,
    inverse_word,
    longest_element,
    reduce,
)

Permutation = tuple


class OmegaError(ValueError):
    pass


@dataclass(frozen=True)
class OmegaElement:
    index: int
    affine: AffineElement
    sigma: Permutation

    def __str__(self):
        return "1" if self.index == 0 else f"ω_{self.index}"


# --------------------------------------------------------------------------
# permutations


def perm_compose(p: Permutation, q: Permutation) -> Permutation:
    return tuple(p[q[x]] for x in range(len(q)))


def perm_inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def perm_identity(n: int) -> Permutation:
    return tuple(range(n))


def to_cycles(p: Permutation) -> str:
    """Cycle notation, each cycle starting at its least element; ``"()"`` for 1."""
    seen = set()
    out = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse e.g. ``"(0,1,6)(2,3,5)"`` into a permutation of ``range(n)``."""
    p = list(range(n))
    for body in re.findall(r"\(([^()]*)\)", text):
        items = [int(x) for x in re.split(r"[,\s]+", body.strip()) if x]
        for a, b in zip(items, items[1:] + items[:1]):
            p[a] = b
    if sorted(p) != list(range(n)):
        raise ValueError(f"not a permutation: {text!r}")
    return tuple(p)


# --------------------------------------------------------------------------
# Omega elements


def _vertex_index(rs: RootSystem, pt: Coweight) -> int | None:
    for k in range(rs.rank + 1):
        if tuple(pt) == rs.alcove_vertex(k):
            return k
    return None


def vertex_permutation(rs: RootSystem, a: AffineElement) -> Permutation:
    """Permutation of alcove vertices induced by ``a``; raises if ``a`` does not stabilize the alcove."""
    images = []
    for k in range(rs.rank + 1):
        m = _vertex_index(rs, affine_apply(rs, a, rs.alcove_vertex(k)))
        if m is None:
            raise OmegaError(f"{a} does not stabilize the fundamental alcove of {rs.name}")
        images.append(m)
    if sorted(images) != list(range(rs.rank + 1)):
        raise OmegaError(f"{a} does not permute the alcove vertices")
    return tuple(images)


def _check_minuscule(rs: RootSystem, i: int):
    if i not in rs.J:
        raise OmegaError(f"node {i!r} is not minuscule in {rs.name} (J = {sorted(rs.J)})")


@lru_cache(maxsize=None)
def omega_element(rs: RootSystem, i: int) -> OmegaElement:
    """``omega_i = t_{varpi_i^vee} w_0^i w_0``, verified to stabilize the alcove."""
    if i == 0:
        return OmegaElement(0, identity(rs), perm_identity(rs.rank + 1))
    _check_minuscule(rs, i)
    others = [k for k in range(1, rs.rank + 1) if k != i]
    w = reduce(rs, longest_element(rs, others) + longest_element(rs))
    a = AffineElement(rs.fundamental_coweight(i), w)
    sigma = vertex_permutation(rs, a)
    if sigma[0] != i:
        raise OmegaError(f"omega_{i} sends the origin to vertex {sigma[0]}")
    return OmegaElement(i, a, sigma)


def sigma_permutation(rs: RootSystem, i: int) -> Permutation:
    return omega_element(rs, i).sigma


def omega_elements(rs: RootSystem) -> list[OmegaElement]:
    return [omega_element(rs, k) for k in [0] + sorted(rs.J)]


@dataclass(frozen=True)
class OmegaGroup:
    elements: tuple
    table: dict  # (a, b) -> index of omega_a omega_b
    invariant_factors: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def indices(self) -> list[int]:
        return [e.index for e in self.elements]

    def mul(self, a: int, b: int) -> int:
        return self.table[a, b]

    def inv(self, a: int) -> int:
        return next(b for b in self.indices if self.table[a, b] == 0)

    def power(self, a: int, n: int) -> int:
        out = 0
        for _ in range(n):
            out = self.table[out, a]
        return out

    def element_order(self, a: int) -> int:
        n, x = 1, a
        while x != 0:
            x = self.table[x, a]
            n += 1
        return n

    def generated(self, gens) -> frozenset:
        """Subgroup generated by the indices in ``gens``."""
        sub = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.table[x, g]
                if y not in sub:
                    sub.add(y)
                    frontier.append(y)
        return frozenset(sub)

    def is_subgroup(self, subset) -> bool:
        s = set(subset)
        return 0 in s and all(self.table[a, b] in s for a in s for b in s)

    def subgroups(self) -> list[frozenset]:
        """All subgroups, ordered by size then by sorted indices."""
        idx = self.indices
        found = set()
        for mask in range(1 << len(idx)):
            gens = [idx[k] for k in range(len(idx)) if mask >> k & 1]
            found.add(self.generated(gens))
        return sorted(found, key=lambda s: (len(s), sorted(s)))


def _abelian_invariants(n: int, orders_dividing) -> tuple:
    """Invariant factors of a finite abelian group of order ``n``.

    ``orders_dividing(m)`` must return ``#{g : g^m = 1}``.
    """
    factors_by_prime = {}
    m, p = n, 2
    primes = []
    while m > 1:
        if m % p == 0:
            primes.append(p)
            while m % p == 0:
                m //= p
        p += 1
    for p in primes:
        counts = [1]
        k = 1
        while True:
            c = orders_dividing(p**k)
            counts.append(c)
            if c == counts[-2]:
                break
            k += 1
        # number of cyclic factors of order >= p^k
        ge = []
        for k in range(1, len(counts)):
            ratio = counts[k] // counts[k - 1]
            e = 0
            while ratio > 1:
                ratio //= p
                e += 1
            ge.append(e)
        exps = []
        for k in range(len(ge)):
            nxt = ge[k + 1] if k + 1 < len(ge) else 0
            exps += [k + 1] * (ge[k] - nxt)
        factors_by_prime[p] = sorted(exps, reverse=True)
    width = max((len(v) for v in factors_by_prime.values()), default=0)
    inv = []
    for slot in range(width):
        d = 1
        for p, exps in factors_by_prime.items():
            if slot < len(exps):
                d *= p ** exps[slot]
        inv.append(d)
    return tuple(sorted(inv))


@lru_cache(maxsize=None)
def omega_group(rs: RootSystem) -> OmegaGroup:
    elems = omega_elements(rs)
    by_origin = {e.affine.translation: e.index for e in elems}
    table = {}
    for a in elems:
        for b in elems:
            ab = compose(rs, a.affine, b.affine)
            c = by_origin.get(tuple(ab.translation))
            if c is None or not affine_equal(rs, ab, omega_element(rs, c).affine):
                raise OmegaError(f"{rs.name}: Omega is not closed under {a}·{b}")
            table[a.index, b.index] = c
    grp = OmegaGroup(tuple(elems), table, ())
    n = len(elems)

    def dividing(m):
        return sum(1 for e in grp.indices if grp.power(e, m) == 0)

    invs = _abelian_invariants(n, dividing)
    grp = OmegaGroup(tuple(elems), table, invs)
    if list(invs) != fundamental_group(rs):
        raise OmegaError(f"{rs.name}: Omega ≅ {invs} disagrees with P/Q")
    return grp


# --------------------------------------------------------------------------
# extended Dynkin diagram


@dataclass(frozen=True)
class ExtendedDiagram:
    """Nodes ``0..r``; ``matrix[i][j] = <beta_i^vee, beta_j>`` with ``beta_0 = -alpha_0``.

    A nonzero ``matrix[i][j]`` is an edge; the pair ``(matrix[i][j], matrix[j][i])``
    records bond multiplicity and arrow direction.
    """

    name: str
    matrix: tuple

    @property
    def nodes(self) -> range:
        return range(len(self.matrix))

    @property
    def edges(self) -> list[tuple[int, int, int, int]]:
        m = self.matrix
        return [
            (i, j, m[i][j], m[j][i])
            for i in self.nodes
            for j in self.nodes
            if i < j and m[i][j]
        ]

    def finite(self) -> "ExtendedDiagram":
        """Delete node 0; nodes are then relabelled ``0..r-1``."""
        return ExtendedDiagram(self.name, tuple(row[1:] for row in self.matrix[1:]))

    def neighbours(self, i: int) -> list[int]:
        return [j for j in self.nodes if j != i and self.matrix[i][j]]


def extended_diagram(rs: RootSystem) -> ExtendedDiagram:
    r = rs.rank
    top = rs.highest_root
    cor0 = rs.highest_coroot()
    m = [[0] * (r + 1) for _ in range(r + 1)]
    m[0][0] = 2
    for i in range(r):
        for j in range(r):
            m[i + 1][j + 1] = rs.cartan[i][j]
        # <alpha_i^vee, -alpha_0> and <(-alpha_0)^vee, alpha_i>
        m[i + 1][0] = -sum(n * c for n, c in zip(top, rs.cartan[i]))
        m[0][i + 1] = -int(cor0[i])
    return ExtendedDiagram(rs.name, tuple(tuple(row) for row in m))


def is_automorphism(d: ExtendedDiagram, p: Permutation) -> bool:
    m = d.matrix
    return all(m[p[i]][p[j]] == m[i][j] for i in d.nodes for j in d.nodes)


def diagram_automorphisms(d: ExtendedDiagram) -> list[Permutation]:
    """All label- and direction-preserving node permutations (backtracking search)."""
    m = d.matrix
    n = len(m)
    signature = [
        tuple(sorted((m[i][j], m[j][i]) for j in range(n) if j != i and m[i][j]))
        for i in range(n)
    ]
    found = []
    image = [None] * n
    used = [False] * n

    def extend(i):
        if i == n:
            found.append(tuple(image))
            return
        for c in range(n):
            if used[c] or signature[c] != signature[i]:
                continue
            if any(m[c][image[k]] != m[i][k] or m[image[k]][c] != m[k][i] for k in range(i)):
                continue
            image[i], used[c] = c, True
            extend(i + 1)
            used[c] = False
        image[i] = None

    extend(0)
    return found


@dataclass(frozen=True)
class SemidirectWitness:
    aut_extended: int
    omega: int
    aut_finite: int
    holds: bool

    def as_tuple(self):
        return (self.aut_extended, self.omega, self.aut_finite)


def semidirect_witness(rs: RootSystem) -> SemidirectWitness:
    """Check ``Aut(D^) = Omega ⋊ Aut(D)`` by counting and by intersecting."""
    d = extended_diagram(rs)
    aut_ext = diagram_automorphisms(d)
    aut_fin = diagram_automorphisms(d.finite())
    # Aut(D) inside Aut(D^) as the automorphisms fixing node 0
    fin_embedded = {(0,) + tuple(x + 1 for x in p) for p in aut_fin}
    sigmas = {e.sigma for e in omega_elements(rs)}
    ext_set = set(aut_ext)
    fixing_zero = {p for p in aut_ext if p[0] == 0}
    holds = (
        len(aut_ext) == len(sigmas) * len(aut_fin)
        and sigmas <= ext_set
        and fixing_zero == fin_embedded
        and sigmas & fin_embedded == {perm_identity(rs.rank + 1)}
        # Omega is normal in Aut(D^)
        and all(
            perm_compose(perm_compose(g, s), perm_inverse(g)) in sigmas
            for g in aut_ext
            for s in sigmas
        )
    )
    return SemidirectWitness(len(aut_ext), len(sigmas), len(aut_fin), holds)


# --------------------------------------------------------------------------
# minimal-length lifts of coweights


def minimal_length_lift(rs: RootSystem, lam: Coweight) -> AffineElement:
    """``u_lam = t_lam w_lam`` with ``w_lam`` minimal such that ``w_lam^{-1}(lam)`` is antidominant."""
    if any(Fraction(x).denominator != 1 for x in lam):
        raise OmegaError(f"{lam} is not in the coweight lattice")
    if len(lam) != rs.rank:
        raise RootSystemError(f"rank mismatch: {len(lam)} vs {rs.rank}")
    lam = tuple(Fraction(x) for x in lam)
    # fold -lam to dominant: v(lam) is then antidominant with v of minimal length
    _, v = fold_to_chamber(rs, tuple(-x for x in lam))
    return AffineElement(lam, reduce(rs, inverse_word(v)))
