"""Irreducible reduced root systems with exact integer data.

Simple roots are numbered as in Bourbaki.  Roots are integer tuples in the
simple-root basis; points of the coweight space are tuples of ``Fraction``
in the fundamental-coweight basis, so that coordinate ``i`` of ``lam`` is
the pairing ``<lam, alpha_i>``.

The Cartan matrix is stored with ``cartan[i][j] = <alpha_i^vee, alpha_j>``
(0-based indices internally; the public node labels are 1-based).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterator

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

Root = tuple  # tuple[int, ...], simple-root coordinates
Coweight = tuple  # tuple[Fraction, ...], fundamental-coweight coordinates

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2}


class RootSystemError(ValueError):
    """Invalid family/rank combination or out-of-range node index."""


@dataclass(frozen=True)
class RootSystemType:
    family: str
    rank: int

    def __post_init__(self):
        fam, r = self.family, self.rank
        if fam not in _MIN_RANK:
            raise RootSystemError(f"unknown family {fam!r}; expected one of A-G")
        if not isinstance(r, int) or r < _MIN_RANK[fam]:
            raise RootSystemError(f"{fam}{r}: rank must be >= {_MIN_RANK[fam]}")
        if fam == "E" and r not in (6, 7, 8):
            raise RootSystemError(f"E{r}: rank must be 6, 7 or 8")
        if fam == "F" and r != 4:
            raise RootSystemError(f"F{r}: only F4 exists")
        if fam == "G" and r != 2:
            raise RootSystemError(f"G{r}: only G2 exists")

    @classmethod
    def parse(cls, name: str) -> "RootSystemType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", name)
        if not m:
            raise RootSystemError(f"cannot parse root system type {name!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _bonds(fam: str, r: int) -> list[tuple[int, int, int, int]]:
    """Edges ``(i, j, C[i][j], C[j][i])`` with 0-based nodes."""
    chain = [(i, i + 1, -1, -1) for i in range(r - 1)]
    if fam == "A":
        return chain
    if fam == "B" and r > 2:
        # alpha_r short
        return chain[:-1] + [(r - 2, r - 1, -1, -2)]
    if fam == "C" or (fam == "B" and r == 2):
        # alpha_r long; B2 shares the C2 labelling (alpha_0 = 2 alpha_1 + alpha_2)
        return chain[:-1] + [(r - 2, r - 1, -2, -1)]
    if fam == "D":
        return chain[:-1] + [(r - 3, r - 1, -1, -1)]
    if fam == "E":
        e = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, r - 1)]
        return [(i, j, -1, -1) for i, j in e]
    if fam == "F":
        return [(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)]
    if fam == "G":
        return [(0, 1, -3, -1)]
    raise AssertionError(fam)


def cartan_matrix(t: RootSystemType) -> tuple[tuple[int, ...], ...]:
    r = t.rank
    c = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
    for i, j, cij, cji in _bonds(t.family, r):
        c[i][j], c[j][i] = cij, cji
    return tuple(tuple(row) for row in c)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable data of an irreducible root system.

    Build instances with :func:`build`.
    """

    type: RootSystemType
    cartan: tuple
    positive_roots: tuple
    highest_root: Root
    marks: tuple
    J: frozenset
    dynkin_edges: tuple = field(repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def name(self) -> str:
        return str(self.type)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.type == other.type

    def __hash__(self):
        return hash(self.type)

    @cached_property
    def root_set(self) -> frozenset:
        return frozenset(self.positive_roots) | frozenset(
            tuple(-x for x in b) for b in self.positive_roots
        )

    @cached_property
    def norms(self) -> tuple:
        """Squared lengths of the simple roots, shortest normalized to 1."""
        r = self.rank
        d = [None] * r
        d[0] = Fraction(1)
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(r):
                if j != i and d[j] is None and self.cartan[i][j] != 0:
                    # C[i][j]/C[j][i] = |alpha_j|^2 / |alpha_i|^2
                    d[j] = d[i] * Fraction(self.cartan[i][j], self.cartan[j][i])
                    stack.append(j)
        m = min(d)
        return tuple(x / m for x in d)

    @cached_property
    def gram(self) -> tuple:
        """W-invariant form on the root span: ``gram[i][j] = (alpha_i, alpha_j)``."""
        d = self.norms
        return tuple(
            tuple(d[i] * self.cartan[i][j] / 2 for j in range(self.rank))
            for i in range(self.rank)
        )

    def fundamental_coweight(self, i: int) -> Coweight:
        _check_node(self, i)
        return tuple(Fraction(int(k == i - 1)) for k in range(self.rank))

    def origin(self) -> Coweight:
        return tuple(Fraction(0) for _ in range(self.rank))

    def simple_root(self, i: int) -> Root:
        _check_node(self, i)
        return tuple(int(k == i - 1) for k in range(self.rank))

    def height(self, beta: Root) -> int:
        return sum(beta)

    def is_root(self, beta: Root) -> bool:
        return tuple(beta) in self.root_set

    def coroot_of(self, beta: Root) -> Coweight:
        """The coroot ``beta^vee`` of any root, in fundamental-coweight coordinates."""
        beta = tuple(beta)
        if beta not in self.root_set:
            raise RootSystemError(f"{beta} is not a root of {self.name}")
        g = self.gram
        r = self.rank
        bb = sum(beta[i] * beta[j] * g[i][j] for i in range(r) for j in range(r))
        # beta^vee = sum_i b_i (|alpha_i|^2 / |beta|^2) alpha_i^vee
        c = [beta[i] * self.norms[i] / bb for i in range(r)]
        return tuple(
            sum((c[i] * self.cartan[i][k] for i in range(r)), Fraction(0))
            for k in range(r)
        )

    def highest_coroot(self) -> Coweight:
        return self.coroot_of(self.highest_root)

    def alcove_vertex(self, k: int) -> Coweight:
        """Vertex ``k`` of the fundamental alcove: 0 for ``k == 0``, else ``varpi_k/n_k``."""
        if k == 0:
            return self.origin()
        _check_node(self, k)
        n = self.marks[k - 1]
        return tuple(Fraction(int(j == k - 1), n) for j in range(self.rank))

    def alcove_vertices(self) -> list:
        return [self.alcove_vertex(k) for k in range(self.rank + 1)]


def _check_node(rs: RootSystem, i: int):
    if not isinstance(i, int) or not 1 <= i <= rs.rank:
        raise RootSystemError(f"node index {i!r} out of range 1..{rs.rank}")


def _positive_roots(cartan) -> list[Root]:
    """Breadth-first root-string closure from the simple roots."""
    r = len(cartan)
    simple = [tuple(int(k == i) for k in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(r):
                # <beta, alpha_i^vee> = sum_j b_j C[i][j]
                pair = sum(beta[j] * cartan[i][j] for j in range(r))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
                        ordered.append(up)
        layer = nxt
    ordered.sort(key=lambda b: (sum(b), tuple(-x for x in b)))
    return ordered


_CACHE: dict = {}


def build(t) -> RootSystem:
    """Construct the root system of type ``t`` (a :class:`RootSystemType` or ``"A3"``)."""
    if isinstance(t, str):
        t = RootSystemType.parse(t)
    if t.family == "C" and t.rank == 2:
        t = RootSystemType("B", 2)
    if t in _CACHE:
        return _CACHE[t]
    cartan = cartan_matrix(t)
    pos = _positive_roots(cartan)
    top = max(pos, key=sum)
    if not all(all(a <= b for a, b in zip(beta, top)) for beta in pos):
        raise AssertionError(f"{t}: no unique highest root")
    marks = tuple(top)
    J = frozenset(i + 1 for i, n in enumerate(marks) if n == 1)
    edges = tuple(
        (i + 1, j + 1, cartan[i][j], cartan[j][i])
        for i in range(t.rank)
        for j in range(i + 1, t.rank)
        if cartan[i][j]
    )
    rs = RootSystem(t, cartan, tuple(pos), top, marks, J, edges)
    _CACHE[t] = rs
    return rs


def fundamental_group(rs: RootSystem) -> list[int]:
    """Invariant factors of ``P^vee / Q^vee`` (trivial factors omitted)."""
    factors = invariant_factors(Matrix(rs.cartan), domain=ZZ)
    return [abs(int(f)) for f in factors if abs(int(f)) != 1]


def fundamental_group_label(rs: RootSystem) -> str:
    fs = fundamental_group(rs)
    if not fs:
        return "1"
    return " ⊕ ".join(f"Z/{d}Z" for d in fs)


def pairing(lam: Coweight, beta: Root) -> Fraction:
    """``<lam, beta>`` for a coweight and a root-lattice vector."""
    if len(lam) != len(beta):
        raise RootSystemError(f"rank mismatch: {len(lam)} vs {len(beta)}")
    return sum((Fraction(b) * x for x, b in zip(lam, beta)), Fraction(0))


def coroot(rs: RootSystem, i: int) -> Coweight:
    """Simple coroot ``alpha_i^vee``: row ``i`` of the Cartan matrix."""
    _check_node(rs, i)
    return tuple(Fraction(x) for x in rs.cartan[i - 1])


def all_types(max_rank: int = 8) -> Iterator[RootSystemType]:
    """Every irreducible type of rank <= ``max_rank``, B2 counted once."""
    for r in range(1, max_rank + 1):
        yield RootSystemType("A", r)
    for r in range(2, max_rank + 1):
        yield RootSystemType("B", r)
    for r in range(3, max_rank + 1):
        yield RootSystemType("C", r)
    for r in range(4, max_rank + 1):
        yield RootSystemType("D", r)
    for r in (6, 7, 8):
        if r <= max_rank:
            yield RootSystemType("E", r)
    if max_rank >= 4:
        yield RootSystemType("F", 4)
    if max_rank >= 2:
        yield RootSystemType("G", 2)
