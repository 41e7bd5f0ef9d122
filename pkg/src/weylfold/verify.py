"""Property checks comparing the library against the brute-force oracles.

Each check returns a :class:`CheckResult`; :func:`run_suite` runs every check
that is feasible for a type and is what the ``verify`` command prints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import ceil, floor, prod

from .domains import (
    Location,
    classify,
    complex_F_Y,
    explicit_action,
    fold_full,
    fundamental_polytope,
    intersection_empty,
    translate,
    vertex_formula,
)
from .exact import fmt_vec
from .lattices import enumerate_lattices, omega_subgroup
from .omega import minimal_length_lift, omega_element, semidirect_witness
from .oracle import (
    DEFAULT_CAP,
    SplitMix64,
    brute_canonicalize,
    enumerate_weyl,
    lattice_member,
    mat_apply,
    random_alcove_point,
    random_rational,
    vertex_enumeration,
)
from .rootsys import RootSystem, pairing
from .torus import canonicalize
from .weyl import affine_apply


@dataclass
class CheckResult:
    name: str
    passed: bool | None  # None: skipped
    checked: int = 0
    detail: str = ""
    counterexamples: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return {True: "PASS", False: "FAIL", None: "SKIP"}[self.passed]

    def line(self) -> str:
        s = f"{self.status} {self.name}: {self.checked} checked"
        if self.detail:
            s += f" ({self.detail})"
        return s


def _result(name, failures, checked, detail=""):
    return CheckResult(name, not failures, checked, detail, failures[:5])


def weyl_degrees(rs: RootSystem) -> list[int]:
    """Degrees of the basic invariants; ``|W|`` is their product."""
    fam, r = rs.type.family, rs.rank
    if fam == "A":
        return list(range(2, r + 2))
    if fam in "BC":
        return [2 * k for k in range(1, r + 1)]
    if fam == "D":
        return [2 * k for k in range(1, r)] + [r]
    return {
        "E6": [2, 5, 6, 8, 9, 12],
        "E7": [2, 6, 8, 10, 12, 14, 18],
        "E8": [2, 8, 12, 14, 18, 20, 24, 30],
        "F4": [2, 6, 8, 12],
        "G2": [2, 6],
    }[rs.name]


def check_weyl_order(rs: RootSystem, cap: int = DEFAULT_CAP) -> CheckResult:
    expected = prod(weyl_degrees(rs))
    if expected > cap:
        return CheckResult("weyl-order", None, 0, f"|W| = {expected} exceeds cap")
    got = enumerate_weyl(rs, cap).order
    fails = [] if got == expected else [f"enumerated {got}, expected {expected}"]
    return _result("weyl-order", fails, 1, f"|W| = {got}")


def check_semidirect(rs: RootSystem) -> CheckResult:
    w = semidirect_witness(rs)
    fails = [] if w.holds else [str(w.as_tuple())]
    return _result("semidirect", fails, 1, "|Aut(D^)|, |Omega|, |Aut(D)| = %d, %d, %d" % w.as_tuple())


def check_vertex_formula(rs: RootSystem) -> CheckResult:
    fails, n = [], 0
    J = sorted(rs.J)
    for k in range(len(J) + 1):
        for JY in combinations(J, k):
            p = fundamental_polytope(rs, JY)
            formula = set(vertex_formula(rs, JY))
            oracle = vertex_enumeration(p)
            n += 1
            if formula != oracle or len(formula) != len(p.vertices):
                fails.append(f"J_Y={list(JY)}: formula-only {sorted(formula - oracle)}, "
                             f"oracle-only {sorted(oracle - formula)}")
    return _result("vertex-formula", fails, n)


def check_tiling(rs: RootSystem, points: int = 500, seed: int = 0, denom_bound: int = 12) -> CheckResult:
    fails, n = [], 0
    for spec in enumerate_lattices(rs):
        _, JY = omega_subgroup(rs, spec)
        F = fundamental_polytope(rs, JY)
        gen = SplitMix64(seed)
        for _ in range(points):
            lam = tuple(random_rational(gen, denom_bound) for _ in range(rs.rank))
            pt, a = fold_full(rs, spec, lam)
            n += 1
            ok = (
                classify(F, pt) is not Location.OUTSIDE
                and affine_apply(rs, a, lam) == pt
                and lattice_member(rs, spec.subgroup, a.translation)
            )
            if not ok:
                fails.append(f"{spec.label} lam=({fmt_vec(lam)}) -> ({fmt_vec(pt)}) via {a}")
    return _result("tiling", fails, n)


def _interior_samples(rs: RootSystem, count: int, seed: int) -> list:
    F = fundamental_polytope(rs)
    gen = SplitMix64(seed)
    out = []
    for _ in range(50 * count):
        if len(out) == count:
            break
        lam = random_alcove_point(rs, gen)
        if classify(F, lam) is Location.INTERIOR:
            out.append(lam)
    return out


def check_interior_uniqueness(rs: RootSystem, samples: int = 50, max_length: int = 6,
                              bound: int = 2, seed: int = 0) -> CheckResult:
    """No ``t_mu w`` other than 1 (``l(w) <= max_length``, ``mu ∈ P^vee``, ``|mu_i| <= bound``) keeps an interior point in F."""
    F = fundamental_polytope(rs)
    weyl = enumerate_weyl(rs)
    ball = [(m, l) for m, l in zip(weyl.elements, weyl.lengths) if l <= max_length]
    fails, n = [], 0
    for lam in _interior_samples(rs, samples, seed):
        for m, l in ball:
            x = mat_apply(m, lam)
            # only translations putting every coordinate into [0, 1] can land in F
            ranges = [range(max(ceil(-v), -bound), min(floor(1 - v), bound) + 1) for v in x]
            for mu in product(*ranges):
                n += 1
                if l == 0 and not any(mu):
                    continue
                y = tuple(a + b for a, b in zip(x, mu))
                if classify(F, y) is not Location.OUTSIDE:
                    fails.append(f"lam=({fmt_vec(lam)}) stays in F under t({fmt_vec(mu)})·w, l(w)={l}")
    return _result("interior-uniqueness", fails, n, f"{samples} samples")


def check_injectivity(rs: RootSystem, bound: int = 2) -> CheckResult:
    fails, n = [], 0
    for spec in enumerate_lattices(rs):
        cells = complex_F_Y(rs, spec)
        for mu in product(range(-bound, bound + 1), repeat=rs.rank):
            if not any(mu) or not lattice_member(rs, spec.subgroup, mu):
                continue
            mu = tuple(Fraction(x) for x in mu)
            for c1 in cells:
                for c2 in cells:
                    n += 1
                    if not intersection_empty(c1, translate(c2, mu)):
                        fails.append(f"{spec.label}: F_Y meets F_Y + ({fmt_vec(mu)})")
    return _result("injectivity", fails, n)


def facet_points(rs: RootSystem, j: int, count: int, gen: SplitMix64) -> list:
    """Random points of F on the facet ``<lam, alpha_0 + alpha_j> = 1``."""
    beta = list(rs.highest_root)
    beta[j - 1] += 1
    verts = [v for v in vertex_formula(rs) if pairing(v, beta) == 1]
    out = []
    for _ in range(count):
        w = [gen.below(20) for _ in verts]
        if not any(w):
            w[0] = 1
        total = sum(w)
        out.append(tuple(sum(Fraction(c, total) * v[k] for c, v in zip(w, verts)) for k in range(rs.rank)))
    return out


def check_explicit_action(rs: RootSystem, points: int = 100, seed: int = 0) -> CheckResult:
    J = sorted(rs.J)
    if not J:
        return CheckResult("explicit-action", None, 0, "J is empty")
    gen = SplitMix64(seed)
    fails, n = [], 0
    for t in range(points):
        j = J[t % len(J)]
        lam = facet_points(rs, j, 1, gen)[0]
        om = omega_element(rs, j)
        # omega_j(formula) == lam is the same as formula == omega_j^{-1}(lam)
        got = explicit_action(rs, j, lam)
        n += 1
        if affine_apply(rs, om.affine, got) != lam:
            fails.append(f"j={j} lam=({fmt_vec(lam)}) formula=({fmt_vec(got)})")
    return _result("explicit-action", fails, n)


def check_facet_exchange(rs: RootSystem, points: int = 100, seed: int = 0) -> CheckResult:
    """``<lam, alpha_0 + alpha_j> + <omega_i(lam), alpha_0 + alpha_i> = 2`` when ``omega_i(varpi_j^vee / n_j) = 0``."""
    J = sorted(rs.J)
    if not J:
        return CheckResult("facet-exchange", None, 0, "J is empty")
    gen = SplitMix64(seed)
    fails, n = [], 0
    for t in range(points):
        i = J[t % len(J)]
        om = omega_element(rs, i)
        j = om.sigma.index(0)
        lam = random_alcove_point(rs, gen)
        img = affine_apply(rs, om.affine, lam)
        lhs = pairing(lam, rs.highest_root) + lam[j - 1] + pairing(img, rs.highest_root) + img[i - 1]
        n += 1
        if lhs != 2:
            fails.append(f"i={i} lam=({fmt_vec(lam)}) sum={lhs}")
    return _result("facet-exchange", fails, n)


def check_minimal_lift(rs: RootSystem) -> CheckResult:
    fails = []
    verts = rs.alcove_vertices()
    for j in sorted(rs.J):
        u = minimal_length_lift(rs, rs.fundamental_coweight(j))
        om = omega_element(rs, j)
        # an affine map is determined by its values on r+1 affinely independent points
        if any(affine_apply(rs, u, v) != affine_apply(rs, om.affine, v) for v in verts):
            fails.append(f"j={j}: u = {u}, omega = {om.affine}")
    return _result("minimal-lift", fails, len(rs.J))


def check_canonicalize(rs: RootSystem, points: int = 200, seed: int = 0, denom_bound: int = 12) -> CheckResult:
    weyl = enumerate_weyl(rs)
    fails, n = [], 0
    for spec in enumerate_lattices(rs):
        gen = SplitMix64(seed)
        for _ in range(points):
            lam = tuple(random_rational(gen, denom_bound) for _ in range(rs.rank))
            tp = canonicalize(rs, spec, lam)
            brute = brute_canonicalize(rs, spec, lam, weyl=weyl)
            n += 1
            if tp.rep != brute or affine_apply(rs, tp.witness, lam) != tp.rep:
                fails.append(f"{spec.label} lam=({fmt_vec(lam)}): ({fmt_vec(tp.rep)}) vs ({fmt_vec(brute)})")
    return _result("canonicalize", fails, n)


# rank limits for the default suite; beyond them a check is reported as skipped
LIMITS = {
    "vertex-formula": 6,
    "tiling": 8,
    "interior-uniqueness": 3,
    "injectivity": 4,
    "canonicalize": 3,
}


def run_suite(rs: RootSystem, seed: int = 0, points: int | None = None) -> list[CheckResult]:
    """Every check feasible for ``rs``; ``points`` overrides the per-check sample counts."""

    def limited(name, fn, *args, **kw):
        if rs.rank > LIMITS[name]:
            return CheckResult(name, None, 0, f"rank > {LIMITS[name]}")
        return fn(rs, *args, **kw)

    return [
        check_weyl_order(rs),
        check_semidirect(rs),
        limited("vertex-formula", check_vertex_formula),
        limited("tiling", check_tiling, seed=seed, points=points or 100),
        limited("interior-uniqueness", check_interior_uniqueness, seed=seed),
        limited("injectivity", check_injectivity),
        check_explicit_action(rs, seed=seed, points=points or 100),
        check_facet_exchange(rs, seed=seed, points=points or 100),
        check_minimal_lift(rs),
        limited("canonicalize", check_canonicalize, seed=seed, points=points or 50),
    ]
