import json
from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, strategies as st

from weylfold.domains import (
    DomainError,
    Location,
    POLYTOPE_SCHEMA,
    alcove,
    classify,
    complex_F_Y,
    contains,
    explicit_action,
    fold_full,
    fold_omega,
    fundamental_polytope,
    polytope_from_json,
    polytope_to_json,
    vertex_formula,
)
from weylfold.lattices import (
    adjoint,
    enumerate_lattices,
    omega_subgroup,
    simply_connected,
    subgroup_to_lattice,
)
from weylfold.omega import omega_element
from weylfold.oracle import lattice_member, vertex_enumeration
from weylfold.rootsys import build, pairing
from weylfold.weyl import affine_apply, fold_to_alcove, in_alcove, inverse

from conftest import F
from strategies import points

TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"]


def test_alcove_examples():
    a2 = alcove(build("A2"))
    assert len(a2.halfspaces) == 3
    assert set(a2.vertices) == {F(0, 0), F(1, 0), F(0, 1)}
    b2 = alcove(build("B2"))
    assert set(b2.vertices) == {F(0, 0), F("1/2", 0), F(0, 1)}
    a1 = alcove(build("A1"))
    assert set(a1.vertices) == {F(0), F(1)}


def test_fundamental_polytope_examples():
    rs = build("A2")
    p = fundamental_polytope(rs)
    expected = {F(0, 0), F("1/2", 0), F(0, "1/2"), F("1/3", "1/3")}
    assert set(p.vertices) == expected == vertex_enumeration(p)
    a3 = build("A3")
    q = fundamental_polytope(a3, {2})
    extra = [h for h in q.halfspaces if h not in alcove(a3).halfspaces]
    assert [(h.coeffs, h.bound, h.sense) for h in extra] == [((1, 2, 1), 1, "le")]


def test_empty_JY_gives_alcove():
    for name in TYPES:
        rs = build(name)
        p = fundamental_polytope(rs, set())
        assert p.halfspaces == alcove(rs).halfspaces
        assert set(p.vertices) == set(alcove(rs).vertices)


def test_JY_must_be_minuscule():
    with pytest.raises(DomainError):
        fundamental_polytope(build("B3"), {2})


def test_worked_example_vertex_list():
    rs = build("A3")
    h, t, q = Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)
    expected = {
        F(0, 0, 0), (h, 0, 0), (0, h, 0), (0, 0, h),
        (t, t, 0), (0, t, t), (t, 0, t), (q, q, q),
    }
    assert set(vertex_formula(rs)) == expected


@pytest.mark.parametrize("name", TYPES)
def test_vertices_satisfy_constraints_and_are_tight(name):
    rs = build(name)
    J = sorted(rs.J)
    for k in range(len(J) + 1):
        for JY in combinations(J, k):
            p = fundamental_polytope(rs, JY)
            for v in p.vertices:
                assert contains(p, v)
                tight = [h for h in p.halfspaces if h.slack(v) == 0]
                assert len(tight) >= rs.rank


def test_classify_examples():
    rs = build("A2")
    p = fundamental_polytope(rs)
    assert classify(p, F("1/3", "1/3")) is Location.BOUNDARY
    assert classify(p, F(0, 0)) is Location.BOUNDARY
    assert classify(p, F(1, 0)) is Location.OUTSIDE
    assert classify(p, F("1/5", "1/5")) is Location.INTERIOR


def test_fold_omega_examples():
    rs = build("A2")
    pt, om = fold_omega(rs, rs.J, F(1, 0))
    assert pt == F(0, 0) and om.index == 1
    lam = F("1/5", "1/5")
    assert fold_omega(rs, rs.J, lam) == (lam, omega_element(rs, 0))
    lam = F("2/3", "1/6")
    assert pairing(lam, (2, 1)) == Fraction(3, 2)
    pt, om = fold_omega(rs, rs.J, lam)
    assert om.index == 1
    assert pt == affine_apply(rs, inverse(rs, om.affine), lam)
    assert contains(fundamental_polytope(rs), pt)
    with pytest.raises(DomainError):
        fold_omega(rs, rs.J, F(2, 0))


def test_fold_omega_tie_breaks_to_smallest_index():
    rs = build("A3")
    lam = F("2/5", 0, "2/5")
    _, om = fold_omega(rs, rs.J, lam)
    assert om.index == 1


@pytest.mark.parametrize("name", TYPES)
@given(data=st.data())
def test_fold_omega_tiles(name, data):
    rs = build(name)
    lam = fold_to_alcove(rs, data.draw(points(rs.rank)))[0]
    for spec in enumerate_lattices(rs):
        _, JY = omega_subgroup(rs, spec)
        pt, om = fold_omega(rs, JY, lam)
        assert contains(fundamental_polytope(rs, JY), pt)
        assert affine_apply(rs, om.affine, pt) == lam
        assert om.index == 0 or om.index in JY


def test_explicit_action_examples():
    rs = build("A2")
    third = F("1/3", "1/3")
    assert explicit_action(rs, 1, third) == third
    half = F("1/2", 0)
    got = explicit_action(rs, 1, half)
    assert got == affine_apply(rs, inverse(rs, omega_element(rs, 1).affine), half)
    assert got == F(0, "1/2")
    assert explicit_action(build("A1"), 1, F("1/2")) == F("1/2")
    with pytest.raises(DomainError):
        explicit_action(rs, 1, F("1/5", "1/5"))


def test_fold_full_examples():
    rs = build("A2")
    pt, a = fold_full(rs, adjoint(rs), F("2/3", "2/3"))
    assert pt == F("1/3", "1/3")
    lam = F("1/5", "1/7")
    pt, a = fold_full(rs, adjoint(rs), lam)
    assert pt == lam and a.weyl == () and not any(a.translation)
    a3 = build("A3")
    Y = subgroup_to_lattice(a3, {0, 2})
    w3 = a3.fundamental_coweight(3)
    pt, a = fold_full(a3, Y, w3)
    assert pt == w3
    F_Y = fundamental_polytope(a3, {2})
    assert contains(F_Y, a3.fundamental_coweight(1)) and contains(F_Y, w3)


@pytest.mark.parametrize("name", TYPES)
@given(data=st.data())
def test_fold_full_contract(name, data):
    rs = build(name)
    lam = data.draw(points(rs.rank))
    for spec in enumerate_lattices(rs):
        _, JY = omega_subgroup(rs, spec)
        pt, a = fold_full(rs, spec, lam)
        assert contains(fundamental_polytope(rs, JY), pt)
        assert affine_apply(rs, a, lam) == pt
        assert lattice_member(rs, spec.subgroup, a.translation)


def test_simply_connected_specialization():
    for name in TYPES:
        rs = build(name)
        sc = simply_connected(rs)
        lam = tuple(Fraction(k + 2, 7) * (-1) ** k for k in range(rs.rank))
        assert fold_full(rs, sc, lam) == fold_to_alcove(rs, lam)
        box = [mu for mu in product(range(-2, 3), repeat=rs.rank) if lattice_member(rs, {0}, mu)]
        assert [mu for mu in box if in_alcove(rs, mu)] == [(0,) * rs.rank]


def test_complex_examples():
    rs = build("A3")
    assert len(complex_F_Y(rs, adjoint(rs))) == 1
    cells = complex_F_Y(rs, simply_connected(rs))
    assert len(cells) == 4
    Y = subgroup_to_lattice(rs, {0, 2})
    two = complex_F_Y(rs, Y)
    assert len(two) == 2
    F_P = fundamental_polytope(rs)
    assert set(two[0].vertices) == set(F_P.vertices)
    om1 = omega_element(rs, 1).affine
    assert set(two[1].vertices) == {affine_apply(rs, om1, v) for v in F_P.vertices}


def _centroid(p):
    n = len(p.vertices)
    return tuple(sum(v[k] for v in p.vertices) / n for k in range(p.dim))


@pytest.mark.parametrize("name", TYPES)
def test_complex_cells(name):
    rs = build(name)
    A = alcove(rs)
    for spec in enumerate_lattices(rs):
        cells = complex_F_Y(rs, spec)
        sub, _ = omega_subgroup(rs, spec)
        assert len(cells) * len(sub) == len(rs.J) + 1
        for c in cells:
            assert set(vertex_enumeration(c)) == set(c.vertices)
            assert all(contains(A, v) for v in c.vertices)
        # interiors are pairwise disjoint
        for c1, c2 in combinations(cells, 2):
            assert classify(c2, _centroid(c1)) is Location.OUTSIDE
            assert classify(c1, _centroid(c2)) is Location.OUTSIDE


@pytest.mark.parametrize("name", TYPES)
def test_neighbour_cells_share_a_facet(name):
    rs = build(name)
    F_P = fundamental_polytope(rs)
    for i in sorted(rs.J):
        om = omega_element(rs, i)
        cell = complex_F_Y(rs, simply_connected(rs))[sorted(rs.J).index(i) + 1]
        beta = list(rs.highest_root)
        beta[i - 1] += 1
        facet = {v for v in F_P.vertices if pairing(v, beta) == 1}
        assert set(F_P.vertices) & set(cell.vertices) == facet
        # the facet lies in both cells and is cut out by one constraint of each
        assert all(contains(cell, v) for v in facet)
        assert any(all(h.slack(v) == 0 for v in facet) for h in cell.halfspaces)
        assert set(cell.vertices) == {affine_apply(rs, om.affine, v) for v in F_P.vertices}


@pytest.mark.parametrize("name", TYPES)
def test_facet_exchange(name):
    rs = build(name)
    lam_pts = [fold_to_alcove(rs, tuple(Fraction(3 * k + s, 11) for k in range(rs.rank)))[0] for s in range(1, 8)]
    for i in rs.J:
        om = omega_element(rs, i)
        j = om.sigma.index(0)
        for lam in lam_pts:
            img = affine_apply(rs, om.affine, lam)
            total = pairing(lam, rs.highest_root) + lam[j - 1] + pairing(img, rs.highest_root) + img[i - 1]
            assert total == 2


def test_json_round_trip():
    rs = build("A3")
    Y = subgroup_to_lattice(rs, {0, 2})
    p = fundamental_polytope(rs, {2})
    data = polytope_to_json(rs, p, Y.label)
    text = json.dumps(data)
    back = polytope_from_json(text)
    assert back.halfspaces == p.halfspaces
    assert back.vertices == p.vertices
    assert data["type"] == "A3" and data["lattice"] == "H=<2>"
    assert all(isinstance(x, str) for v in data["vertices"] for x in v)
    assert set(POLYTOPE_SCHEMA["required"]) == set(data)
