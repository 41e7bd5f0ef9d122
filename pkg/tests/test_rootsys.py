from fractions import Fraction
from math import prod

import pytest

from weylfold.exact import determinant
from weylfold.rootsys import (
    RootSystemError,
    RootSystemType,
    all_types,
    build,
    coroot,
    fundamental_group,
    pairing,
)
from weylfold.weyl import apply_reflection_root

from conftest import ALL


def expected_positive_roots(t: RootSystemType) -> int:
    n = t.rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n),
        "F": 24,
        "G": 6,
    }[t.family]


def test_build_A2():
    rs = build("A2")
    assert len(rs.positive_roots) == 3
    assert rs.highest_root == (1, 1)
    assert rs.J == {1, 2}


def test_build_B3():
    rs = build("B3")
    assert rs.highest_root == (1, 2, 2)
    assert rs.J == {1}


def test_build_A1():
    rs = build("A1")
    assert rs.positive_roots == ((1,),)
    assert rs.marks == (1,)
    assert rs.J == {1}


def test_C2_normalizes_to_B2_with_C_labels():
    rs = build("C2")
    assert rs is build("B2")
    assert rs.highest_root == (2, 1)
    assert rs.J == {2}


@pytest.mark.parametrize("name", ["A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "H2", "A", "3A"])
def test_invalid_types_rejected(name):
    with pytest.raises(RootSystemError):
        build(name)


@pytest.mark.parametrize("name", ALL)
def test_invariants(name):
    rs = build(name)
    c, r = rs.cartan, rs.rank
    for i in range(r):
        assert c[i][i] == 2
        for j in range(r):
            if i != j:
                assert c[i][j] <= 0
                assert (c[i][j] == 0) == (c[j][i] == 0)
    assert len(rs.positive_roots) == expected_positive_roots(rs.type)
    assert all(all(x >= 0 for x in b) for b in rs.positive_roots)
    top = rs.highest_root
    assert all(all(a <= b for a, b in zip(beta, top)) for beta in rs.positive_roots)
    assert sum(top) == max(sum(b) for b in rs.positive_roots)
    assert all(n >= 1 for n in rs.marks)
    assert rs.J == {i + 1 for i, n in enumerate(rs.marks) if n == 1}
    assert (not rs.J) == (name in ("E8", "F4", "G2"))
    height_one = sorted(b for b in rs.positive_roots if sum(b) == 1)
    assert height_one == sorted(rs.simple_root(i) for i in range(1, r + 1))


@pytest.mark.parametrize("name", ALL)
def test_reflections_preserve_roots(name):
    rs = build(name)
    for beta in rs.positive_roots:
        for i in range(1, rs.rank + 1):
            assert rs.is_root(apply_reflection_root(rs, i, beta))


@pytest.mark.parametrize("name", ALL)
def test_fundamental_group_order_is_det(name):
    rs = build(name)
    assert prod(fundamental_group(rs)) == determinant(rs.cartan)


@pytest.mark.parametrize("name", ALL)
def test_coroot_pairings(name):
    rs = build(name)
    for i in range(1, rs.rank + 1):
        for j in range(1, rs.rank + 1):
            assert pairing(coroot(rs, i), rs.simple_root(j)) == rs.cartan[i - 1][j - 1]


def test_fundamental_group_examples():
    assert fundamental_group(build("A3")) == [4]
    assert fundamental_group(build("D4")) == [2, 2]
    assert fundamental_group(build("E8")) == []


def test_pairing_examples():
    rs = build("A2")
    w1 = rs.fundamental_coweight(1)
    assert pairing(w1, rs.simple_root(1)) == 1
    assert pairing(w1, rs.highest_root) == 1
    assert pairing((Fraction(2, 3), Fraction(2, 3)), rs.highest_root) == Fraction(4, 3)
    with pytest.raises(RootSystemError):
        pairing((1, 0, 0), rs.highest_root)


def test_coroot_examples():
    assert coroot(build("A2"), 1) == (2, -1)
    assert coroot(build("A1"), 1) == (2,)
    b3 = build("B3")
    assert coroot(b3, 3) == b3.cartan[2]
    with pytest.raises(RootSystemError):
        coroot(b3, 4)


@pytest.mark.parametrize("name", ALL)
def test_highest_coroot_pairs_to_two(name):
    rs = build(name)
    assert pairing(rs.highest_coroot(), rs.highest_root) == 2


def test_all_types_counts():
    names = [str(t) for t in all_types(8)]
    assert len(names) == len(set(names)) == 8 + 7 + 6 + 5 + 3 + 2
