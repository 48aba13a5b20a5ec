# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

import pytest


def test_count_N_against_enumeration():
    from degcones.poly import count_N, lattice_points, p_ab_polytope
    for a in range(9):
        for b in range(9):
            assert count_N(a, b) == len(lattice_points(p_ab_polytope(a, b)))
    assert count_N(0, 0) == 1
    with pytest.raises(AssertionError):
        count_N(-1, 2)


def test_sp4_counts():
    from degcones.poly import lattice_points, sp4_count, sp4_polytope
    from degcones.roots import build_root_system, weyl_dim
    rs = build_root_system("C2")
    for m1 in range(4):
        for m2 in range(4):
            count = sp4_count(m1, m2)
            assert count == weyl_dim(rs, (m1, m2))
            assert count == len(lattice_points(sp4_polytope(m1, m2)))


def test_halfspace_system():
    from degcones.poly import HalfspaceSystem, lattice_points
    h = HalfspaceSystem.build(2, [((1, 1), 2), ((1, 1), 3), ((1, 0), 1)], ("x", "y"))
    assert len(h.rows) == 2
    assert lattice_points(h) == {(0, 0), (1, 0), (0, 1), (1, 1), (0, 2)}
    assert HalfspaceSystem.from_json(h.to_json()) == h
    # x - y <= 0, y <= 2: the general (non-orthant) path
    g = HalfspaceSystem.build(2, [((1, -1), 0), ((0, 1), 2)])
    assert lattice_points(g) == {(0, 0), (0, 1), (1, 1), (0, 2), (1, 2), (2, 2)}
    with pytest.raises(AssertionError):
        lattice_points(HalfspaceSystem.build(2, [((1, 0), 3)]))


def test_enumerate_many():
    from degcones.poly import count_N, enumerate_many, p_ab_polytope
    counts = enumerate_many({(a, 3): p_ab_polytope(a, 3) for a in range(5)}, progress=False)
    assert counts == {(a, 3): count_N(a, 3) for a in range(5)}


def test_dyck_paths():
    from degcones.poly import dyck_paths
    from degcones.roots import build_root_system
    a2 = dyck_paths(build_root_system("A2"))
    assert [p.labels(build_root_system("A2")) for p in a2] == [("1,1",), ("1,1", "1,2", "2,2"), ("2,2",)]
    c2 = build_root_system("C2")
    paths = dyck_paths(c2)
    assert ("1,1", "1,2", "1,1bar") in [p.labels(c2) for p in paths]
    assert all(p.end[1] for p in paths if p.labels(c2)[-1] == "1,1bar")
    with pytest.raises(ValueError):
        dyck_paths(c2, "B")
    with pytest.raises(AssertionError):
        dyck_paths(c2, "A")


def test_fflv_counts():
    from degcones.poly import fflv_lattice_set
    from degcones.roots import build_root_system, weyl_dim
    for type_text, weights in (("A2", ((1, 0), (1, 1), (2, 1))), ("A3", ((0, 1, 0), (1, 0, 1))),
                               ("C2", ((1, 0), (0, 1), (1, 1))), ("C3", ((1, 0, 0), (0, 0, 1)))):
        rs = build_root_system(type_text)
        for lam in weights:
            assert len(fflv_lattice_set(rs, lam)) == weyl_dim(rs, lam)


def test_g2_boxes():
    from degcones.poly import g2_box_varpi1, g2_box_varpi2, g2_conjecture_sets, lattice_points
    assert len(lattice_points(g2_box_varpi1(1))) == 7
    assert len(lattice_points(g2_box_varpi2(1))) == 12
    first, second = g2_conjecture_sets()
    assert (len(first), len(second)) == (7, 14)


def test_hull_of_small_sets():
    from degcones.poly import hull_inequalities, hull_lattice_points, minkowski_hull
    triangle = {(0, 0), (2, 0), (0, 2)}
    assert hull_lattice_points(triangle) == {(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)}
    segment = {(0, 0, 0), (2, 2, 2)}
    assert hull_lattice_points(segment) == {(0, 0, 0), (1, 1, 1), (2, 2, 2)}
    hull = hull_inequalities(triangle)
    assert not hull.equalities
    assert hull.scaled(2).contains((4, 0)) and not hull.scaled(2).contains((3, 2))
    square = minkowski_hull(hull_inequalities({(0, 0), (1, 0)}), hull_inequalities({(0, 0), (0, 1)}))
    assert hull_lattice_points(square) == {(0, 0), (1, 0), (0, 1), (1, 1)}


def test_g2_experiment_at_one_point():
    from degcones.poly import g2_conjecture_experiment
    row = g2_conjecture_experiment(1, 0)
    assert row["dim"] == 7
    assert row["sumset"] == 7
    assert row["dilation"] == 7


@pytest.mark.slow
def test_g2_local_hull():
    from degcones.poly import hull_lattice_points
    from degcones.rep import FilteredModule, canonical_degree
    from degcones.roots import build_root_system
    rs = build_root_system("G2")
    S = FilteredModule(rs, (0, 1), canonical_degree(rs, "local")).monomial_set()
    assert len(S) == 14
    assert len(hull_lattice_points(S)) == 16


@pytest.mark.slow
def test_fflv_counts_and_additivity():
    from degcones.poly import fflv_lattice_set, minkowski_sum
    from degcones.roots import build_root_system, dominant_weights, weyl_dim
    for type_text in ("A2", "A3", "A4", "C2", "C3"):
        rs = build_root_system(type_text)
        sets = {}
        for lam in dominant_weights(rs.rank, 2, 1):
            sets[lam] = fflv_lattice_set(rs, lam)
            assert len(sets[lam]) == weyl_dim(rs, lam)
        for lam in sets:
            if sum(lam) == 2:
                i = next(k for k, m in enumerate(lam) if m)
                first = tuple(int(k == i) for k in range(rs.rank))
                second = tuple(m - f for m, f in zip(lam, first))
                assert minkowski_sum(sets[first], sets[second]) == sets[lam]
