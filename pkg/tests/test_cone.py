# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

from fractions import Fraction

import pytest


def test_fourier_motzkin():
    from degcones.cone import Inequality, fm_feasible, fm_project, verify_infeasibility
    # x > 0, y > x, 3 - y >= 0
    system = [
        Inequality.original(0, (1, 0), strict=True),
        Inequality.original(1, (-1, 1), strict=True),
        Inequality.original(2, (0, -1), 3),
    ]
    result = fm_feasible(system, 2)
    assert result.feasible
    assert all(ineq.holds(result.witness) for ineq in system)
    projected = fm_project(system, [0])
    assert all(ineq.coeffs[0] == 0 for ineq in projected)

    # x >= 1 and x <= 0
    system = [Inequality.original(0, (1,), -1), Inequality.original(1, (-1,))]
    result = fm_feasible(system, 1)
    assert not result.feasible
    assert verify_infeasibility(system, result.certificate)
    assert fm_project(system, [0]) is None


def test_inequality_normalization():
    from degcones.cone import Inequality
    ineq = Inequality.original(0, (2, -4), 6)
    assert ineq.coeffs == (1, -2)
    assert ineq.const == 3
    assert ineq.multipliers == ((0, Fraction(1, 2)),)


def test_classical_cones():
    from degcones.cone import classical_cone
    from degcones.roots import build_root_system
    assert len(classical_cone(build_root_system("A2"))) == 1
    assert len(classical_cone(build_root_system("C2"))) == 2
    assert len(classical_cone(build_root_system("G2"))) == 5
    a2 = classical_cone(build_root_system("A2"))
    assert a2.describe() == ["d_{1,1} + d_{2,2} > d_{1,2}"]


def test_emptiness():
    from degcones.cone import StrictCone, contains, intersect, is_empty
    first = StrictCone.build(("a", "b"), [(1, -1)])
    second = StrictCone.build(("a", "b"), [(-2, 2)])
    status = is_empty(first)
    assert not status.empty
    assert contains(first, status.witness)
    both = intersect(first, second)
    status = is_empty(both)
    assert status.empty
    assert status.certificate.verify(both)


def test_implication_and_equality():
    from degcones.cone import StrictCone, cone_equal, implies
    c = StrictCone.build(("a", "b", "c"), [(1, -1, 0), (0, 1, -1)])
    assert implies(c, (1, 0, -1))
    assert not implies(c, (0, 0, 1))
    assert not implies(c, (-1, 0, 1))
    assert cone_equal(c, StrictCone.build(("a", "b", "c"), [(1, -1, 0), (0, 1, -1), (1, 0, -1)]))
    assert not cone_equal(c, StrictCone.build(("a", "b", "c"), [(1, -1, 0)]))


def test_parse_inequality():
    from degcones.cone import parse_inequality
    ambient = ("1,1", "2,2", "1,2", "1,1bar")
    assert parse_inequality(ambient, "d_{2,2} + d_{1,1̄} > 2d_{1,2}") == (0, 1, -2, 1)
    assert parse_inequality(ambient, "d_{1,1} + d_{1,2} > d_{1,1bar}") == (1, 0, 1, -1)
    assert parse_inequality(ambient, "d_1 > d_2", {"1": "1,1", "2": "2,2"}) == (1, -1, 0, 0)
    with pytest.raises(AssertionError):
        parse_inequality(ambient, "d_{1,1} + d_{2,2}")
    with pytest.raises(AssertionError):
        parse_inequality(ambient, "d_{3,3} > d_{1,1}")


def test_lattice_points_of_a2_cone():
    from degcones.cone import classical_cone, interior_lattice_point, minimal_lattice_points
    from degcones.quantum import ls_relations
    from degcones.roots import build_root_system, convex_order
    rs = build_root_system("A2")
    c = classical_cone(rs)
    assert minimal_lattice_points(c, progress=False) == [(1, 1, 1)]
    order = convex_order(rs, "121")
    assert interior_lattice_point(c, order, ls_relations(order, mode="exact", progress=False)) == (1, 1, 1)


def test_minimal_points_bound():
    from degcones.cone import StrictCone, minimal_lattice_points
    c = StrictCone.build(("a", "b"), [(1, -5)])
    assert minimal_lattice_points(c, cap=7, progress=False) == [(6, 1)]
    with pytest.raises(RuntimeError):
        minimal_lattice_points(c, cap=6, progress=False)


def test_cone_json():
    from degcones.cone import StrictCone, classical_cone
    from degcones.roots import build_root_system
    c = classical_cone(build_root_system("C2"))
    assert StrictCone.from_json(c.to_json()) == c


def test_printed_comparison():
    from degcones.cli.reference import PRINTED
    from degcones.cone import StrictCone, compare_with_printed
    printed = PRINTED[("C2", "1212")].cone()
    assert compare_with_printed(printed, printed).equal
    weaker = StrictCone.build(printed.ambient, printed.forms[:1])
    div = compare_with_printed(weaker, printed)
    assert not div.equal
    assert div.missing_in_printed == []
    assert len(div.missing_in_computed) >= 1


@pytest.mark.slow
def test_rank_three_cones_intersect_empty():
    from degcones.cone import intersect, is_empty
    from degcones.quantum import quantum_degree_cone
    from degcones.roots import build_root_system, convex_order
    rs = build_root_system("A3")
    a = quantum_degree_cone(convex_order(rs, "121321"), progress=False)
    b = quantum_degree_cone(convex_order(rs, "132312"), progress=False)
    assert not is_empty(a).empty
    both = intersect(a, b)
    status = is_empty(both)
    assert status.empty
    assert status.certificate.verify(both)


@pytest.mark.slow
def test_c3_minimal_points():
    from degcones.cli.reference import C3_ALIASES, C3_MINIMAL_POINTS, printed_vector
    from degcones.cone import minimal_lattice_points
    from degcones.quantum import quantum_degree_cone
    from degcones.roots import build_root_system, convex_order
    c = quantum_degree_cone(convex_order(build_root_system("C3"), "123212323"), progress=False)
    expected = sorted(printed_vector("C3", p, C3_ALIASES) for p in C3_MINIMAL_POINTS)
    assert minimal_lattice_points(c, progress=False) == expected
