# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

import json

import pytest


def test_serre_relation_in_shuffle_kernel():
    from degcones.exact import ExactField
    from degcones.quantum import algebra_for, serre_relation, shuffle_image
    from degcones.roots import build_root_system
    for type_text in ("A2", "C2"):
        alg = algebra_for(build_root_system(type_text), ExactField())
        assert not shuffle_image(serre_relation(alg, 0, 1))
        assert not shuffle_image(serre_relation(alg, 1, 0))
        assert shuffle_image(alg.f_word((0, 1)))


def test_root_vector_weights():
    from degcones.exact import ExactField
    from degcones.quantum import pbw_root_vectors
    from degcones.roots import build_root_system, convex_order
    order = convex_order(build_root_system("C2"), "1212")
    vectors = pbw_root_vectors(order, ExactField())
    assert [v.weight for v in vectors] == [tuple(-c for c in beta) for beta in order.betas]
    assert all(v.is_pure_f() for v in vectors)


def test_a2_relation():
    from degcones.quantum import ls_relation
    from degcones.roots import build_root_system, convex_order
    order = convex_order(build_root_system("A2"), "121")
    rel = ls_relation(order, 0, 2, mode="exact")
    assert rel.qpow == 1
    assert rel.support == [(0, 1, 0)]
    assert rel.forms() == [(1, 1, -1)]
    assert not ls_relation(order, 0, 1, mode="exact").terms
    with pytest.raises(AssertionError):
        ls_relation(order, 2, 1)


def test_c2_relations():
    from degcones.exact import LaurentQ
    from degcones.quantum import ls_relation
    from degcones.roots import build_root_system, convex_order
    order = convex_order(build_root_system("C2"), "1212")
    assert ls_relation(order, 0, 2, mode="exact").terms == {(0, 1, 0, 0): LaurentQ({1: 1, -1: 1})}
    assert ls_relation(order, 1, 3, mode="exact").terms == {(0, 0, 2, 0): LaurentQ({-2: 1, 0: -1})}
    assert ls_relation(order, 0, 1, mode="exact").terms == {}
    assert ls_relation(order, 2, 3, mode="exact").terms == {}


def test_specialized_support_matches_exact():
    from degcones.quantum import ls_relations
    from degcones.roots import build_root_system, convex_order
    order = convex_order(build_root_system("C2"), "2121")
    exact = ls_relations(order, mode="exact", progress=False)
    specialized = ls_relations(order, mode="specialized", seed=7, progress=False)
    assert [r.support for r in exact] == [r.support for r in specialized]
    assert all(r.mode == "specialized" and len(r.q0) == 2 for r in specialized)


def test_specialized_support_matches_exact_in_rank_three():
    from degcones.quantum import ls_relation
    from degcones.roots import build_root_system, convex_order
    order = convex_order(build_root_system("A3"), "121321")
    for i in range(order.N):
        for j in range(i + 1, min(i + 3, order.N)):
            exact = ls_relation(order, i, j, mode="exact")
            specialized = ls_relation(order, i, j, mode="specialized", seed=5)
            assert exact.support == specialized.support, (i, j)


def test_relation_cache(tmp_path):
    from degcones.quantum import ls_relations
    from degcones.roots import build_root_system, convex_order
    order = convex_order(build_root_system("A2"), "212")
    cache_file = str(tmp_path / "relations.json")
    first = ls_relations(order, mode="exact", cache_file=cache_file, progress=False)
    with open(cache_file, "r") as f:
        assert len(json.load(f)) == 3
    second = ls_relations(order, mode="exact", cache_file=cache_file, progress=False)
    assert [r.to_json() for r in first] == [r.to_json() for r in second]


def test_relation_cache_separates_modes(tmp_path):
    from degcones.quantum import RelationCache, ls_relations
    from degcones.roots import build_root_system, convex_order
    order = convex_order(build_root_system("A2"), "121")
    cache_file = str(tmp_path / "relations.json")
    specialized = ls_relations(order, mode="specialized", seed=3, cache_file=cache_file, progress=False)
    assert all(r.mode == "specialized" for r in specialized)
    assert RelationCache(cache_file, "exact").get(order, 0, 2) is None
    assert RelationCache(cache_file, "specialized", seed=4).get(order, 0, 2) is None
    assert RelationCache(cache_file, "specialized", seed=3).get(order, 0, 2).mode == "specialized"
    exact = ls_relations(order, mode="exact", cache_file=cache_file, progress=False)
    assert all(r.mode == "exact" for r in exact)
    with open(cache_file, "r") as f:
        assert len(json.load(f)) == 6


def test_time_budget_with_workers():
    from degcones.quantum import ls_relations
    from degcones.roots import build_root_system, convex_order
    order = convex_order(build_root_system("C2"), "1212")
    for jobs in (1, 2):
        with pytest.raises(TimeoutError):
            ls_relations(order, mode="exact", jobs=jobs, time_budget=0, progress=False)


def test_quantum_cones_rank_two():
    from degcones.cone import classical_cone, cone_equal, implies
    from degcones.quantum import quantum_degree_cone
    from degcones.roots import build_root_system, convex_order
    a2 = build_root_system("A2")
    for word in ("121", "212"):
        assert cone_equal(quantum_degree_cone(convex_order(a2, word), progress=False), classical_cone(a2))
    c2 = build_root_system("C2")
    c = quantum_degree_cone(convex_order(c2, "1212"), progress=False)
    # d_{2,2} + d_{1,1bar} > 2 d_{1,2} is quantum only
    assert implies(c, (0, 1, -2, 1))
    assert not implies(classical_cone(c2), (0, 1, -2, 1))
    assert all(implies(c, f) for f in classical_cone(c2).forms)


def test_a3_relation_coefficient():
    from degcones.exact import LaurentQ
    from degcones.quantum import ls_relation
    from degcones.roots import build_root_system, convex_order, root_by_label
    rs = build_root_system("A3")
    order = convex_order(rs, "121321")
    i, j = sorted(order.position[root_by_label(rs, x)] for x in ("1,2", "2,3"))
    rel = ls_relation(order, i, j, mode="exact")
    assert len(rel.terms) == 1
    (s, coeff), = rel.terms.items()
    assert s[order.position[root_by_label(rs, "2,2")]] == 1
    assert s[order.position[root_by_label(rs, "1,3")]] == 1
    assert coeff in (LaurentQ({1: 1, -1: -1}), LaurentQ({1: -1, -1: 1}))


@pytest.mark.slow
def test_g2_cone_matches_published_system():
    from degcones.cli.reference import PRINTED
    from degcones.cone import compare_with_printed
    from degcones.quantum import quantum_degree_cone
    from degcones.roots import build_root_system, convex_order
    order = convex_order(build_root_system("G2"), "121212")
    c = quantum_degree_cone(order, progress=False)
    assert compare_with_printed(c, PRINTED[("G2", "121212")].cone()).equal


def test_lusztig_inverse_round_trip():
    from degcones.exact import ExactField
    from degcones.quantum import algebra_for, lusztig_T, lusztig_T_inverse
    from degcones.roots import build_root_system
    alg = algebra_for(build_root_system("A2"), ExactField())
    for i in range(2):
        for j in range(2):
            x = alg.F(j)
            assert lusztig_T_inverse(i, lusztig_T(i, x)) == x


def test_commuting_swap_support_gap():
    from degcones.quantum import ls_relations
    from degcones.roots import build_root_system, commuting_swaps, convex_order, parse_word
    rs = build_root_system("A3")
    word = parse_word("121321")
    [(pos, _)] = commuting_swaps(rs, word)
    order = convex_order(rs, word)
    rels = {(r.i, r.j): r for r in ls_relations(order, mode="exact", progress=False)}
    for s in range(pos):
        assert all(n[pos] == 0 for n in rels[(s, pos + 1)].support)
    for t in range(pos + 2, order.N):
        assert all(n[pos + 1] == 0 for n in rels[(pos, t)].support)


def test_interior_point_degrades_every_relation():
    from degcones.cone import interior_lattice_point
    from degcones.quantum import ls_relations, quantum_degree_cone
    from degcones.roots import build_root_system, convex_order
    order = convex_order(build_root_system("C2"), "1212")
    rels = ls_relations(order, mode="exact", progress=False)
    point = interior_lattice_point(quantum_degree_cone(order, mode="exact", progress=False), order, rels)
    d = order.vector_from_canonical(point)
    for rel in rels:
        for n in rel.support:
            assert sum(m * x for m, x in zip(n, d)) < d[rel.i] + d[rel.j]
