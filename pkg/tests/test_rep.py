# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

import pytest


def test_irreps():
    from degcones.rep import build_irrep, gram_rank
    from degcones.roots import build_root_system
    a2 = build_root_system("A2")
    adjoint = build_irrep(a2, (1, 1))
    assert adjoint.dim == 8
    assert adjoint.dims[(1, 1)] == 2
    assert adjoint.multiplicities()[(0, 0)] == 2
    assert adjoint.check()
    assert gram_rank(a2, (1, 1), (1, 1)) == 2
    assert build_irrep(build_root_system("C2"), (0, 1)).dim == 5
    assert build_irrep(build_root_system("G2"), (1, 0)).dim == 7


def test_chevalley_structure_constants():
    from degcones.rep import build_irrep, chevalley_basis, string_length
    from degcones.roots import build_root_system
    c2 = build_root_system("C2")
    assert string_length(c2, (1, 1), (1, 0)) == 1
    assert string_length(c2, (1, 0), (1, 1)) == 1
    assert string_length(c2, (0, 1), (1, 0)) == 0
    for type_text, lam in (("A2", (1, 1)), ("C2", (0, 1)), ("G2", (0, 1))):
        rs = build_root_system(type_text)
        basis = chevalley_basis(rs)
        assert basis.ff
        assert basis.check()
        for (a, b), n in basis.ff.items():
            assert abs(n) == string_length(rs, a, b) + 1
            assert basis.bracket_ff(b, a) == -n
        assert build_irrep(rs, lam).check_brackets(basis)
    assert abs(chevalley_basis(c2).bracket_ff((1, 1), (1, 0))) == 2


def test_canonical_degrees():
    from degcones.cone import classical_cone, contains
    from degcones.rep import canonical_degree
    from degcones.roots import build_root_system
    assert canonical_degree("A2") == (2, 1, 2)
    assert canonical_degree("C2") == (3, 2, 4, 3)
    for type_text in ("A3", "B3", "C3", "D4", "G2"):
        rs = build_root_system(type_text)
        assert contains(classical_cone(rs), canonical_degree(rs))
    assert contains(classical_cone(build_root_system("G2")), canonical_degree("G2", "local"))
    with pytest.raises(ValueError):
        canonical_degree("A2", "local")


def test_a2_monomial_basis():
    from degcones.rep import FilteredModule, canonical_degree
    from degcones.roots import build_root_system, weyl_dim
    rs = build_root_system("A2")
    d = canonical_degree(rs)
    for lam in ((1, 0), (0, 1), (1, 1)):
        fm = FilteredModule(rs, lam, d)
        assert fm.is_monomial
        assert len(fm.monomial_set()) == weyl_dim(rs, lam)
        assert fm.survives((0, 0, 0))
    table = FilteredModule(rs, (1, 1), d).report()
    assert table["r_mu"].sum() == 8
    with pytest.raises(AssertionError):
        FilteredModule(rs, (1, 0), (1, 1, 5))


def test_a3_local_monomiality():
    from degcones.rep import FilteredModule, an_local_criterion, fundamental_weight
    from degcones.roots import build_root_system, convex_order
    rs = build_root_system("A3")
    order = convex_order(rs, "123212")
    for values, expected in (((1, 1, 1, 1, 1, 1), False), ((2, 2, 1, 1, 1, 1), True), ((1, 1, 1, 1, 1, 2), True)):
        d = order.vector_to_canonical(values)
        local = all(FilteredModule(rs, fundamental_weight(3, i), d).is_monomial for i in range(3))
        assert local == expected
        assert an_local_criterion(rs, d) == expected


def test_filtered_module_flags():
    from degcones.rep import FilteredModule, canonical_degree, fundamental_weight
    from degcones.roots import build_root_system, convex_order
    for type_text, lam in (("A2", (1, 1)), ("C2", (0, 1)), ("G2", (1, 0))):
        rs = build_root_system(type_text)
        fm = FilteredModule(rs, lam, canonical_degree(rs))
        for flags in fm.flags.values():
            assert flags["lemma"] or not flags["corollary"]
            assert flags["monomial"] or not flags["lemma"]
    fm = FilteredModule(build_root_system("A2"), (1, 1), canonical_degree(build_root_system("A2")))
    assert fm.corollary_holds and fm.lemma_holds and fm.is_monomial
    assert fm.flags[(1, 1)] == {"monomial": True, "lemma": True, "corollary": True}
    rs = build_root_system("A3")
    d = convex_order(rs, "123212").vector_to_canonical((1, 1, 1, 1, 1, 1))
    modules = [FilteredModule(rs, fundamental_weight(3, i), d) for i in range(3)]
    failing = [nu for fm in modules for nu, flags in fm.flags.items() if not flags["monomial"]]
    assert failing
    assert not any(fm.lemma_holds for fm in modules if not fm.is_monomial)


def test_c2_minkowski_check():
    from degcones.rep import degree_from_labels, minkowski_global_check, minkowski_sumset
    from degcones.roots import build_root_system
    rs = build_root_system("C2")
    d = degree_from_labels(rs, {"1,1": 1, "1,1bar": 1, "1,2": 1, "2,2": 2})
    check = minkowski_global_check(rs, d, (1, 1), direct_bound=16)
    assert check.passed
    assert check.sum_count == check.dim == 16
    assert check.direct
    assert check.fundamentals == {0: 4, 1: 5}
    assert minkowski_sumset([{(0, 1)}, {(1, 0), (0, 1)}]) == {(1, 1), (0, 2)}


def test_cn_obstruction():
    from degcones.rep import cn_obstruction
    facts = cn_obstruction(2)
    assert facts["violated"]
    assert (facts["1,1bar"], facts["2,2"], facts["1,2"]) == (3, 2, 4)


@pytest.mark.slow
def test_b3_associated_graded():
    from degcones.rep import b3_gr_facts
    facts = b3_gr_facts()
    assert facts == {"weight_space_dim": 1, "f12_f13bar_nonzero": True, "f13_squared_zero": True}


@pytest.mark.slow
def test_a4_minkowski_count():
    from degcones.rep import degree_from_labels, minkowski_global_check
    from degcones.roots import build_root_system
    rs = build_root_system("A4")
    values = {label: 2 ** (3 - (int(label.split(",")[1]) - int(label.split(",")[0]))) for label in rs.labels}
    check = minkowski_global_check(rs, degree_from_labels(rs, values), (1, 1, 1, 1), direct_bound=0)
    assert (check.sum_count, check.dim) == (1023, 1024)
    assert not check
