# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

def test_imports():
    import degcones
    import joblib
    import networkx
    import sympy
    from degcones import cli, cone, exact, poly, quantum, rep, roots
    from degcones.roots import build_root_system, convex_order, reduced_words_of_w0
    from degcones.exact import LaurentQ, make_field, rref
    from degcones.quantum import ls_relation, ls_relations, quantum_degree_cone
    from degcones.cone import StrictCone, classical_cone, is_empty, fm_feasible
    from degcones.rep import FilteredModule, build_irrep, minkowski_global_check
    from degcones.poly import dyck_paths, hull_lattice_points, sp4_polytope
    from degcones.cli import main, reproduce, RunConfig
