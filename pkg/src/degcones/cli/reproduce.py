# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Reproduction suite: every published cone, relation, degree function and lattice point count
# recomputed and compared, section by section.
#
# Author(s): degcones developers
# Last modified: 10/2026


import logging
from dataclasses import dataclass, field

import pandas as pd

from ..cone import classical_cone, compare_with_printed, cone_equal, contains, implies, interior_lattice_point
from ..cone import intersect, is_empty, minimal_lattice_points
from ..exact import LaurentQ
from ..poly import (SP4_COORDINATES, count_N, fflv_lattice_set, g2_conjecture_table, hull_lattice_points,
                    lattice_points, p_ab_polytope, sp4_count, sp4_polytope)
from ..quantum import cone_from_relations, ls_relation, ls_relations
from ..rep import (FilteredModule, an_local_criterion, b3_gr_facts, canonical_degree, cn_obstruction,
                   chevalley_basis, degree_from_labels, fundamental_weight, minkowski_global_check)
from ..rep.degrees import D4_DEGREE, D4_WORD
from ..roots import build_root_system, commuting_swaps, convex_order, dominant_weights, format_word
from ..roots import reduced_words_of_w0, root_by_label
from .reference import A3_PRINTED_RELATIONS, C3_ALIASES, C3_MINIMAL_POINTS, PRINTED, printed_vector

LOG = logging.getLogger("degcones-cli")
LOG.setLevel("INFO")
logging.basicConfig(
    format="%(asctime)s %(levelname)-8s %(message)s",
    level=logging.INFO,
    datefmt="%Y-%m-%d %H:%M:%S",
)

__all__ = ["SECTIONS", "Reproduction", "reproduce"]

SECTIONS = ("4.1", "4.2", "5.1", "5.2", "5.3", "5.4", "5.5", "5.6", "5.7", "5.8", "6.1", "6.2", "6.3", "6.4", "6.5")


@dataclass
class Reproduction:
    """Checks of a reproduction run and the quantum cones computed on the way."""

    config: object
    checks: list = field(default_factory=list)
    _cones: dict = field(default_factory=dict)
    _sane: set = field(default_factory=set)

    def record(self, section, check, status, detail=""):
        if status is True:
            status = "pass"
        elif status is False:
            status = "fail"
        self.checks.append({"section": section, "check": check, "status": status, "detail": str(detail)})
        log = LOG.warning if status in ("fail", "diverges") else LOG.info
        log(f"[{section}] {check}: {status} {detail}".rstrip())

    @property
    def passed(self):
        return all(row["status"] != "fail" for row in self.checks)

    def table(self):
        return pd.DataFrame(self.checks, columns=["section", "check", "status", "detail"])

    def quantum(self, type_text, word):
        """(order, relations, cone) of a word, computed once per run."""
        key = (type_text, word)
        if key not in self._cones:
            rs = build_root_system(type_text)
            order = convex_order(rs, word)
            cfg = self.config
            relations = ls_relations(
                order, mode=cfg.mode, seed=cfg.seed, jobs=cfg.jobs, cache_file=cfg.cache_file,
                time_budget=cfg.time_budget, progress=False,
            )
            self._cones[key] = (order, relations, cone_from_relations(order, relations))
        return self._cones[key]

    def cone(self, type_text, word):
        return self.quantum(type_text, word)[2]


###################################################################################################
# Shared checks
###################################################################################################


def _fundamentals_monomial(run, section, rs, d, name):
    basis = chevalley_basis(rs)
    sets = {}
    for i in range(rs.rank):
        fm = FilteredModule(rs, fundamental_weight(rs.rank, i), d)
        run.record(section, f"{name}: V(w_{i + 1}) carries the Chevalley structure constants",
                   fm.module.check_brackets(basis))
        sets[i] = fm.monomial_set()
        run.record(section, f"{name}: I^d(w_{i + 1}) monomial", fm.is_monomial,
                   f"#S = {len(sets[i])}, dim = {fm.module.dim}")
    return sets


def _cone_sanity(run, section, type_text, word):
    if (section, type_text, word) in run._sane:
        return
    run._sane.add((section, type_text, word))
    order, relations, c = run.quantum(type_text, word)
    rs = order.rs
    inside = all(implies(c, f) for f in classical_cone(rs).forms)
    run.record(section, f"{type_text} {word}: quantum cone inside the classical cone", inside, f"{len(c)} forms")
    point = interior_lattice_point(c, order, relations)
    run.record(section, f"{type_text} {word}: inductive interior point", contains(c, point), point)


def _printed_comparison(run, section, type_text, word, printed, strict):
    computed = run.cone(type_text, word)
    _cone_sanity(run, section, type_text, word)
    div = compare_with_printed(computed, printed.cone())
    if div.equal:
        run.record(section, f"{type_text} {word}: equals the printed system", True, f"{len(computed)} forms")
        return
    detail = (f"printed not implied: {div.missing_in_computed}; computed not implied: {div.missing_in_printed}")
    run.record(section, f"{type_text} {word}: equals the printed system", "fail" if strict else "diverges", detail)


def _empty_pair(run, section, type_text, w1, w2):
    for word in (w1, w2):
        _cone_sanity(run, section, type_text, word)
    both = intersect(run.cone(type_text, w1), run.cone(type_text, w2))
    status = is_empty(both)
    ok = status.empty and status.certificate.verify(both)
    run.record(section, f"{type_text} {w1} and {w2}: empty intersection with certificate", ok,
               f"{len(status.certificate.multipliers)} forms combined" if status.empty else f"witness {status.witness}")


###################################################################################################
# Sections
###################################################################################################


def _section_4_1(run):
    rs = build_root_system("A2")
    for word in ("121", "212"):
        _cone_sanity(run, "4.1", "A2", word)
        run.record("4.1", f"A2 {word}: quantum cone equals the classical cone",
                   cone_equal(run.cone("A2", word), classical_cone(rs)))
    rel = ls_relation(convex_order(rs, "121"), 0, 2, mode="exact")
    run.record("4.1", "A2 121: F_{2,2} F_{1,1} relation has support {F_{1,2}}", rel.support == [(0, 1, 0)],
               rel.describe())
    printed = PRINTED[("C2", "1212")]
    for word in printed.words:
        _printed_comparison(run, "4.1", "C2", word, printed, strict=True)
    order = convex_order(build_root_system("C2"), "1212")
    expected = {
        (0, 2): {(0, 1, 0, 0): LaurentQ({1: 1, -1: 1})},
        (1, 3): {(0, 0, 2, 0): LaurentQ({-2: 1, 0: -1})},
        (0, 1): {},
        (2, 3): {},
    }
    for (i, j), terms in expected.items():
        rel = ls_relation(order, i, j, mode="exact")
        run.record("4.1", f"C2 1212: relation ({i + 1},{j + 1})", rel.terms == terms, rel.describe())


def _section_4_2(run):
    for type_text, w1, w2 in (("A3", "121321", "132312"), ("B3", "121321323", "132321232"),
                              ("C3", "123212323", "132321232")):
        _empty_pair(run, "4.2", type_text, w1, w2)
    rs = build_root_system("A3")
    pairs = []
    for word in reduced_words_of_w0(rs):
        for _, swapped in commuting_swaps(rs, word):
            if (swapped, word) not in pairs:
                pairs.append((word, swapped))
        if len(pairs) >= 3:
            break
    for word, swapped in pairs[:3]:
        a, b = format_word(word), format_word(swapped)
        _cone_sanity(run, "4.2", "A3", a)
        _cone_sanity(run, "4.2", "A3", b)
        run.record("4.2", f"A3 {a} and {b}: commuting swap gives the same cone",
                   cone_equal(run.cone("A3", a), run.cone("A3", b)))


def _section_5_1(run):
    rs = build_root_system("A3")
    order = convex_order(rs, "123212")
    for name, values, monomial in (("d", (1, 1, 1, 1, 1, 1), False), ("d'", (2, 2, 1, 1, 1, 1), True),
                                   ("d''", (1, 1, 1, 1, 1, 2), True)):
        d = order.vector_to_canonical(values)
        local = all(
            FilteredModule(rs, fundamental_weight(3, i), d).is_monomial for i in range(rs.rank)
        )
        run.record("5.1", f"A3 {name} = {values}: locally monomial is {monomial}", local == monomial)
        run.record("5.1", f"A3 {name}: four-root criterion agrees", an_local_criterion(rs, d) == monomial)
    rs4 = build_root_system("A4")
    d = degree_from_labels(
        rs4, {label: 2 ** (3 - (int(label.split(",")[1]) - int(label.split(",")[0]))) for label in rs4.labels}
    )
    check = minkowski_global_check(rs4, d, (1, 1, 1, 1), direct_bound=0)
    run.record("5.1", "A4 d_{i,j} = 2^(3-(j-i)): Minkowski sum has 1023 points against dimension 1024",
               check.sum_count == 1023 and check.dim == 1024, f"{check.sum_count} vs {check.dim}")


def _section_5_2(run):
    for n in (2, 3, 4):
        rs = build_root_system(f"A{n}")
        d = canonical_degree(rs)
        sets = _fundamentals_monomial(run, "5.2", rs, d, f"A{n} canonical degree")
        for i, S in sets.items():
            fflv = fflv_lattice_set(rs, fundamental_weight(n, i))
            run.record("5.2", f"A{n}: S(w_{i + 1}) is the FFLV lattice set", set(S) == fflv)
        _global_checks(run, "5.2", rs, d, sets, f"A{n} canonical degree")


def _section_5_3(run):
    for n in (2, 3):
        rs = build_root_system(f"C{n}")
        d = canonical_degree(rs)
        sets = _fundamentals_monomial(run, "5.3", rs, d, f"C{n} canonical degree")
        _global_checks(run, "5.3", rs, d, sets, f"C{n} canonical degree")
        for i, S in sets.items():
            fflv = fflv_lattice_set(rs, fundamental_weight(n, i))
            run.record("5.3", f"C{n}: S(w_{i + 1}) is the FFLV lattice set", set(S) == fflv)
        facts = cn_obstruction(n)
        run.record("5.3", f"C{n}: canonical degree violates the rank 2 quantum inequality", facts["violated"],
                   {k: v for k, v in facts.items() if k != "violated"})


def _to_sp4(rs, s):
    return tuple(s[rs.index[root_by_label(rs, label)]] for label in SP4_COORDINATES)


def _section_5_4(run):
    rs = build_root_system("C2")
    d = degree_from_labels(rs, {"1,1": 1, "1,1bar": 1, "1,2": 1, "2,2": 2})
    sets = _fundamentals_monomial(run, "5.4", rs, d, "C2 d = (1,1,1,2)")
    for i, S in sets.items():
        m = fundamental_weight(2, i)
        run.record("5.4", f"C2: S(w_{i + 1}) is SP4{m}",
                   {_to_sp4(rs, s) for s in S} == lattice_points(sp4_polytope(*m)))
    bad = []
    for m1 in range(4):
        for m2 in range(4):
            if m1 + m2 == 0:
                continue
            check = minkowski_global_check(rs, d, (m1, m2), direct_bound=run.config.direct_check_dim,
                                           monomial_sets=sets)
            if not (check.passed and check.sum_count == sp4_count(m1, m2) and check.direct in (None, True)):
                bad.append((m1, m2))
    run.record("5.4", "C2: Minkowski sums match sp4_count and dim V for m1, m2 <= 3", not bad, bad or "")
    bad_n = [(a, b) for a in range(13) for b in range(13) if count_N(a, b) != len(lattice_points(p_ab_polytope(a, b)))]
    run.record("5.4", "N(a, b) closed form against enumeration, a, b <= 12", not bad_n, bad_n or "")
    bad_s = [(a, b) for a in range(5) for b in range(5) if sp4_count(a, b) != len(lattice_points(sp4_polytope(a, b)))]
    run.record("5.4", "SP4 count formula against enumeration, m1, m2 <= 4", not bad_s, bad_s or "")


def _global_checks(run, section, rs, d, sets, name):
    bad = []
    for lam in dominant_weights(rs.rank, run.config.lambda_height_cap, 1):
        check = minkowski_global_check(rs, d, lam, direct_bound=run.config.direct_check_dim, monomial_sets=sets)
        if not check.passed or check.direct is False:
            bad.append(lam)
    run.record(section, f"{name}: Minkowski test for |lam| <= {run.config.lambda_height_cap}", not bad, bad or "")


def _section_5_5(run):
    rs = build_root_system("D4")
    d = canonical_degree(rs)
    run.record("5.5", f"D4 degree {D4_DEGREE} along {D4_WORD} is in the classical cone",
               contains(classical_cone(rs), d))
    sets = _fundamentals_monomial(run, "5.5", rs, d, "D4 degree")
    _global_checks(run, "5.5", rs, d, sets, "D4 degree")


def _section_5_6(run):
    rs = build_root_system("B3")
    d = canonical_degree(rs)
    _fundamentals_monomial(run, "5.6", rs, d, "B3 degree")
    facts = b3_gr_facts(d)
    run.record("5.6", "B3: one-dimensional weight space", facts["weight_space_dim"] == 1)
    run.record("5.6", "B3: f_{1,2} f_{1,3bar} v survives", facts["f12_f13bar_nonzero"])
    run.record("5.6", "B3: f_{1,3}^2 v vanishes in the associated graded", facts["f13_squared_zero"])


def _section_5_7(run):
    rs = build_root_system("G2")
    d = canonical_degree(rs, "global")
    _fundamentals_monomial(run, "5.7", rs, d, "G2 global degree")
    _cone_sanity(run, "5.7", "G2", "121212")
    run.record("5.7", "G2 global degree lies outside the quantum cone of 121212",
               not contains(run.cone("G2", "121212"), d))
    run.record("5.7", "G2 global degree for every degree function of the basis", "info",
               "only the printed degree function is checked")


def _section_5_8(run):
    rs = build_root_system("G2")
    d = canonical_degree(rs, "local")
    sets = _fundamentals_monomial(run, "5.8", rs, d, "G2 local degree")
    run.record("5.8", "G2 local degree: #S(w_2) = 14", len(sets[1]) == 14, len(sets[1]))
    hull = hull_lattice_points(sets[1])
    run.record("5.8", "G2 local degree: conv S(w_2) has 16 lattice points", len(hull) == 16, len(hull))
    for row in g2_conjecture_table(max_m=min(2, run.config.lambda_height_cap), progress=False).to_dict("records"):
        run.record("5.8", f"G2 Minkowski experiment at ({row['m1']}, {row['m2']})", "info",
                   f"dim {row['dim']}, sumset {row['sumset']}, dilation {row['dilation']}")


def _section_6_1(run):
    printed = PRINTED[("G2", "121212")]
    for word in printed.words:
        _printed_comparison(run, "6.1", "G2", word, printed, strict=True)


def _section_6_2(run):
    rs = build_root_system("A3")
    allowed = (LaurentQ({1: 1, -1: -1}), LaurentQ({1: -1, -1: 1}))
    for word, (a, b), support in A3_PRINTED_RELATIONS:
        order = convex_order(rs, word)
        pos = sorted(order.position[root_by_label(rs, x)] for x in (a, b))
        rel = ls_relation(order, pos[0], pos[1], mode="exact")
        s = [0] * order.N
        for label in support:
            s[order.position[root_by_label(rs, label)]] += 1
        ok = list(rel.terms) == [tuple(s)] and rel.terms[tuple(s)] in allowed
        run.record("6.2", f"A3 {word}: relation of F_{{{a}}}, F_{{{b}}} with coefficient +-(q - q^-1)", ok,
                   rel.describe())
    _empty_pair(run, "6.2", "A3", A3_PRINTED_RELATIONS[0][0], A3_PRINTED_RELATIONS[1][0])


def _section_6_3(run):
    for key in (("B3", "121321323"), ("B3", "132321232")):
        _printed_comparison(run, "6.3", *key, PRINTED[key], strict=False)
    _empty_pair(run, "6.3", "B3", "121321323", "132321232")


def _section_6_4(run):
    for key in (("C3", "123212323"), ("C3", "132321232")):
        _printed_comparison(run, "6.4", *key, PRINTED[key], strict=False)
    _empty_pair(run, "6.4", "C3", "123212323", "132321232")
    found = minimal_lattice_points(run.cone("C3", "123212323"), cap=run.config.search_sum_cap, progress=False)
    printed = sorted(printed_vector("C3", p, C3_ALIASES) for p in C3_MINIMAL_POINTS)
    run.record("6.4", "C3 123212323: minimal lattice points are the four printed vectors", found == printed,
               found)


def _section_6_5(run):
    key = ("D4", D4_WORD)
    _printed_comparison(run, "6.5", *key, PRINTED[key], strict=False)
    d = printed_vector("D4", D4_DEGREE, word=D4_WORD)
    run.record("6.5", f"D4: {D4_DEGREE} lies in the quantum cone", contains(run.cone(*key), d))


_RUNNERS = {
    "4.1": _section_4_1, "4.2": _section_4_2, "5.1": _section_5_1, "5.2": _section_5_2, "5.3": _section_5_3,
    "5.4": _section_5_4, "5.5": _section_5_5, "5.6": _section_5_6, "5.7": _section_5_7, "5.8": _section_5_8,
    "6.1": _section_6_1, "6.2": _section_6_2, "6.3": _section_6_3, "6.4": _section_6_4, "6.5": _section_6_5,
}


def reproduce(config, sections=None):
    """Runs the requested sections (all by default).

    Returns
    -------
    Reproduction
        Checks with status pass, fail, diverges (published table differs) or info
    """
    sections = list(SECTIONS) if not sections or "all" in sections else list(sections)
    for s in sections:
        if s not in _RUNNERS:
            raise ValueError(f"Unknown section '{s}' (supported: {', '.join(SECTIONS)}, all)")
    run = Reproduction(config)
    for s in sections:
        LOG.info(f"Reproducing section {s}")
        _RUNNERS[s](run)
    return run
