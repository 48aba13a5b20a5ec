# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Command line entry point: one subcommand per computation, text/json/csv output.
#
# Author(s): degcones developers
# Last modified: 10/2026


import argparse
import json
import logging
import sys

import pandas as pd

from ..cone import (classical_cone, compare_with_printed, cone_equal, contains, interior_lattice_point, intersect,
                    is_empty, minimal_lattice_points)
from ..poly import (count_N, dyck_paths, enumerate_many, fflv_lattice_set, g2_conjecture_table,
                    hull_lattice_points, lattice_points, p_ab_polytope, sp4_count, sp4_polytope)
from ..quantum import cone_from_relations, ls_relations
from ..rep import (FilteredModule, build_irrep, canonical_degree, chevalley_basis, fundamental_weight,
                   minkowski_global_check)
from ..roots import (build_root_system, commuting_swaps, convex_order, designated_word, dominant_weights,
                     format_word, parse_word, reduced_words_of_w0, weyl_dim)
from .config import FORMATS, MODES, load_config
from .reference import PRINTED
from .reproduce import SECTIONS, reproduce

LOG = logging.getLogger("degcones-cli")
LOG.setLevel("INFO")
logging.basicConfig(
    format="%(asctime)s %(levelname)-8s %(message)s",
    level=logging.INFO,
    datefmt="%Y-%m-%d %H:%M:%S",
)

__all__ = ["main", "run", "build_parser", "Outcome"]


class Outcome:
    """What a subcommand produced: a JSON payload, an optional table, text lines and a pass flag."""

    def __init__(self, payload, table=None, lines=None, ok=True):
        self.payload = payload
        self.table = table
        self.lines = lines
        self.ok = ok

    def render(self, fmt):
        if fmt == "json":
            return json.dumps(self.payload, indent=1, sort_keys=True, default=str)
        table = self.table if self.table is not None else pd.DataFrame([self.payload])
        if fmt == "csv":
            return table.to_csv(index=False)
        if self.lines is not None:
            return "\n".join(self.lines)
        return table.to_string(index=False)


###################################################################################################
# Argument helpers
###################################################################################################


def _root_system(cfg):
    return build_root_system(cfg.type_text)


def _order(cfg, rs, word=None):
    word = word if word is not None else cfg.word
    return convex_order(rs, word if word is not None else designated_word(rs))


def _ints(text):
    return tuple(int(x) for x in str(text).replace(" ", "").split(",") if x != "")


def _degree(cfg, rs):
    """Degree vector in canonical coordinates from --degree (and --degree-word)."""
    assert cfg.degree is not None, "ERROR: --degree is required!"
    if cfg.degree in ("canonical", "global", "local"):
        return canonical_degree(rs, "local" if cfg.degree == "local" else "global")
    values = _ints(cfg.degree)
    assert len(values) == rs.N, f"ERROR: --degree needs {rs.N} values for {rs}, got {len(values)}!"
    if cfg.degree_word is not None:
        return convex_order(rs, cfg.degree_word).vector_to_canonical(values)
    return values


def _weights(cfg, rs, args):
    if getattr(args, "fundamentals", False):
        return [fundamental_weight(rs.rank, i) for i in range(rs.rank)]
    if cfg.lam is not None:
        lam = _ints(cfg.lam)
        assert len(lam) == rs.rank, f"ERROR: --lam needs {rs.rank} entries!"
        return [lam]
    return dominant_weights(rs.rank, cfg.lambda_height_cap, 1)


def _quantum(cfg, order, progress=True):
    relations = ls_relations(order, mode=cfg.mode, seed=cfg.seed, jobs=cfg.jobs, cache_file=cfg.cache_file,
                             time_budget=cfg.time_budget, progress=progress)
    return relations, cone_from_relations(order, relations)


def _cone_outcome(c, extra=None):
    payload = {"ambient": list(c.ambient), "forms": [list(f.coeffs) for f in c.forms], **(extra or {})}
    lines = [f"{k}: {v}" for k, v in sorted((extra or {}).items())] + c.describe()
    return Outcome(payload, pd.DataFrame({"inequality": c.describe()}), lines)


###################################################################################################
# Subcommands
###################################################################################################


def cmd_roots(cfg, args):
    rs = _root_system(cfg)
    rows = [
        {"index": k, "label": rs.label(beta), "root": rs.label(beta, "math"), "coefficients": list(beta),
         "height": rs.height(beta)}
        for k, beta in enumerate(rs.positive_roots)
    ]
    return Outcome(rs.to_json(), pd.DataFrame(rows))


def cmd_words(cfg, args):
    rs = _root_system(cfg)
    if cfg.word is not None:
        order = _order(cfg, rs)
        rows = [{"position": t + 1, "letter": i + 1, "root": rs.label(beta)}
                for t, (i, beta) in enumerate(zip(order.word, order.betas))]
        swaps = [format_word(w) for _, w in commuting_swaps(rs, order.word)]
        payload = {"word": format_word(order.word), "convex_order": order.labels(), "convex": order.is_convex(),
                   "commuting_swaps": swaps}
        return Outcome(payload, pd.DataFrame(rows))
    words = [format_word(w) for w in reduced_words_of_w0(rs, limit=args.limit)]
    return Outcome({"type": str(rs), "words": words}, pd.DataFrame({"word": words}))


def cmd_cone_classical(cfg, args):
    return _cone_outcome(classical_cone(_root_system(cfg)))


def cmd_cone_quantum(cfg, args):
    rs = _root_system(cfg)
    order = _order(cfg, rs)
    _, c = _quantum(cfg, order, progress=not args.no_progress)
    extra = {"word": format_word(order.word)}
    printed = PRINTED.get((str(rs), format_word(order.word)))
    if printed is None:
        printed = next((p for p in PRINTED.values()
                        if p.cartan_type == str(rs) and format_word(order.word) in p.words), None)
    out = _cone_outcome(c, extra)
    if printed is not None:
        div = compare_with_printed(c, printed.cone())
        out.payload["printed_equal"] = div.equal
        out.lines.append(f"published system: {'equal' if div.equal else 'differs'}")
    return out


def cmd_ls_relations(cfg, args):
    rs = _root_system(cfg)
    order = _order(cfg, rs)
    relations, _ = _quantum(cfg, order, progress=not args.no_progress)
    rows = [{"i": r.i + 1, "j": r.j + 1, "relation": r.describe()} for r in relations]
    return Outcome({"word": format_word(order.word), "relations": [r.to_json() for r in relations]},
                   pd.DataFrame(rows), [r.describe() for r in relations])


def cmd_cone_empty(cfg, args):
    rs = _root_system(cfg)
    c = _quantum(cfg, _order(cfg, rs), not args.no_progress)[1]
    if args.word2 is not None:
        c = intersect(c, _quantum(cfg, _order(cfg, rs, args.word2), not args.no_progress)[1])
    status = is_empty(c)
    payload = {"empty": status.empty}
    lines = [f"empty: {status.empty}"]
    if status.empty:
        payload["certificate"] = {str(k + 1): m for k, m in sorted(status.certificate.multipliers.items())}
        payload["verified"] = status.certificate.verify(c)
        lines.append(status.certificate.describe(c))
    else:
        payload["witness"] = list(status.witness)
        lines.append(f"witness: {list(status.witness)}")
    return Outcome(payload, lines=lines, ok=True)


def cmd_cone_equal(cfg, args):
    rs = _root_system(cfg)
    assert args.word2 is not None, "ERROR: cone-equal needs --word2!"
    a = _quantum(cfg, _order(cfg, rs), not args.no_progress)[1]
    b = _quantum(cfg, _order(cfg, rs, args.word2), not args.no_progress)[1]
    equal = cone_equal(a, b)
    return Outcome({"equal": equal}, lines=[f"equal: {equal}"])


def cmd_interior_point(cfg, args):
    rs = _root_system(cfg)
    order = _order(cfg, rs)
    relations, c = _quantum(cfg, order, not args.no_progress)
    point = interior_lattice_point(c, order, relations)
    return Outcome({"point": list(point), "contains": contains(c, point)}, lines=[f"point: {list(point)}"])


def cmd_minimal_points(cfg, args):
    rs = _root_system(cfg)
    c = _quantum(cfg, _order(cfg, rs), not args.no_progress)[1]
    points = minimal_lattice_points(c, cap=cfg.search_sum_cap, progress=not args.no_progress)
    return Outcome({"ambient": list(rs.labels), "points": [list(p) for p in points]},
                   pd.DataFrame(points, columns=list(rs.labels)))


def cmd_irrep(cfg, args):
    rs = _root_system(cfg)
    basis = chevalley_basis(rs)
    rows = []
    for lam in _weights(cfg, rs, args):
        module = build_irrep(rs, lam)
        module.check_brackets(basis)
        for nu, r in sorted(module.dims.items(), key=lambda x: (sum(x[0]), x[0])):
            rows.append({"lambda": list(lam), "weight": list(module.weight(nu)), "depth": list(nu),
                         "multiplicity": r})
    return Outcome({"type": str(rs), "chevalley_constants": len(basis.ff), "weights": rows}, pd.DataFrame(rows))


def cmd_monomial_check(cfg, args):
    rs = _root_system(cfg)
    d = _degree(cfg, rs)
    rows, payload = [], []
    for lam in _weights(cfg, rs, args):
        fm = FilteredModule(rs, lam, d)
        rows.append({"lambda": list(lam), "dim": fm.module.dim, "S": len(fm.monomial_set()),
                     "monomial": fm.is_monomial, "lemma": fm.lemma_holds, "corollary": fm.corollary_holds})
        payload.append(fm.to_json())
    ok = all(row["monomial"] for row in rows)
    return Outcome({"d": list(d), "results": payload}, pd.DataFrame(rows), ok=ok)


def cmd_minkowski_check(cfg, args):
    rs = _root_system(cfg)
    d = _degree(cfg, rs)
    sets = {}
    rows = []
    for lam in _weights(cfg, rs, args):
        check = minkowski_global_check(rs, d, lam, direct_bound=cfg.direct_check_dim, monomial_sets=sets)
        rows.append({"lambda": list(lam), "sum_count": check.sum_count, "dim": check.dim, "passed": check.passed,
                     "direct": check.direct})
    ok = all(row["passed"] and row["direct"] is not False for row in rows)
    return Outcome({"d": list(d), "results": rows}, pd.DataFrame(rows), ok=ok)


def cmd_fflv(cfg, args):
    rs = _root_system(cfg)
    rows = []
    for lam in _weights(cfg, rs, args):
        count = len(fflv_lattice_set(rs, lam))
        rows.append({"lambda": list(lam), "lattice_points": count, "dim": weyl_dim(rs, lam),
                     "agree": count == weyl_dim(rs, lam)})
    payload = {"type": str(rs), "dyck_paths": [list(p.labels(rs)) for p in dyck_paths(rs)], "counts": rows}
    return Outcome(payload, pd.DataFrame(rows), ok=all(row["agree"] for row in rows))


def cmd_sp4(cfg, args):
    pts = lattice_points(sp4_polytope(args.m1, args.m2))
    count = sp4_count(args.m1, args.m2)
    dim = weyl_dim(build_root_system("C2"), (args.m1, args.m2))
    payload = {"m1": args.m1, "m2": args.m2, "lattice_points": len(pts), "formula": count, "dim": dim}
    return Outcome(payload, ok=len(pts) == count == dim)


def cmd_counts(cfg, args):
    pairs = [(a, b) for a in range(args.max + 1) for b in range(args.max + 1)]
    counts = enumerate_many({ab: p_ab_polytope(*ab) for ab in pairs}, progress=not args.no_progress)
    rows = [{"a": a, "b": b, "formula": count_N(a, b), "enumerated": counts[(a, b)]} for a, b in pairs]
    table = pd.DataFrame(rows)
    ok = bool((table["formula"] == table["enumerated"]).all())
    return Outcome({"N": rows, "agree": ok}, table, ok=ok)


def cmd_hull(cfg, args):
    rs = _root_system(cfg)
    d = _degree(cfg, rs)
    rows = []
    for lam in _weights(cfg, rs, args):
        S = FilteredModule(rs, lam, d).monomial_set()
        rows.append({"lambda": list(lam), "S": len(S), "hull": len(hull_lattice_points(S))})
    return Outcome({"d": list(d), "results": rows}, pd.DataFrame(rows))


def cmd_g2_experiment(cfg, args):
    table = g2_conjecture_table(max_m=args.max_m, progress=not args.no_progress)
    return Outcome({"rows": table.to_dict("records")}, table)


def cmd_reproduce(cfg, args):
    run = reproduce(cfg, args.section)
    table = run.table()
    lines = [f"[{r['section']}] {r['status']:<8} {r['check']}" + (f"  ({r['detail']})" if r["detail"] else "")
             for r in run.checks]
    return Outcome({"checks": run.checks, "passed": run.passed, "seed": cfg.seed}, table, lines, ok=run.passed)


COMMANDS = {
    "roots": (cmd_roots, "Positive roots in canonical order"),
    "words": (cmd_words, "Reduced words of w0, or the convex order of --word"),
    "cone-classical": (cmd_cone_classical, "Inequalities of the classical degree cone"),
    "cone-quantum": (cmd_cone_quantum, "Inequalities of the quantum degree cone of --word"),
    "ls-relations": (cmd_ls_relations, "Straightening relations of the PBW root vectors of --word"),
    "cone-empty": (cmd_cone_empty, "Emptiness of the quantum cone of --word (intersected with --word2)"),
    "cone-equal": (cmd_cone_equal, "Equality of the quantum cones of --word and --word2"),
    "interior-point": (cmd_interior_point, "Inductive lattice point of the quantum cone"),
    "minimal-points": (cmd_minimal_points, "Lattice points of the quantum cone with minimal coordinate sum"),
    "irrep": (cmd_irrep, "Weight multiplicities of simple modules"),
    "monomial-check": (cmd_monomial_check, "Monomiality of the defining ideals for --degree"),
    "minkowski-check": (cmd_minkowski_check, "Minkowski sum test for global monomiality"),
    "fflv": (cmd_fflv, "FFLV lattice point counts against Weyl dimensions"),
    "sp4": (cmd_sp4, "Lattice points of SP4(m1, m2)"),
    "counts": (cmd_counts, "Closed-form N(a, b) against enumeration"),
    "hull": (cmd_hull, "Lattice points of the convex hull of monomial sets"),
    "g2-experiment": (cmd_g2_experiment, "G2 Minkowski sum experiment"),
    "reproduce-paper": (cmd_reproduce, "Recompute every published table and count"),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="Run configuration (.json)")
    common.add_argument("--type", dest="cartan_type", help="Cartan type letter (A, B, C, D, G)")
    common.add_argument("--rank", type=int)
    common.add_argument("--word", help="Reduced word with 1-based letters, e.g. 1212")
    common.add_argument("--word2", help="Second reduced word")
    common.add_argument("--degree", help="Comma list in canonical root order, or canonical/global/local")
    common.add_argument("--degree-word", dest="degree_word", help="Read --degree along this word's convex order")
    common.add_argument("--lam", help="Highest weight as a comma list")
    common.add_argument("--fundamentals", action="store_true", help="Use every fundamental weight")
    common.add_argument("--mode", choices=MODES)
    common.add_argument("--seed", type=int)
    common.add_argument("--jobs", type=int)
    common.add_argument("--cache", dest="cache_file", help="Relation cache file (.json)")
    common.add_argument("--time-budget", dest="time_budget", type=float)
    common.add_argument("--cap", dest="search_sum_cap", type=int, help="Largest coordinate sum searched")
    common.add_argument("--height-cap", dest="lambda_height_cap", type=int, help="Largest |lam| checked")
    common.add_argument("--out", help="Output file (default: stdout)")
    common.add_argument("--format", dest="fmt", choices=FORMATS)
    common.add_argument("--no-progress", action="store_true")

    parser = argparse.ArgumentParser(prog="degcones", description="Degree cones and monomial bases of simple Lie algebras")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "words":
            p.add_argument("--limit", type=int, default=20)
        elif name == "sp4":
            p.add_argument("--m1", type=int, required=True)
            p.add_argument("--m2", type=int, required=True)
        elif name == "counts":
            p.add_argument("--max", type=int, default=12)
        elif name == "g2-experiment":
            p.add_argument("--max-m", dest="max_m", type=int, default=2)
        elif name == "reproduce-paper":
            p.add_argument("--section", action="append", choices=list(SECTIONS) + ["all"])
    return parser


def main(argv=None):
    """Runs one subcommand; returns 0 on success, 1 for failed checks, 2 for usage errors."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    keys = ("cartan_type", "rank", "word", "degree", "degree_word", "lam", "mode", "seed", "jobs", "cache_file",
            "time_budget", "search_sum_cap", "lambda_height_cap", "out", "fmt")
    try:
        cfg = load_config(args.config, {k: getattr(args, k) for k in keys})
        if cfg.word is not None:
            parse_word(cfg.word)
        outcome = COMMANDS[args.command][0](cfg, args)
    except (AssertionError, ValueError) as e:
        LOG.error(str(e))
        return 2
    except (RuntimeError, TimeoutError) as e:
        LOG.error(str(e))
        return 1
    text = outcome.render(cfg.fmt)
    if cfg.out is not None:
        with open(cfg.out, "w") as f:
            f.write(text + "\n")
        LOG.info(f"Output written to {cfg.out}")
    else:
        print(text)
    return 0 if outcome.ok else 1


def run():
    sys.exit(main())
