# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Degree filtrations on simple modules: surviving PBW monomials, monomiality of the defining
# ideal, the type A local criterion and the Minkowski sum test for global monomiality.
#
# Author(s): degcones developers
# Last modified: 10/2026


import itertools
import logging
from dataclasses import dataclass, field

import pandas as pd

from ..cone import classical_cone, contains
from ..exact import RowSpace, to_sparse
from ..quantum import pbw_monomials
from ..roots import convex_order, designated_word, weyl_dim
from .modules import build_irrep

LOG = logging.getLogger("degcones-rep")
LOG.setLevel("INFO")
logging.basicConfig(
    format="%(asctime)s %(levelname)-8s %(message)s",
    level=logging.INFO,
    datefmt="%Y-%m-%d %H:%M:%S",
)

__all__ = [
    "FilteredModule", "GlobalCheck", "is_monomial_ideal", "an_local_criterion", "minkowski_sumset",
    "minkowski_global_check", "fundamental_weight", "degree_of",
]


def fundamental_weight(rank, i):
    return tuple(1 if k == i else 0 for k in range(rank))


def degree_of(d, s):
    """deg_d(f^s) = sum_beta d_beta s_beta, both in canonical coordinates."""
    return sum(x * m for x, m in zip(d, s) if m)


class FilteredModule:
    """V(lam) filtered by the degree function d.

    For every weight the exponent vectors s of that weight are sorted by deg_d(s); s survives iff
    f^s v_lam is not in the span of the f^t v_lam with deg_d(t) < deg_d(s), i.e. iff f^s v_lam is
    nonzero in the associated graded module. f^s is evaluated as the product of root vectors in
    the convex order of a fixed reduced word.

    Parameters
    ----------
    rs : RootSystem
    lam : tuple
        Dominant weight in fundamental-weight coordinates
    d : tuple
        Degree function in canonical root coordinates, inside the classical degree cone
    order : ConvexOrder, optional
        Product order of the root vectors (default: designated word of the type)
    check_ordering : bool
        Recompute the largest weight space with the reversed product order and require the same survivors
    """

    def __init__(self, rs, lam, d, order=None, check_ordering=True):
        d = tuple(int(x) for x in d)
        assert len(d) == rs.N, f"ERROR: Degree function has {len(d)} entries, {rs} has {rs.N} positive roots!"
        assert contains(classical_cone(rs), d), f"ERROR: Degree function {d} is not in the classical degree cone!"
        self.rs = rs
        self.d = d
        self.module = build_irrep(rs, lam)
        self.lam = self.module.lam
        self.order = order if order is not None else convex_order(rs, designated_word(rs))
        self._memo = {(False, ()): (self.module.top, self.module.highest_vector())}
        self.entries = {}
        self.survivors = {}
        self.flags = {}
        for nu in sorted(self.module.dims, key=lambda nu: (sum(nu), nu)):
            self._filter_weight(nu)
        if check_ordering:
            self._check_ordering()

    def _factors(self, s_pos, reverse):
        """Root vector positions in the order they are applied to v_lam."""
        positions = range(self.order.N) if reverse else range(self.order.N - 1, -1, -1)
        return tuple(t for t in positions for _ in range(s_pos[t]))

    def _evaluate(self, factors, reverse=False):
        key = (reverse, factors)
        if key in self._memo:
            return self._memo[key][1]
        parent_key = (reverse, factors[:-1])
        if parent_key not in self._memo:
            self._evaluate(factors[:-1], reverse)
        nu, vec = self._memo[parent_key]
        vec, nu = self.module.apply_f(self.order.betas[factors[-1]], nu, vec)
        self._memo[key] = (nu, vec)
        return vec

    def vector(self, s, reverse=False):
        """f^s v_lam for s in canonical coordinates."""
        s_pos = self.order.vector_from_canonical(s)
        factors = self._factors(s_pos, reverse)
        if not factors:
            return self.module.highest_vector()
        if reverse:
            self._memo.setdefault((True, ()), self._memo[(False, ())])
        return self._evaluate(factors, reverse)

    def _survivors(self, nu, reverse=False):
        exps = [self.order.vector_to_canonical(s) for s in pbw_monomials(self.order, nu)]
        rows = sorted(((degree_of(self.d, s), s) for s in exps))
        space = RowSpace()
        out = []
        table = []
        for deg, group in itertools.groupby(rows, key=lambda x: x[0]):
            group = [s for _, s in group]
            vecs = [to_sparse(self.vector(s, reverse)) for s in group]
            for s, vec in zip(group, vecs):
                alive = bool(vec) and not space.contains(vec)
                if alive:
                    out.append(s)
                table.append({"s": s, "degree": deg, "nonzero": bool(vec), "survives": alive})
            for vec in vecs:
                if vec:
                    space.add(vec)
        return out, table

    def _filter_weight(self, nu):
        survivors, table = self._survivors(nu)
        r = self.module.dims[nu]
        self.survivors[nu] = survivors
        self.entries[nu] = table
        nonzero = [row for row in table if row["nonzero"]]
        # T_mu: greedy basis in the sorted order, ties included
        space = RowSpace()
        lemma = True
        basis_degrees = []
        for row in nonzero:
            vec = to_sparse(self.vector(row["s"]))
            if space.add(vec):
                basis_degrees.append(row["degree"])
            elif any(row["degree"] <= deg for deg in basis_degrees):
                lemma = False
        degrees = [row["degree"] for row in nonzero]
        if r == 1:
            corollary = len(degrees) < 2 or degrees[0] < degrees[1]
        else:
            corollary = len(set(degrees)) == len(degrees)
        self.flags[nu] = {"monomial": len(survivors) == r, "lemma": lemma, "corollary": corollary}

    def _check_ordering(self):
        nu = max(self.module.dims, key=lambda nu: (len(self.entries[nu]), nu))
        reverse, _ = self._survivors(nu, reverse=True)
        if sorted(reverse) != sorted(self.survivors[nu]):
            raise RuntimeError(f"Survivors at depth {nu} depend on the product order of the root vectors")

    @property
    def is_monomial(self):
        return all(f["monomial"] for f in self.flags.values())

    @property
    def lemma_holds(self):
        return all(f["lemma"] for f in self.flags.values())

    @property
    def corollary_holds(self):
        return all(f["corollary"] for f in self.flags.values())

    def monomial_set(self):
        """S(lam): all surviving exponent vectors."""
        return sorted(s for surv in self.survivors.values() for s in surv)

    def survives(self, s):
        s = tuple(s)
        nu = tuple(sum(m * beta[k] for m, beta in zip(s, self.rs.positive_roots)) for k in range(self.rs.rank))
        return s in self.survivors.get(nu, [])

    def report(self):
        """Per-weight table of multiplicity r_mu, nonzero monomials m_mu, survivors and flags."""
        rows = []
        for nu in sorted(self.module.dims, key=lambda nu: (sum(nu), nu)):
            rows.append(
                {
                    "weight": self.module.weight(nu),
                    "depth": nu,
                    "r_mu": self.module.dims[nu],
                    "m_mu": sum(1 for row in self.entries[nu] if row["nonzero"]),
                    "survivors": len(self.survivors[nu]),
                    **self.flags[nu],
                }
            )
        return pd.DataFrame(rows)

    def to_json(self):
        return {
            "type": str(self.rs.cartan_type),
            "lambda": list(self.lam),
            "d": list(self.d),
            "roots": list(self.rs.labels),
            "monomial": self.is_monomial,
            "S": [list(s) for s in self.monomial_set()],
        }


def is_monomial_ideal(rs, lam, d, order=None):
    """Decides whether the defining ideal I^d(lam) is monomial.

    Returns
    -------
    (bool, list)
        The decision and S(lam), the surviving exponent vectors in canonical coordinates
    """
    fm = FilteredModule(rs, lam, d, order=order)
    LOG.info(
        f"I^d{fm.lam} of {rs}: monomial={fm.is_monomial}, lemma condition={fm.lemma_holds}, "
        f"corollary condition={fm.corollary_holds}"
    )
    return fm.is_monomial, fm.monomial_set()


def an_local_criterion(rs, d):
    """Type A: d_a + d_b != d_c + d_e for all four distinct positive roots with a + b = c + e not a root."""
    assert rs.cartan_type.family == "A", f"ERROR: The local criterion applies to type A only, not {rs}!"
    d = tuple(d)
    roots = rs.positive_roots
    sums = {}
    for a, b in itertools.combinations(range(rs.N), 2):
        s = tuple(x + y for x, y in zip(roots[a], roots[b]))
        if s in rs.root_set:
            continue
        sums.setdefault(s, []).append((a, b))
    for pairs in sums.values():
        for (a, b), (c, e) in itertools.combinations(pairs, 2):
            if len({a, b, c, e}) == 4 and d[a] + d[b] == d[c] + d[e]:
                return False
    return True


def minkowski_sumset(sets):
    """Minkowski sum of finite lattice point sets."""
    total = None
    for pts in sets:
        pts = set(map(tuple, pts))
        if total is None:
            total = pts
        else:
            total = {tuple(a + b for a, b in zip(x, y)) for x in total for y in pts}
    return total if total is not None else set()


@dataclass
class GlobalCheck:
    lam: tuple
    sum_count: int
    dim: int
    direct: bool = None
    fundamentals: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.sum_count == self.dim

    def __bool__(self):
        return self.passed


def minkowski_global_check(rs, d, lam, direct_bound=500, monomial_sets=None):
    """Compares #(S(w_1)^{+m_1} + ... + S(w_n)^{+m_n}) with dim V(lam).

    Parameters
    ----------
    monomial_sets : dict, optional
        i -> S(w_i); computed from the filtration (and required to be monomial) when omitted
    direct_bound : int
        Also run the full monomiality test on V(lam) when dim V(lam) <= direct_bound

    Returns
    -------
    GlobalCheck
        Truthy iff the counts agree
    """
    lam = tuple(int(m) for m in lam)
    sets = dict(monomial_sets or {})
    for i, m in enumerate(lam):
        if m and i not in sets:
            ok, S = is_monomial_ideal(rs, fundamental_weight(rs.rank, i), d)
            assert ok, f"ERROR: I^d(w_{i + 1}) is not monomial, the Minkowski test does not apply!"
            sets[i] = S
    parts = []
    for i, m in enumerate(lam):
        parts.extend([sets[i]] * m)
    count = len(minkowski_sumset(parts)) if parts else 1
    dim = weyl_dim(rs, lam)
    result = GlobalCheck(lam, count, dim, fundamentals={i: len(S) for i, S in sets.items()})
    if dim <= direct_bound:
        result.direct = is_monomial_ideal(rs, lam, d)[0]
    LOG.info(f"Minkowski test for {lam} in {rs}: {count} sum points vs dimension {dim}, direct={result.direct}")
    return result
