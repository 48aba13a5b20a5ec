# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Levendorskii-Soibelman straightening relations between PBW root vectors and the
# quantum degree cones they cut out, with a resumable relation cache.
#
# Author(s): degcones developers
# Last modified: 10/2026


import json
import logging
import os
import time
from dataclasses import dataclass
from fractions import Fraction

import joblib
from tqdm import tqdm

from ..cone import StrictCone
from ..exact import make_field, resolve_mode
from ..roots import build_root_system, convex_order, format_word
from .qpbw import monomial_builder, pbw_solve

LOG = logging.getLogger("degcones-quantum")
LOG.setLevel("INFO")
logging.basicConfig(
    format="%(asctime)s %(levelname)-8s %(message)s",
    level=logging.INFO,
    datefmt="%Y-%m-%d %H:%M:%S",
)

__all__ = [
    "LSRelation", "RelationCache", "ls_relation", "ls_relations", "cone_from_relations",
    "quantum_degree_cone", "root_vector_label",
]

NONZERO = "nonzero@q0"


def root_vector_label(rs, beta):
    """'F_{1,1̄}' style name of a PBW root vector."""
    return "F_{" + rs.label(beta).replace("bar", "̄") + "}"


@dataclass
class LSRelation:
    """F_{beta_j} F_{beta_i} - q^{qpow} F_{beta_i} F_{beta_j} = sum_s c_s F^{(s)}.

    Attributes
    ----------
    order : ConvexOrder
    i, j : int
        0-based positions, i < j
    qpow : int
        -(beta_i, beta_j)
    terms : dict
        Exponent vector s (length N, zero outside i+1..j-1) -> coefficient of the
        divided-power monomial F^{(s)}: LaurentQ in exact mode, Fraction at the first
        q0 in specialized mode, str when loaded from a cache file
    mode : str
        'exact' or 'specialized'
    q0 : tuple
        Specialization points (specialized mode only)
    """

    order: object
    i: int
    j: int
    qpow: int
    terms: dict
    mode: str = "exact"
    q0: tuple = ()

    @property
    def support(self):
        return sorted(self.terms)

    @property
    def weight(self):
        bi, bj = self.order.betas[self.i], self.order.betas[self.j]
        return tuple(a + b for a, b in zip(bi, bj))

    def check(self):
        """Weight constraint and support strictly between i and j."""
        for s in self.terms:
            if any(s[t] for t in range(self.order.N) if not self.i < t < self.j):
                raise RuntimeError(f"Relation ({self.i},{self.j}) of {self.order} has support {s} outside the window")
            total = [0] * self.order.rs.rank
            for t, m in enumerate(s):
                for k, c in enumerate(self.order.betas[t]):
                    total[k] += m * c
            if tuple(total) != self.weight:
                raise RuntimeError(f"Relation ({self.i},{self.j}) of {self.order} has support {s} of wrong weight")
        return True

    def forms(self):
        """One integer vector in canonical coordinates per support monomial."""
        out = []
        for s in self.support:
            vec = [0] * self.order.N
            vec[self.i] += 1
            vec[self.j] += 1
            for t, m in enumerate(s):
                vec[t] -= m
            out.append(self.order.vector_to_canonical(vec))
        return out

    def coefficient_text(self, s):
        c = self.terms[s]
        if self.mode == "specialized" and not isinstance(c, str):
            return NONZERO
        return str(c)

    def describe(self):
        rs = self.order.rs
        fi = root_vector_label(rs, self.order.betas[self.i])
        fj = root_vector_label(rs, self.order.betas[self.j])
        lhs = f"{fj}{fi} - q^{self.qpow} {fi}{fj}" if self.qpow else f"{fj}{fi} - {fi}{fj}"
        if not self.terms:
            return f"{lhs} = 0"
        parts = []
        for s in self.support:
            mono = ""
            for t, m in enumerate(s):
                if m:
                    name = root_vector_label(rs, self.order.betas[t])
                    mono += name if m == 1 else f"{name}^({m})"
            parts.append(f"({self.coefficient_text(s)}) {mono}")
        return f"{lhs} = " + " + ".join(parts)

    def to_json(self):
        rs = self.order.rs
        return {
            "type": str(rs.cartan_type),
            "word": format_word(self.order.word),
            "i": self.i,
            "j": self.j,
            "qpow": self.qpow,
            "mode": self.mode,
            "q0": list(self.q0),
            "terms": [{"n": list(s[self.i + 1 : self.j]), "coeff": self.coefficient_text(s)} for s in self.support],
        }

    @classmethod
    def from_json(cls, order, data):
        i, j = int(data["i"]), int(data["j"])
        terms = {}
        for term in data["terms"]:
            s = [0] * order.N
            s[i + 1 : j] = term["n"]
            terms[tuple(s)] = term["coeff"]
        rel = cls(order, i, j, int(data["qpow"]), terms, data.get("mode", "exact"), tuple(data.get("q0", ())))
        rel.check()
        return rel


def _relation_coefficients(order, i, j, field, method, candidates):
    """Divided-power coefficients of the relation (i, j) over one scalar field."""
    rs = order.rs
    bi, bj = order.betas[i], order.betas[j]
    qpow = -rs.bilinear(bi, bj)
    builder = monomial_builder(order, field, method == "shuffle")
    target = dict(builder.build((j, i)))
    factor = field.q_pow(qpow)
    for w, c in builder.build((i, j)).items():
        val = target.get(w, field.zero) - factor * c
        if val:
            target[w] = val
        else:
            target.pop(w, None)
    nu = tuple(a + b for a, b in zip(bi, bj))
    positions = range(i + 1, j) if candidates == "between" else None
    coeffs = pbw_solve(order, field, nu, target, method, positions)
    out = {}
    for s, c in coeffs.items():
        norm = field.one
        for t, m in enumerate(s):
            if m:
                norm = norm * field.qfactorial(m, rs.bilinear(order.betas[t], order.betas[t]) // 2)
        out[s] = c * norm
    return qpow, out


def ls_relation(order, i, j, mode="auto", seed=0, method="shuffle", candidates="between"):
    """Levendorskii-Soibelman relation between F_{beta_i} and F_{beta_j}.

    Parameters
    ----------
    order : ConvexOrder
    i, j : int
        Positions with i < j
    mode : str
        'exact', 'specialized' or 'auto'
    seed : int
        Seed of the q0 draws in specialized mode
    method : str
        'shuffle' (quantum shuffle image) or 'serre' (Serre ideal components)
    candidates : str
        'between' solves over monomials on positions i+1..j-1, which is the unique
        expansion whenever it is consistent; 'all' solves over every monomial of the weight

    Returns
    -------
    LSRelation

    Raises
    ------
    RuntimeError
        On support outside the window, an inconsistent system, or disagreement of
        the two specialization points
    """
    assert 0 <= i < j < order.N, f"ERROR: Need 0 <= i < j < {order.N}, got ({i}, {j})!"
    if candidates not in ("between", "all"):
        raise ValueError(f"Unknown candidate set '{candidates}' (supported: between, all)")
    fields = make_field(mode, seed, order.rs.rank)
    runs = []
    for fld in fields:
        qpow, coeffs = _relation_coefficients(order, i, j, fld, method, candidates)
        runs.append(coeffs)
    if len(runs) == 2 and set(runs[0]) != set(runs[1]):
        raise RuntimeError(
            f"Supports of relation ({i},{j}) of {order} disagree between q0={fields[0].q0} and q0={fields[1].q0}"
        )
    if fields[0].name == "exact":
        terms = {s: fields[0].to_laurent(c) for s, c in runs[0].items()}
        rel = LSRelation(order, i, j, qpow, terms, "exact")
    else:
        terms = {s: Fraction(c) for s, c in runs[0].items()}
        rel = LSRelation(order, i, j, qpow, terms, "specialized", tuple(str(f.q0) for f in fields))
    rel.check()
    return rel


###################################################################################################
# Relation cache
###################################################################################################


class RelationCache:
    """JSON file of relations keyed by 'type|word|mode|i|j', flushed on demand.

    The mode segment is 'exact' or 'specialized@<seed>', so runs over different
    fields never share entries.
    """

    def __init__(self, path, mode="exact", seed=0):
        self.path = path
        self.tag = "exact" if mode == "exact" else f"{mode}@{seed}"
        self.data = {}
        if path is not None and os.path.exists(path):
            with open(path, "r") as f:
                self.data = json.load(f)
            LOG.info(f"Loaded {len(self.data)} cached relations from {path}")

    def key(self, order, i, j):
        return f"{order.rs.cartan_type}|{format_word(order.word)}|{self.tag}|{i}|{j}"

    def get(self, order, i, j):
        data = self.data.get(self.key(order, i, j))
        if data is None:
            return None
        return LSRelation.from_json(order, data)

    def put(self, rel):
        self.data[self.key(rel.order, rel.i, rel.j)] = rel.to_json()

    def flush(self):
        if self.path is None:
            return
        tmp = f"{self.path}.tmp"
        with open(tmp, "w") as f:
            json.dump(self.data, f, indent=1, sort_keys=True)
        os.replace(tmp, self.path)


def _relation_job(type_text, word, i, j, mode, seed, method):
    rs = build_root_system(type_text)
    order = convex_order(rs, word)
    return ls_relation(order, i, j, mode=mode, seed=seed, method=method).to_json()


def ls_relations(order, mode="auto", seed=0, jobs=1, cache_file=None, time_budget=None, progress=True,
                 method="shuffle"):
    """All relations (i, j), i < j, of a convex order, merged in sorted pair order.

    Parameters
    ----------
    order : ConvexOrder
    jobs : int
        Worker processes (joblib); 1 computes in-process
    cache_file : str, optional
        Relation cache to resume from and to extend
    time_budget : float, optional
        Seconds; exceeding it flushes the cache and raises TimeoutError. With jobs > 1
        it is checked between batches of 4 * jobs pairs

    Returns
    -------
    list
        LSRelation per pair
    """
    mode = resolve_mode(mode, order.rs.rank)
    cache = RelationCache(cache_file, mode, seed)
    pairs = [(i, j) for i in range(order.N) for j in range(i + 1, order.N)]
    results = {}
    todo = []
    for pair in pairs:
        rel = cache.get(order, *pair)
        if rel is not None:
            results[pair] = rel
        else:
            todo.append(pair)
    LOG.info(f"{order}: {len(pairs)} pairs, {len(results)} cached, {len(todo)} to compute")
    start = time.monotonic()

    def check_budget(n_done):
        if time_budget is not None and time.monotonic() - start >= time_budget:
            raise TimeoutError(f"Time budget of {time_budget}s exhausted after {n_done} new relations")

    try:
        if jobs > 1 and todo:
            # budget checked between batches
            size = 4 * jobs
            with joblib.Parallel(n_jobs=jobs) as parallel:
                for lo in tqdm(range(0, len(todo), size), disable=not progress, desc=str(order)):
                    check_budget(lo)
                    chunk = todo[lo : lo + size]
                    out = parallel(
                        joblib.delayed(_relation_job)(str(order.rs.cartan_type), order.word, i, j, mode, seed,
                                                      method)
                        for i, j in chunk
                    )
                    for (i, j), data in zip(chunk, out):
                        results[(i, j)] = LSRelation.from_json(order, data)
                        cache.data[cache.key(order, i, j)] = data
                    cache.flush()
        else:
            for n_done, (i, j) in enumerate(tqdm(todo, disable=not progress, desc=str(order))):
                check_budget(n_done)
                rel = ls_relation(order, i, j, mode=mode, seed=seed, method=method)
                results[(i, j)] = rel
                cache.put(rel)
                if n_done % 10 == 9:
                    cache.flush()
    finally:
        cache.flush()
    return [results[pair] for pair in pairs]


def cone_from_relations(order, relations):
    """d_{beta_i} + d_{beta_j} > sum_t n_t d_{beta_t} for every support monomial, in canonical coordinates."""
    forms = []
    for rel in relations:
        forms.extend(rel.forms())
    return StrictCone.build(order.rs.labels, forms)


def quantum_degree_cone(order, mode="auto", seed=0, **kwargs):
    """Quantum degree cone of a reduced word.

    Parameters
    ----------
    order : ConvexOrder
    mode : str
        'exact', 'specialized' or 'auto'
    **kwargs
        Passed on to ls_relations (jobs, cache_file, time_budget, progress, method)

    Returns
    -------
    StrictCone
    """
    return cone_from_relations(order, ls_relations(order, mode=mode, seed=seed, **kwargs))
