# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Distinguished degree functions per type and the facts about them used in the monomial basis checks.
#
# Author(s): degcones developers
# Last modified: 10/2026


import logging

from ..roots import build_root_system, convex_order, root_by_label
from .monomial import FilteredModule, fundamental_weight

LOG = logging.getLogger("degcones-rep")
LOG.setLevel("INFO")
logging.basicConfig(
    format="%(asctime)s %(levelname)-8s %(message)s",
    level=logging.INFO,
    datefmt="%Y-%m-%d %H:%M:%S",
)

__all__ = ["canonical_degree", "degree_from_labels", "degree_from_order", "b3_gr_facts", "cn_obstruction"]

B3_DEGREE = {
    "1,1": 4, "1,2": 3, "2,2": 3, "1,3": 3, "1,2bar": 1, "1,3bar": 1, "2,3": 4, "2,3bar": 3, "3,3": 2,
}
G2_GLOBAL_DEGREE = {"1": 2, "1112": 1, "112": 3, "11122": 1, "12": 3, "2": 2}
G2_LOCAL_DEGREE = {"1": 2, "1112": 2, "112": 1, "11122": 2, "12": 2, "2": 5}
D4_WORD = "212324212324"
D4_DEGREE = (5, 5, 1, 2, 4, 1, 1, 2, 6, 10, 12, 20)


def degree_from_labels(rs, values):
    """Canonical degree vector from a mapping root label -> value covering all positive roots."""
    out = [None] * rs.N
    for label, value in values.items():
        out[rs.index[root_by_label(rs, label)]] = int(value)
    assert None not in out, "ERROR: Degree values do not cover every positive root!"
    return tuple(out)


def degree_from_order(rs, word, values):
    """Canonical degree vector from values listed along the convex order of a word."""
    order = convex_order(rs, word)
    assert len(values) == order.N, "ERROR: One value per positive root is needed!"
    return order.vector_to_canonical(tuple(int(v) for v in values))


def _type_a(rs):
    n = rs.rank
    out = []
    for label in rs.labels:
        i, j = (int(x) for x in label.split(","))
        out.append((j - i + 1) * (n - j + 1))
    return tuple(out)


def _type_c(rs):
    n = rs.rank
    out = []
    for label in rs.labels:
        i, rest = label.split(",")
        i = int(i)
        if rest.endswith("bar"):
            j = int(rest[:-3])
            out.append(j * (2 * n - i - j + 1))
        else:
            j = int(rest)
            out.append((2 * n - j) * (j - i + 1))
    return tuple(out)


def canonical_degree(rs, variant="global"):
    """Distinguished degree function of a type, in canonical root coordinates.

    A_n: d_{i,j} = (j-i+1)(n-j+1); C_n: d_{i,j} = (2n-j)(j-i+1), d_{i,jbar} = j(2n-i-j+1);
    B3 and D4: the degree functions with a global monomial basis; G2: 'global' or 'local'.

    Raises
    ------
    ValueError
        For an unsupported (type, variant) pair
    """
    if isinstance(rs, str):
        rs = build_root_system(rs)
    ct = rs.cartan_type
    key = (ct.family, ct.rank, variant)
    if ct.family == "A" and variant == "global":
        return _type_a(rs)
    if ct.family == "C" and ct.rank >= 2 and variant == "global":
        return _type_c(rs)
    if key == ("B", 3, "global"):
        return degree_from_labels(rs, B3_DEGREE)
    if key == ("D", 4, "global"):
        return degree_from_order(rs, D4_WORD, D4_DEGREE)
    if key == ("G", 2, "global"):
        return degree_from_labels(rs, G2_GLOBAL_DEGREE)
    if key == ("G", 2, "local"):
        return degree_from_labels(rs, G2_LOCAL_DEGREE)
    raise ValueError(f"No distinguished degree function for {ct} ({variant})")


def _exponent(rs, counts):
    s = [0] * rs.N
    for label, m in counts.items():
        s[rs.index[root_by_label(rs, label)]] += m
    return tuple(s)


def b3_gr_facts(d=None):
    """In gr V^d(w_2) of B3: f_{1,2} f_{1,3bar} v != 0 and f_{1,3}^2 v = 0 in a one-dimensional weight space."""
    rs = build_root_system("B3")
    d = canonical_degree(rs) if d is None else tuple(d)
    fm = FilteredModule(rs, fundamental_weight(3, 1), d)
    mixed = _exponent(rs, {"1,2": 1, "1,3bar": 1})
    square = _exponent(rs, {"1,3": 2})
    nu = tuple(sum(m * beta[k] for m, beta in zip(mixed, rs.positive_roots)) for k in range(3))
    return {
        "weight_space_dim": fm.module.dims.get(nu, 0),
        "f12_f13bar_nonzero": fm.survives(mixed),
        "f13_squared_zero": not fm.survives(square),
    }


def cn_obstruction(n):
    """For the canonical C_n degree: d_{n-1,n-1bar} + d_{n,n} < 2 d_{n-1,n}, against the rank 2
    quantum inequality d_{n-1,n-1bar} + d_{n,n} > 2 d_{n-1,n} of the subsystem spanned by alpha_{n-1}, alpha_n."""
    rs = build_root_system(f"C{n}")
    d = canonical_degree(rs)
    labels = (f"{n - 1},{n - 1}bar", f"{n},{n}", f"{n - 1},{n}")
    value = {label: d[rs.index[root_by_label(rs, label)]] for label in labels}
    value["violated"] = value[labels[0]] + value[labels[1]] < 2 * value[labels[2]]
    return value
