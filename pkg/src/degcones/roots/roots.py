# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Cartan data, positive roots, weights and the Weyl dimension formula.
#
# Author(s): degcones developers
# Last modified: 10/2026


import itertools
import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np
import sympy

LOG = logging.getLogger("degcones-roots")
LOG.setLevel("INFO")
logging.basicConfig(
    format="%(asctime)s %(levelname)-8s %(message)s",
    level=logging.INFO,
    datefmt="%Y-%m-%d %H:%M:%S",
)

__all__ = [
    "CartanType", "RootSystem", "build_root_system", "cartan_matrix", "symmetrizers",
    "weyl_dim", "is_dominant", "root_to_weight", "reflect_weight", "dominant_weights",
    "kostant_partition_count", "root_label", "root_by_label", "format_label",
    "dominant_conjugate", "weights_of_hull",
]

MACRON = "̄"

###################################################################################################
# Cartan types
###################################################################################################


@dataclass(frozen=True)
class CartanType:
    """Finite Cartan type (family, rank) of a simple Lie algebra.

    Supported: A_n (n >= 1), B_n (n >= 2), C_n (n >= 2), D_n (n >= 4) and G_2.
    """

    family: str
    rank: int

    def __post_init__(self):
        assert self.family in ("A", "B", "C", "D", "G"), f"ERROR: Unknown family '{self.family}' (supported: A, B, C, D, G)!"
        assert isinstance(self.rank, int) and self.rank >= 1, "ERROR: Rank must be a positive integer!"
        minimal = {"A": 1, "B": 2, "C": 2, "D": 4, "G": 2}[self.family]
        assert self.rank >= minimal, f"ERROR: Type {self.family} needs rank >= {minimal}!"
        if self.family == "G":
            assert self.rank == 2, "ERROR: Type G only exists in rank 2!"

    @classmethod
    def parse(cls, text):
        """Parses strings like 'A3', 'C2' or 'G2'."""
        text = text.strip().upper()
        assert len(text) >= 2 and text[1:].isdigit(), f"ERROR: Cannot parse Cartan type '{text}'!"
        return cls(text[0], int(text[1:]))

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(ct):
    """Cartan matrix C with entries c_ij = <alpha_i^vee, alpha_j> (Bourbaki numbering).

    Parameters
    ----------
    ct : CartanType

    Returns
    -------
    numpy.ndarray
        Integer n x n matrix
    """
    n = ct.rank
    C = 2 * np.eye(n, dtype=int)
    if ct.family == "G":
        C[0, 1], C[1, 0] = -3, -1
        return C
    if ct.family == "D":
        for i in range(n - 2):
            C[i, i + 1] = C[i + 1, i] = -1
        C[n - 3, n - 1] = C[n - 1, n - 3] = -1
        return C
    for i in range(n - 1):
        C[i, i + 1] = C[i + 1, i] = -1
    if ct.family == "B":
        C[n - 1, n - 2] = -2
    elif ct.family == "C":
        C[n - 2, n - 1] = -2
    return C


def symmetrizers(ct):
    """Symmetrizers d_i = (alpha_i, alpha_i)/2 with short roots of squared length 2."""
    n = ct.rank
    if ct.family == "B":
        return tuple([2] * (n - 1) + [1])
    if ct.family == "C":
        return tuple([1] * (n - 1) + [2])
    if ct.family == "G":
        return (1, 3)
    return tuple([1] * n)


def _positive_roots(C):
    """Closure of the simple roots under the root-string test."""
    n = len(C)
    simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    roots = set(simple)
    layer = simple
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(n):
                p = 0
                cur = beta
                while True:
                    down = tuple(c - (k == i) for k, c in enumerate(cur))
                    if down not in roots:
                        break
                    p += 1
                    cur = down
                pairing = sum(int(C[i][j]) * beta[j] for j in range(n))
                if p - pairing > 0:
                    nxt.add(tuple(c + (k == i) for k, c in enumerate(beta)))
        roots |= nxt
        layer = sorted(nxt)
    return sorted(roots, key=_canonical_key)


def _canonical_key(beta):
    return (sum(beta), tuple(-c for c in beta))


###################################################################################################
# Root systems
###################################################################################################


@dataclass(frozen=True)
class RootSystem:
    """Finite root system in the simple-root basis.

    Attributes
    ----------
    cartan_type : CartanType
    cartan : tuple
        Cartan matrix rows, c_ij = <alpha_i^vee, alpha_j>
    d : tuple
        Symmetrizers, (alpha_i, alpha_i) = 2 d_i
    positive_roots : tuple
        Positive roots as coefficient tuples, in canonical order (height, then
        decreasing lexicographic coefficient vector)
    """

    cartan_type: CartanType
    cartan: tuple
    d: tuple
    positive_roots: tuple

    @property
    def rank(self):
        return self.cartan_type.rank

    @property
    def N(self):
        return len(self.positive_roots)

    @cached_property
    def index(self):
        return {beta: k for k, beta in enumerate(self.positive_roots)}

    @cached_property
    def root_set(self):
        return frozenset(self.positive_roots)

    @property
    def simple_roots(self):
        return self.positive_roots[: self.rank]

    @property
    def rho(self):
        """rho in fundamental-weight coordinates."""
        return tuple([1] * self.rank)

    @cached_property
    def cartan_array(self):
        return np.array(self.cartan, dtype=int)

    @cached_property
    def form_matrix(self):
        """Symmetrized matrix (alpha_i, alpha_j) = d_i c_ij."""
        return tuple(tuple(self.d[i] * self.cartan[i][j] for j in range(self.rank)) for i in range(self.rank))

    def bilinear(self, a, b):
        """(a, b) for vectors in the simple-root basis."""
        B = self.form_matrix
        return sum(a[i] * B[i][j] * b[j] for i in range(self.rank) if a[i] for j in range(self.rank) if b[j])

    def pairing(self, beta, i):
        """<beta, alpha_i^vee> for beta in the simple-root basis."""
        return sum(self.cartan[i][j] * beta[j] for j in range(self.rank))

    def is_root(self, beta):
        return tuple(beta) in self.root_set

    def height(self, beta):
        return sum(beta)

    def simple(self, i):
        return tuple(int(k == i) for k in range(self.rank))

    def label(self, beta, style="plain"):
        return root_label(self, beta, style)

    @cached_property
    def labels(self):
        return tuple(root_label(self, beta) for beta in self.positive_roots)

    def coroot(self, beta):
        """Coefficients of beta^vee in the simple coroot basis."""
        norm = self.bilinear(beta, beta)
        return tuple(Fraction(beta[j] * 2 * self.d[j], norm) for j in range(self.rank))

    def to_json(self):
        return {
            "type": self.cartan_type.family,
            "rank": self.rank,
            "cartan_matrix": [list(row) for row in self.cartan],
            "symmetrizers": list(self.d),
            "positive_roots": [list(beta) for beta in self.positive_roots],
            "labels": list(self.labels),
        }

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        rs = build_root_system(CartanType(data["type"], int(data["rank"])))
        roots = tuple(tuple(beta) for beta in data.get("positive_roots", rs.positive_roots))
        assert roots == rs.positive_roots, "ERROR: Root list does not match the canonical order of the type!"
        return rs

    def __str__(self):
        return str(self.cartan_type)


@lru_cache(maxsize=None)
def _build(family, rank):
    ct = CartanType(family, rank)
    C = cartan_matrix(ct)
    d = symmetrizers(ct)
    DC = np.diag(d) @ C
    assert (DC == DC.T).all(), "ERROR: Symmetrized Cartan matrix is not symmetric!"
    roots = tuple(_positive_roots(C.tolist()))
    rs = RootSystem(ct, tuple(tuple(int(c) for c in row) for row in C), d, roots)
    LOG.info(f"Root system {ct}: {len(roots)} positive roots")
    return rs


def build_root_system(ct):
    """Builds the root system of a Cartan type.

    Parameters
    ----------
    ct : CartanType or str
        Cartan type, e.g. CartanType('C', 2) or 'C2'

    Returns
    -------
    RootSystem

    Raises
    ------
    AssertionError
        If (family, rank) is not admissible
    """
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    return _build(ct.family, ct.rank)


###################################################################################################
# Weights
###################################################################################################


def is_dominant(lam):
    return all(m >= 0 for m in lam)


def root_to_weight(rs, beta):
    """Fundamental-weight coordinates of a vector in the root lattice."""
    return tuple(sum(rs.cartan[i][j] * beta[j] for j in range(rs.rank)) for i in range(rs.rank))


def reflect_weight(rs, i, mu):
    """s_i(mu) in fundamental-weight coordinates."""
    return tuple(mu[k] - mu[i] * rs.cartan[k][i] for k in range(rs.rank))


def weyl_dim(rs, lam):
    """Dimension of the simple module V(lam) by the Weyl dimension formula.

    Parameters
    ----------
    rs : RootSystem
    lam : tuple
        Dominant weight in fundamental-weight coordinates

    Returns
    -------
    int
        prod_{alpha > 0} (lam + rho, alpha) / (rho, alpha)

    Raises
    ------
    AssertionError
        If lam is not dominant or has the wrong length
    """
    assert len(lam) == rs.rank, "ERROR: Weight length does not match the rank!"
    assert is_dominant(lam), "ERROR: Weyl dimension formula needs a dominant weight!"
    result = Fraction(1)
    for alpha in rs.positive_roots:
        num = sum(alpha[j] * rs.d[j] * (lam[j] + 1) for j in range(rs.rank))
        den = sum(alpha[j] * rs.d[j] for j in range(rs.rank))
        result *= Fraction(num, den)
    if result.denominator != 1:
        raise RuntimeError(f"Weyl dimension of {lam} is not an integer: {result}")
    return int(result)


def dominant_weights(rank, max_height, min_height=0):
    """All dominant weights with min_height <= |lam| <= max_height."""
    out = []
    for lam in itertools.product(range(max_height + 1), repeat=rank):
        if min_height <= sum(lam) <= max_height:
            out.append(lam)
    return sorted(out, key=lambda lam: (sum(lam), tuple(-m for m in lam)))


def kostant_partition_count(rs, nu):
    """Number of ways of writing nu as a sum of positive roots."""
    nu = tuple(nu)
    roots = rs.positive_roots

    @lru_cache(maxsize=None)
    def count(k, rest):
        if not any(rest):
            return 1
        if k == len(roots):
            return 0
        total = 0
        beta = roots[k]
        cur = rest
        while all(c >= 0 for c in cur):
            total += count(k + 1, cur)
            cur = tuple(c - b for c, b in zip(cur, beta))
        return total

    if any(c < 0 for c in nu):
        return 0
    return count(0, nu)


###################################################################################################
# Root labels in the notation of the explicit tables
###################################################################################################


def root_label(rs, beta, style="plain"):
    """Label of a positive root.

    A/B/C: 'i,j' for alpha_i + ... + alpha_j and 'i,jbar' for the roots with
    doubled coefficients; D and G: coefficient digit strings ('1211' in D4,
    '11122' for 3alpha_1 + 2alpha_2 in G2). style='math' renders 'α_{i,j̄}'.
    """
    beta = tuple(beta)
    family = rs.cartan_type.family
    if family == "G":
        plain = "1" * beta[0] + "2" * beta[1]
    elif family == "D":
        plain = "".join(str(c) for c in beta)
    else:
        nz = [k for k, c in enumerate(beta) if c]
        i = nz[0]
        if max(beta) == 1:
            plain = f"{i + 1},{nz[-1] + 1}"
        else:
            j = beta.index(2)
            plain = f"{i + 1},{j + 1}bar"
    if style == "plain":
        return plain
    if style == "math":
        return format_label(plain)
    raise ValueError(f"Unknown label style '{style}' (supported: plain, math)")


def format_label(plain):
    if "," in plain:
        body = plain.replace("bar", MACRON)
        return f"α_{{{body}}}"
    return f"α_{{{plain}}}"


def root_by_label(rs, label):
    """Inverse of root_label; accepts 'i,j', 'i,jbar', 'i,j̄' and digit strings."""
    text = label.strip()
    for prefix in ("α_", "d_", "f_", "F_", "α", "d"):
        if text.startswith(prefix):
            text = text[len(prefix):]
            break
    text = text.strip("{}").replace(MACRON, "bar").replace(" ", "")
    for beta in rs.positive_roots:
        if root_label(rs, beta) == text:
            return beta
    raise ValueError(f"No positive root of {rs} is labelled '{label}'")


def _inverse_cartan(rs):
    return sympy.Matrix(rs.cartan).inv()


def dominant_conjugate(rs, mu):
    """The dominant weight in the Weyl orbit of mu."""
    mu = tuple(mu)
    while True:
        neg = [i for i, m in enumerate(mu) if m < 0]
        if not neg:
            return mu
        mu = reflect_weight(rs, neg[0], mu)


def weights_of_hull(rs, lam):
    """Weights of V(lam), i.e. all mu whose dominant conjugate lies below lam in dominance order.

    Returns
    -------
    list
        Weights sorted by depth below lam, then lexicographically decreasing
    """
    assert is_dominant(lam), "ERROR: Highest weight must be dominant!"
    Cinv = _inverse_cartan(rs)
    lam = tuple(lam)

    def below(mu):
        diff = [a - b for a, b in zip(lam, dominant_conjugate(rs, mu))]
        nu = Cinv * sympy.Matrix(diff)
        return all(c.is_integer and c >= 0 for c in nu)

    depth = {lam: 0}
    layer = [lam]
    while layer:
        nxt = []
        for mu in layer:
            for i in range(rs.rank):
                down = tuple(mu[k] - rs.cartan[k][i] for k in range(rs.rank))
                if down not in depth and below(down):
                    depth[down] = depth[mu] + 1
                    nxt.append(down)
        layer = nxt
    return sorted(depth, key=lambda mu: (depth[mu], tuple(-m for m in mu)))
