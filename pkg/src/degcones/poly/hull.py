# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Convex hulls of finite lattice sets in exact arithmetic, their lattice points, and the
# G2 Minkowski sum experiment.
#
# Author(s): degcones developers
# Last modified: 10/2026


import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import pandas as pd
from tqdm import tqdm

from ..cone import Inequality, fm_project
from ..exact import rref
from ..roots import build_root_system, weyl_dim
from .polytopes import g2_box_varpi1, g2_box_varpi2, lattice_points, minkowski_sum

LOG = logging.getLogger("degcones-poly")
LOG.setLevel("INFO")
logging.basicConfig(
    format="%(asctime)s %(levelname)-8s %(message)s",
    level=logging.INFO,
    datefmt="%Y-%m-%d %H:%M:%S",
)

__all__ = [
    "Hull", "hull_inequalities", "hull_lattice_points", "minkowski_hull", "g2_conjecture_sets",
    "g2_conjecture_experiment", "g2_conjecture_table",
]


def _integral(coeffs, const):
    scale = lcm(*(Fraction(c).denominator for c in coeffs), Fraction(const).denominator)
    return tuple(int(c * scale) for c in coeffs), Fraction(const) * scale


@dataclass(frozen=True)
class Hull:
    """{x : coeffs . x + const >= 0 for every inequality, coeffs . x + const = 0 for every equality}.

    Attributes
    ----------
    dim : int
    inequalities : tuple
        (coeffs, const) pairs with integer coeffs
    equalities : tuple
        (coeffs, const) pairs cutting out the affine hull
    lower, upper : tuple
        Bounding box, used as the candidate range for lattice points
    """

    dim: int
    inequalities: tuple
    equalities: tuple
    lower: tuple
    upper: tuple

    def contains(self, x):
        for coeffs, const in self.equalities:
            if sum(c * v for c, v in zip(coeffs, x)) + const != 0:
                return False
        return all(sum(c * v for c, v in zip(coeffs, x)) + const >= 0 for coeffs, const in self.inequalities)

    def scaled(self, m):
        """m * P for an integer m >= 1."""
        assert m >= 1, "ERROR: Dilation factor must be positive!"
        return Hull(
            self.dim,
            tuple((c, m * k) for c, k in self.inequalities),
            tuple((c, m * k) for c, k in self.equalities),
            tuple(m * v for v in self.lower),
            tuple(m * v for v in self.upper),
        )

    def as_system(self):
        """All constraints as Inequality objects; equalities become opposite pairs."""
        out = []
        for coeffs, const in self.inequalities:
            out.append(Inequality.original(len(out), coeffs, const))
        for coeffs, const in self.equalities:
            out.append(Inequality.original(len(out), coeffs, const))
            out.append(Inequality.original(len(out), [-c for c in coeffs], -const))
        return out


def hull_inequalities(points):
    """Exact H-representation of the convex hull of a finite point set.

    x lies in conv(S) iff t >= 0 solves sum_i t_i p_i = x, sum_i t_i = 1. Solving these equations
    for the pivot variables leaves inequalities in x and the free t's; projecting the free t's out
    by Fourier-Motzkin elimination gives inequalities in x alone, and the equations without pivot
    give the affine hull.

    Parameters
    ----------
    points : iterable
        Nonempty finite set of integer vectors

    Returns
    -------
    Hull
    """
    pts = sorted(set(map(tuple, points)))
    assert pts, "ERROR: Convex hull of an empty set!"
    n = len(pts[0])
    assert all(len(p) == n for p in pts), "ERROR: Points live in different dimensions!"
    m = len(pts)
    # [M | I] with M the (n+1) x m matrix whose columns are the points with a trailing one
    rows = []
    for r in range(n + 1):
        row = {c: Fraction(pts[c][r] if r < n else 1) for c in range(m) if (pts[c][r] if r < n else 1)}
        row[m + r] = Fraction(1)
        rows.append(row)
    ech = rref(rows)
    pivots = [p for p in ech.pivots if p < m]
    free = [c for c in range(m) if c not in pivots]
    fpos = {c: k for k, c in enumerate(free)}
    system, equalities = [], []
    for row, pivot in zip(ech.rows, ech.pivots):
        x_part = [row.get(m + r, 0) for r in range(n)]
        const = row.get(m + n, 0)
        if pivot >= m:
            equalities.append(_integral(x_part, const))
            continue
        # t_pivot = T . (x, 1) - sum_f R[f] t_f >= 0
        t_part = [0] * len(free)
        for col, val in row.items():
            if col < m and col != pivot:
                t_part[fpos[col]] = -val
        coeffs, c0 = _integral(x_part + t_part, const)
        system.append(Inequality.original(len(system), coeffs, c0))
    for k in range(len(free)):
        unit = [0] * (n + len(free))
        unit[n + k] = 1
        system.append(Inequality.original(len(system), unit))
    projected = fm_project(system, range(n, n + len(free)))
    if projected is None:
        raise RuntimeError("Convex hull system of a nonempty set is infeasible")
    inequalities = sorted(
        {(tuple(ineq.coeffs[:n]), ineq.const) for ineq in projected if any(ineq.coeffs[:n])}
    )
    lower = tuple(min(p[k] for p in pts) for k in range(n))
    upper = tuple(max(p[k] for p in pts) for k in range(n))
    LOG.info(f"Convex hull of {m} points in dimension {n}: {len(inequalities)} inequalities, {len(equalities)} equalities")
    return Hull(n, tuple(inequalities), tuple(sorted(set(equalities))), lower, upper)


def _box_points(hull, progress=False):
    ranges = [range(lo, hi + 1) for lo, hi in zip(hull.lower, hull.upper)]
    total = 1
    for r in ranges:
        total *= len(r)
    return {x for x in tqdm(itertools.product(*ranges), total=total, disable=not progress) if hull.contains(x)}


def hull_lattice_points(points, progress=False):
    """All integer points of conv(points); always a superset of points."""
    hull = points if isinstance(points, Hull) else hull_inequalities(points)
    out = _box_points(hull, progress)
    if not isinstance(points, Hull):
        missing = set(map(tuple, points)) - out
        if missing:
            raise RuntimeError(f"Convex hull misses {len(missing)} of its own points")
    return out


def minkowski_hull(a, b):
    """Hull of P + Q from hulls of P and Q: x in P + Q iff some y has y in P and x - y in Q."""
    assert a.dim == b.dim, "ERROR: Hulls live in different dimensions!"
    n = a.dim
    system = []
    for ineq in a.as_system():
        system.append(Inequality.original(len(system), [0] * n + list(ineq.coeffs), ineq.const))
    for ineq in b.as_system():
        system.append(
            Inequality.original(len(system), list(ineq.coeffs) + [-c for c in ineq.coeffs], ineq.const)
        )
    projected = fm_project(system, range(n, 2 * n))
    if projected is None:
        raise RuntimeError("Minkowski sum of nonempty hulls is infeasible")
    inequalities = sorted({(tuple(ineq.coeffs[:n]), ineq.const) for ineq in projected if any(ineq.coeffs[:n])})
    return Hull(
        n,
        tuple(inequalities),
        (),
        tuple(x + y for x, y in zip(a.lower, b.lower)),
        tuple(x + y for x, y in zip(a.upper, b.upper)),
    )


def g2_conjecture_sets():
    """Lattice sets G2^{w1}(1) and G2^{w2}(1) u {3 e_3, 3 e_5} in the box coordinates."""
    first = lattice_points(g2_box_varpi1(1))
    second = lattice_points(g2_box_varpi2(1)) | {(0, 0, 3, 0, 0, 0), (0, 0, 0, 0, 3, 0)}
    return first, second


def _sumset(first, second, m1, m2):
    total = {tuple([0] * 6)}
    for _ in range(m1):
        total = minkowski_sum(total, first)
    for _ in range(m2):
        total = minkowski_sum(total, second)
    return total


def _dilation(first, second, m1, m2):
    parts = [hull_inequalities(s).scaled(m) for s, m in ((first, m1), (second, m2)) if m]
    if not parts:
        return {tuple([0] * 6)}
    hull = parts[0] if len(parts) == 1 else minkowski_hull(*parts)
    return _box_points(hull)


def g2_conjecture_experiment(m1, m2):
    """Counts m1 G2^{w1}(1) + m2 (G2^{w2}(1) u {3 e_3, 3 e_5}) against dim V(m1 w1 + m2 w2).

    Two readings of the multiple: 'sumset' is the iterated Minkowski sum of the lattice sets,
    'dilation' the lattice points of m1 conv(first) + m2 conv(second). Nothing is asserted.

    Returns
    -------
    dict
    """
    first, second = g2_conjecture_sets()
    dim = weyl_dim(build_root_system("G2"), (m1, m2))
    sumset = len(_sumset(first, second, m1, m2))
    dilation = len(_dilation(first, second, m1, m2))
    LOG.info(f"G2 experiment at ({m1}, {m2}): sumset {sumset}, dilation {dilation}, dimension {dim}")
    return {
        "m1": m1,
        "m2": m2,
        "dim": dim,
        "sumset": sumset,
        "dilation": dilation,
        "sumset_agrees": sumset == dim,
        "dilation_agrees": dilation == dim,
    }


def g2_conjecture_table(max_m=2, progress=True):
    """Experiment rows for all 0 <= m1, m2 <= max_m."""
    pairs = [(m1, m2) for m1 in range(max_m + 1) for m2 in range(max_m + 1)]
    rows = [g2_conjecture_experiment(m1, m2) for m1, m2 in tqdm(pairs, disable=not progress)]
    return pd.DataFrame(rows)
