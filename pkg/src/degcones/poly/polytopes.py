# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Rational halfspace systems in the nonnegative orthant, exact lattice point enumeration,
# Minkowski sums and the rank 2 polytopes with closed-form lattice point counts.
#
# Author(s): degcones developers
# Last modified: 10/2026


import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from tqdm import tqdm

from ..cone import Inequality, fm_project

LOG = logging.getLogger("degcones-poly")
LOG.setLevel("INFO")
logging.basicConfig(
    format="%(asctime)s %(levelname)-8s %(message)s",
    level=logging.INFO,
    datefmt="%Y-%m-%d %H:%M:%S",
)

__all__ = [
    "HalfspaceSystem", "lattice_points", "minkowski_sum", "count_N", "sp4_count", "sp4_polytope",
    "p_ab_polytope", "g2_box_varpi1", "g2_box_varpi2", "SP4_COORDINATES", "G2_COORDINATES", "enumerate_many",
]

# Root labels of the SP4 coordinates x1..x4 and of the G2 box coordinates x1..x6
SP4_COORDINATES = ("1,1", "1,2", "1,1bar", "2,2")
G2_COORDINATES = ("1", "1112", "112", "11122", "12", "2")


@dataclass(frozen=True)
class HalfspaceSystem:
    """{x >= 0 : <rows[k], x> <= rhs[k] for all k}.

    Attributes
    ----------
    dim : int
    rows : tuple
        Integer coefficient tuples
    rhs : tuple
        Rational right-hand sides
    labels : tuple
        Coordinate names
    """

    dim: int
    rows: tuple
    rhs: tuple
    labels: tuple = ()

    @classmethod
    def build(cls, dim, constraints, labels=()):
        """From (coeffs, bound) pairs; duplicate constraints keep the tightest bound."""
        best = {}
        for coeffs, bound in constraints:
            coeffs = tuple(int(c) for c in coeffs)
            assert len(coeffs) == dim, "ERROR: Constraint dimension does not match!"
            bound = Fraction(bound)
            if coeffs not in best or bound < best[coeffs]:
                best[coeffs] = bound
        keys = sorted(best)
        return cls(dim, tuple(keys), tuple(best[k] for k in keys), tuple(labels))

    def contains(self, x):
        if any(v < 0 for v in x):
            return False
        return all(sum(a * v for a, v in zip(row, x)) <= b for row, b in zip(self.rows, self.rhs))

    def is_nonnegative(self):
        return all(a >= 0 for row in self.rows for a in row) and all(b >= 0 for b in self.rhs)

    def inequalities(self):
        """As Inequality objects coeffs . x + const >= 0, including x >= 0."""
        out = []
        for k, (row, b) in enumerate(zip(self.rows, self.rhs)):
            scale = b.denominator
            out.append(Inequality.original(k, [-a * scale for a in row], b * scale))
        for t in range(self.dim):
            unit = [1 if s == t else 0 for s in range(self.dim)]
            out.append(Inequality.original(len(self.rows) + t, unit))
        return out

    def to_json(self):
        return {
            "dim": self.dim,
            "labels": list(self.labels),
            "rows": [list(r) for r in self.rows],
            "rhs": [str(b) for b in self.rhs],
        }

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls.build(data["dim"], zip(data["rows"], (Fraction(b) for b in data["rhs"])), data.get("labels", ()))


def _orthant_points(h):
    """Enumeration for nonnegative systems: a prefix extends iff every slack stays >= 0."""
    out = []
    point = [0] * h.dim
    slack = list(h.rhs)
    for t in range(h.dim):
        if not any(row[t] > 0 for row in h.rows):
            raise AssertionError(f"ERROR: Coordinate {t} is unbounded!")

    def rec(t):
        if t == h.dim:
            out.append(tuple(point))
            return
        hi = min(floor(s / row[t]) for row, s in zip(h.rows, slack) if row[t] > 0)
        for v in range(hi + 1):
            point[t] = v
            for k, row in enumerate(h.rows):
                slack[k] -= row[t] * v
            rec(t + 1)
            for k, row in enumerate(h.rows):
                slack[k] += row[t] * v
        point[t] = 0

    rec(0)
    return out


def _projected_points(h):
    """Enumeration through exact Fourier-Motzkin projections onto every coordinate prefix."""
    system = h.inequalities()
    levels = []
    for t in range(h.dim):
        proj = fm_project(system, range(t + 1, h.dim))
        assert proj is not None, "ERROR: Halfspace system is infeasible!"
        levels.append(proj)
    out = []
    point = [Fraction(0)] * h.dim

    def rec(t):
        if t == h.dim:
            out.append(tuple(int(v) for v in point))
            return
        lo, hi = None, None
        for ineq in levels[t]:
            a = ineq.coeffs[t]
            if a == 0:
                continue
            rest = sum(c * point[k] for k, c in enumerate(ineq.coeffs[:t]) if c) + ineq.const
            bound = -rest / a
            if a > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if hi is None:
            raise AssertionError(f"ERROR: Coordinate {t} is unbounded!")
        lo = 0 if lo is None else -floor(-lo)
        for v in range(max(lo, 0), floor(hi) + 1):
            point[t] = Fraction(v)
            rec(t + 1)
        point[t] = Fraction(0)

    rec(0)
    return out


def lattice_points(h):
    """All integer points of a bounded halfspace system.

    Returns
    -------
    set
        Integer tuples

    Raises
    ------
    AssertionError
        If the system is unbounded or infeasible
    """
    if h.is_nonnegative():
        pts = _orthant_points(h)
    else:
        pts = _projected_points(h)
    assert pts, "ERROR: Halfspace system has no lattice points!"
    return set(pts)


def minkowski_sum(a, b):
    a, b = set(map(tuple, a)), set(map(tuple, b))
    dims = {len(x) for x in a} | {len(y) for y in b}
    assert len(dims) <= 1, "ERROR: Lattice sets live in different dimensions!"
    return {tuple(p + q for p, q in zip(x, y)) for x in a for y in b}


def count_N(a, b):
    """Lattice points of P(a, b) = {x, y >= 0 : x + 2y <= a, x + y <= b} in closed form."""
    a, b = int(a), int(b)
    assert a >= 0 and b >= 0, "ERROR: N(a, b) needs a, b >= 0!"
    if b >= a:
        if a % 2:
            half_a = (a + 1) // 2
            return half_a * (half_a + 1)
        half_a = a // 2
        return (half_a + 1) ** 2
    if a >= 2 * b:
        return (b + 1) * (b + 2) // 2
    half = Fraction(1, 2)
    if a % 2 == 0:
        half_a = a // 2
        value = -(half_a**2) + 2 * half_a * b - half * b**2 + half * b + half_a + 1
    else:
        half_a = (a - 1) // 2
        value = -(half_a**2) + 2 * half_a * b - half * b**2 + 3 * half * b + 1
    if value.denominator != 1:
        raise RuntimeError(f"N({a}, {b}) evaluated to the non-integer {value}")
    return int(value)


def sp4_count(m1, m2):
    """(m1+1)(m2+1)(m1+m2+2)(m1+2m2+3)/6."""
    value = Fraction((m1 + 1) * (m2 + 1) * (m1 + m2 + 2) * (m1 + 2 * m2 + 3), 6)
    if value.denominator != 1:
        raise RuntimeError(f"SP4 count at ({m1}, {m2}) is not an integer")
    return int(value)


def sp4_polytope(m1, m2):
    return HalfspaceSystem.build(
        4,
        [
            ((1, 0, 0, 0), m1),
            ((0, 0, 0, 1), m2),
            ((2, 1, 2, 2), 2 * (m1 + m2)),
            ((1, 1, 1, 2), m1 + 2 * m2),
        ],
        SP4_COORDINATES,
    )


def p_ab_polytope(a, b):
    return HalfspaceSystem.build(2, [((1, 2), a), ((1, 1), b)], ("x", "y"))


def g2_box_varpi1(m1):
    return HalfspaceSystem.build(
        6, [((1, 0, 0, 0, 0, 0), m1), ((0, 0, 0, 0, 0, 1), 0), ((2, 2, 1, 2, 2, 0), 2 * m1)], G2_COORDINATES
    )


def g2_box_varpi2(m2):
    return HalfspaceSystem.build(
        6, [((1, 0, 0, 0, 0, 0), 0), ((0, 2, 1, 1, 1, 2), 2 * m2)], G2_COORDINATES
    )


def enumerate_many(systems, progress=True):
    """Lattice point counts of several systems, keyed like the input dict."""
    return {key: len(lattice_points(h)) for key, h in tqdm(systems.items(), disable=not progress)}
