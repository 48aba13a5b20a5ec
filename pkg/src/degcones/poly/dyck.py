# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Dyck paths of types A and C on the grid of positive roots, and the FFLV polytopes they cut out.
#
# Author(s): degcones developers
# Last modified: 10/2026


import logging
from dataclasses import dataclass

import networkx as nx

from ..roots import is_dominant, root_by_label
from .polytopes import HalfspaceSystem, lattice_points

LOG = logging.getLogger("degcones-poly")
LOG.setLevel("INFO")
logging.basicConfig(
    format="%(asctime)s %(levelname)-8s %(message)s",
    level=logging.INFO,
    datefmt="%Y-%m-%d %H:%M:%S",
)

__all__ = ["DyckPath", "dyck_paths", "dyck_graph", "fflv_polytope", "fflv_lattice_set"]


@dataclass(frozen=True)
class DyckPath:
    """A Dyck path delta_1, ..., delta_r of positive roots.

    Attributes
    ----------
    kind : str
        'A' or 'C'
    cells : tuple
        Grid cells (row, column) of the roots; column positions run over the alphabet
        1 < ... < n < (n-1)bar < ... < 1bar, barred letters sitting at 2n - j
    roots : tuple
        Coefficient vectors of the roots, in path order
    """

    kind: str
    rank: int
    cells: tuple
    roots: tuple

    @property
    def start(self):
        return self.cells[0][0]

    @property
    def end(self):
        """(j, barred) for the final root alpha_{j,j} or alpha_{j,jbar}."""
        _, col = self.cells[-1]
        if col <= self.rank:
            return col, False
        return 2 * self.rank - col, True

    def bound(self, lam):
        """Right-hand side lam_i + ... + lam_j, or lam_i + ... + lam_n for a barred end."""
        i = self.start
        j, barred = self.end
        last = self.rank if barred else j
        return sum(lam[k - 1] for k in range(i, last + 1))

    def labels(self, rs):
        return tuple(rs.label(beta) for beta in self.roots)


def _cell_label(rank, row, col):
    if col <= rank:
        return f"{row},{col}"
    return f"{row},{2 * rank - col}bar"


def _cell_exists(kind, rank, row, col):
    if not 1 <= row <= rank:
        return False
    if col <= rank:
        return row <= col
    return kind == "C" and col < 2 * rank and row <= 2 * rank - col


def dyck_graph(rs, kind):
    """Directed grid of positive roots; an edge raises either the row or the column by one."""
    rank = rs.rank
    last_col = rank if kind == "A" else 2 * rank - 1
    G = nx.DiGraph()
    for row in range(1, rank + 1):
        for col in range(1, last_col + 1):
            if not _cell_exists(kind, rank, row, col):
                continue
            G.add_node((row, col), root=root_by_label(rs, _cell_label(rank, row, col)))
    for row, col in list(G.nodes):
        for nxt in ((row, col + 1), (row + 1, col)):
            if nxt in G:
                G.add_edge((row, col), nxt)
    return G


def _ends(kind, rank, i):
    out = [(j, j) for j in range(i, rank + 1)]
    if kind == "C":
        out += [(j, 2 * rank - j) for j in range(i, rank)]
    return out


def dyck_paths(rs, kind=None):
    """All Dyck paths of the given kind, from alpha_{i,i} to alpha_{j,j} (or alpha_{j,jbar} in type C).

    Parameters
    ----------
    rs : RootSystem
        Of type A_n for kind 'A', of type C_n (n >= 2) for kind 'C'
    kind : str, optional
        Defaults to the family of rs

    Returns
    -------
    list
        DyckPath objects, ordered by start, end and cells
    """
    family = rs.cartan_type.family
    kind = family if kind is None else kind.upper()
    if kind not in ("A", "C"):
        raise ValueError(f"Unknown Dyck path kind {kind}, use A or C")
    assert family == kind, f"ERROR: Dyck paths of kind {kind} need a root system of type {kind}, not {rs}!"
    G = dyck_graph(rs, kind)
    rank = rs.rank
    paths = set()
    for i in range(1, rank + 1):
        source = (i, i)
        for target in _ends(kind, rank, i):
            if target == source:
                paths.add((source,))
                continue
            for cells in nx.all_simple_paths(G, source, target):
                paths.add(tuple(cells))
    out = [
        DyckPath(kind, rank, cells, tuple(G.nodes[c]["root"] for c in cells))
        for cells in sorted(paths, key=lambda c: (c[0], c[-1], c))
    ]
    LOG.info(f"{len(out)} Dyck paths of kind {kind} for {rs}")
    return out


def fflv_polytope(rs, kind=None, lam=None):
    """FFLV polytope of lam: x >= 0 on the positive roots and, for every Dyck path,
    the sum of the coordinates along the path at most the path's bound.
    """
    assert lam is not None, "ERROR: A highest weight is needed!"
    lam = tuple(int(m) for m in lam)
    assert len(lam) == rs.rank and is_dominant(lam), f"ERROR: {lam} is not a dominant weight of {rs}!"
    constraints = []
    for path in dyck_paths(rs, kind):
        row = [0] * rs.N
        for beta in path.roots:
            row[rs.index[beta]] = 1
        constraints.append((row, path.bound(lam)))
    return HalfspaceSystem.build(rs.N, constraints, rs.labels)


def fflv_lattice_set(rs, lam, kind=None):
    return lattice_points(fflv_polytope(rs, kind, lam))
