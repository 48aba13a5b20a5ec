# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Exact sparse Gaussian elimination over any field whose elements support + - * / and bool().
#
# Author(s): degcones developers
# Last modified: 10/2026


from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = ["Echelon", "RowSpace", "rref", "to_sparse", "dense_rank"]


def to_sparse(row):
    """Converts a dense sequence (list, numpy array) into a sparse dict col -> value."""
    return {k: v for k, v in enumerate(row) if v}


def _axpy(target, scale, row):
    """target += scale * row, in place, dropping zeros."""
    for col, val in row.items():
        new = target.get(col, 0) + scale * val
        if new:
            target[col] = new
        else:
            target.pop(col, None)


@dataclass
class Echelon:
    """Reduced row echelon form: rows[k] has a leading one in column pivots[k]."""

    rank: int
    rows: list
    pivots: list


class RowSpace:
    """Incrementally maintained reduced echelon basis of a row space.

    Every stored row remembers the combination of inserted rows it came from,
    so that reducing a vector also yields the coordinates of its projection.
    Columns are compared with their natural ordering (ints or tuples), which
    makes the echelon form, and hence every derived certificate, deterministic.
    """

    def __init__(self):
        self._rows = {}  # pivot column -> (row, combination)
        self._n_inserted = 0

    @property
    def rank(self):
        return len(self._rows)

    @property
    def pivots(self):
        return sorted(self._rows)

    def reduce(self, vec):
        """Reduces vec against the basis.

        Returns
        -------
        residual : dict
            Part of vec outside the row space (empty iff vec is in the span)
        combination : dict
            tag -> coefficient with vec - residual = Σ coefficient * inserted_row[tag]
        """
        residual = dict(vec)
        combination = {}
        for pivot in sorted(self._rows):
            coeff = residual.get(pivot)
            if not coeff:
                continue
            row, combo = self._rows[pivot]
            _axpy(residual, -coeff, row)
            _axpy(combination, coeff, combo)
        return residual, combination

    def add(self, vec, tag=None):
        """Inserts a row; returns True iff it increased the rank."""
        if tag is None:
            tag = self._n_inserted
        self._n_inserted += 1
        residual, combination = self.reduce(vec)
        if not residual:
            return False
        combo = {tag: 1}
        _axpy(combo, -1, combination)
        pivot = min(residual)
        lead = residual[pivot]
        inv = Fraction(1, lead) if isinstance(lead, int) else 1 / lead
        row = {c: v * inv for c, v in residual.items()}
        combo = {t: v * inv for t, v in combo.items()}
        # keep the basis fully reduced in the new pivot column
        for other in list(self._rows):
            orow, ocombo = self._rows[other]
            coeff = orow.get(pivot)
            if coeff:
                orow = dict(orow)
                ocombo = dict(ocombo)
                _axpy(orow, -coeff, row)
                _axpy(ocombo, -coeff, combo)
                self._rows[other] = (orow, ocombo)
        self._rows[pivot] = (row, combo)
        return True

    def copy(self):
        """Independent copy; stored rows are never mutated in place, so they can be shared."""
        other = RowSpace()
        other._rows = dict(self._rows)
        other._n_inserted = self._n_inserted
        return other

    def contains(self, vec):
        residual, _ = self.reduce(vec)
        return not residual

    def solve(self, vec):
        """Coordinates of vec in terms of inserted rows, or None if vec is not in the span."""
        residual, combination = self.reduce(vec)
        if residual:
            return None
        return combination

    def echelon(self):
        pivots = sorted(self._rows)
        return Echelon(rank=len(pivots), rows=[self._rows[p][0] for p in pivots], pivots=pivots)


def rref(rows):
    """Exact reduced row echelon form.

    Parameters
    ----------
    rows : list
        Rows as sparse dicts col -> value, or as dense sequences / 2D numpy array

    Returns
    -------
    Echelon
        Rank, reduced rows (sparse) and pivot columns in increasing order

    Notes
    -----
    Pivots are the first structurally nonzero columns; rows are consumed in
    input order, so the result is reproducible for a fixed input.
    """
    space = RowSpace()
    for row in rows:
        if not isinstance(row, dict):
            row = to_sparse(row)
        space.add(row)
    return space.echelon()


def dense_rank(matrix):
    """Rank of a dense matrix of ints/Fractions (numpy object arrays accepted)."""
    matrix = np.asarray(matrix, dtype=object)
    if matrix.size == 0:
        return 0
    return rref([[Fraction(v) if isinstance(v, int) else v for v in row] for row in matrix]).rank
