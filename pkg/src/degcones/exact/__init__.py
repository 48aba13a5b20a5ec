# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Exact scalars: rationals, Laurent polynomials in q, scalar fields and Gaussian elimination."""

from .laurent import LaurentQ, qint, qfactorial, as_fraction
from .fields import ExactField, SpecializedField, draw_q0, make_field, resolve_mode
from .linalg import Echelon, RowSpace, rref, to_sparse, dense_rank

__all__ = [
    "LaurentQ", "qint", "qfactorial", "as_fraction",
    "ExactField", "SpecializedField", "draw_q0", "make_field", "resolve_mode",
    "Echelon", "RowSpace", "rref", "to_sparse", "dense_rank",
]
