# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Halfspace systems, lattice point sets, Dyck paths and FFLV polytopes, convex hulls."""

from . import dyck, hull, polytopes
from .dyck import *
from .hull import *
from .polytopes import *

__all__ = polytopes.__all__ + dyck.__all__ + hull.__all__
