# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Classical and quantum degree cones, monomial bases and lattice polytopes of simple Lie algebras."""

from degcones import (cli,
                      cone,
                      exact,
                      poly,
                      quantum,
                      rep,
                      roots)
__all__ = [
    "cli", "cone", "exact", "poly", "quantum", "rep", "roots"
]
