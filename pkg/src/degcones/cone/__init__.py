# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Strict polyhedral cones of degree functions and an exact Fourier-Motzkin engine."""

from . import cone, fourier_motzkin
from .cone import *
from .fourier_motzkin import *

__all__ = cone.__all__ + fourier_motzkin.__all__
