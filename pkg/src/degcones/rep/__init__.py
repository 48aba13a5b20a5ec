# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Simple modules, Chevalley bases, degree filtrations and monomial bases."""

from . import chevalley, degrees, modules, monomial
from .chevalley import *
from .degrees import *
from .modules import *
from .monomial import *

__all__ = modules.__all__ + chevalley.__all__ + monomial.__all__ + degrees.__all__
