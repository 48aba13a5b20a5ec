# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Root systems, reduced words of w0, convex orders and weights."""

from . import roots, words
from .roots import *
from .words import *

__all__ = roots.__all__ + words.__all__
