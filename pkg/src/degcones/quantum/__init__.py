# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Quantum group engine, PBW root vectors and Levendorskii-Soibelman relations."""

from . import qpbw, relations
from .qpbw import *
from .relations import *

__all__ = qpbw.__all__ + relations.__all__
