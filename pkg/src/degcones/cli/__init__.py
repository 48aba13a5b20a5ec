# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Command line interface, run configuration and the reproduction suite."""

from . import cli, config, reference
from . import reproduce as _reproduce
from .cli import *
from .config import *
from .reference import *
from .reproduce import *

__all__ = cli.__all__ + config.__all__ + reference.__all__ + _reproduce.__all__
