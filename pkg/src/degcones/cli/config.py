# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Run configuration shared by all subcommands, optionally loaded from a .json file.
#
# Author(s): degcones developers
# Last modified: 10/2026


import json
import logging
from dataclasses import asdict, dataclass, fields

LOG = logging.getLogger("degcones-cli")
LOG.setLevel("INFO")
logging.basicConfig(
    format="%(asctime)s %(levelname)-8s %(message)s",
    level=logging.INFO,
    datefmt="%Y-%m-%d %H:%M:%S",
)

__all__ = ["RunConfig", "load_config"]

FORMATS = ("json", "text", "csv")
MODES = ("auto", "exact", "specialized")


@dataclass
class RunConfig:
    """Settings of a run.

    Attributes
    ----------
    cartan_type, rank : str, int
        Family letter and rank, e.g. 'C' and 3
    word : str
        Reduced word with 1-based letters
    degree : str
        Comma list in canonical root order, or one of 'canonical', 'global', 'local'
    degree_word : str
        If set, the degree values are listed along the convex order of this word
    lam : str
        Comma list of fundamental-weight coordinates
    mode : str
        'auto' (exact up to rank 2, specialized beyond), 'exact' or 'specialized'
    lambda_height_cap : int
        Largest |lam| in global Minkowski checks
    search_sum_cap : int
        Largest coordinate sum in minimal lattice point searches
    time_budget : float
        Seconds allowed for one batch of relations
    direct_check_dim : int
        Modules up to this dimension are also checked directly in global checks
    """

    cartan_type: str = None
    rank: int = None
    word: str = None
    degree: str = None
    degree_word: str = None
    lam: str = None
    mode: str = "auto"
    seed: int = 0
    jobs: int = 1
    lambda_height_cap: int = 2
    search_sum_cap: int = 64
    time_budget: float = 1800
    direct_check_dim: int = 200
    cache_file: str = None
    out: str = None
    fmt: str = "text"

    def __post_init__(self):
        self.validate()

    def validate(self):
        if self.mode not in MODES:
            raise ValueError(f"Unknown mode '{self.mode}' (supported: {', '.join(MODES)})")
        if self.fmt not in FORMATS:
            raise ValueError(f"Unknown format '{self.fmt}' (supported: {', '.join(FORMATS)})")
        for name in ("lambda_height_cap", "search_sum_cap", "time_budget", "direct_check_dim", "jobs"):
            assert getattr(self, name) > 0, f"ERROR: {name} must be positive!"
        if self.rank is not None:
            assert int(self.rank) >= 1, "ERROR: Rank must be positive!"
        return self

    @property
    def type_text(self):
        assert self.cartan_type is not None and self.rank is not None, "ERROR: --type and --rank are required!"
        return f"{self.cartan_type.upper()}{int(self.rank)}"

    def updated(self, overrides):
        """Copy with every non-None override applied."""
        data = asdict(self)
        data.update({k: v for k, v in overrides.items() if k in data and v is not None})
        return RunConfig(**data)

    def to_json(self):
        return asdict(self)


def load_config(cfg_file=None, overrides=None):
    """RunConfig from an optional .json file, with explicit overrides taking precedence."""
    config = RunConfig()
    if cfg_file is not None:
        with open(cfg_file, "r") as f:
            config_dict = json.load(f)
        known = {f.name for f in fields(RunConfig)}
        unknown = set(config_dict) - known
        if unknown:
            raise ValueError(f"Unknown config entries: {', '.join(sorted(unknown))}")
        config = RunConfig(**config_dict)
        LOG.info(f"Loaded run configuration from {cfg_file}")
    return config.updated(overrides or {})
