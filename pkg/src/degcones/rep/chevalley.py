# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Structure constants of a Chevalley basis, read off from root vector operators on a faithful module.
#
# Author(s): degcones developers
# Last modified: 10/2026


import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .modules import _matmul, _vadd, build_irrep

LOG = logging.getLogger("degcones-rep")
LOG.setLevel("INFO")
logging.basicConfig(
    format="%(asctime)s %(levelname)-8s %(message)s",
    level=logging.INFO,
    datefmt="%Y-%m-%d %H:%M:%S",
)

__all__ = ["ChevalleyBasis", "chevalley_basis", "string_length"]


def string_length(rs, alpha, beta):
    """Largest p with beta - p * alpha a root, negative roots included."""

    def is_root(v):
        return v in rs.root_set or tuple(-c for c in v) in rs.root_set

    p = 0
    cur = _vadd(beta, alpha, -1)
    while is_root(cur):
        p += 1
        cur = _vadd(cur, alpha, -1)
    return p


@dataclass
class ChevalleyBasis:
    """Chevalley basis f_alpha, e_alpha, h_i with

    [f_alpha, f_beta] = ff[(alpha, beta)] f_{alpha + beta}
    [e_alpha, f_beta] = ef[(alpha, beta)] f_{beta - alpha}    (beta - alpha positive)
                      = ef[(alpha, beta)] e_{alpha - beta}    (alpha - beta positive)

    Pairs whose bracket vanishes are absent. Signs are fixed by extraspecial pairs.
    """

    rs: object
    ff: dict
    ef: dict

    def h_action(self, i, beta):
        """[h_i, f_beta] = h_action(i, beta) f_beta."""
        return -sum(self.rs.cartan[i][j] * beta[j] for j in range(self.rs.rank))

    def bracket_ff(self, alpha, beta):
        return self.ff.get((tuple(alpha), tuple(beta)), 0)

    def jacobi_defect(self, a, b, c):
        """Coefficient of f_{a+b+c} in [f_a,[f_b,f_c]] + [f_b,[f_c,f_a]] + [f_c,[f_a,f_b]]."""
        total = 0
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            yz = _vadd(y, z)
            if yz in self.rs.root_set:
                total += self.bracket_ff(y, z) * self.bracket_ff(x, yz)
        return total

    def check(self):
        """Antisymmetry, |N_{a,b}| = p + 1 and the Jacobi identity on all triples of positive roots.

        Raises
        ------
        RuntimeError
            On the first violated identity
        """
        roots = self.rs.positive_roots
        for (a, b), n in self.ff.items():
            if self.bracket_ff(b, a) != -n:
                raise RuntimeError(f"[f_{self.rs.label(a)}, f_{self.rs.label(b)}] is not antisymmetric")
            if abs(n) != string_length(self.rs, a, b) + 1:
                raise RuntimeError(f"|N| = {abs(n)} for ({self.rs.label(a)}, {self.rs.label(b)}) is not p + 1")
        for a in roots:
            for b in roots:
                for c in roots:
                    if _vadd(_vadd(a, b), c) in self.rs.root_set and self.jacobi_defect(a, b, c):
                        raise RuntimeError(f"Jacobi identity fails on {a}, {b}, {c}")
        return True


def _ratio(lhs_blocks, rhs_blocks, what):
    """The scalar N with lhs = N * rhs on every block."""
    ratio = None
    for lhs, rhs in zip(lhs_blocks, rhs_blocks):
        for a, b in zip(lhs.flat, rhs.flat):
            if b and ratio is None:
                ratio = Fraction(a) / b
    if ratio is None:
        raise RuntimeError(f"Root vector of {what} acts by zero; the module is not faithful")
    for lhs, rhs in zip(lhs_blocks, rhs_blocks):
        if any(a != ratio * b for a, b in zip(lhs.flat, rhs.flat)):
            raise RuntimeError(f"Bracket {what} is not proportional to the expected root vector")
    if ratio.denominator != 1:
        raise RuntimeError(f"Bracket {what} has non-integral structure constant {ratio}")
    return int(ratio)


@lru_cache(maxsize=None)
def chevalley_basis(rs):
    """Structure constants of the Chevalley basis whose negative part is
    f_gamma = [f_i, f_{gamma - alpha_i}] / (p + 1) along extraspecial pairs.

    Parameters
    ----------
    rs : RootSystem

    Returns
    -------
    ChevalleyBasis

    Raises
    ------
    RuntimeError
        If some bracket is not a multiple of the expected basis vector
    """
    module = build_irrep(rs, tuple(1 if i == 0 else 0 for i in range(rs.rank)))
    weights = list(module.dims)
    roots = rs.positive_roots
    ff, ef = {}, {}
    for a in roots:
        for b in roots:
            s = _vadd(a, b)
            if s in rs.root_set:
                lhs = [
                    _matmul(module.f_block(a, _vadd(nu, b)), module.f_block(b, nu))
                    - _matmul(module.f_block(b, _vadd(nu, a)), module.f_block(a, nu))
                    for nu in weights
                ]
                rhs = [module.f_block(s, nu) for nu in weights]
                ff[(a, b)] = _ratio(lhs, rhs, f"[f_{rs.label(a)}, f_{rs.label(b)}]")
            if a == b:
                continue
            d = _vadd(b, a, -1)
            if d in rs.root_set:
                target = [module.f_block(d, nu) for nu in weights]
            elif _vadd(a, b, -1) in rs.root_set:
                target = [module.e_block(_vadd(a, b, -1), nu) for nu in weights]
            else:
                continue
            lhs = [
                _matmul(module.e_block(a, _vadd(nu, b)), module.f_block(b, nu))
                - _matmul(module.f_block(b, _vadd(nu, a, -1)), module.e_block(a, nu))
                for nu in weights
            ]
            ef[(a, b)] = _ratio(lhs, target, f"[e_{rs.label(a)}, f_{rs.label(b)}]")
    basis = ChevalleyBasis(rs, ff, ef)
    basis.check()
    LOG.info(f"Chevalley basis of {rs}: {len(ff)} nonzero [f, f] and {len(ef)} nonzero [e, f] constants")
    return basis
