# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Scalar fields for quantum computations: exact Q(q) and q specialized at a rational q0.
#
# Author(s): degcones developers
# Last modified: 10/2026


import logging
from fractions import Fraction
from math import gcd

import numpy as np
from sympy.polys.domains import QQ
from sympy.polys.fields import field

from .laurent import LaurentQ, as_fraction

LOG = logging.getLogger("degcones-exact")
LOG.setLevel("INFO")
logging.basicConfig(
    format="%(asctime)s %(levelname)-8s %(message)s",
    level=logging.INFO,
    datefmt="%Y-%m-%d %H:%M:%S",
)

__all__ = ["ExactField", "SpecializedField", "draw_q0", "make_field", "resolve_mode"]


class _QField:
    """Shared q-arithmetic on top of the field primitives of a subclass."""

    name = None

    def __init__(self):
        self._qpow_cache = {}
        self._qint_cache = {}

    def q_pow(self, k):
        if k not in self._qpow_cache:
            self._qpow_cache[k] = self._q_pow(k)
        return self._qpow_cache[k]

    def qint(self, n, d=1):
        """[n]_{q^d} as a field element."""
        assert n >= 0, "ERROR: Quantum integers are only defined for n >= 0!"
        key = (n, d)
        if key not in self._qint_cache:
            total = self.zero
            for k in range(n):
                total = total + self.q_pow(d * (n - 1 - 2 * k))
            self._qint_cache[key] = total
        return self._qint_cache[key]

    def qfactorial(self, n, d=1):
        result = self.one
        for k in range(1, n + 1):
            result = result * self.qint(k, d)
        return result

    def qdiff(self, d=1):
        """q^d - q^{-d}."""
        return self.q_pow(d) - self.q_pow(-d)

    def from_laurent(self, poly):
        total = self.zero
        for exponent, coeff in poly.items():
            total = total + self.from_fraction(coeff) * self.q_pow(exponent)
        return total

    @staticmethod
    def is_zero(value):
        return not value


class ExactField(_QField):
    """The rational function field Q(q), backed by sympy."""

    name = "exact"

    def __init__(self):
        super().__init__()
        self.K, self.q = field("q", QQ)
        self.zero = self.K.zero
        self.one = self.K.one

    def _q_pow(self, k):
        return self.q**k

    def from_int(self, n):
        return self.K(n)

    def from_fraction(self, value):
        value = as_fraction(value)
        return self.K(value.numerator) / self.K(value.denominator)

    def to_laurent(self, value):
        """Converts an element with monomial denominator to LaurentQ.

        Raises
        ------
        RuntimeError
            If the denominator is not a monomial c*q^e
        """
        if not value:
            return LaurentQ()
        denom_terms = value.denom.terms()
        if len(denom_terms) != 1:
            raise RuntimeError(f"Coefficient {value} is not a Laurent polynomial in q")
        (d_exp,), d_coeff = denom_terms[0]
        d_coeff = as_fraction(d_coeff)
        out = {}
        for (n_exp,), n_coeff in value.numer.terms():
            out[n_exp - d_exp] = as_fraction(n_coeff) / d_coeff
        return LaurentQ(out)

    def describe(self):
        return {"mode": "exact"}

    def __repr__(self):
        return "ExactField(Q(q))"


class SpecializedField(_QField):
    """Q with q specialized at a fixed nonzero rational q0 (not a root of unity)."""

    name = "specialized"

    def __init__(self, q0):
        super().__init__()
        q0 = as_fraction(q0)
        assert q0 not in (0, 1, -1), "ERROR: q0 must avoid 0 and +-1!"
        self.q0 = q0
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def _q_pow(self, k):
        return self.q0**k

    @staticmethod
    def from_int(n):
        return Fraction(n)

    @staticmethod
    def from_fraction(value):
        return as_fraction(value)

    def to_laurent(self, value):
        raise RuntimeError("Specialized values carry no Laurent polynomial")

    def describe(self):
        return {"mode": "specialized", "q0": str(self.q0)}

    def __repr__(self):
        return f"SpecializedField(q0={self.q0})"


def draw_q0(rng):
    """Draws a reduced fraction a/b with a, b in [2, 97] and a != b.

    Parameters
    ----------
    rng : numpy.random.Generator
        Seeded random generator

    Returns
    -------
    Fraction
    """
    while True:
        a, b = (int(x) for x in rng.integers(2, 98, size=2))
        if a != b and gcd(a, b) == 1:
            return Fraction(a, b)


def resolve_mode(mode, rank=None):
    """'auto' becomes 'exact' up to rank 2 and 'specialized' beyond."""
    if mode == "auto":
        assert rank is not None, "ERROR: Mode 'auto' needs the rank!"
        return "exact" if rank <= 2 else "specialized"
    if mode not in ("exact", "specialized"):
        raise ValueError(f"Unknown mode '{mode}' (supported: exact, specialized, auto)")
    return mode


def make_field(mode, seed=0, rank=None):
    """Returns the list of fields a computation in the given mode runs over.

    Exact mode yields a single ExactField; specialized mode yields two
    SpecializedFields at independent q0 draws whose results must agree.

    Parameters
    ----------
    mode : str
        'exact', 'specialized' or 'auto' (exact for rank <= 2)
    seed : int
        Seed of the q0 draws
    rank : int, optional
        Rank of the root system, used by 'auto'

    Returns
    -------
    list
        Fields to compute over
    """
    mode = resolve_mode(mode, rank)
    if mode == "exact":
        return [ExactField()]
    rng = np.random.default_rng(seed)
    q0 = draw_q0(rng)
    q1 = draw_q0(rng)
    while q1 == q0:
        q1 = draw_q0(rng)
    LOG.info(f"Specialized mode at q0={q0} with control point q0'={q1}")
    return [SpecializedField(q0), SpecializedField(q1)]
