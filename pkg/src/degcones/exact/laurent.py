# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Laurent polynomials in q with rational coefficients and quantum integers.
#
# Author(s): degcones developers
# Last modified: 10/2026


from fractions import Fraction
from numbers import Rational

__all__ = ["LaurentQ", "qint", "qfactorial", "as_fraction"]


def as_fraction(value):
    """Converts ints, Fractions and sympy/gmpy rationals to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    # sympy PythonMPQ / gmpy2 mpq expose numerator & denominator as attributes
    return Fraction(int(value.numerator), int(value.denominator))


class LaurentQ:
    """Sparse Laurent polynomial Σ c_k q^k with rational coefficients.

    The representation is a map exponent -> Fraction with no zero entries, so
    structural equality coincides with mathematical equality.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = {0: coeffs}
        self._coeffs = {int(k): as_fraction(v) for k, v in coeffs.items() if v != 0}

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls({exponent: coeff})

    @classmethod
    def q(cls):
        return cls({1: 1})

    # --- container protocol ---

    def items(self):
        return sorted(self._coeffs.items())

    def coefficient(self, exponent):
        return self._coeffs.get(exponent, Fraction(0))

    @property
    def exponents(self):
        return sorted(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentQ):
            other = LaurentQ(other)
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    # --- ring operations ---

    def _coerce(self, other):
        if isinstance(other, LaurentQ):
            return other
        return LaurentQ(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, 0) + v
        return LaurentQ(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ({k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for k1, v1 in self._coeffs.items():
            for k2, v2 in other._coeffs.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
        return LaurentQ(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0, "ERROR: Only nonnegative integer powers supported!"
        result = LaurentQ(1)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k):
        """Multiplication by q^k."""
        return LaurentQ({e + k: v for e, v in self._coeffs.items()})

    def bar(self):
        """The involution q -> q^{-1}."""
        return LaurentQ({-e: v for e, v in self._coeffs.items()})

    def eval(self, x):
        """Evaluates at a nonzero rational point."""
        x = as_fraction(x)
        assert x != 0, "ERROR: Laurent polynomials can only be evaluated at nonzero points!"
        return sum((v * x**k for k, v in self._coeffs.items()), Fraction(0))

    # --- printing ---

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for k in sorted(self._coeffs, reverse=True):
            v = self._coeffs[k]
            if k == 0:
                mono = ""
            elif k == 1:
                mono = "q"
            else:
                mono = f"q^{k}"
            mag = abs(v)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = f"{mag}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"LaurentQ({self})"


def qint(n, d=1):
    """Quantum integer [n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d}).

    Parameters
    ----------
    n : int
        Nonnegative integer
    d : int
        Positive symmetrizer; the result is a Laurent polynomial in q^d

    Returns
    -------
    LaurentQ
        q^{d(n-1)} + q^{d(n-3)} + ... + q^{-d(n-1)}

    Raises
    ------
    AssertionError
        If n < 0 or d < 1
    """
    assert n >= 0, "ERROR: Quantum integers are only defined for n >= 0!"
    assert d >= 1, "ERROR: Symmetrizer must be positive!"
    return LaurentQ({d * (n - 1 - 2 * k): 1 for k in range(n)})


def qfactorial(n, d=1):
    """Quantum factorial [n]_{q^d}! as a Laurent polynomial."""
    result = LaurentQ(1)
    for k in range(1, n + 1):
        result = result * qint(k, d)
    return result
