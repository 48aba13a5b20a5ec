# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Exact Fourier-Motzkin elimination for mixed strict / non-strict linear inequality systems.
#
# Author(s): degcones developers
# Last modified: 10/2026


import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

LOG = logging.getLogger("degcones-cone")
LOG.setLevel("INFO")
logging.basicConfig(
    format="%(asctime)s %(levelname)-8s %(message)s",
    level=logging.INFO,
    datefmt="%Y-%m-%d %H:%M:%S",
)

__all__ = ["Inequality", "FMResult", "fm_feasible", "fm_project", "verify_infeasibility"]


@dataclass(frozen=True)
class Inequality:
    """sum_k coeffs[k] * x_k + const > 0 (strict) or >= 0 (non-strict).

    multipliers records the nonnegative combination of the input system this
    inequality was derived from, as a tuple of (input index, Fraction) pairs.
    """

    coeffs: tuple
    const: Fraction = Fraction(0)
    strict: bool = False
    multipliers: tuple = ()

    @classmethod
    def original(cls, index, coeffs, const=0, strict=False):
        return cls(tuple(int(c) for c in coeffs), Fraction(const), strict, ((index, Fraction(1)),)).normalized()

    @property
    def history(self):
        return frozenset(i for i, _ in self.multipliers)

    def is_constant(self):
        return not any(self.coeffs)

    def is_violated_constant(self):
        """A constant inequality that can never hold."""
        return self.const < 0 or (self.strict and self.const == 0)

    def normalized(self):
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        if g <= 1:
            return self
        return Inequality(
            tuple(c // g for c in self.coeffs),
            self.const / g,
            self.strict,
            tuple((i, m / g) for i, m in self.multipliers),
        )

    def evaluate(self, point):
        return sum(Fraction(c) * x for c, x in zip(self.coeffs, point) if c) + self.const

    def holds(self, point):
        value = self.evaluate(point)
        return value > 0 if self.strict else value >= 0


def _combine(p, n, v):
    """Positive combination of p (coeff of v > 0) and n (coeff of v < 0) cancelling x_v."""
    a, b = p.coeffs[v], -n.coeffs[v]
    coeffs = tuple(b * cp + a * cn for cp, cn in zip(p.coeffs, n.coeffs))
    mult = {}
    for i, m in p.multipliers:
        mult[i] = mult.get(i, 0) + b * m
    for i, m in n.multipliers:
        mult[i] = mult.get(i, 0) + a * m
    return Inequality(
        coeffs, b * p.const + a * n.const, p.strict or n.strict, tuple(sorted(mult.items()))
    ).normalized()


def _dedupe(system):
    """Keeps one inequality per coefficient vector: the smallest constant, strict on ties."""
    best = {}
    for ineq in system:
        cur = best.get(ineq.coeffs)
        if cur is None or ineq.const < cur.const or (ineq.const == cur.const and ineq.strict and not cur.strict):
            best[ineq.coeffs] = ineq
    return list(best.values())


@dataclass
class FMResult:
    """Outcome of an elimination run.

    Attributes
    ----------
    feasible : bool
    witness : list or None
        A rational point satisfying every input inequality when feasible
    certificate : Inequality or None
        A violated constant inequality with its input multipliers when infeasible
    stages : list
        The systems before each elimination step, with the eliminated variable
    """

    feasible: bool
    witness: list = None
    certificate: Inequality = None
    stages: list = field(default_factory=list)
    remaining: list = field(default_factory=list)


def _choose_variable(system, candidates):
    best, best_cost = None, None
    for v in candidates:
        pos = sum(1 for ineq in system if ineq.coeffs[v] > 0)
        neg = sum(1 for ineq in system if ineq.coeffs[v] < 0)
        cost = pos * neg
        if best is None or cost < best_cost:
            best, best_cost = v, cost
    return best


def _eliminate_all(system, variables):
    """Eliminates the given variables; returns FMResult without witness."""
    stages = []
    step = 0
    todo = list(variables)
    system = _dedupe(system)
    while True:
        for ineq in system:
            if ineq.is_constant() and ineq.is_violated_constant():
                return FMResult(False, certificate=ineq, stages=stages, remaining=system)
        system = [ineq for ineq in system if not ineq.is_constant()]
        if not todo:
            return FMResult(True, stages=stages, remaining=system)
        v = _choose_variable(system, todo)
        todo.remove(v)
        step += 1
        stages.append((v, system))
        pos = [ineq for ineq in system if ineq.coeffs[v] > 0]
        neg = [ineq for ineq in system if ineq.coeffs[v] < 0]
        rest = [ineq for ineq in system if ineq.coeffs[v] == 0]
        derived = []
        for p in pos:
            for n in neg:
                new = _combine(p, n, v)
                # Chernikov: a combination of more than step + 1 inputs is redundant
                if len(new.history) > step + 1:
                    continue
                derived.append(new)
        system = _dedupe(rest + derived)


def _back_substitute(stages, n_vars):
    point = [Fraction(0)] * n_vars
    for v, system in reversed(stages):
        lo, lo_strict, hi, hi_strict = None, False, None, False
        for ineq in system:
            a = ineq.coeffs[v]
            if a == 0:
                continue
            rest = sum(Fraction(c) * point[k] for k, c in enumerate(ineq.coeffs) if c and k != v) + ineq.const
            bound = -rest / a
            if a > 0:
                if lo is None or bound > lo:
                    lo, lo_strict = bound, ineq.strict
                elif bound == lo:
                    lo_strict = lo_strict or ineq.strict
            else:
                if hi is None or bound < hi:
                    hi, hi_strict = bound, ineq.strict
                elif bound == hi:
                    hi_strict = hi_strict or ineq.strict
        if lo is not None and hi is not None:
            if lo > hi or (lo == hi and (lo_strict or hi_strict)):
                raise RuntimeError(f"Back substitution failed on variable {v}: [{lo}, {hi}]")
            value = (lo + hi) / 2
        elif lo is not None:
            value = lo + 1
        elif hi is not None:
            value = hi - 1
        else:
            value = Fraction(0)
        point[v] = value
    return point


def fm_feasible(system, n_vars):
    """Decides feasibility of a system of Inequality objects by full elimination.

    Parameters
    ----------
    system : list
        Inequalities over n_vars variables, built with Inequality.original
    n_vars : int

    Returns
    -------
    FMResult
        With a rational witness if feasible, else a certificate

    Raises
    ------
    RuntimeError
        If the witness or the certificate fails re-verification
    """
    result = _eliminate_all(list(system), range(n_vars))
    if result.feasible:
        result.witness = _back_substitute(result.stages, n_vars)
        for ineq in system:
            if not ineq.holds(result.witness):
                raise RuntimeError(f"Witness {result.witness} violates {ineq}")
    else:
        if not verify_infeasibility(system, result.certificate):
            raise RuntimeError("Infeasibility certificate does not re-verify")
    return result


def verify_infeasibility(system, certificate):
    """Re-derives the certificate's constant inequality from the input multipliers."""
    n = len(system[0].coeffs) if system else 0
    coeffs = [Fraction(0)] * n
    const = Fraction(0)
    strict = False
    for i, m in certificate.multipliers:
        if m < 0:
            return False
        if m == 0:
            continue
        ineq = system[i]
        for k, c in enumerate(ineq.coeffs):
            coeffs[k] += m * c
        const += m * ineq.const
        strict = strict or ineq.strict
    if any(coeffs):
        return False
    return const < 0 or (const == 0 and strict)


def fm_project(system, eliminate):
    """Projection of the solution set onto the coordinates not in eliminate.

    Returns
    -------
    list or None
        Inequalities over the full coordinate vector, with zero coefficients on the
        eliminated variables; None if the system is infeasible
    """
    result = _eliminate_all(list(system), list(eliminate))
    if not result.feasible:
        return None
    return result.remaining
