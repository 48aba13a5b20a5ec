# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Strict polyhedral cones of degree functions: membership, implication, emptiness with
# certificates, semantic equality, interior and minimal lattice points.
#
# Author(s): degcones developers
# Last modified: 10/2026


import json
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from tqdm import tqdm

from .fourier_motzkin import Inequality, fm_feasible

LOG = logging.getLogger("degcones-cone")
LOG.setLevel("INFO")
logging.basicConfig(
    format="%(asctime)s %(levelname)-8s %(message)s",
    level=logging.INFO,
    datefmt="%Y-%m-%d %H:%M:%S",
)

__all__ = [
    "LinearForm", "StrictCone", "EmptinessCertificate", "ConeStatus", "Divergence",
    "classical_cone", "contains", "implies", "is_empty", "cone_equal", "intersect",
    "interior_lattice_point", "minimal_lattice_points", "compare_with_printed",
    "parse_inequality", "degree_label",
]


def _content(coeffs):
    g = 0
    for c in coeffs:
        g = gcd(g, int(c))
    return g


def degree_label(plain):
    """'1,1bar' -> 'd_{1,1̄}'; digit strings -> 'd_{1112}'."""
    return "d_{" + plain.replace("bar", "̄") + "}"


###################################################################################################
# Forms and cones
###################################################################################################


@dataclass(frozen=True, order=True)
class LinearForm:
    """Integer form <a, d> > 0 on degree functions, stored with content 1."""

    coeffs: tuple

    @classmethod
    def make(cls, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        g = _content(coeffs)
        assert g > 0, "ERROR: A linear form must not vanish identically!"
        return cls(tuple(c // g for c in coeffs))

    def evaluate(self, d):
        return sum(a * x for a, x in zip(self.coeffs, d) if a)

    def describe(self, ambient):
        lhs, rhs = [], []
        for a, name in zip(self.coeffs, ambient):
            if a == 0:
                continue
            term = degree_label(name) if abs(a) == 1 else f"{abs(a)}{degree_label(name)}"
            (lhs if a > 0 else rhs).append(term)
        return f"{' + '.join(lhs) or '0'} > {' + '.join(rhs) or '0'}"


@dataclass(frozen=True)
class StrictCone:
    """Open cone {d : <a, d> > 0 for every form, d >= 0} on coordinates labelled by Delta_+.

    Forms are stored deduplicated and sorted, so that two cones built from the same
    set of inequalities serialize identically.
    """

    ambient: tuple
    forms: tuple

    @classmethod
    def build(cls, ambient, forms):
        normalized = set()
        for f in forms:
            if not isinstance(f, LinearForm):
                f = LinearForm.make(f)
            assert len(f.coeffs) == len(ambient), "ERROR: Form dimension does not match the ambient space!"
            normalized.add(f)
        return cls(tuple(ambient), tuple(sorted(normalized, reverse=True)))

    @property
    def dim(self):
        return len(self.ambient)

    def __len__(self):
        return len(self.forms)

    def describe(self):
        return [f.describe(self.ambient) for f in self.forms]

    def to_json(self):
        return {"ambient": list(self.ambient), "forms": [list(f.coeffs) for f in self.forms]}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls.build(tuple(data["ambient"]), [tuple(f) for f in data["forms"]])


def classical_cone(rs):
    """Classical degree cone: d_alpha + d_beta > d_{alpha+beta} whenever alpha + beta is a root.

    Parameters
    ----------
    rs : RootSystem

    Returns
    -------
    StrictCone
        One form per unordered pair {alpha, beta}, coordinates in canonical root order
    """
    forms = []
    roots = rs.positive_roots
    for a in range(rs.N):
        for b in range(a + 1, rs.N):
            s = tuple(x + y for x, y in zip(roots[a], roots[b]))
            if s in rs.root_set:
                vec = [0] * rs.N
                vec[a] += 1
                vec[b] += 1
                vec[rs.index[s]] -= 1
                forms.append(vec)
    return StrictCone.build(rs.labels, forms)


def contains(c, d):
    assert len(d) == c.dim, f"ERROR: Degree function has {len(d)} entries, the cone lives in dimension {c.dim}!"
    if any(x < 0 for x in d):
        return False
    return all(f.evaluate(d) > 0 for f in c.forms)


def intersect(a, b):
    assert a.ambient == b.ambient, "ERROR: Cones live on different coordinates!"
    return StrictCone.build(a.ambient, a.forms + b.forms)


###################################################################################################
# Emptiness, implication and equality
###################################################################################################


@dataclass
class EmptinessCertificate:
    """Nonnegative integer multipliers on the forms whose combination is a nonpositive form."""

    multipliers: dict
    combination: tuple

    def verify(self, c):
        if not self.multipliers or any(m < 0 for m in self.multipliers.values()):
            return False
        if not any(m > 0 for m in self.multipliers.values()):
            return False
        total = [0] * c.dim
        for k, m in self.multipliers.items():
            for t, a in enumerate(c.forms[k].coeffs):
                total[t] += m * a
        return tuple(total) == tuple(self.combination) and all(x <= 0 for x in total)

    def describe(self, c):
        parts = [f"{m} * ({c.forms[k].describe(c.ambient)})" for k, m in sorted(self.multipliers.items())]
        return " + ".join(parts) + f"  gives  {list(self.combination)} <= 0"


@dataclass
class ConeStatus:
    empty: bool
    certificate: EmptinessCertificate = None
    witness: tuple = None
    extra: dict = field(default_factory=dict)


def _strict_system(c):
    system = [Inequality.original(k, f.coeffs, strict=True) for k, f in enumerate(c.forms)]
    for t in range(c.dim):
        unit = [0] * c.dim
        unit[t] = 1
        system.append(Inequality.original(len(c.forms) + t, unit, strict=True))
    return system


def is_empty(c):
    """Decides emptiness of an open cone by Fourier-Motzkin elimination.

    Returns
    -------
    ConeStatus
        empty=True with a re-verified certificate, or empty=False with a positive
        integer interior point

    Raises
    ------
    RuntimeError
        If the certificate or the witness fails re-verification
    """
    result = fm_feasible(_strict_system(c), c.dim)
    if result.feasible:
        scale = 1
        for x in result.witness:
            scale = lcm(scale, x.denominator)
        witness = tuple(int(x * scale) for x in result.witness)
        if not contains(c, witness):
            raise RuntimeError(f"Witness {witness} is not in the cone")
        return ConeStatus(False, witness=witness)
    raw = {i: m for i, m in result.certificate.multipliers if i < len(c.forms) and m > 0}
    scale = 1
    for m in raw.values():
        scale = lcm(scale, m.denominator)
    multipliers = {i: int(m * scale) for i, m in raw.items()}
    combination = [0] * c.dim
    for k, m in multipliers.items():
        for t, a in enumerate(c.forms[k].coeffs):
            combination[t] += m * a
    cert = EmptinessCertificate(multipliers, tuple(combination))
    if not cert.verify(c):
        raise RuntimeError("Emptiness certificate does not re-verify")
    return ConeStatus(True, certificate=cert)


def implies(c, form):
    """True iff every d in c (forms > 0, d >= 0) satisfies <form, d> > 0."""
    if not isinstance(form, LinearForm):
        form = LinearForm.make(form)
    system = [Inequality.original(k, f.coeffs, strict=True) for k, f in enumerate(c.forms)]
    for t in range(c.dim):
        unit = [0] * c.dim
        unit[t] = 1
        system.append(Inequality.original(len(system), unit))
    system.append(Inequality.original(len(system), [-a for a in form.coeffs]))
    return not fm_feasible(system, c.dim).feasible


def cone_equal(a, b):
    """Semantic equality: every form of a is implied by b and vice versa."""
    assert a.ambient == b.ambient, "ERROR: Cones live on different coordinates!"
    return all(implies(b, f) for f in a.forms) and all(implies(a, f) for f in b.forms)


@dataclass
class Divergence:
    """Forms of one system that the other system does not imply."""

    equal: bool
    missing_in_computed: list
    missing_in_printed: list
    literal_only_computed: list
    literal_only_printed: list


def compare_with_printed(computed, printed):
    """Divergence report between a computed cone and a printed inequality list."""
    assert computed.ambient == printed.ambient, "ERROR: Cones live on different coordinates!"
    miss_c = [f.describe(printed.ambient) for f in printed.forms if not implies(computed, f)]
    miss_p = [f.describe(computed.ambient) for f in computed.forms if not implies(printed, f)]
    lit_c = [f.describe(computed.ambient) for f in sorted(set(computed.forms) - set(printed.forms), reverse=True)]
    lit_p = [f.describe(printed.ambient) for f in sorted(set(printed.forms) - set(computed.forms), reverse=True)]
    div = Divergence(not miss_c and not miss_p, miss_c, miss_p, lit_c, lit_p)
    if not div.equal:
        LOG.warning(f"Computed and printed systems differ: {len(miss_c)} printed forms not implied, "
                    f"{len(miss_p)} computed forms not implied")
    return div


###################################################################################################
# Lattice points
###################################################################################################


def interior_lattice_point(c, order, relations):
    """Inductive construction d_{beta_1} = 1, d_{beta_j} = 1 + max(0, sum_t n_t d_{beta_t} - d_{beta_i})
    over all support vectors n of all relations (i, j).

    Parameters
    ----------
    c : StrictCone
        Cone in canonical root coordinates
    order : ConvexOrder
    relations : list
        LSRelation for every pair i < j of the order

    Returns
    -------
    tuple
        Positive integer degree function in canonical coordinates, inside c
    """
    by_j = {}
    for rel in relations:
        by_j.setdefault(rel.j, []).append(rel)
    d = [0] * order.N
    for j in range(order.N):
        need = 0
        for rel in by_j.get(j, []):
            for s in rel.support:
                need = max(need, sum(n * d[t] for t, n in enumerate(s) if n) - d[rel.i])
        d[j] = 1 + need
    point = order.vector_to_canonical(d)
    if not contains(c, point):
        raise RuntimeError(f"Inductive point {point} is not in the cone")
    return point


def _completion_bound(coeffs, assigned_value, start, remaining):
    """Maximum of a form over positive integer completions of coordinates start.. summing to remaining."""
    rest = coeffs[start:]
    if not rest:
        return assigned_value if remaining == 0 else None
    extra = remaining - len(rest)
    if extra < 0:
        return None
    return assigned_value + sum(rest) + extra * max(rest)


def minimal_lattice_points(c, cap=64, progress=True):
    """All positive integer points of c with minimal coordinate sum.

    Iterative deepening on the sum; a prefix is pruned as soon as some form can no
    longer become positive on any completion.

    Parameters
    ----------
    c : StrictCone
    cap : int
        Largest coordinate sum searched

    Returns
    -------
    list
        Sorted minimizers in canonical coordinates

    Raises
    ------
    RuntimeError
        'bound reached' if no point has sum <= cap
    """
    assert not is_empty(c).empty, "ERROR: Cone is empty!"
    n = c.dim
    forms = [f.coeffs for f in c.forms]
    for total in tqdm(range(n, cap + 1), disable=not progress, desc="sum"):
        found = []
        point = [0] * n
        values = [0] * len(forms)

        def rec(k, remaining):
            if k == n - 1:
                point[k] = remaining
                if all(v + f[k] * remaining > 0 for v, f in zip(values, forms)):
                    found.append(tuple(point))
                return
            for x in range(1, remaining - (n - k - 1) + 1):
                point[k] = x
                ok = True
                for idx, f in enumerate(forms):
                    values[idx] += f[k] * x
                for idx, f in enumerate(forms):
                    bound = _completion_bound(f, values[idx], k + 1, remaining - x)
                    if bound is None or bound <= 0:
                        ok = False
                        break
                if ok:
                    rec(k + 1, remaining - x)
                for idx, f in enumerate(forms):
                    values[idx] -= f[k] * x

        rec(0, total)
        if found:
            LOG.info(f"{len(found)} minimal lattice points at coordinate sum {total}")
            return sorted(found)
    raise RuntimeError(f"bound reached: no lattice point with coordinate sum <= {cap}")


###################################################################################################
# Printed inequality lists
###################################################################################################


_TERM = re.compile(r"^(\d*)\s*\*?\s*d_?\{?([^}]*)\}?$")


def parse_inequality(ambient, text, aliases=None):
    """Parses 'd_{1,1} + d_{2,2} > 2d_{1,2}' into a coefficient vector over ambient.

    aliases maps extra spellings (e.g. positional names) to ambient labels.
    """
    assert ">" in text, f"ERROR: Inequality '{text}' has no '>'!"
    left, right = text.split(">", 1)
    index = {name: k for k, name in enumerate(ambient)}
    vec = [0] * len(ambient)
    for side, sign in ((left, 1), (right, -1)):
        for term in side.split("+"):
            term = term.strip()
            if not term or term == "0":
                continue
            match = _TERM.match(term)
            assert match, f"ERROR: Cannot parse term '{term}'!"
            mult = int(match.group(1)) if match.group(1) else 1
            name = match.group(2).replace("̄", "bar").replace(" ", "")
            if aliases and name in aliases:
                name = aliases[name]
            assert name in index, f"ERROR: Unknown coordinate '{name}'!"
            vec[index[name]] += sign * mult
    return tuple(vec)
