# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Published inequality systems, relations and lattice points used as reference data by the
# reproduce command.
#
# Author(s): degcones developers
# Last modified: 10/2026


from dataclasses import dataclass, field

from ..cone import StrictCone, classical_cone, parse_inequality
from ..rep.degrees import D4_WORD
from ..roots import build_root_system, convex_order

__all__ = ["PrintedSystem", "PRINTED", "C3_ALIASES", "D4_ALIASES", "C3_MINIMAL_POINTS", "A3_PRINTED_RELATIONS",
           "printed_vector"]

C3_ALIASES = {
    str(k + 1): label
    for k, label in enumerate(("1,1", "1,2", "1,1bar", "1,3", "1,2bar", "2,2", "2,2bar", "2,3", "3,3"))
}
D4_ALIASES = {
    str(k + 1): label
    for k, label in enumerate(
        ("0100", "1100", "1000", "1110", "0110", "1211", "1101", "1111", "0010", "0111", "0101", "0001")
    )
}


@dataclass(frozen=True)
class PrintedSystem:
    """A published inequality list for the quantum degree cone of one or more words.

    within_classical marks lists that describe the cone inside the classical cone; the
    classical inequalities are then added before comparing.
    """

    cartan_type: str
    words: tuple
    inequalities: tuple
    aliases: dict = field(default_factory=dict)
    within_classical: bool = False

    def cone(self):
        rs = build_root_system(self.cartan_type)
        forms = [parse_inequality(rs.labels, text, self.aliases) for text in self.inequalities]
        forms = [f for f in forms if any(f)]
        if self.within_classical:
            forms += [f.coeffs for f in classical_cone(rs).forms]
        return StrictCone.build(rs.labels, forms)


def _split(text):
    return tuple(part.strip() for part in text.split(";") if part.strip())


PRINTED = {
    ("A2", "121"): PrintedSystem("A2", ("121", "212"), _split("d_{1,1} + d_{2,2} > d_{1,2}")),
    ("C2", "1212"): PrintedSystem(
        "C2",
        ("1212", "2121"),
        _split("d_{1,1} + d_{2,2} > d_{1,2}; d_{1,1} + d_{1,2} > d_{1,1bar}; d_{2,2} + d_{1,1bar} > 2d_{1,2}"),
    ),
    ("G2", "121212"): PrintedSystem(
        "G2",
        ("121212", "212121"),
        _split(
            "d_1 + d_{11122} > 2d_{112}; d_{1112} + d_{11122} > 3d_{112}; d_{1112} + d_{12} > 2d_{112};"
            "d_{1112} + d_2 > d_{112} + d_{12}; d_{112} + d_2 > 2d_{12}; d_{11122} + d_2 > 3d_{12}"
        ),
        within_classical=True,
    ),
    ("B3", "121321323"): PrintedSystem(
        "B3",
        ("121321323",),
        _split(
            "d_{1,1} + d_{1,2bar} > 2d_{1,3}; d_{1,2} + d_{1,2bar} > d_{2,2} + 2d_{1,3};"
            "d_{1,2} + d_{1,3bar} > 2d_{1,3}; d_{1,2} + d_{2,3bar} > d_{2,2} + d_{1,3bar};"
            "d_{1,2} + d_{2,3bar} > d_{1,3} + d_{1,2}; d_{2,2} + d_{2,3bar} > 2d_{2,3};"
            "d_{1,3} + d_{2,3bar} > d_{1,3bar} + d_{2,3}; d_{1,2bar} + d_{2,3bar} > d_{1,3bar} + 2d_{2,3};"
            "d_{1,2bar} + d_{3,3} > d_{1,3bar} + d_{2,3}; d_{1,2} + d_{2,3} > d_{1,3} + d_{2,2}"
        ),
        within_classical=True,
    ),
    ("B3", "132321232"): PrintedSystem(
        "B3",
        ("132321232",),
        _split(
            "d_{1,1} + d_{1,2bar} > 2d_{1,3}; d_{1,1} + d_{1,2bar} > d_{1,2} + d_{1,3bar};"
            "d_{1,2} + d_{1,3bar} > 2d_{1,3}; d_{1,3bar} + d_{2,3} > d_{1,3} + d_{2,3bar};"
            "d_{1,3bar} + d_{2,2} > d_{1,3} + d_{2,3}; d_{1,3bar} + d_{2,2} > d_{1,2} + d_{2,3bar};"
            "d_{1,3} + d_{2,3} > d_{1,2} + d_{2,3bar}; d_{2,3bar} + d_{2,2} > 2d_{2,3};"
            "d_{1,3} + d_{2,2} > d_{1,2} + d_{2,3}"
        ),
        within_classical=True,
    ),
    ("C3", "123212323"): PrintedSystem(
        "C3",
        ("123212323",),
        _split(
            "d_1 + d_5 > d_2 + d_4; d_3 + d_9 > 2d_4; d_7 + d_9 > 2d_8; d_3 + d_7 > 2d_5;"
            "d_1 + d_7 > d_4 + d_6; d_2 + d_7 > d_5 + d_6; d_2 + d_7 > d_4 + 2d_6; d_3 + d_7 > d_4 + d_5 + d_6;"
            "d_3 + d_7 > 2d_4 + 2d_6; d_3 + d_8 > d_4 + d_5; d_3 + d_8 > 2d_4 + d_6; d_2 + d_8 > d_4 + d_6"
        ),
        aliases=C3_ALIASES,
        within_classical=True,
    ),
    ("C3", "132321232"): PrintedSystem(
        "C3",
        ("132321232",),
        _split(
            "d_1 + d_5 > d_2 + d_4; d_3 + d_9 > 2d_4; d_7 + d_9 > 2d_8; d_3 + d_7 > 2d_5;"
            "d_1 + d_7 > d_2 + d_8; d_4 + d_7 > d_5 + d_8; d_3 + d_7 > d_2 + d_5 + d_8; d_3 + d_7 > 2d_2 + 2d_8;"
            "d_3 + d_6 > d_2 + d_5; d_3 + d_6 > 2d_2 + d_8; d_4 + d_7 > d_2 + d_8; d_4 + d_6 > d_2 + d_8"
        ),
        aliases=C3_ALIASES,
        within_classical=True,
    ),
    ("D4", D4_WORD): PrintedSystem(
        "D4",
        (D4_WORD,),
        _split(
            "d_1 + d_3 > d_2; d_1 + d_8 > d_5 + d_7; d_1 + d_8 > d_6; d_1 + d_9 > d_5; d_1 + d_{12} > d_{11};"
            "d_2 + d_8 > d_3 + d_5 + d_7; d_2 + d_8 > d_3 + d_6; d_2 + d_8 > d_4 + d_7; d_2 + d_9 > d_3 + d_5;"
            "d_2 + d_9 > d_4; d_2 + d_{10} > d_6; d_2 + d_{12} > d_3 + d_{11}; d_2 + d_{12} > d_7;"
            "d_3 + d_5 > d_4; d_3 + d_{10} > d_7 + d_9; d_3 + d_{10} > d_8; d_3 + d_{11} > d_7;"
            "d_4 + d_{10} > d_5 + d_7 + d_9; d_4 + d_{10} > d_5 + d_8; d_4 + d_{10} > d_6 + d_9;"
            "d_4 + d_{11} > d_5 + d_7; d_4 + d_{11} > d_6; d_4 + d_{12} > d_8; d_5 + d_7 > d_6;"
            "d_5 + d_{12} > d_9 + d_{11}; d_5 + d_{12} > d_{10}; d_6 + d_{12} > d_7 + d_9 + d_{11};"
            "d_6 + d_{12} > d_7 + d_{10}; d_6 + d_{12} > d_8 + d_{11}; d_7 + d_9 > d_8; d_9 + d_{11} > d_{10}"
        ),
        aliases=D4_ALIASES,
    ),
}

# Minimal lattice points of the C3 cone of 123212323, in the positional order d_1..d_9
C3_MINIMAL_POINTS = (
    (2, 1, 1, 1, 1, 1, 4, 4, 5),
    (3, 2, 2, 1, 1, 1, 3, 3, 4),
    (5, 4, 4, 1, 1, 1, 1, 1, 2),
    (4, 3, 3, 1, 1, 1, 2, 2, 3),
)

# A3: (word, F_{beta_i}, F_{beta_j}, support roots) with coefficient +-(q - q^{-1})
A3_PRINTED_RELATIONS = (
    ("121321", ("1,2", "2,3"), ("2,2", "1,3")),
    ("132312", ("1,3", "2,2"), ("1,2", "2,3")),
)


def printed_vector(cartan_type, values, aliases=None, word=None):
    """Canonical degree vector from printed values, either positional through aliases or along a word."""
    rs = build_root_system(cartan_type)
    values = tuple(int(v) for v in values)
    assert len(values) == rs.N, f"ERROR: {rs} has {rs.N} positive roots, got {len(values)} values!"
    if word is not None:
        return convex_order(rs, word).vector_to_canonical(values)
    out = [0] * rs.N
    for k, v in enumerate(values):
        label = aliases[str(k + 1)]
        out[rs.labels.index(label)] = v
    return tuple(out)
