# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

from fractions import Fraction

import pytest


def test_laurent_arithmetic():
    from degcones.exact import LaurentQ, qint
    q = LaurentQ.q()
    assert (q - q.bar()) * qint(2) == LaurentQ({2: 1, -2: -1})
    assert qint(2) == q + q.bar()
    assert qint(2).shift(1) == LaurentQ({2: 1, 0: 1})
    assert (q + 1) ** 2 == LaurentQ({2: 1, 1: 2, 0: 1})
    assert not (q - q)
    assert LaurentQ(3) == 3
    assert qint(2).eval(2) == Fraction(5, 2)
    assert str(qint(2)) == "q + q^-1"
    assert str(LaurentQ({-2: 1, 0: -1})) == "-1 + q^-2"


def test_quantum_integers():
    from degcones.exact import qfactorial, qint
    assert qint(0) == 0
    assert qint(1) == 1
    assert qint(3, 2).exponents == [-4, 0, 4]
    assert qfactorial(3) == qint(2) * qint(3)
    with pytest.raises(AssertionError):
        qint(-1)


def test_rref():
    from degcones.exact import RowSpace, dense_rank, rref
    ech = rref([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert ech.rank == 2
    assert ech.pivots == [0, 1]
    assert ech.rows[0] == {0: 1, 2: 1}
    assert dense_rank([[1, 1], [1, -1]]) == 2

    space = RowSpace()
    space.add({0: Fraction(1), 1: Fraction(1)}, tag="a")
    space.add({1: Fraction(2)}, tag="b")
    assert space.contains({0: Fraction(3)})
    assert space.solve({0: Fraction(1), 1: Fraction(3)}) == {"a": 1, "b": 1}
    assert space.solve({2: Fraction(1)}) is None


def test_fields():
    from degcones.exact import ExactField, LaurentQ, SpecializedField, make_field, qint
    K = ExactField()
    assert K.to_laurent(K.qint(3)) == qint(3)
    assert K.to_laurent(K.qdiff()) == LaurentQ({1: 1, -1: -1})
    assert K.to_laurent(K.from_laurent(LaurentQ({-2: 1, 0: -1}))) == LaurentQ({-2: 1, 0: -1})

    S = SpecializedField(2)
    assert S.qint(2) == Fraction(5, 2)
    with pytest.raises(AssertionError):
        SpecializedField(1)

    assert [f.name for f in make_field("auto", rank=2)] == ["exact"]
    first, second = make_field("specialized", seed=3)
    assert first.q0 != second.q0
    assert [f.q0 for f in make_field("specialized", seed=3)] == [first.q0, second.q0]
    with pytest.raises(ValueError):
        make_field("approximate")
