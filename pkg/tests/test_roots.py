# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

import pytest


def test_positive_root_counts():
    from degcones.roots import build_root_system
    counts = {"A2": 3, "A3": 6, "A4": 10, "B3": 9, "C2": 4, "C3": 9, "D4": 12, "G2": 6}
    for type_text, n in counts.items():
        assert build_root_system(type_text).N == n


def test_canonical_order_and_labels():
    from degcones.roots import build_root_system, root_by_label
    c2 = build_root_system("C2")
    assert c2.positive_roots == ((1, 0), (0, 1), (1, 1), (2, 1))
    assert c2.labels == ("1,1", "2,2", "1,2", "1,1bar")
    assert root_by_label(c2, "d_{1,1bar}") == (2, 1)
    assert build_root_system("G2").labels == ("1", "2", "12", "112", "1112", "11122")
    assert build_root_system("D4").labels[-1] == "1211"
    with pytest.raises(ValueError):
        root_by_label(c2, "2,2bar")


def test_invalid_types():
    from degcones.roots import build_root_system
    for text in ("G3", "D3", "E6", "B1"):
        with pytest.raises(AssertionError):
            build_root_system(text)


def test_weyl_dimension():
    from degcones.roots import build_root_system, weyl_dim
    assert weyl_dim(build_root_system("A2"), (1, 1)) == 8
    assert weyl_dim(build_root_system("C2"), (1, 0)) == 4
    assert weyl_dim(build_root_system("C2"), (0, 1)) == 5
    assert weyl_dim(build_root_system("G2"), (1, 0)) == 7
    assert weyl_dim(build_root_system("G2"), (0, 1)) == 14
    assert weyl_dim(build_root_system("A4"), (1, 1, 1, 1)) == 1024
    assert weyl_dim(build_root_system("D4"), (0, 1, 0, 0)) == 28


def test_reduced_words():
    from degcones.roots import build_root_system, format_word, reduced_words_of_w0
    words = [format_word(w) for w in reduced_words_of_w0(build_root_system("A2"))]
    assert words == ["121", "212"]
    assert len(list(reduced_words_of_w0(build_root_system("A3")))) == 16
    assert len(list(reduced_words_of_w0(build_root_system("B3"), limit=5))) == 5


def test_convex_order():
    from degcones.roots import build_root_system, convex_order, parse_word
    c2 = build_root_system("C2")
    order = convex_order(c2, "1212")
    assert order.betas == ((1, 0), (2, 1), (1, 1), (0, 1))
    assert order.is_convex()
    assert order.vector_to_canonical((1, 2, 3, 4)) == (1, 4, 3, 2)
    assert order.vector_from_canonical(order.vector_to_canonical((1, 2, 3, 4))) == (1, 2, 3, 4)
    assert parse_word("1,2,1") == (0, 1, 0)
    with pytest.raises(AssertionError):
        convex_order(c2, "1122")
    with pytest.raises(AssertionError):
        convex_order(c2, "121")


def test_commuting_swaps():
    from degcones.roots import build_root_system, commuting_swaps, format_word, parse_word
    a3 = build_root_system("A3")
    swaps = commuting_swaps(a3, parse_word("121321"))
    assert [format_word(w) for _, w in swaps] == ["123121"]
