# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Reduced decompositions of the longest Weyl group element and their convex orders.
#
# Author(s): degcones developers
# Last modified: 10/2026


import json
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

LOG = logging.getLogger("degcones-roots")
LOG.setLevel("INFO")
logging.basicConfig(
    format="%(asctime)s %(levelname)-8s %(message)s",
    level=logging.INFO,
    datefmt="%Y-%m-%d %H:%M:%S",
)

__all__ = [
    "parse_word", "format_word", "word_to_json", "word_from_json", "reflection_matrix",
    "reduced_words_of_w0", "is_reduced_w0", "ConvexOrder", "convex_order", "designated_word",
    "commuting_swaps", "DESIGNATED_WORDS",
]

# Words of the explicit tables; all other types use the lexicographically smallest word.
DESIGNATED_WORDS = {
    ("A", 2): "121",
    ("C", 2): "1212",
    ("A", 3): "121321",
    ("B", 3): "121321323",
    ("C", 3): "123212323",
    ("D", 4): "212324212324",
    ("G", 2): "121212",
}


def parse_word(text, rank=None):
    """Parses a word given with 1-based letters ('1212' or '1,2,1,2') into 0-based letters."""
    if isinstance(text, (list, tuple)):
        letters = tuple(int(c) for c in text)
        assert all(c >= 0 for c in letters), "ERROR: Letters must be nonnegative!"
        return letters
    text = text.strip()
    if "," in text or " " in text:
        parts = [p for p in text.replace(",", " ").split() if p]
    else:
        parts = list(text)
    assert all(p.isdigit() for p in parts), f"ERROR: Cannot parse word '{text}'!"
    letters = tuple(int(p) - 1 for p in parts)
    assert all(c >= 0 for c in letters), "ERROR: Letters are numbered from 1!"
    if rank is not None:
        assert all(c < rank for c in letters), f"ERROR: Word '{text}' uses letters beyond rank {rank}!"
    return letters


def format_word(word):
    if any(c >= 9 for c in word):
        return ",".join(str(c + 1) for c in word)
    return "".join(str(c + 1) for c in word)


def word_to_json(word):
    return json.dumps([c + 1 for c in word])


def word_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    return tuple(int(c) - 1 for c in data)


def reflection_matrix(rs, i):
    """Matrix of s_i on the simple-root basis: s_i(beta) = beta - <beta, alpha_i^vee> alpha_i."""
    S = np.eye(rs.rank, dtype=int)
    S[i, :] -= np.array(rs.cartan[i], dtype=int)
    return S


@lru_cache(maxsize=None)
def _reflections(rs):
    return tuple(reflection_matrix(rs, i) for i in range(rs.rank))


def reduced_words_of_w0(rs, limit=None):
    """Streams reduced decompositions of w0 in lexicographic order.

    A prefix w can be extended by s_i iff w(alpha_i) is a positive root; every
    maximal extension has length N and equals w0.

    Parameters
    ----------
    rs : RootSystem
    limit : int, optional
        Maximal number of words to emit; exhaustive if None

    Yields
    ------
    tuple
        0-based letters
    """
    S = _reflections(rs)
    n, N = rs.rank, rs.N
    emitted = 0
    # explicit stack: (prefix, w as matrix, next letter to try)
    stack = [((), np.eye(n, dtype=int), 0)]
    while stack:
        prefix, w, start = stack.pop()
        if len(prefix) == N:
            yield prefix
            emitted += 1
            if limit is not None and emitted >= limit:
                return
            continue
        for i in range(start, n):
            if (w[:, i] >= 0).all():
                stack.append((prefix, w, i + 1))
                stack.append((prefix + (i,), w @ S[i], 0))
                break


def is_reduced_w0(rs, word):
    try:
        convex_order(rs, word)
    except AssertionError:
        return False
    return True


@dataclass(frozen=True)
class ConvexOrder:
    """A reduced word of w0 with its induced order beta_1 < ... < beta_N on the positive roots."""

    rs: object
    word: tuple
    betas: tuple

    @property
    def N(self):
        return len(self.betas)

    @cached_property
    def position(self):
        return {beta: t for t, beta in enumerate(self.betas)}

    @cached_property
    def to_canonical(self):
        """Position t -> index of beta_t in the canonical root order."""
        return tuple(self.rs.index[beta] for beta in self.betas)

    def vector_to_canonical(self, vec):
        out = [0] * self.N
        for t, v in enumerate(vec):
            out[self.to_canonical[t]] = v
        return tuple(out)

    def vector_from_canonical(self, vec):
        return tuple(vec[k] for k in self.to_canonical)

    def labels(self, style="plain"):
        return [self.rs.label(beta, style) for beta in self.betas]

    def is_convex(self):
        for i in range(self.N):
            for j in range(i + 1, self.N):
                s = tuple(a + b for a, b in zip(self.betas[i], self.betas[j]))
                if s in self.rs.root_set and not i < self.position[s] < j:
                    return False
        return True

    def __str__(self):
        return f"{self.rs}:{format_word(self.word)}"


def convex_order(rs, word):
    """Convex order of a reduced word, beta_t = s_{i_1}...s_{i_{t-1}}(alpha_{i_t}).

    Parameters
    ----------
    rs : RootSystem
    word : tuple or str
        0-based letters, or a digit string with 1-based letters

    Returns
    -------
    ConvexOrder

    Raises
    ------
    AssertionError
        If the word is not a reduced decomposition of w0
    """
    if isinstance(word, str):
        word = parse_word(word, rs.rank)
    word = tuple(word)
    assert len(word) == rs.N, f"ERROR: A reduced word of w0 in {rs} has length {rs.N}, not {len(word)}!"
    assert all(0 <= i < rs.rank for i in word), "ERROR: Letter out of range!"
    S = _reflections(rs)
    w = np.eye(rs.rank, dtype=int)
    betas = []
    for i in word:
        beta = tuple(int(c) for c in w[:, i])
        assert all(c >= 0 for c in beta), f"ERROR: Word {format_word(word)} is not reduced!"
        betas.append(beta)
        w = w @ S[i]
    assert len(set(betas)) == rs.N, f"ERROR: Word {format_word(word)} is not reduced!"
    return ConvexOrder(rs, word, tuple(betas))


def designated_word(rs):
    """Word fixing the PBW product order of a type."""
    ct = rs.cartan_type
    text = DESIGNATED_WORDS.get((ct.family, ct.rank))
    if text is not None:
        return parse_word(text)
    return next(reduced_words_of_w0(rs, limit=1))


def commuting_swaps(rs, word):
    """All (position, word) obtained by swapping an adjacent pair of commuting reflections."""
    out = []
    for t in range(len(word) - 1):
        a, b = word[t], word[t + 1]
        if a != b and rs.cartan[a][b] == 0:
            swapped = word[:t] + (b, a) + word[t + 2:]
            out.append((t, swapped))
    return out
