# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Finite-dimensional simple modules V(lam) assembled weight space by weight space from the
# Chevalley generators, and root vector operators in a Chevalley normalization.
#
# Author(s): degcones developers
# Last modified: 10/2026


import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..exact import RowSpace, dense_rank
from ..roots import is_dominant, weyl_dim

LOG = logging.getLogger("degcones-rep")
LOG.setLevel("INFO")
logging.basicConfig(
    format="%(asctime)s %(levelname)-8s %(message)s",
    level=logging.INFO,
    datefmt="%Y-%m-%d %H:%M:%S",
)

__all__ = ["RepModule", "build_irrep", "extraspecial_pairs", "shapovalov_gram", "gram_rank", "f_words_of_weight"]


def _zeros(rows, cols):
    return np.full((rows, cols), Fraction(0), dtype=object)


def _matmul(a, b):
    if 0 in a.shape or 0 in b.shape:
        return _zeros(a.shape[0], b.shape[1])
    return a.dot(b)


def _unit(n, i):
    out = tuple(1 if k == i else 0 for k in range(n))
    return out


def _vadd(a, b, sign=1):
    return tuple(x + sign * y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def extraspecial_pairs(rs):
    """gamma -> (i, gamma - alpha_i, p) for every non-simple positive root, with i the smallest
    index such that gamma - alpha_i is a root and p the largest k with gamma - alpha_i - k alpha_i a root."""
    out = {}
    for gamma in rs.positive_roots:
        if rs.height(gamma) == 1:
            continue
        for i in range(rs.rank):
            beta = _vadd(gamma, _unit(rs.rank, i), -1)
            if beta in rs.root_set:
                p = 0
                cur = _vadd(beta, _unit(rs.rank, i), -1)
                while cur in rs.root_set:
                    p += 1
                    cur = _vadd(cur, _unit(rs.rank, i), -1)
                out[gamma] = (i, beta, p)
                break
    return out


@dataclass(eq=False)
class RepModule:
    """V(lam) with weight spaces indexed by their depth nu = lam - mu in simple root coordinates.

    Attributes
    ----------
    rs : RootSystem
    lam : tuple
        Highest weight in fundamental-weight coordinates
    dims : dict
        Depth nu -> dimension r_mu of the weight space
    F, E : dict
        (i, nu) -> matrix of f_i on V_nu (into depth nu + alpha_i), resp. of e_i (into nu - alpha_i)
    """

    rs: object
    lam: tuple
    dims: dict
    F: dict
    E: dict
    _fcache: dict = field(default_factory=dict, repr=False)
    _ecache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self):
        return sum(self.dims.values())

    @property
    def top(self):
        return tuple([0] * self.rs.rank)

    def weight(self, nu):
        """Fundamental-weight coordinates of the weight at depth nu."""
        C = self.rs.cartan
        return tuple(self.lam[i] - sum(C[i][j] * nu[j] for j in range(self.rs.rank)) for i in range(self.rs.rank))

    def multiplicities(self):
        return {self.weight(nu): r for nu, r in self.dims.items()}

    def highest_vector(self):
        return np.array([Fraction(1)], dtype=object)

    def zero(self, nu):
        return np.full(self.dims.get(nu, 0), Fraction(0), dtype=object)

    def f_block(self, gamma, nu):
        """Matrix of f_gamma from V_nu to V_{nu + gamma}."""
        gamma, nu = tuple(gamma), tuple(nu)
        key = (gamma, nu)
        if key in self._fcache:
            return self._fcache[key]
        target = _vadd(nu, gamma)
        r_src, r_tgt = self.dims.get(nu, 0), self.dims.get(target, 0)
        if r_src == 0 or r_tgt == 0:
            out = _zeros(r_tgt, r_src)
        elif self.rs.height(gamma) == 1:
            out = self.F[(gamma.index(1), nu)]
        else:
            i, beta, p = extraspecial_pairs(self.rs)[gamma]
            ei = _unit(self.rs.rank, i)
            out = _matmul(self.f_block(ei, _vadd(nu, beta)), self.f_block(beta, nu))
            out = out - _matmul(self.f_block(beta, _vadd(nu, ei)), self.f_block(ei, nu))
            out = out / (p + 1)
        self._fcache[key] = out
        return out

    def e_block(self, gamma, nu):
        """Matrix of e_gamma from V_nu to V_{nu - gamma}, with [e_gamma, f_gamma] = h_gamma."""
        gamma, nu = tuple(gamma), tuple(nu)
        key = (gamma, nu)
        if key in self._ecache:
            return self._ecache[key]
        target = _vadd(nu, gamma, -1)
        r_src, r_tgt = self.dims.get(nu, 0), self.dims.get(target, 0)
        if r_src == 0 or r_tgt == 0:
            out = _zeros(r_tgt, r_src)
        elif self.rs.height(gamma) == 1:
            out = self.E[(gamma.index(1), nu)]
        else:
            i, beta, p = extraspecial_pairs(self.rs)[gamma]
            ei = _unit(self.rs.rank, i)
            out = _matmul(self.e_block(beta, _vadd(nu, ei, -1)), self.e_block(ei, nu))
            out = out - _matmul(self.e_block(ei, _vadd(nu, beta, -1)), self.e_block(beta, nu))
            out = out / (p + 1)
        self._ecache[key] = out
        return out

    def apply_f(self, gamma, nu, vec):
        """(f_gamma . vec, new depth) for vec in V_nu."""
        target = _vadd(nu, gamma)
        if not self.dims.get(target, 0) or not len(vec):
            return self.zero(target), target
        return self.f_block(gamma, nu).dot(vec), target

    def check(self):
        """Total dimension against the Weyl dimension formula and Weyl symmetry of multiplicities."""
        expected = weyl_dim(self.rs, self.lam)
        if self.dim != expected:
            raise RuntimeError(f"V{self.lam} of {self.rs} has dimension {self.dim}, expected {expected}")
        mult = self.multiplicities()
        for i in range(self.rs.rank):
            for mu, r in mult.items():
                image = tuple(mu[k] - mu[i] * self.rs.cartan[k][i] for k in range(self.rs.rank))
                if mult.get(image, 0) != r:
                    raise RuntimeError(f"Multiplicity of {mu} is not invariant under s_{i + 1}")
        return True

    def check_brackets(self, basis):
        """[f_a, f_b] = N_{a,b} f_{a+b} on every weight space, with N from a ChevalleyBasis.

        The structure constants are read off V(w_1); agreement on another module confirms
        that both carry the same Chevalley normalization of the root vectors.

        Raises
        ------
        RuntimeError
            On the first weight space where the bracket disagrees
        """
        for (a, b), n in basis.ff.items():
            s = _vadd(a, b)
            for nu in self.dims:
                lhs = _matmul(self.f_block(a, _vadd(nu, b)), self.f_block(b, nu))
                lhs = lhs - _matmul(self.f_block(b, _vadd(nu, a)), self.f_block(a, nu))
                rhs = self.f_block(s, nu)
                if any(x != n * y for x, y in zip(lhs.flat, rhs.flat)):
                    raise RuntimeError(
                        f"[f_{self.rs.label(a)}, f_{self.rs.label(b)}] != {n} f_{self.rs.label(s)} on V{self.lam}"
                    )
        return True


def _candidate_image(module_parts, rs, lam, nu, i, b):
    """e_j-images of f_i b for b a basis vector of V_{nu - alpha_i}, as a sparse dict (j, row) -> value."""
    dims, F, E = module_parts
    n = rs.rank
    src = _vadd(nu, _unit(n, i), -1)
    image = {}
    for j in range(n):
        tgt = _vadd(nu, _unit(n, j), -1)
        if not dims.get(tgt, 0):
            continue
        below = _vadd(src, _unit(n, j), -1)
        if dims.get(below, 0):
            col = F[(i, below)].dot(E[(j, src)][:, b])
            for row, val in enumerate(col):
                if val:
                    image[(j, row)] = image.get((j, row), 0) + val
        if j == i:
            h = lam[i] - sum(rs.cartan[i][k] * src[k] for k in range(n))
            if h:
                image[(j, b)] = image.get((j, b), 0) + Fraction(h)
    return {k: v for k, v in image.items() if v}


def build_irrep(rs, lam):
    """Simple module V(lam).

    Each weight space below the top is spanned by the vectors f_i b, b running over bases of
    the weight spaces one step higher. A vector below the top vanishes iff all its e_j-images
    vanish, so candidates are compared through their e_j-images in the weight spaces already built.

    Parameters
    ----------
    rs : RootSystem
    lam : tuple
        Dominant weight in fundamental-weight coordinates

    Returns
    -------
    RepModule

    Raises
    ------
    RuntimeError
        If the total dimension disagrees with the Weyl dimension formula
    """
    lam = tuple(int(m) for m in lam)
    assert len(lam) == rs.rank, f"ERROR: Weight {lam} does not match rank {rs.rank}!"
    assert is_dominant(lam), f"ERROR: Highest weight {lam} is not dominant!"
    return _build_irrep(rs, lam)


@lru_cache(maxsize=64)
def _build_irrep(rs, lam):
    n = rs.rank
    zero = tuple([0] * n)
    dims, F, E = {zero: 1}, {}, {}
    layer = [zero]
    while layer:
        next_nus = sorted({_vadd(nu, _unit(n, i)) for nu in layer for i in range(n)})
        layer = []
        for nu in next_nus:
            candidates = []
            for i in range(n):
                src = _vadd(nu, _unit(n, i), -1)
                candidates.extend((i, b) for b in range(dims.get(src, 0)))
            space = RowSpace()
            images, basis = [], []
            for k, (i, b) in enumerate(candidates):
                img = _candidate_image((dims, F, E), rs, lam, nu, i, b)
                images.append(img)
                if space.add(img, tag=k):
                    basis.append(k)
            if not basis:
                continue
            r = len(basis)
            dims[nu] = r
            pos = {k: idx for idx, k in enumerate(basis)}
            for i in range(n):
                src = _vadd(nu, _unit(n, i), -1)
                if not dims.get(src, 0):
                    continue
                M = _zeros(r, dims[src])
                for k, (ii, b) in enumerate(candidates):
                    if ii != i:
                        continue
                    for tag, c in space.solve(images[k]).items():
                        M[pos[tag], b] = c
                F[(i, src)] = M
            for j in range(n):
                tgt = _vadd(nu, _unit(n, j), -1)
                if not dims.get(tgt, 0):
                    continue
                M = _zeros(dims[tgt], r)
                for idx, k in enumerate(basis):
                    for (jj, row), c in images[k].items():
                        if jj == j:
                            M[row, idx] = c
                E[(j, nu)] = M
            layer.append(nu)
    module = RepModule(rs, lam, dims, F, E)
    module.check()
    LOG.info(f"Built V{lam} of {rs}: dimension {module.dim}, {len(dims)} weights")
    return module


def f_words_of_weight(nu):
    """All words in the letters 0..n-1 using letter k exactly nu[k] times."""
    from ..quantum import words_of_weight

    return words_of_weight(nu)


def _e_on_words(rs, lam, i, vec):
    """e_i on a combination of words f_{j_1}...f_{j_m} v_lam, as a dict word -> coefficient."""
    out = {}
    for word, c in vec.items():
        shift = 0
        for k in range(len(word) - 1, -1, -1):
            if word[k] == i:
                h = lam[i] - shift
                if h:
                    new = word[:k] + word[k + 1 :]
                    out[new] = out.get(new, 0) + c * h
            shift += rs.cartan[i][word[k]]
    return {w: c for w, c in out.items() if c}


def shapovalov_gram(rs, lam, nu):
    """Gram matrix of the contravariant form on f_{j_1}...f_{j_m} v_lam over all words of weight nu.

    Returns
    -------
    (words, numpy.ndarray)
        The words and the integer Gram matrix; its rank is the weight multiplicity
    """
    words = f_words_of_weight(nu)

    def pair(a, b):
        vec = {tuple(b): 1}
        for letter in a:
            vec = _e_on_words(rs, lam, letter, vec)
            if not vec:
                return 0
        return vec.get((), 0)

    gram = np.array([[pair(a, b) for b in words] for a in words], dtype=object)
    return words, gram


def gram_rank(rs, lam, nu):
    _, gram = shapovalov_gram(rs, lam, nu)
    return dense_rank(gram)
