# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Quantum group engine: triangular normal form in U_q(g), Lusztig automorphisms,
# PBW root vectors, quantum Serre relations and PBW expansions in U_q(n^-).
#
# Author(s): degcones developers
# Last modified: 10/2026


import logging
import threading

from sympy.utilities.iterables import multiset_permutations

from ..exact import RowSpace

LOG = logging.getLogger("degcones-quantum")
LOG.setLevel("INFO")
logging.basicConfig(
    format="%(asctime)s %(levelname)-8s %(message)s",
    level=logging.INFO,
    datefmt="%Y-%m-%d %H:%M:%S",
)

__all__ = [
    "QAlgebra", "QElem", "algebra_for", "field_key", "multiply", "lusztig_T", "lusztig_T_inverse",
    "pbw_root_vectors", "serre_relation", "serre_component", "words_of_weight", "pbw_monomials",
    "pbw_expand", "pbw_solve", "shuffle_image", "free_product", "pbw_free_expansion", "monomial_builder",
]


def field_key(field):
    return (field.name, str(getattr(field, "q0", "")))


def _vadd(*vecs):
    return tuple(sum(c) for c in zip(*vecs))


###################################################################################################
# Elements of U_q(g) in the normal form F-word * E-word * K^k
###################################################################################################


class QElem:
    """Finite linear combination of normal-ordered monomials F_{a_1}...F_{a_r} E_{b_1}...E_{b_s} K^k.

    Keys are (fword, eword, kvec) with 0-based letters; coefficients live in the
    scalar field of the owning QAlgebra and are never zero.
    """

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms=None):
        self.alg = alg
        self.terms = {key: val for key, val in (terms or {}).items() if val}

    @property
    def weight(self):
        """Common weight in the simple-root basis (F_i counts -alpha_i, E_i counts +alpha_i).

        Raises
        ------
        RuntimeError
            If the element is not homogeneous
        """
        weights = {self.alg.monomial_weight(key) for key in self.terms}
        if len(weights) > 1:
            raise RuntimeError(f"Element is not homogeneous: weights {sorted(weights)}")
        if not weights:
            return tuple([0] * self.alg.n)
        return weights.pop()

    def is_homogeneous(self):
        return len({self.alg.monomial_weight(key) for key in self.terms}) <= 1

    def is_pure_f(self):
        zero = self.alg.zero_k
        return all(e == () and k == zero for (_, e, k) in self.terms)

    def f_part(self):
        """The element as a map F-word -> coefficient; it must contain F-letters only."""
        if not self.is_pure_f():
            raise RuntimeError("Element contains E or K letters")
        return {f: c for (f, _, _), c in self.terms.items()}

    def _combine(self, other, sign):
        out = dict(self.terms)
        for key, val in other.terms.items():
            new = out.get(key, self.alg.field.zero) + sign * val
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        return QElem(self.alg, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return QElem(self.alg, {key: -val for key, val in self.terms.items()})

    def scale(self, coeff):
        return QElem(self.alg, {key: coeff * val for key, val in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, QElem):
            return self.alg.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, QElem):
            return NotImplemented
        return not (self - other)

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (f, e, k), c in sorted(self.terms.items()):
            letters = [f"F{a + 1}" for a in f] + [f"E{b + 1}" for b in e]
            letters += [f"K{i + 1}^{p}" if p != 1 else f"K{i + 1}" for i, p in enumerate(k) if p]
            parts.append(f"({c})*{''.join(letters) or '1'}")
        return " + ".join(parts)

    __repr__ = __str__


class QAlgebra:
    """U_q(g) for a root system over a scalar field, with memoized normal ordering.

    K-letters are moved to the right of E-letters and E-letters to the right of
    F-letters using only K^k F_j = q^{-(k, alpha_j)} F_j K^k, K^k E_j = q^{(k, alpha_j)} E_j K^k
    and E_i F_j - F_j E_i = delta_ij (K_i - K_i^{-1}) / (q_i - q_i^{-1}). F- and E-words
    stay free.
    """

    def __init__(self, rs, field):
        self.rs = rs
        self.field = field
        self.n = rs.rank
        self.zero_k = tuple([0] * self.n)
        self._form = rs.form_matrix
        self._nf = {}
        self._single = {}
        self._T = {}

    # --- bookkeeping ---

    def kform(self, kvec, j):
        """(kappa, alpha_j) for K^kappa = prod K_i^{kappa_i}."""
        return sum(kvec[i] * self._form[i][j] for i in range(self.n) if kvec[i])

    def monomial_weight(self, key):
        f, e, _ = key
        wt = [0] * self.n
        for a in f:
            wt[a] -= 1
        for b in e:
            wt[b] += 1
        return tuple(wt)

    def unit(self, i, sign=1):
        return tuple(sign if k == i else 0 for k in range(self.n))

    # --- constructors ---

    def one(self):
        return QElem(self, {((), (), self.zero_k): self.field.one})

    def scalar(self, c):
        return QElem(self, {((), (), self.zero_k): c})

    def F(self, i):
        return QElem(self, {((i,), (), self.zero_k): self.field.one})

    def E(self, i):
        return QElem(self, {((), (i,), self.zero_k): self.field.one})

    def K(self, kvec):
        return QElem(self, {((), (), tuple(kvec)): self.field.one})

    def f_word(self, word, coeff=None):
        return QElem(self, {(tuple(word), (), self.zero_k): self.field.one if coeff is None else coeff})

    def from_f_dict(self, fdict):
        return QElem(self, {(f, (), self.zero_k): c for f, c in fdict.items()})

    # --- normal ordering ---

    def _e_past_f(self, a, f):
        """E_a F^f as a map (fword, eword, kvec) -> coefficient."""
        key = (a, f)
        if key in self._single:
            return self._single[key]
        field = self.field
        res = {(f, (a,), self.zero_k): field.one}
        denom = field.qdiff(self.rs.d[a])
        for t, b in enumerate(f):
            if b != a:
                continue
            X = sum(self._form[a][f[u]] for u in range(t + 1, len(f)))
            rest = f[:t] + f[t + 1:]
            for sign in (1, -1):
                k = (rest, (), self.unit(a, sign))
                val = res.get(k, field.zero) + sign * field.q_pow(-sign * X) / denom
                if val:
                    res[k] = val
                else:
                    res.pop(k, None)
        self._single[key] = res
        return res

    def normal_ef(self, e, f):
        """E^e F^f rewritten in F E K normal form."""
        key = (e, f)
        if key in self._nf:
            return self._nf[key]
        field = self.field
        if not e or not f:
            res = {(f, e, self.zero_k): field.one}
        else:
            res = {}
            a, rest = e[-1], e[:-1]
            for (f1, e1, k1), c1 in self._e_past_f(a, f).items():
                for (f2, e2, k2), c2 in self.normal_ef(rest, f1).items():
                    t = sum(self.kform(k2, j) for j in e1)
                    out_key = (f2, e2 + e1, _vadd(k2, k1))
                    val = res.get(out_key, field.zero) + c1 * c2 * field.q_pow(t)
                    if val:
                        res[out_key] = val
                    else:
                        res.pop(out_key, None)
        self._nf[key] = res
        return res

    def multiply(self, a, b):
        field = self.field
        out = {}
        for (f1, e1, k1), c1 in a.terms.items():
            for (f2, e2, k2), c2 in b.terms.items():
                shift = sum(self.kform(k1, j) for j in e2) - sum(self.kform(k1, j) for j in f2)
                base = c1 * c2 * field.q_pow(shift)
                for (fp, ep, kp), c3 in self.normal_ef(e1, f2).items():
                    t = sum(self.kform(kp, j) for j in e2)
                    key = (f1 + fp, ep + e2, _vadd(kp, k1, k2))
                    val = out.get(key, field.zero) + base * c3 * field.q_pow(t)
                    if val:
                        out[key] = val
                    else:
                        out.pop(key, None)
        return QElem(self, out)

    # --- Lusztig automorphisms ---

    def _divided(self, i, r):
        return self.field.one / self.field.qfactorial(r, self.rs.d[i])

    def _generator_image(self, i, kind, j, inverse):
        key = (i, kind, j, inverse)
        if key in self._T:
            return self._T[key]
        field = self.field
        d = self.rs.d[i]
        zero = self.zero_k
        if j == i:
            if kind == "F" and not inverse:
                # -K_i^{-1} E_i
                img = {((), (i,), self.unit(i, -1)): -field.q_pow(-2 * d)}
            elif kind == "F":
                # -E_i K_i
                img = {((), (i,), self.unit(i)): -field.one}
            elif not inverse:
                # -F_i K_i
                img = {((i,), (), self.unit(i)): -field.one}
            else:
                # -K_i^{-1} F_i
                img = {((i,), (), self.unit(i, -1)): -field.q_pow(2 * d)}
        else:
            m = -self.rs.cartan[i][j]
            img = {}
            for r in range(m + 1):
                s = m - r
                scale = self._divided(i, r) * self._divided(i, s)
                if kind == "F":
                    coeff = (-1) ** r * field.q_pow(d * r) * scale
                    word = (i,) * s + (j,) + (i,) * r if inverse else (i,) * r + (j,) + (i,) * s
                    img[(word, (), zero)] = coeff
                else:
                    coeff = (-1) ** r * field.q_pow(-d * r) * scale
                    word = (i,) * r + (j,) + (i,) * s if inverse else (i,) * s + (j,) + (i,) * r
                    img[((), word, zero)] = coeff
        elem = QElem(self, img)
        self._T[key] = elem
        return elem

    def _k_image(self, i, kvec):
        k = list(kvec)
        k[i] = kvec[i] - sum(self.rs.cartan[i][j] * kvec[j] for j in range(self.n))
        return tuple(k)

    def T(self, i, x, inverse=False):
        """Lusztig's automorphism T_i (or its inverse) applied to x."""
        cache = {}
        out = QElem(self)
        for key, c in x.terms.items():
            if key not in cache:
                f, e, k = key
                img = self.one()
                for a in f:
                    img = self.multiply(img, self._generator_image(i, "F", a, inverse))
                for b in e:
                    img = self.multiply(img, self._generator_image(i, "E", b, inverse))
                img = self.multiply(img, self.K(self._k_image(i, k)))
                cache[key] = img
            out = out + cache[key].scale(c)
        return out

    # --- F-only arithmetic on word dictionaries ---

    def concat(self, x, y):
        """Product of two F-only elements given as dicts word -> coefficient."""
        field = self.field
        out = {}
        for u, cu in x.items():
            for v, cv in y.items():
                w = u + v
                val = out.get(w, field.zero) + cu * cv
                if val:
                    out[w] = val
                else:
                    out.pop(w, None)
        return out


_ALGEBRAS = {}
_ALGEBRA_LOCK = threading.Lock()


def algebra_for(rs, field):
    """Shared QAlgebra per (type, field) so that normal-ordering memos are reused."""
    key = (str(rs.cartan_type), field_key(field))
    with _ALGEBRA_LOCK:
        if key not in _ALGEBRAS:
            _ALGEBRAS[key] = QAlgebra(rs, field)
        return _ALGEBRAS[key]


def multiply(a, b):
    """Product of two elements in F E K normal form (no Serre reduction)."""
    assert a.alg is b.alg, "ERROR: Elements belong to different algebras!"
    return a.alg.multiply(a, b)


def lusztig_T(i, x):
    """T_i(E_i) = -F_i K_i, T_i(F_i) = -K_i^{-1} E_i, T_i(K_j) = K_j K_i^{-c_ij} and the divided-power
    formulas on E_j, F_j for j != i, extended multiplicatively and normal ordered."""
    return x.alg.T(i, x)


def lusztig_T_inverse(i, x):
    return x.alg.T(i, x, inverse=True)


###################################################################################################
# PBW root vectors
###################################################################################################


_ROOT_VECTORS = {}


def pbw_root_vectors(order, field):
    """PBW root vectors F_{beta_t} = T_{i_1}...T_{i_{t-1}}(F_{i_t}) of a convex order.

    Parameters
    ----------
    order : ConvexOrder
    field : ExactField or SpecializedField

    Returns
    -------
    list
        QElem of weight -beta_t for every position t, containing F-letters only

    Raises
    ------
    RuntimeError
        If an intermediate image keeps E or K letters, or has the wrong weight
    """
    key = (str(order.rs.cartan_type), order.word, field_key(field))
    if key in _ROOT_VECTORS:
        return _ROOT_VECTORS[key]
    alg = algebra_for(order.rs, field)
    vectors = []
    for t, letter in enumerate(order.word):
        x = alg.F(letter)
        for i in reversed(order.word[:t]):
            x = alg.T(i, x)
            if not x.is_pure_f():
                raise RuntimeError(f"Root vector {t} of {order} kept E/K letters after T_{i + 1}")
        if x.weight != tuple(-c for c in order.betas[t]):
            raise RuntimeError(f"Root vector {t} of {order} has weight {x.weight}")
        vectors.append(x)
    _ROOT_VECTORS[key] = vectors
    return vectors


###################################################################################################
# Serre relations and weight components of the Serre ideal
###################################################################################################


def serre_relation(alg, i, j):
    """sum_r (-1)^r F_i^{(1-c_ij-r)} F_j F_i^{(r)}, which vanishes in U_q(n^-)."""
    assert i != j, "ERROR: Serre relations need two distinct indices!"
    m = 1 - alg.rs.cartan[i][j]
    fdict = {}
    for r in range(m + 1):
        coeff = (-1) ** r * alg._divided(i, m - r) * alg._divided(i, r)
        fdict[(i,) * (m - r) + (j,) + (i,) * r] = coeff
    return alg.from_f_dict(fdict)


def words_of_weight(nu):
    """All free words in the letters i with multiplicities nu_i."""
    letters = [i for i, c in enumerate(nu) for _ in range(c)]
    if not letters:
        return [()]
    return [tuple(w) for w in multiset_permutations(letters)]


def _sub_vectors(nu):
    """All mu with 0 <= mu <= nu componentwise."""
    out = [()]
    for c in nu:
        out = [v + (k,) for v in out for k in range(c + 1)]
    return out


_SERRE_CACHE = {}
_SERRE_LOCK = threading.Lock()


def serre_component(alg, nu):
    """Echelon basis of the weight -nu part of the two-sided quantum Serre ideal.

    Spanned by u * S_ij * v over all Serre relations S_ij and free words u, v of
    complementary weights. Cached per (type, weight, field).
    """
    nu = tuple(nu)
    key = (str(alg.rs.cartan_type), nu, field_key(alg.field))
    with _SERRE_LOCK:
        if key in _SERRE_CACHE:
            return _SERRE_CACHE[key]
    space = RowSpace()
    n = alg.n
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            rel = serre_relation(alg, i, j).f_part()
            wt = [0] * n
            wt[i] += 1 - alg.rs.cartan[i][j]
            wt[j] += 1
            rest = tuple(a - b for a, b in zip(nu, wt))
            if any(c < 0 for c in rest):
                continue
            for mu1 in _sub_vectors(rest):
                mu2 = tuple(a - b for a, b in zip(rest, mu1))
                for u in words_of_weight(mu1):
                    for v in words_of_weight(mu2):
                        space.add({u + w + v: c for w, c in rel.items()})
    LOG.info(f"Serre component {key[0]} weight {nu}: rank {space.rank}")
    with _SERRE_LOCK:
        _SERRE_CACHE[key] = space
    return space


###################################################################################################
# Quantum shuffle embedding
###################################################################################################


class _Shuffler:
    """q-shuffle products u * v = sum over interleavings of prod q^{-(alpha_a, alpha_b)},
    one factor for every letter b of v placed before a letter a of u."""

    def __init__(self, alg):
        self.alg = alg
        self.field = alg.field
        self._pairs = {}
        self._words = {}

    def shuffle_words(self, u, v):
        """Interleavings of u and v as a map (word, q-exponent) -> multiplicity."""
        key = (u, v)
        if key in self._pairs:
            return self._pairs[key]
        form = self.alg._form
        n = self.alg.n
        # suffix_exp[k][b] = -(weight of u[k:], alpha_b)
        suffix_exp = [[0] * n for _ in range(len(u) + 1)]
        for k in range(len(u) - 1, -1, -1):
            for b in range(n):
                suffix_exp[k][b] = suffix_exp[k + 1][b] - form[u[k]][b]
        out = {}
        stack = [(0, 0, (), 0)]
        while stack:
            iu, iv, word, e = stack.pop()
            if iu == len(u) and iv == len(v):
                out[(word, e)] = out.get((word, e), 0) + 1
                continue
            if iu < len(u):
                stack.append((iu + 1, iv, word + (u[iu],), e))
            if iv < len(v):
                b = v[iv]
                stack.append((iu, iv + 1, word + (b,), e + suffix_exp[iu][b]))
        if len(u) + len(v) <= 8:
            self._pairs[key] = out
        return out

    def product(self, x, y):
        field = self.field
        out = {}
        for u, cu in x.items():
            for v, cv in y.items():
                for (w, e), mult in self.shuffle_words(u, v).items():
                    val = out.get(w, field.zero) + mult * cu * cv * field.q_pow(e)
                    if val:
                        out[w] = val
                    else:
                        out.pop(w, None)
        return out

    def image_of_word(self, word):
        if word in self._words:
            return self._words[word]
        if len(word) <= 1:
            img = {word: self.field.one}
        else:
            img = self.product(self.image_of_word(word[:-1]), {(word[-1],): self.field.one})
        self._words[word] = img
        return img

    def image(self, fdict):
        field = self.field
        out = {}
        for w, c in fdict.items():
            for v, cv in self.image_of_word(w).items():
                val = out.get(v, field.zero) + c * cv
                if val:
                    out[v] = val
                else:
                    out.pop(v, None)
        return out


_SHUFFLERS = {}


def _shuffler(alg):
    key = (str(alg.rs.cartan_type), field_key(alg.field))
    if key not in _SHUFFLERS:
        _SHUFFLERS[key] = _Shuffler(alg)
    return _SHUFFLERS[key]


def shuffle_image(x):
    """Image of an F-only element under the quantum shuffle map, whose kernel is the Serre ideal.

    Parameters
    ----------
    x : QElem or dict
        F-only element, or a dict F-word -> coefficient (then pass through QElem first)
    """
    if isinstance(x, QElem):
        return _shuffler(x.alg).image(x.f_part())
    raise ValueError("shuffle_image expects a QElem")


def free_product(alg, factors):
    """Concatenation product of F-only word dictionaries."""
    out = {(): alg.field.one}
    for x in factors:
        out = alg.concat(out, x)
    return out


###################################################################################################
# PBW monomials and expansions
###################################################################################################


def pbw_monomials(order, nu, positions=None):
    """All exponent vectors s with sum_t s_t beta_t = nu, optionally supported on given positions."""
    nu = tuple(nu)
    allowed = list(range(order.N)) if positions is None else sorted(positions)
    out = []
    s = [0] * order.N

    def rec(k, rest):
        if not any(rest):
            out.append(tuple(s))
            return
        if k == len(allowed):
            return
        t = allowed[k]
        beta = order.betas[t]
        cur = rest
        m = 0
        while all(c >= 0 for c in cur):
            s[t] = m
            rec(k + 1, cur)
            cur = tuple(c - b for c, b in zip(cur, beta))
            m += 1
        s[t] = 0

    rec(0, nu)
    return sorted(out)


class _MonomialBuilder:
    """Memoized prefix products F_{beta_{t_1}} F_{beta_{t_2}} ... in the free algebra
    or in the shuffle algebra."""

    def __init__(self, order, field, shuffle):
        self.alg = algebra_for(order.rs, field)
        self.vectors = [v.f_part() for v in pbw_root_vectors(order, field)]
        self.shuffle = _shuffler(self.alg) if shuffle else None
        if self.shuffle is not None:
            self.vectors = [self.shuffle.image(v) for v in self.vectors]
        self._memo = {(): {(): field.one}}

    def build(self, factors):
        factors = tuple(factors)
        if factors in self._memo:
            return self._memo[factors]
        head = self.build(factors[:-1])
        last = self.vectors[factors[-1]]
        if self.shuffle is not None:
            res = self.shuffle.product(head, last)
        else:
            res = self.alg.concat(head, last)
        self._memo[factors] = res
        return res

    def monomial(self, s):
        return self.build(tuple(t for t, m in enumerate(s) for _ in range(m)))


_BUILDERS = {}


def monomial_builder(order, field, shuffle):
    return _builder(order, field, shuffle)


def _builder(order, field, shuffle):
    key = (str(order.rs.cartan_type), order.word, field_key(field), shuffle)
    if key not in _BUILDERS:
        _BUILDERS[key] = _MonomialBuilder(order, field, shuffle)
    return _BUILDERS[key]


def pbw_free_expansion(order, field, s):
    """F^s = F_{beta_1}^{s_1}...F_{beta_N}^{s_N} expanded into free F-words."""
    return _builder(order, field, False).monomial(s)


def pbw_expand(x, order, method="serre", positions=None):
    """Coefficients c_s with x = sum_s c_s F^s in U_q(n^-).

    Parameters
    ----------
    x : QElem
        Homogeneous F-only element of weight -nu
    order : ConvexOrder
    method : str
        'serre' solves x = sum c_s F^s modulo the weight component of the Serre
        ideal; 'shuffle' solves the same system after the quantum shuffle map
    positions : iterable, optional
        Restricts the candidate monomials to these positions

    Returns
    -------
    dict
        exponent vector -> nonzero field coefficient

    Raises
    ------
    RuntimeError
        If the linear system is inconsistent or the PBW monomials are dependent
    """
    if method not in ("serre", "shuffle"):
        raise ValueError(f"Unknown expansion method '{method}' (supported: serre, shuffle)")
    alg = x.alg
    fdict = x.f_part()
    if not fdict:
        return {}
    nu = tuple(-c for c in x.weight)
    target = fdict if method == "serre" else _shuffler(alg).image(fdict)
    return pbw_solve(order, alg.field, nu, target, method, positions)


def pbw_solve(order, field, nu, target, method, positions=None):
    """Solves target = sum_s c_s F^s, with target given as free words ('serre') or as its
    shuffle image ('shuffle'), over the PBW monomials of weight nu."""
    alg = algebra_for(order.rs, field)
    candidates = pbw_monomials(order, nu, positions)
    if method == "serre":
        space = serre_component(alg, nu).copy()
        builder = _builder(order, field, False)
    elif method == "shuffle":
        space = RowSpace()
        builder = _builder(order, field, True)
    else:
        raise ValueError(f"Unknown expansion method '{method}' (supported: serre, shuffle)")
    for s in candidates:
        if not space.add(builder.monomial(s), tag=("pbw", s)):
            raise RuntimeError(f"PBW monomial {s} is dependent on the others in weight {nu}")
    combination = space.solve(target)
    if combination is None:
        raise RuntimeError(f"Element of weight {nu} has no PBW expansion on the given candidates")
    return {tag[1]: c for tag, c in combination.items() if isinstance(tag, tuple) and tag[0] == "pbw" and c}
