"""Longest element of the Weyl group.

The main path never enumerates the group: ``w0`` is read off the dominance
(ascent) algorithm applied to ``-rho``, whose witnessing word is a reduced
expression of the longest element.  :func:`enumerate_weyl_group` is a
breadth-first oracle used only for cross-checking at small rank.

Words are sequences of 1-based simple-reflection indices *in the order they
are applied*: the word ``(i1, i2, ..., ik)`` denotes ``s_ik ... s_i2 s_i1``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

import numpy as np

from .errors import GroupTooLarge, IndexOutOfRange, InvariantViolation
from .root_system import (
    Cocharacter,
    Matrix,
    RootDatum,
    Weight,
    _check_rank,
    determinant,
    inverse,
)

DEFAULT_ORACLE_CAP = 1_000_000
ORACLE_CAP_ENV = "WONDERFUL_ORACLE_CAP"


def oracle_cap_from_env(default: int = DEFAULT_ORACLE_CAP) -> int:
    raw = os.environ.get(ORACLE_CAP_ENV)
    return int(raw) if raw else default


@dataclass(frozen=True)
class WeylElement:
    """An element of W acting on fundamental-weight coordinates (column vectors)."""

    matrix: Matrix
    word: tuple[int, ...]

    def __call__(self, lam):
        return Weight(_matvec(self.matrix, tuple(lam)))


def _check_index(datum: RootDatum, i: int):
    if not 1 <= i <= datum.rank:
        raise IndexOutOfRange(f"simple reflection index {i} outside 1..{datum.rank}")


def simple_reflection(datum: RootDatum, i: int, lam: Weight | Sequence[int]) -> Weight:
    """``s_i lam = lam - <lam, alpha_i^v> alpha_i``."""
    _check_index(datum, i)
    a = tuple(lam)
    _check_rank(datum.rank, len(a))
    k = a[i - 1]
    row = datum.cartan[i - 1]
    return Weight(x - k * y for x, y in zip(a, row))


def simple_coreflection(datum: RootDatum, i: int, eta: Cocharacter | Sequence[int]) -> Cocharacter:
    """``s_i eta = eta - <alpha_i, eta> alpha_i^v`` in coweight coordinates."""
    _check_index(datum, i)
    c = tuple(eta)
    _check_rank(datum.rank, len(c))
    k = c[i - 1]
    col = [datum.cartan[j][i - 1] for j in range(datum.rank)]
    return Cocharacter(x - k * y for x, y in zip(c, col))


def dominant_representative(datum: RootDatum, lam: Weight | Sequence[int]) -> tuple[Weight, tuple[int, ...]]:
    """Dominant weight in the W-orbit of ``lam`` and the word that reaches it.

    Reflects at the first negative coordinate until none is left.  Each step
    raises the pairing with the dual Weyl vector, so this terminates after at
    most ``|R+|`` steps.
    """
    cur = Weight(lam)
    _check_rank(datum.rank, len(cur))
    word = []
    while True:
        i = next((k for k, a in enumerate(cur.coords) if a < 0), None)
        if i is None:
            return cur, tuple(word)
        cur = simple_reflection(datum, i + 1, cur)
        word.append(i + 1)


def dominant_cocharacter(datum: RootDatum, eta: Cocharacter | Sequence[int]) -> tuple[Cocharacter, tuple[int, ...]]:
    """Same ascent as :func:`dominant_representative`, for one-parameter subgroups."""
    cur = Cocharacter(eta)
    _check_rank(datum.rank, len(cur))
    word = []
    while True:
        i = next((k for k, c in enumerate(cur.coords) if c < 0), None)
        if i is None:
            return cur, tuple(word)
        cur = simple_coreflection(datum, i + 1, cur)
        word.append(i + 1)


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _matvec(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


def reflection_matrix(datum: RootDatum, i: int) -> Matrix:
    """Matrix of ``s_i`` on weight coordinates."""
    _check_index(datum, i)
    n = datum.rank
    m = _identity(n)
    for r in range(n):
        m[r][i - 1] -= datum.cartan[i - 1][r]
    return tuple(tuple(row) for row in m)


def word_matrix(datum: RootDatum, word: Sequence[int]) -> Matrix:
    """Matrix on weight coordinates of the element spelled by ``word``."""
    n = datum.rank
    m = _identity(n)
    for i in word:
        _check_index(datum, i)
        row = datum.cartan[i - 1]
        # left-multiply by s_i: only row i-1 of m feeds the update
        pivot = list(m[i - 1])
        for r in range(n):
            if row[r]:
                m[r] = [x - row[r] * p for x, p in zip(m[r], pivot)]
    return tuple(tuple(row) for row in m)


@lru_cache(maxsize=None)
def longest_word(datum: RootDatum) -> tuple[int, ...]:
    """Reduced word for ``w0``: the ascent word carrying ``-rho`` to ``rho``."""
    dom, word = dominant_representative(datum, -datum.rho)
    if dom != datum.rho:
        raise InvariantViolation("dominant image of -rho is not rho")
    return word


@lru_cache(maxsize=None)
def w0_matrix(datum: RootDatum) -> Matrix:
    return word_matrix(datum, longest_word(datum))


@lru_cache(maxsize=None)
def w0_coweight_matrix(datum: RootDatum) -> Matrix:
    """Matrix of ``w0`` on coweight coordinates, by the transpose rule.

    With ``<lam, eta> = a^T C^{-1} c`` and ``w0`` an involution, invariance of
    the pairing forces ``N = C M^T C^{-1}``.
    """
    n = datum.rank
    c = datum.cartan
    cinv = inverse(c)
    m = w0_matrix(datum)
    cm = [[sum(c[i][k] * m[j][k] for k in range(n)) for j in range(n)] for i in range(n)]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            v = sum(cm[i][k] * cinv[k][j] for k in range(n))
            if v.denominator != 1:
                raise InvariantViolation("w0 on coweights is not integral")
            row.append(int(v))
        out.append(tuple(row))
    return tuple(out)


def w0_on_weight(datum: RootDatum, lam: Weight | Sequence[int]) -> Weight:
    a = tuple(lam)
    _check_rank(datum.rank, len(a))
    return Weight(_matvec(w0_matrix(datum), a))


def w0_on_cocharacter(datum: RootDatum, eta: Cocharacter | Sequence[int]) -> Cocharacter:
    c = tuple(eta)
    _check_rank(datum.rank, len(c))
    return Cocharacter(_matvec(w0_coweight_matrix(datum), c))


@lru_cache(maxsize=None)
def minus_w0_permutation(datum: RootDatum) -> tuple[int, ...]:
    """``sigma`` with ``-w0 alpha_i = alpha_sigma(i)``, as a 1-based tuple (entry i-1 is sigma(i))."""
    n = datum.rank
    perm = []
    for i in range(1, n + 1):
        img = -w0_on_weight(datum, datum.cartan[i - 1])
        j = next((k for k in range(n) if tuple(img) == datum.cartan[k]), None)
        if j is None:
            raise InvariantViolation(f"-w0 does not send alpha_{i} to a simple root")
        perm.append(j + 1)
    if sorted(perm) != list(range(1, n + 1)):
        raise InvariantViolation("-w0 is not a permutation of the simple roots")
    return tuple(perm)


# ---------------------------------------------------------------------------
# brute-force oracle


def weyl_group_order(datum: RootDatum) -> int:
    """``|W| = l! * det(C) * prod(highest-root coefficients)``."""
    return factorial(datum.rank) * determinant(datum.cartan) * prod(datum.theta.coords)


def _height_functional(datum: RootDatum) -> np.ndarray:
    """Integer row vector proportional (positive factor) to the height of a weight-coordinate vector."""
    n = datum.rank
    cinv = inverse(datum.cartan)
    # height(a) = sum_k r_k with r = (C^{-1})^T a, i.e. sum_k sum_i cinv[i][k] a_i
    h = [sum(cinv[i][k] for k in range(n)) for i in range(n)]
    den = 1
    for x in h:
        den = den * x.denominator // np.gcd(den, x.denominator)
    return np.array([int(x * den) for x in h], dtype=np.int64)


def _pack(mats: np.ndarray) -> np.ndarray:
    """Injective packing of small integer matrices into rows of uint64 words, one byte per entry."""
    n2 = mats.shape[1] * mats.shape[2]
    flat = mats.reshape(len(mats), n2)
    if flat.size and (flat.min() < -128 or flat.max() > 127):
        raise InvariantViolation("Weyl matrix entry outside the packable range")
    words = -(-n2 // 8)
    buf = np.zeros((len(mats), words * 8), dtype=np.int8)
    buf[:, :n2] = flat
    return buf.view(np.uint64)


_MIX = np.array([0x9E3779B97F4A7C15, 0xC2B2AE3D27D4EB4F, 0x165667B19E3779F9, 0xD6E8FEB86659FD93,
                 0xFF51AFD7ED558CCD, 0xC4CEB9FE1A85EC53, 0x94D049BB133111EB, 0xBF58476D1CE4E5B9],
                dtype=np.uint64)


def _sort_rows(keys: np.ndarray) -> np.ndarray:
    """A permutation that brings equal rows together.

    Sorts on a 64-bit mix of each row; if two distinct rows share a mix value
    the exact lexicographic sort is used instead.
    """
    with np.errstate(over="ignore"):
        h = (keys * _MIX[: keys.shape[1]]).sum(axis=1, dtype=np.uint64)
    order = np.argsort(h, kind="stable")
    sh = h[order]
    sk = keys[order]
    same_h = sh[1:] == sh[:-1]
    same_row = (sk[1:] == sk[:-1]).all(axis=1)
    if np.any(same_h & ~same_row):
        return np.lexsort(keys.T[::-1])
    return order


def _first_unique(keys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Unique rows of ``keys`` and the index of one occurrence of each."""
    order = _sort_rows(keys)
    sk = keys[order]
    new = np.ones(len(sk), dtype=bool)
    new[1:] = (sk[1:] != sk[:-1]).any(axis=1)
    return sk[new], order[new]


def _bfs(datum: RootDatum, cap: int):
    """Layered BFS over the Cayley graph; returns per-layer matrices and parent links."""
    order = weyl_group_order(datum)
    if order > cap:
        raise GroupTooLarge(f"|W({datum.type})| = {order} exceeds oracle cap {cap}")
    n = datum.rank
    alphas = np.array(datum.cartan, dtype=np.int16)
    ident = np.eye(n, dtype=np.int16)[None]
    layers = [ident]
    parents = [np.array([-1])]
    gens = [np.array([0])]
    prev_keys = _pack(ident[:0])
    cur = ident
    total = 1
    while True:
        cands = []
        for i in range(n):
            # s_i M = M - alpha_i (row i of M)
            cands.append(cur - alphas[i][None, :, None] * cur[:, i, None, :])
        allc = np.concatenate(cands)
        allp = np.tile(np.arange(len(cur)), n)
        allg = np.repeat(np.arange(1, n + 1), len(cur))
        ukeys, first = _first_unique(_pack(allc))
        # neighbours of layer k lie in layer k-1 or k+1; drop the former
        both = np.concatenate([prev_keys, ukeys])
        srt = _sort_rows(both)
        sk = both[srt]
        eq = (sk[1:] == sk[:-1]).all(axis=1)
        dup = np.zeros(len(sk), dtype=bool)
        dup[1:] |= eq
        dup[:-1] |= eq
        fresh = np.zeros(len(both), dtype=bool)
        fresh[srt] = ~dup
        keep = np.sort(first[fresh[len(prev_keys):]])
        if not len(keep):
            break
        prev_keys = _pack(cur)
        cur = allc[keep]
        total += len(cur)
        if total > cap:
            raise GroupTooLarge(f"oracle exceeded cap {cap}")
        layers.append(cur)
        parents.append(allp[keep])
        gens.append(allg[keep])
    if total != order:
        raise InvariantViolation(f"BFS found {total} elements, order formula gives {order}")
    return layers, parents, gens


def _words(parents, gens):
    words = [[()]]
    for par, gen in zip(parents[1:], gens[1:]):
        prev = words[-1]
        # the new element is s_g * parent: s_g applied last
        words.append([prev[p] + (int(g),) for p, g in zip(par, gen)])
    return words


def enumerate_weyl_group(datum: RootDatum, cap: int = DEFAULT_ORACLE_CAP) -> list[WeylElement]:
    """Every element of W, each once, ordered by length.

    Raises :class:`GroupTooLarge` when ``|W| > cap``.
    """
    layers, parents, gens = _bfs(datum, cap)
    words = _words(parents, gens)
    out = []
    for mats, ws in zip(layers, words):
        for m, w in zip(mats, ws):
            out.append(WeylElement(tuple(tuple(int(x) for x in row) for row in m), w))
    return out


def oracle_longest_element(datum: RootDatum, cap: int = DEFAULT_ORACLE_CAP) -> Matrix:
    """The unique enumerated element sending every positive root to a negative one."""
    layers, _, _ = _bfs(datum, cap)
    h = _height_functional(datum)
    pos = np.array([tuple(_matvec_root(datum, r)) for r in datum.positive_roots], dtype=np.int64).T
    hits = []
    for mats in layers:
        imgs = np.tensordot(mats.astype(np.int64), h, axes=([1], [0])) @ pos
        idx = np.nonzero((imgs < 0).all(axis=1))[0]
        hits.extend(mats[i] for i in idx)
    if len(hits) != 1:
        raise InvariantViolation(f"expected one longest element, found {len(hits)}")
    return tuple(tuple(int(x) for x in row) for row in hits[0])


def _matvec_root(datum: RootDatum, r):
    n = datum.rank
    return [sum(r[k] * datum.cartan[k][i] for k in range(n)) for i in range(n)]
