"""Brute-force routes to the quantities under test.

Nothing here calls into the package except for the Gram matrix of the simple
roots, so these agree with the library only if both are right.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product


def cartan(gram):
    n = len(gram)
    return [[Fraction(2 * gram[i][j], gram[j][j]) for j in range(n)] for i in range(n)]


def inner(gram, x, y):
    n = len(gram)
    return sum(Fraction(x[i]) * gram[i][j] * y[j] for i in range(n) for j in range(n))


def roots_by_reflection(gram):
    """All roots as the W-orbit of the simple roots (simple-root coordinates)."""
    n = len(gram)
    simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]

    def reflect(i, beta):
        c = 2 * inner(gram, beta, simple[i]) / gram[i][i]
        out = list(beta)
        out[i] -= c
        return tuple(int(x) for x in out)

    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                g = reflect(i, beta)
                if g not in seen:
                    seen.add(g)
                    nxt.append(g)
        frontier = nxt
    return seen


def positive_roots(gram):
    return sorted((r for r in roots_by_reflection(gram) if all(c >= 0 for c in r)), key=lambda r: (sum(r), r))


def coroot(gram, beta):
    """Coroot of ``beta`` in the simple-coroot basis: 2 beta/(beta, beta) expanded directly."""
    sq = inner(gram, beta, beta)
    return tuple(Fraction(beta[k] * gram[k][k], sq) for k in range(len(gram)))


def highest_root(gram):
    roots = positive_roots(gram)
    top = max(sum(r) for r in roots)
    (theta,) = [r for r in roots if sum(r) == top]
    return theta


def highest_short_root(gram):
    roots = positive_roots(gram)
    norms = {r: inner(gram, r, r) for r in roots}
    short = min(norms.values())
    if short == max(norms.values()):
        return None
    cands = [r for r in roots if norms[r] == short]
    top = max(sum(r) for r in cands)
    (ts,) = [r for r in cands if sum(r) == top]
    return ts


def pair_root_coroot(gram, alpha, beta):
    """<alpha, beta^v> = 2 (alpha, beta) / (beta, beta)."""
    return 2 * inner(gram, alpha, beta) / inner(gram, beta, beta)


def weyl_matrices(gram, limit=100000):
    """Pure-Python BFS over Weyl matrices on fundamental-weight coordinates."""
    n = len(gram)
    c = cartan(gram)

    def refl(i, m):
        # s_i a = a - a_i alpha_i with alpha_i = row i of the Cartan matrix
        return tuple(tuple(m[r][col] - int(c[i][r]) * m[i][col] for col in range(n)) for r in range(n))

    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(n):
                g = refl(i, m)
                if g not in seen:
                    seen.add(g)
                    nxt.append(g)
                    if len(seen) > limit:
                        raise RuntimeError("group too large for the pure-Python oracle")
        frontier = nxt
    return seen


def longest_by_rho(gram):
    """The Weyl matrix sending rho = (1,..,1) to -rho."""
    n = len(gram)
    hits = [m for m in weyl_matrices(gram) if all(sum(row) == -1 for row in m)]
    assert len(hits) == 1
    return hits[0]


def weyl_orbit(gram, lam):
    n = len(gram)
    out = set()
    for m in weyl_matrices(gram):
        out.add(tuple(sum(m[i][j] * lam[j] for j in range(n)) for i in range(n)))
    return out


def small_dominant_weights(rank, top=2):
    return list(product(range(top + 1), repeat=rank))
