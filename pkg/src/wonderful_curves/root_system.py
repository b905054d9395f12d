"""Exact root data for the simple types A-G.

Coordinate conventions, fixed everywhere in the package:

* roots live in the simple-root basis,
* coroots in the simple-coroot basis,
* weights in the fundamental-weight basis (``a_i = <lam, alpha_i^v>``),
* cocharacters in the fundamental-coweight basis (``c_i = <alpha_i, eta>``).

The Cartan matrix is stored with ``cartan[i][j] = <alpha_i, alpha_j^v>`` and
simple roots are numbered as in Bourbaki.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import InadmissibleRank, RankMismatch, UnknownFamily, InvariantViolation

FAMILIES = "ABCDEFG"

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnknownFamily(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if not _admissible(self.family, self.rank):
            raise InadmissibleRank(
                f"{self.family}{self.rank} is not admissible "
                f"(A l>=1, B/C l>=2, D l>=4, E 6..8, F4, G2)"
            )

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not m:
            raise UnknownFamily(f"cannot parse simple type {text!r}; expected e.g. A2, E8, G2")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"

    def __str__(self):
        return f"{self.family}{self.rank}"


def _admissible(family: str, rank: int) -> bool:
    if not isinstance(rank, int) or rank < 1:
        return False
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }[family]


def all_types(max_rank: int = 8) -> list[SimpleType]:
    """Every admissible simple type of rank at most ``max_rank``, in table order."""
    out = []
    for fam in FAMILIES:
        for r in range(1, max_rank + 1):
            if _admissible(fam, r):
                out.append(SimpleType(fam, r))
    return out


# ---------------------------------------------------------------------------
# coordinate wrappers


@dataclass(frozen=True)
class _Vector:
    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[int]):
        object.__setattr__(self, "coords", tuple(int(c) for c in coords))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __add__(self, other):
        _check_rank(len(self), len(other))
        return type(self)(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        _check_rank(len(self), len(other))
        return type(self)(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return type(self)(-a for a in self.coords)

    def __mul__(self, k: int):
        return type(self)(k * a for a in self.coords)

    __rmul__ = __mul__

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coords)})"

    def support(self) -> frozenset[int]:
        """1-based indices of the non-zero coordinates."""
        return frozenset(i + 1 for i, a in enumerate(self.coords) if a != 0)

    @classmethod
    def zero(cls, rank: int):
        return cls((0,) * rank)

    @classmethod
    def basis(cls, rank: int, i: int):
        """The i-th basis vector, 1-based."""
        return cls(1 if k == i - 1 else 0 for k in range(rank))


class Root(_Vector):
    """A root in the simple-root basis."""

    @property
    def height(self) -> int:
        return sum(self.coords)

    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coords) and any(self.coords)


class Coroot(_Vector):
    """A coroot in the simple-coroot basis."""


class Weight(_Vector):
    """A weight in the fundamental-weight basis."""

    def is_dominant(self) -> bool:
        return all(a >= 0 for a in self.coords)

    def is_regular_dominant(self) -> bool:
        return all(a >= 1 for a in self.coords)


class Cocharacter(_Vector):
    """A one-parameter subgroup of the adjoint torus in the fundamental-coweight basis."""

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def content(self) -> int:
        g = 0
        for c in self.coords:
            g = gcd(g, c)
        return g

    def is_indivisible(self) -> bool:
        return self.content() == 1


def _check_rank(expected: int, got: int):
    if expected != got:
        raise RankMismatch(f"rank mismatch: expected {expected} coordinates, got {got}")


# ---------------------------------------------------------------------------
# Dynkin data, as scaled Gram matrices of the simple roots


def _gram(t: SimpleType) -> Matrix:
    n = t.rank
    g = [[0] * n for _ in range(n)]

    def link(i, j, value):
        g[i - 1][j - 1] = g[j - 1][i - 1] = value

    fam = t.family
    if fam in "ADE":
        for i in range(n):
            g[i][i] = 2
        if fam == "A":
            for i in range(1, n):
                link(i, i + 1, -1)
        elif fam == "D":
            for i in range(1, n - 1):
                link(i, i + 1, -1)
            link(n - 2, n, -1)
        else:
            link(1, 3, -1)
            link(2, 4, -1)
            for i in range(3, n):
                link(i, i + 1, -1)
    elif fam == "B":
        # alpha_l = e_l short
        for i in range(n):
            g[i][i] = 2
        g[n - 1][n - 1] = 1
        for i in range(1, n):
            link(i, i + 1, -1)
    elif fam == "C":
        # alpha_l = 2 e_l long
        for i in range(n):
            g[i][i] = 2
        g[n - 1][n - 1] = 4
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        link(n - 1, n, -2)
    elif fam == "F":
        for i, sq in enumerate((4, 4, 2, 2)):
            g[i][i] = sq
        link(1, 2, -2)
        link(2, 3, -2)
        link(3, 4, -1)
    elif fam == "G":
        # alpha_1 short, alpha_2 long
        g[0][0], g[1][1] = 2, 6
        link(1, 2, -3)
    return tuple(tuple(row) for row in g)


def _cartan_from_gram(g: Matrix) -> Matrix:
    n = len(g)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            num = 2 * g[i][j]
            if num % g[j][j]:
                raise InvariantViolation("non-integral Cartan entry")
            row.append(num // g[j][j])
        out.append(tuple(row))
    return tuple(out)


# ---------------------------------------------------------------------------
# small exact linear algebra


def inverse(m: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def determinant(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return int(det)


def _as_int(x: Fraction):
    return x.numerator if x.denominator == 1 else x


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootDatum:
    type: SimpleType
    cartan: Matrix
    gram: Matrix
    positive_roots: tuple[Root, ...]
    coroots: dict = field(compare=False, hash=False, repr=False)
    theta: Root
    theta_short: Root | None
    rho: Weight
    kappa: Weight
    _cartan_inv: tuple = field(compare=False, hash=False, repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    def __hash__(self):
        return hash(self.type)

    def simple_root(self, i: int) -> Root:
        return Root.basis(self.rank, i)

    def fundamental_weight(self, i: int) -> Weight:
        return Weight.basis(self.rank, i)

    def coroot(self, root: Root) -> Coroot:
        if root in self.coroots:
            return self.coroots[root]
        neg = -root
        if neg in self.coroots:
            return -self.coroots[neg]
        raise KeyError(f"{root!r} is not a root of {self.type}")

    @property
    def theta_coroot(self) -> Coroot:
        return self.coroots[self.theta]

    @property
    def theta_short_coroot(self) -> Coroot | None:
        return None if self.theta_short is None else self.coroots[self.theta_short]

    def norm(self, root: Root) -> int:
        """Scaled squared length of a root."""
        r = root.coords
        g = self.gram
        return sum(r[i] * g[i][j] * r[j] for i in range(self.rank) for j in range(self.rank))

    def is_long(self, root: Root) -> bool:
        return self.norm(root) == max(self.gram[i][i] for i in range(self.rank))


def _positive_roots(cartan: Matrix) -> list[tuple[int, ...]]:
    """Root-string closure from the simple roots, processed by height."""
    n = len(cartan)
    simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                if beta == simple[i]:
                    continue
                # p = how far beta can be lowered along alpha_i inside the root set
                p = 0
                lower = list(beta)
                while True:
                    lower[i] -= 1
                    if tuple(lower) in found:
                        p += 1
                    else:
                        break
                pair = sum(beta[k] * cartan[k][i] for k in range(n))
                q = p - pair
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(found, key=lambda r: (sum(r), r))


@lru_cache(maxsize=None)
def build(t: SimpleType | str) -> RootDatum:
    """Construct the root datum of a simple type.

    >>> build("A2").positive_roots
    (Root([0, 1]), Root([1, 0]), Root([1, 1]))
    """
    if isinstance(t, str):
        t = SimpleType.parse(t)
    gram = _gram(t)
    cartan = _cartan_from_gram(gram)
    n = t.rank
    roots = [Root(r) for r in _positive_roots(cartan)]

    coroots = {}
    for r in roots:
        sq = sum(r[i] * gram[i][j] * r[j] for i in range(n) for j in range(n))
        cv = []
        for k in range(n):
            num = r[k] * gram[k][k]
            if num % sq:
                raise InvariantViolation(f"non-integral coroot for {r!r}")
            cv.append(num // sq)
        coroots[r] = Coroot(cv)

    def weight_of(r):
        return tuple(sum(r[k] * cartan[k][i] for k in range(n)) for i in range(n))

    max_sq = max(gram[i][i] for i in range(n))
    min_sq = min(gram[i][i] for i in range(n))

    def sq(r):
        return sum(r[i] * gram[i][j] * r[j] for i in range(n) for j in range(n))

    dominant = [r for r in roots if all(a >= 0 for a in weight_of(r))]
    long_dom = [r for r in dominant if sq(r) == max_sq]
    short_dom = [r for r in dominant if sq(r) == min_sq]
    if len(long_dom) != 1:
        raise InvariantViolation(f"{t}: expected a unique dominant long root, got {long_dom}")
    theta = long_dom[0]
    theta_short = None
    if max_sq != min_sq:
        if len(short_dom) != 1:
            raise InvariantViolation(f"{t}: expected a unique dominant short root, got {short_dom}")
        theta_short = short_dom[0]

    rho = Weight((1,) * n)
    kappa = Weight(2 + sum(cartan[k][i] for k in range(n)) for i in range(n))
    return RootDatum(
        type=t,
        cartan=cartan,
        gram=gram,
        positive_roots=tuple(roots),
        coroots=coroots,
        theta=theta,
        theta_short=theta_short,
        rho=rho,
        kappa=kappa,
        _cartan_inv=inverse(cartan),
    )


def positive_root_count(t: SimpleType) -> int:
    """Closed-form number of positive roots, used as an independent check."""
    n = t.rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n),
        "F": 24,
        "G": 6,
    }[t.family]


# ---------------------------------------------------------------------------
# basis changes and pairings


def root_to_weight(datum: RootDatum, r: Root | Sequence[int]) -> Weight:
    r = tuple(r)
    _check_rank(datum.rank, len(r))
    c = datum.cartan
    n = datum.rank
    return Weight(sum(r[k] * c[k][i] for k in range(n)) for i in range(n))


def coroot_to_cocharacter(datum: RootDatum, cv: Coroot | Sequence[int]) -> Cocharacter:
    """Fundamental-coweight coordinates ``c_i = <alpha_i, cv>`` of a coroot-lattice element."""
    m = tuple(cv)
    _check_rank(datum.rank, len(m))
    c = datum.cartan
    n = datum.rank
    return Cocharacter(sum(c[i][j] * m[j] for j in range(n)) for i in range(n))


def weight_to_root_coords(datum: RootDatum, lam: Weight | Sequence[int]) -> tuple:
    """Rational simple-root coordinates ``r`` with ``a_i = sum_k r_k cartan[k][i]``."""
    a = tuple(lam)
    _check_rank(datum.rank, len(a))
    inv = datum._cartan_inv
    n = datum.rank
    # a = C^T r, so r = (C^T)^{-1} a = (C^{-1})^T a
    return tuple(_as_int(sum((inv[i][k] * a[i] for i in range(n)), Fraction(0))) for k in range(n))


def in_root_lattice(datum: RootDatum, lam: Weight | Sequence[int]) -> bool:
    return all(isinstance(x, int) for x in weight_to_root_coords(datum, lam))


def pairing(datum: RootDatum, lam: Weight | Sequence[int], eta: Cocharacter | Sequence[int]):
    """Exact ``<lam, eta>``; an ``int`` when integral, otherwise a ``Fraction``."""
    c = tuple(eta)
    _check_rank(datum.rank, len(c))
    r = weight_to_root_coords(datum, lam)
    return _as_int(sum((Fraction(x) * y for x, y in zip(r, c)), Fraction(0)))


def pairing_with_coroot(datum: RootDatum, lam: Weight | Sequence[int], cv: Coroot | Sequence[int]) -> int:
    a = tuple(lam)
    m = tuple(cv)
    _check_rank(datum.rank, len(a))
    _check_rank(datum.rank, len(m))
    return sum(x * y for x, y in zip(a, m))
