"""Discrete invariants of the wonderful compactification X of an adjoint simple group."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from . import reference
from .curves import OrbitLabel
from .errors import EmptyProduct, InvariantViolation, NotAmple, RankMismatch
from .root_system import RootDatum, SimpleType, Weight, _check_rank, build, pairing_with_coroot

FamilyDescription = Literal["adjoint_variety", "segre_projection", "P3_full"]


@dataclass(frozen=True)
class PicardClass:
    """The line bundle ``L_X(lam)``; Pic(X) is identified with the weight lattice."""

    weight: Weight

    def __add__(self, other: "PicardClass") -> "PicardClass":
        return PicardClass(self.weight + other.weight)

    def __neg__(self):
        return PicardClass(-self.weight)

    @property
    def globally_generated(self) -> bool:
        return self.weight.is_dominant()

    @property
    def ample(self) -> bool:
        return self.weight.is_regular_dominant()


def boundary_divisor(datum: RootDatum, i: int) -> PicardClass:
    """``O_X(D_i) = L_X(alpha_i)``."""
    return PicardClass(Weight(datum.cartan[i - 1]))


def anticanonical(datum: RootDatum) -> PicardClass:
    """``-K_X = L_X(kappa)`` with ``kappa = 2 rho + sum of the simple roots``."""
    return PicardClass(datum.kappa)


def _theta_pairing(datum: RootDatum, lam) -> int:
    return pairing_with_coroot(datum, lam, datum.theta_coroot)


def dim_projectivized_min_orbit(datum: RootDatum) -> int:
    """Dimension of the adjoint variety ``P(O_min)``.

    Computed three ways (root sum minus one, ``<2 rho, theta^v> - 1``, and the
    count of positive roots not orthogonal to ``theta``); they must agree.
    """
    pairs = [_theta_pairing(datum, _root_weight(datum, a)) for a in datum.positive_roots]
    root_sum = sum(pairs) - 1
    via_rho = _theta_pairing(datum, 2 * datum.rho) - 1
    count = sum(1 for p in pairs if p != 0)
    if not root_sum == via_rho == count:
        raise InvariantViolation(f"{datum.type}: dim P(O_min) disagrees: {root_sum}, {via_rho}, {count}")
    return via_rho


def non_orthogonal_count(datum: RootDatum) -> int:
    return sum(1 for a in datum.positive_roots if _theta_pairing(datum, _root_weight(datum, a)) != 0)


def _root_weight(datum: RootDatum, r) -> Weight:
    n = datum.rank
    return Weight(sum(r[k] * datum.cartan[k][i] for k in range(n)) for i in range(n))


def highest_coroot_ones(datum: RootDatum) -> frozenset[int]:
    """``{i : <alpha_i, theta^v> = 1}``."""
    return frozenset(i + 1 for i in range(datum.rank) if _theta_pairing(datum, datum.cartan[i]) == 1)


@dataclass(frozen=True)
class VmrtReport:
    type: SimpleType
    kappa_theta: int
    dim_Kx: int
    dim_P_Omin: int
    offset: int
    i0: int | None
    family_description: FamilyDescription

    @property
    def dim_offset(self) -> int:
        """``<kappa, theta^v> - dim P(O_min)``."""
        return self.kappa_theta - self.dim_P_Omin


def vmrt_report(datum: RootDatum) -> VmrtReport:
    t = datum.type
    k_theta = _theta_pairing(datum, datum.kappa)
    dim_k = k_theta - 2
    dim_p = dim_projectivized_min_orbit(datum)
    ones = highest_coroot_ones(datum)
    if t.family == "A" and t.rank == 1:
        # X is P^3: the family of lines through a point is a P^2
        desc = "P3_full"
        i0 = None
    elif t.family == "A":
        desc = "segre_projection"
        i0 = None
        if dim_k != 2 * t.rank or dim_k - dim_p != 1:
            raise InvariantViolation(f"{t}: dim K_x = {dim_k}, expected {2 * t.rank}")
    else:
        desc = "adjoint_variety"
        if len(ones) != 1:
            raise InvariantViolation(f"{t}: expected a unique simple root pairing to 1 with theta^v, got {sorted(ones)}")
        (i0,) = ones
        if dim_k != dim_p:
            raise InvariantViolation(f"{t}: dim K_x = {dim_k} but dim P(O_min) = {dim_p}")
    return VmrtReport(t, k_theta, dim_k, dim_p, dim_k - dim_p, i0, desc)


def min_degree_bound(datum: RootDatum, lam: Weight | Sequence[int] | None = None) -> int:
    """Degree ``<lam, theta^v>`` of an ample ``L_X(lam)`` on ``C_theta``; at least the rank.

    ``lam`` defaults to ``rho``, which realises the minimum over ample classes.
    """
    lam = datum.rho if lam is None else Weight(lam)
    _check_rank(datum.rank, len(lam))
    if not lam.is_regular_dominant():
        raise NotAmple(f"{lam!r} is not regular dominant, so L_X(lam) is not ample")
    d = _theta_pairing(datum, lam)
    if d < datum.rank:
        raise InvariantViolation(f"{datum.type}: degree {d} below the rank {datum.rank}")
    return d


@dataclass(frozen=True)
class ContractionTable:
    type: SimpleType
    line_weights: frozenset[int]
    minuscule_weights: frozenset[int]
    normal: dict[int, bool]
    smooth: dict[int, bool]


def contraction_table(datum: RootDatum) -> ContractionTable:
    """Fundamental weights whose contraction ``X_lam`` is covered by lines.

    ``line_weights`` are the ``i`` with coefficient 1 in ``theta^v``; the
    minuscule weights are those with coefficient 1 in the highest coroot,
    which is the coroot of the highest short root (of ``theta`` when simply
    laced).  Normality and smoothness flags come from the reference data.
    """
    t = datum.type
    m = datum.theta_coroot
    lines = frozenset(i + 1 for i, c in enumerate(m) if c == 1)
    top = datum.theta_short_coroot or datum.theta_coroot
    minuscule = frozenset(i + 1 for i, c in enumerate(top) if c == 1)
    return ContractionTable(
        type=t,
        line_weights=lines,
        minuscule_weights=minuscule,
        normal={i: reference.is_normal(t, i) for i in sorted(lines)},
        smooth={i: reference.is_smooth(t, i) for i in sorted(lines)},
    )


def orbit_closure_contains(a: OrbitLabel, b: OrbitLabel) -> bool:
    """The closure of ``O_a`` contains ``O_b`` exactly when ``a`` is a subset of ``b``."""
    if a.rank != b.rank:
        raise RankMismatch(f"orbit labels of ranks {a.rank} and {b.rank}")
    return set(a.subset) <= set(b.subset)


def minimal_family_product(factors: Sequence[SimpleType | str], polarization: Sequence[Weight | Sequence[int]]) -> list[int]:
    """Indices of the factors where ``<lam_i, theta_i^v>`` is smallest.

    All minimisers are returned; several indices mean the degree alone does not
    single out one factor.
    """
    if not factors:
        raise EmptyProduct("need at least one simple factor")
    if len(polarization) != len(factors):
        raise RankMismatch(f"{len(factors)} factors but {len(polarization)} weights")
    degs = [min_degree_bound(build(t), lam) for t, lam in zip(factors, polarization)]
    low = min(degs)
    return [k for k, d in enumerate(degs) if d == low]


def factor_degrees(factors: Sequence[SimpleType | str], polarization: Sequence[Weight | Sequence[int]]) -> list[int]:
    return [min_degree_bound(build(t), lam) for t, lam in zip(factors, polarization)]
