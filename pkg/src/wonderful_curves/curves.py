"""Degrees and limit points of the curves through the identity of X.

Two families of rational curves are handled:

* closures of dominant indivisible one-parameter subgroups (``MultCurve``),
* closures of the root subgroups of the highest root and of the highest
  short root (``AddCurve``).

Limit orbits are always computed the same way: a boundary point lies in
``D_i`` exactly when the curve meets ``D_i``, and ``O(D_i) = L(alpha_i)``, so
the orbit label is the support of the intersection numbers with the
simple roots.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

from .errors import EmptyProduct, NoShortRoot, NotDominant, NotIndivisible, RankMismatch
from .root_system import (
    Cocharacter,
    Coroot,
    Root,
    RootDatum,
    SimpleType,
    Weight,
    _check_rank,
    build,
    coroot_to_cocharacter,
    pairing,
    pairing_with_coroot,
)
from .weyl import minus_w0_permutation, w0_on_weight

Which = Literal["theta", "theta_short"]


@dataclass(frozen=True, order=True)
class OrbitLabel:
    """Names the G x G-orbit ``O_I``: the points in exactly the divisors ``D_i``, i in I."""

    rank: int
    subset: tuple[int, ...]

    def __init__(self, rank: int, subset: Iterable[int] = ()):
        sub = tuple(sorted(set(int(i) for i in subset)))
        if any(not 1 <= i <= rank for i in sub):
            raise RankMismatch(f"orbit label {sub} not inside 1..{rank}")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "subset", sub)

    @property
    def is_open(self) -> bool:
        return not self.subset

    @property
    def is_closed(self) -> bool:
        return len(self.subset) == self.rank

    @property
    def codimension(self) -> int:
        return len(self.subset)

    def __str__(self):
        return "{" + ",".join(map(str, self.subset)) + "}"


@dataclass(frozen=True)
class MultCurve:
    eta: Cocharacter

    def __init__(self, eta):
        eta = Cocharacter(eta)
        if not eta.is_dominant():
            raise NotDominant(
                f"{eta!r} is not dominant; conjugate it first (weyl.dominant_cocharacter)"
            )
        if not eta.is_indivisible():
            k = eta.content()
            raise NotIndivisible(
                f"{eta!r} is divisible by {k}; use {Cocharacter(c // k for c in eta)!r}" if k
                else "the zero cocharacter does not define a curve"
            )
        object.__setattr__(self, "eta", eta)


@dataclass(frozen=True)
class AddCurve:
    which: Which = "theta"
    factor: int = 0

    def root(self, datum: RootDatum) -> Root:
        return _distinguished_root(datum, self.which)


@dataclass
class CurveReport:
    curve: MultCurve | AddCurve
    degrees: dict[Weight, int]
    orbit_at_zero: OrbitLabel
    orbit_at_infinity: OrbitLabel
    smooth: bool
    indivisible: bool
    anticanonical_degree: int
    divisor_degrees: tuple[int, ...] = field(default=())


def _require_dominant(eta) -> Cocharacter:
    eta = Cocharacter(eta)
    if not eta.is_dominant():
        raise NotDominant(f"{eta!r} has a negative coordinate; the degree formulas need a dominant cocharacter")
    return eta


def _distinguished_root(datum: RootDatum, which: str) -> Root:
    if which in ("theta", "θ"):
        return datum.theta
    if which in ("theta_short", "theta-short", "θ_s"):
        if datum.theta_short is None:
            raise NoShortRoot(f"{datum.type} is simply laced and has no highest short root")
        return datum.theta_short
    raise ValueError(f"unknown distinguished root {which!r}; use 'theta' or 'theta_short'")


def distinguished_coroot(datum: RootDatum, which: str = "theta") -> Coroot:
    return datum.coroots[_distinguished_root(datum, which)]


def coroot_cocharacter(datum: RootDatum, which: str = "theta") -> Cocharacter:
    """Coweight coordinates ``<alpha_i, theta^v>`` (or of the short coroot)."""
    return coroot_to_cocharacter(datum, distinguished_coroot(datum, which))


# ---------------------------------------------------------------------------
# multiplicative curves


def mult_degree(datum: RootDatum, lam: Weight | Sequence[int], eta: Cocharacter | Sequence[int]) -> int:
    """Degree of ``L_X(lam)`` on the closure of ``eta``: ``<lam - w0 lam, eta>``."""
    eta = _require_dominant(eta)
    lam = Weight(lam)
    _check_rank(datum.rank, len(lam))
    _check_rank(datum.rank, len(eta))
    d = pairing(datum, lam - w0_on_weight(datum, lam), eta)
    if not isinstance(d, int):
        raise AssertionError(f"lam - w0 lam did not pair integrally: {d}")
    return d


def mult_limit_orbits(datum: RootDatum, eta: Cocharacter | Sequence[int]) -> tuple[OrbitLabel, OrbitLabel]:
    """Orbits containing ``eta(0)`` and ``eta(infinity)``.

    ``eta(0)`` lies in ``O_I`` with I the support of ``eta``; ``eta(infinity)``
    lies in ``O_J`` with ``J = {j : <w0 alpha_j, eta> != 0}``.
    """
    eta = _require_dominant(eta)
    _check_rank(datum.rank, len(eta))
    sigma = minus_w0_permutation(datum)
    at_zero = eta.support()
    # <w0 alpha_j, eta> = -<alpha_sigma(j), eta>
    at_inf = {j for j in range(1, datum.rank + 1) if eta[sigma[j - 1] - 1] != 0}
    return OrbitLabel(datum.rank, at_zero), OrbitLabel(datum.rank, at_inf)


def mult_is_smooth(datum: RootDatum, eta: Cocharacter | Sequence[int]) -> bool:
    curve = MultCurve(eta)
    _check_rank(datum.rank, len(curve.eta))
    return any(c == 1 for c in curve.eta)


# ---------------------------------------------------------------------------
# additive curves


def additive_degree(datum: RootDatum, lam: Weight | Sequence[int], which: str = "theta") -> int:
    """``L_X(lam) . C_theta = <lam, theta^v>``; likewise for the highest short root."""
    return pairing_with_coroot(datum, lam, distinguished_coroot(datum, which))


def additive_divisor_degrees(datum: RootDatum, which: str = "theta") -> tuple[int, ...]:
    """Intersection numbers ``D_i . C`` for i = 1..l."""
    cv = distinguished_coroot(datum, which)
    return tuple(pairing_with_coroot(datum, datum.cartan[i], cv) for i in range(datum.rank))


def additive_infinity_orbit(datum: RootDatum, which: str = "theta") -> OrbitLabel:
    degs = additive_divisor_degrees(datum, which)
    return OrbitLabel(datum.rank, (i + 1 for i, d in enumerate(degs) if d != 0))


def b_stable_curves(semisimple: Sequence[SimpleType | str]) -> list[AddCurve]:
    """The B-stable irreducible curves through the identity: one highest-root curve per simple factor."""
    if not semisimple:
        raise EmptyProduct("a semisimple type needs at least one simple factor")
    for t in semisimple:
        build(t)
    return [AddCurve("theta", factor=k) for k in range(len(semisimple))]


# ---------------------------------------------------------------------------


def curve_report(datum: RootDatum, curve: MultCurve | AddCurve, weights: Sequence[Weight] | None = None) -> CurveReport:
    """Collect degrees, limit orbits and smoothness for one curve.

    ``weights`` defaults to the fundamental weights.
    """
    n = datum.rank
    if weights is None:
        weights = [datum.fundamental_weight(i) for i in range(1, n + 1)]
    weights = [Weight(w) for w in weights]
    if isinstance(curve, MultCurve):
        _check_rank(n, len(curve.eta))
        degrees = {w: mult_degree(datum, w, curve.eta) for w in weights}
        at_zero, at_inf = mult_limit_orbits(datum, curve.eta)
        return CurveReport(
            curve=curve,
            degrees=degrees,
            orbit_at_zero=at_zero,
            orbit_at_infinity=at_inf,
            smooth=mult_is_smooth(datum, curve.eta),
            indivisible=True,
            anticanonical_degree=mult_degree(datum, datum.kappa, curve.eta),
            divisor_degrees=tuple(mult_degree(datum, datum.cartan[i], curve.eta) for i in range(n)),
        )
    if isinstance(curve, AddCurve):
        degrees = {w: additive_degree(datum, w, curve.which) for w in weights}
        return CurveReport(
            curve=curve,
            degrees=degrees,
            # U_alpha passes through the identity, in the open orbit
            orbit_at_zero=OrbitLabel(n, ()),
            orbit_at_infinity=additive_infinity_orbit(datum, curve.which),
            smooth=True,
            # refers to the coroot one-parameter subgroup of the root
            indivisible=coroot_cocharacter(datum, curve.which).is_indivisible(),
            anticanonical_degree=additive_degree(datum, datum.kappa, curve.which),
            divisor_degrees=additive_divisor_degrees(datum, curve.which),
        )
    raise TypeError(f"not a curve: {curve!r}")
