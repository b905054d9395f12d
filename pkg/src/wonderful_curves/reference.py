"""Embedded reference tables and their expansion for a given simple type.

The normality and smoothness flags are quoted results about the images of
the contractions of X; nothing in this package re-derives them.
"""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .root_system import SimpleType

SCHEMA_VERSION = "1"


@lru_cache(maxsize=None)
def tables() -> dict:
    text = resources.files(__package__).joinpath("data/reference_tables.json").read_text()
    data = json.loads(text)
    if data["schema_version"] != SCHEMA_VERSION:
        raise ValueError(f"unsupported reference schema {data['schema_version']!r}")
    return data


def _index(token, rank: int) -> int:
    if isinstance(token, int):
        return token
    if token == "l":
        return rank
    if token == "l-1":
        return rank - 1
    raise ValueError(f"bad index token {token!r}")


def _indices(token, rank: int) -> frozenset[int]:
    if token == "all":
        return frozenset(range(1, rank + 1))
    if token == "none":
        return frozenset()
    return frozenset(_index(tok, rank) for tok in token)


def _covers(row: dict, t: SimpleType) -> bool:
    if row["family"] != t.family:
        return False
    if "rank" in row:
        return row["rank"] == t.rank
    lo = int(row["ranks"].split(">=")[1])
    return t.rank >= lo


def _row(name: str, t: SimpleType) -> dict | None:
    return next((r for r in tables()[name] if _covers(r, t)), None)


def line_weights(t: SimpleType) -> frozenset[int]:
    row = _row("line_weights", t)
    if row is None:
        raise KeyError(f"no line-weight row for {t}")
    return _indices(row["weights"], t.rank)


def line_weight_rows() -> list[dict]:
    return list(tables()["line_weights"])


def is_normal(t: SimpleType, i: int) -> bool:
    return not any(r["family"] == t.family and _index(r["weight"], t.rank) == i for r in tables()["non_normal"])


def is_smooth(t: SimpleType, i: int) -> bool:
    return any(r["family"] == t.family and _index(r["weight"], t.rank) == i for r in tables()["smooth"])


def short_root_row(t: SimpleType) -> dict | None:
    """Expected short-root data, or ``None`` outside the stated rank range (B2, C2 included)."""
    row = _row("short_root", t)
    if row is None:
        return None
    pairings = [0] * t.rank
    for k, v in row["pairings"].items():
        pairings[int(k) - 1] = v
    return {
        "pairings": tuple(pairings),
        "orbit": tuple(row["orbit"]),
        "coroot_content": row["coroot_content"],
    }


def highest_coroot_ones(t: SimpleType) -> dict | None:
    """Expected ``{i : <alpha_i, theta^v> = 1}``: either the exact set or its size."""
    row = _row("highest_coroot_ones", t)
    if row is None:
        return None
    if "indices" in row:
        return {"indices": _indices(row["indices"], t.rank)}
    return {"count": row["count"]}


def dim_offset(t: SimpleType) -> int | None:
    """Expected ``<kappa, theta^v> - dim P(O_min)``; ``None`` for A1."""
    off = tables()["dim_offset"]
    if t.family == "A":
        return off["A"] if t.rank >= 2 else None
    return off["other"]
