"""Exhaustive identity checks per simple type and the published tables.

Each check yields a :class:`Check` record; ``run_all`` aggregates them.  The
pseudorandom inputs are seeded from the type name, so repeated runs produce
identical output.
"""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from . import reference
from .curves import (
    OrbitLabel,
    additive_degree,
    additive_infinity_orbit,
    coroot_cocharacter,
    mult_degree,
    mult_limit_orbits,
)
from .errors import GroupTooLarge, UnknownTable
from .root_system import (
    Cocharacter,
    RootDatum,
    SimpleType,
    Weight,
    all_types,
    build,
    in_root_lattice,
    pairing,
    pairing_with_coroot,
    positive_root_count,
    root_to_weight,
)
from .weyl import (
    DEFAULT_ORACLE_CAP,
    dominant_representative,
    minus_w0_permutation,
    oracle_longest_element,
    w0_matrix,
    w0_on_cocharacter,
    w0_on_weight,
    weyl_group_order,
    word_matrix,
)
from .wonderful import (
    contraction_table,
    dim_projectivized_min_orbit,
    highest_coroot_ones,
    min_degree_bound,
    non_orthogonal_count,
    orbit_closure_contains,
    vmrt_report,
)

DERIVED = "derived"
REFERENCE = "reference"


@dataclass
class Check:
    type: str
    identity: str
    passed: bool | None
    detail: dict = field(default_factory=dict)
    provenance: str = DERIVED

    @property
    def status(self) -> str:
        return {True: "pass", False: "fail", None: "skipped"}[self.passed]

    def record(self) -> dict:
        out = asdict(self)
        out["status"] = self.status
        del out["passed"]
        return out


def _rng(t: SimpleType, salt: str) -> random.Random:
    return random.Random(f"{t}:{salt}")


def random_weight(rng: random.Random, rank: int, lo: int = -6, hi: int = 6) -> Weight:
    return Weight(rng.randint(lo, hi) for _ in range(rank))


def random_cocharacter(rng: random.Random, rank: int, lo: int = -6, hi: int = 6) -> Cocharacter:
    return Cocharacter(rng.randint(lo, hi) for _ in range(rank))


def highest_short_pairings(datum: RootDatum) -> tuple[int, ...]:
    cv = datum.theta_short_coroot
    return tuple(pairing_with_coroot(datum, datum.cartan[i], cv) for i in range(datum.rank))


def is_c_like(t: SimpleType) -> bool:
    """Types whose highest coroot has all coefficients 1: A, C, and B2 (which is C2 relabelled)."""
    return t.family in "AC" or (t.family == "B" and t.rank == 2)


# ---------------------------------------------------------------------------
# per-type checks


def check_root_system(d: RootDatum) -> Iterator[Check]:
    t = str(d.type)
    n = d.rank
    yield Check(t, "positive_root_count", len(d.positive_roots) == positive_root_count(d.type),
                {"count": len(d.positive_roots), "expected": positive_root_count(d.type)})
    diag = all(d.cartan[i][i] == 2 for i in range(n))
    off = all(d.cartan[i][j] <= 0 for i in range(n) for j in range(n) if i != j)
    yield Check(t, "cartan_shape", diag and off)
    self_pair = all(pairing_with_coroot(d, root_to_weight(d, a), d.coroots[a]) == 2 for a in d.positive_roots)
    yield Check(t, "root_coroot_pairing_is_2", self_pair)
    recovered = all(
        pairing_with_coroot(d, d.cartan[i], d.coroots[d.simple_root(j + 1)]) == d.cartan[i][j]
        for i in range(n) for j in range(n)
    )
    yield Check(t, "cartan_recovered_from_pairings", recovered)
    rho_ok = all(pairing_with_coroot(d, d.rho, d.coroots[d.simple_root(i + 1)]) == 1 for i in range(n))
    yield Check(t, "rho_pairs_to_one", rho_ok)
    sum_simple = [sum(d.cartan[k][i] for k in range(n)) for i in range(n)]
    kappa_ok = tuple(d.kappa) == tuple(2 * d.rho[i] + sum_simple[i] for i in range(n))
    yield Check(t, "kappa_definition", kappa_ok, {"kappa": list(d.kappa)})
    dom = [a for a in d.positive_roots if root_to_weight(d, a).is_dominant()]
    expected_dom = 1 if d.theta_short is None else 2
    yield Check(t, "dominant_roots_are_theta_and_theta_short",
                len(dom) == expected_dom and d.theta in dom and (d.theta_short is None or d.theta_short in dom))
    m = d.theta_coroot
    yield Check(t, "highest_coroot_coefficients_positive", all(c >= 1 for c in m), {"m": list(m)})


def check_weyl(d: RootDatum, oracle_cap: int = DEFAULT_ORACLE_CAP, samples: int = 1000) -> Iterator[Check]:
    t = str(d.type)
    n = d.rank
    rng = _rng(d.type, "weyl")
    lams = [random_weight(rng, n) for _ in range(samples)]
    inv = all(w0_on_weight(d, w0_on_weight(d, lam)) == lam for lam in lams)
    yield Check(t, "w0_involution", inv, {"samples": samples})
    sigma = minus_w0_permutation(d)
    yield Check(t, "minus_w0_permutes_simple_roots", sorted(sigma) == list(range(1, n + 1)), {"sigma": list(sigma)})
    etas = [random_cocharacter(rng, n) for _ in range(samples)]
    compat = all(
        pairing(d, w0_on_weight(d, lam), w0_on_cocharacter(d, eta)) == pairing(d, lam, eta)
        for lam, eta in zip(lams[:200], etas[:200])
    )
    yield Check(t, "w0_preserves_pairing", compat, {"samples": 200})
    lattice = all(in_root_lattice(d, lam - w0_on_weight(d, lam)) for lam in lams[:200])
    yield Check(t, "lambda_minus_w0_lambda_in_root_lattice", lattice, {"samples": 200})
    npos = len(d.positive_roots)
    lengths_ok = True
    for lam in lams[:200]:
        dom, word = dominant_representative(d, lam)
        wm = word_matrix(d, word)
        img = Weight(sum(wm[i][j] * lam[j] for j in range(n)) for i in range(n))
        if len(word) > npos or not dom.is_dominant() or img != dom:
            lengths_ok = False
    yield Check(t, "dominant_word_witnesses_and_is_short", lengths_ok, {"samples": 200, "bound": npos})
    m = w0_matrix(d)
    sq = tuple(tuple(sum(m[i][k] * m[k][j] for k in range(n)) for j in range(n)) for i in range(n))
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    yield Check(t, "w0_squared_is_identity", sq == ident)
    order = weyl_group_order(d)
    if order <= oracle_cap:
        try:
            oracle = oracle_longest_element(d, oracle_cap)
        except GroupTooLarge as exc:
            yield Check(t, "oracle_w0_matches", None, {"reason": str(exc)})
        else:
            yield Check(t, "oracle_w0_matches", oracle == m, {"order": order})
    else:
        yield Check(t, "oracle_w0_matches", None, {"order": order, "cap": oracle_cap, "reason": "group exceeds oracle cap"})


def check_curves(d: RootDatum, samples: int = 100) -> Iterator[Check]:
    t = str(d.type)
    n = d.rank
    theta_w = root_to_weight(d, d.theta)
    pairs = {a: pairing_with_coroot(d, root_to_weight(d, a), d.theta_coroot) for a in d.positive_roots}
    ok = all(v in (0, 1) for a, v in pairs.items() if a != d.theta) and pairs[d.theta] == 2
    yield Check(t, "theta_pairing_zero_or_one", ok, {"theta_weight": list(theta_w)})

    ones = highest_coroot_ones(d)
    exp = reference.highest_coroot_ones(d.type)
    if d.type.family == "A" and d.rank == 1:
        yield Check(t, "simple_roots_pairing_one_with_theta", None, {"ones": sorted(ones), "reason": "rank 1"})
    else:
        passed = ones == exp["indices"] if "indices" in exp else len(ones) == exp["count"]
        yield Check(t, "simple_roots_pairing_one_with_theta", passed, {"ones": sorted(ones)}, REFERENCE)

    theta_eta = coroot_cocharacter(d, "theta")
    rng = _rng(d.type, "curves")
    lams = [random_weight(rng, n, 0, 9) for _ in range(samples)]
    consistent = all(mult_degree(d, lam, theta_eta) == 2 * additive_degree(d, lam, "theta") for lam in lams)
    yield Check(t, "mult_degree_twice_additive_degree", consistent, {"samples": samples})
    if n == 1:
        # theta^v = 2 varpi^v in PGL_2
        yield Check(t, "theta_coroot_indivisible", None, {"coweight_coords": list(theta_eta), "reason": "rank 1"})
    else:
        yield Check(t, "theta_coroot_indivisible", theta_eta.is_indivisible(), {"coweight_coords": list(theta_eta)})

    orbit = additive_infinity_orbit(d, "theta")
    expected_orbit = {1, n} if d.type.family == "A" else set(ones)
    yield Check(t, "theta_infinity_orbit", set(orbit.subset) == expected_orbit, {"orbit": list(orbit.subset)})

    etas = [Cocharacter(rng.randint(0, 4) for _ in range(n)) for _ in range(samples)]
    nonneg = True
    zero_rule = True
    for lam, eta in zip(lams, etas):
        deg = mult_degree(d, lam, eta)
        if deg < 0:
            nonneg = False
        # the inverse Cartan matrix is positive, so the degree vanishes only trivially
        if (deg == 0) != (not any(lam) or not any(eta)):
            zero_rule = False
    yield Check(t, "mult_degree_nonnegative_on_dominant", nonneg, {"samples": samples})
    yield Check(t, "mult_degree_zero_only_for_trivial_input", zero_rule, {"samples": samples})

    sigma = minus_w0_permutation(d)
    orbits_ok = True
    for eta in etas:
        if not any(eta):
            continue
        i_lab, j_lab = mult_limit_orbits(d, eta)
        if set(j_lab.subset) != {sigma[i - 1] for i in i_lab.subset}:
            orbits_ok = False
    yield Check(t, "infinity_orbit_is_permuted_support", orbits_ok)

    if d.theta_short is not None:
        got = highest_short_pairings(d)
        cc = coroot_cocharacter(d, "theta_short")
        orb = additive_infinity_orbit(d, "theta_short")
        detail = {"pairings": list(got), "orbit": list(orb.subset), "coroot_content": cc.content()}
        row = reference.short_root_row(d.type)
        if row is None:
            detail["reason"] = "rank outside the range covered by the reference table"
            yield Check(t, "short_root_table", None, detail, REFERENCE)
        else:
            passed = got == row["pairings"] and orb.subset == row["orbit"] and cc.content() == row["coroot_content"]
            yield Check(t, "short_root_table", passed, detail, REFERENCE)
        codim1 = len(orb.subset) == 1
        yield Check(t, "short_root_infinity_orbit_codimension_one", codim1, {"orbit": list(orb.subset)})


def check_wonderful(d: RootDatum) -> Iterator[Check]:
    t = str(d.type)
    n = d.rank
    dim_p = dim_projectivized_min_orbit(d)
    count = non_orthogonal_count(d)
    yield Check(t, "dim_min_orbit_two_ways", dim_p == count, {"dim": dim_p, "count": count})
    v = vmrt_report(d)
    sum_alpha = sum(pairing_with_coroot(d, d.cartan[i], d.theta_coroot) for i in range(n))
    exp = reference.dim_offset(d.type)
    detail = {"kappa_theta": v.kappa_theta, "dim_P_Omin": dim_p, "offset": v.dim_offset, "sum_alpha_theta": sum_alpha}
    if exp is None:
        detail["reason"] = "rank 1"
        yield Check(t, "kappa_offset", None, detail, REFERENCE)
    else:
        yield Check(t, "kappa_offset", v.dim_offset == exp and sum_alpha == exp - 1, detail, REFERENCE)
    if d.type.family == "A" and n >= 2:
        yield Check(t, "dim_Kx_is_twice_rank", v.dim_Kx == 2 * n, {"dim_Kx": v.dim_Kx})
    elif d.type.family != "A":
        yield Check(t, "dim_Kx_equals_dim_min_orbit", v.dim_Kx == dim_p, {"dim_Kx": v.dim_Kx})

    bound = min_degree_bound(d)
    equality = bound == n
    yield Check(t, "min_degree_at_least_rank", bound >= n and equality == is_c_like(d.type),
                {"rho_theta": bound, "rank": n})

    table = contraction_table(d)
    ref_lines = reference.line_weights(d.type)
    yield Check(t, "line_weights", table.line_weights == ref_lines,
                {"computed": sorted(table.line_weights), "reference": sorted(ref_lines)}, REFERENCE)
    if d.type.simply_laced:
        rel = table.minuscule_weights == table.line_weights
    else:
        rel = table.minuscule_weights < table.line_weights
    yield Check(t, "minuscule_vs_line_weights", rel, {"minuscule": sorted(table.minuscule_weights)})

    labels = [OrbitLabel(n, c) for k in range(min(n, 3) + 1) for c in combinations(range(1, n + 1), k)]
    full = OrbitLabel(n, range(1, n + 1))
    labels.append(full)
    poset = all(orbit_closure_contains(a, b) == (set(a.subset) <= set(b.subset)) for a in labels for b in labels)
    poset &= all(orbit_closure_contains(OrbitLabel(n), b) and orbit_closure_contains(b, full) for b in labels)
    yield Check(t, "orbit_closure_is_subset_order", poset, {"labels": len(labels)})


def checks_for_type(t: SimpleType, oracle_cap: int = DEFAULT_ORACLE_CAP) -> list[Check]:
    d = build(t)
    out = []
    for gen in (check_root_system(d), check_weyl(d, oracle_cap), check_curves(d), check_wonderful(d)):
        out.extend(gen)
    return out


def run_all(max_rank: int = 8, oracle_cap: int = DEFAULT_ORACLE_CAP, types: list[SimpleType] | None = None) -> list[Check]:
    types = types if types is not None else all_types(max_rank)
    out = []
    for t in types:
        out.extend(checks_for_type(t, oracle_cap))
    return out


def summarize(checks: list[Check]) -> dict:
    per_type: dict[str, dict[str, int]] = {}
    for c in checks:
        slot = per_type.setdefault(c.type, {"pass": 0, "fail": 0, "skipped": 0})
        slot[c.status] += 1
    totals = {k: sum(v[k] for v in per_type.values()) for k in ("pass", "fail", "skipped")}
    return {"per_type": per_type, "totals": totals}


# ---------------------------------------------------------------------------
# tables


def _render_indices(token) -> str:
    if isinstance(token, str):
        return token
    return ", ".join(f"w{tok}" if isinstance(tok, int) else f"w_{tok}" for tok in token)


def _family_label(row: dict) -> str:
    return f"{row['family']}{row['rank']}" if "rank" in row else f"{row['family']}_l"


def table_lines(max_rank: int) -> tuple[list[dict], list[dict]]:
    rows, diff = [], []
    for ref in reference.line_weight_rows():
        instances = []
        for t in all_types(max_rank):
            if not reference._covers(ref, t):
                continue
            table = contraction_table(build(t))
            expected = reference.line_weights(t)
            instances.append({
                "type": str(t),
                "line_weights": sorted(table.line_weights),
                "minuscule_weights": sorted(table.minuscule_weights),
                "normal": {str(k): v for k, v in table.normal.items()},
                "smooth": {str(k): v for k, v in table.smooth.items()},
                "matches": table.line_weights == expected,
            })
            if table.line_weights != expected:
                diff.append({"type": str(t), "computed": sorted(table.line_weights), "reference": sorted(expected)})
        rows.append({
            "family": _family_label(ref),
            "weights": _render_indices(ref["weights"]),
            "instances": instances,
            "matches": all(i["matches"] for i in instances),
            "provenance": REFERENCE,
        })
    return rows, diff


def table_short(max_rank: int) -> tuple[list[dict], list[dict]]:
    rows, diff = [], []
    for fam in "BCFG":
        instances = []
        for t in all_types(max_rank):
            if t.family != fam:
                continue
            d = build(t)
            got = highest_short_pairings(d)
            orb = additive_infinity_orbit(d, "theta_short")
            content = coroot_cocharacter(d, "theta_short").content()
            row = reference.short_root_row(t)
            inst = {
                "type": str(t),
                "pairings": list(got),
                "orbit": list(orb.subset),
                "coroot_content": content,
            }
            if row is None:
                inst["in_reference_range"] = False
                inst["matches"] = None
            else:
                inst["in_reference_range"] = True
                inst["matches"] = got == row["pairings"] and orb.subset == row["orbit"] and content == row["coroot_content"]
                if not inst["matches"]:
                    diff.append({"type": str(t), "computed": inst, "reference": {k: list(v) if isinstance(v, tuple) else v for k, v in row.items()}})
            instances.append(inst)
        if not instances:
            continue
        rows.append({
            "family": fam if fam in "BC" else f"{fam}{instances[0]['type'][1:]}",
            "instances": instances,
            "matches": all(i["matches"] is not False for i in instances),
            "provenance": REFERENCE,
        })
    return rows, diff


def table_roots(max_rank: int) -> tuple[list[dict], list[dict]]:
    rows, diff = [], []
    for t in all_types(max_rank):
        d = build(t)
        ones = highest_coroot_ones(d)
        pairs = [pairing_with_coroot(d, root_to_weight(d, a), d.theta_coroot) for a in d.positive_roots if a != d.theta]
        exp = reference.highest_coroot_ones(t)
        rec = {
            "type": str(t),
            "ones": sorted(ones),
            "other_root_pairings": sorted(set(pairs)),
            "provenance": REFERENCE if exp else DERIVED,
        }
        if exp is None:
            rec["matches"] = None
        else:
            rec["matches"] = ones == exp["indices"] if "indices" in exp else len(ones) == exp["count"]
            rec["matches"] = rec["matches"] and set(pairs) <= {0, 1}
            if not rec["matches"]:
                diff.append({"type": str(t), "ones": sorted(ones)})
        rows.append(rec)
    return rows, diff


def table_dim(max_rank: int) -> tuple[list[dict], list[dict]]:
    rows, diff = [], []
    for t in all_types(max_rank):
        d = build(t)
        v = vmrt_report(d)
        exp = reference.dim_offset(t)
        rec = {
            "type": str(t),
            "kappa_theta": v.kappa_theta,
            "dim_P_Omin": v.dim_P_Omin,
            "offset": v.dim_offset,
            "dim_Kx": v.dim_Kx,
            "family_description": v.family_description,
            "matches": None if exp is None else v.dim_offset == exp,
            "provenance": REFERENCE if exp is not None else DERIVED,
        }
        if exp is not None and v.dim_offset != exp:
            diff.append({"type": str(t), "offset": v.dim_offset, "reference": exp})
        rows.append(rec)
    return rows, diff


TABLES: dict[str, Callable[[int], tuple[list[dict], list[dict]]]] = {
    "remark-lines": table_lines,
    "remark-short": table_short,
    "lemma-roots": table_roots,
    "lemma-dim": table_dim,
}


def emit_table(name: str, max_rank: int = 8) -> tuple[list[dict], list[dict]]:
    """Computed rows and the list of disagreements with the reference data."""
    try:
        fn = TABLES[name]
    except KeyError:
        raise UnknownTable(f"unknown table {name!r}; choose from {', '.join(sorted(TABLES))}") from None
    return fn(max_rank)
