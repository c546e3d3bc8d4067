"""Branching-law supports and their convex-hull consistency with the cone.

The support of the restriction is the lattice translate
lambda| + sum a_j^(i) nu_j^(i) over chain-ordered nonnegative integer tuples;
enumeration is truncated by total exponent and reported in graded
lexicographic order.  Hull queries are decided exactly over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from itertools import product

from .cg import cg_number, validate_mu
from .cone import cone
from .exactlp import convex_combination
from .pairs import HolomorphicPair, OrbitParamG
from .weights import Weight, add, scale

__all__ = [
    "SupportPoint",
    "SupportTable",
    "branch_support",
    "chain_tuples",
    "hull_cone_consistency",
]


@dataclass(frozen=True)
class SupportPoint:
    mu: Weight
    exponents: tuple[tuple[int, ...], ...]

    @property
    def total(self) -> int:
        return sum(sum(g) for g in self.exponents)


@dataclass(frozen=True)
class SupportTable:
    pair_id: str
    c: Q
    bound: int
    points: tuple[SupportPoint, ...]


def chain_tuples(r: int, bound: int) -> list[tuple[int, ...]]:
    """All integer tuples a_1 >= ... >= a_r >= 0 with sum <= bound."""
    if r == 0:
        return [()]
    out = []

    def rec(prefix: tuple[int, ...], cap: int, left: int) -> None:
        if len(prefix) == r:
            out.append(prefix)
            return
        for a in range(min(cap, left), -1, -1):
            rec(prefix + (a,), a, left - a)

    rec((), bound, bound)
    return out


def branch_support(pair: HolomorphicPair, lam: OrbitParamG, bound: int) -> SupportTable:
    """All support points with total exponent sum <= bound."""
    if lam.degenerate or lam.mirrored:
        raise ValueError("branching support defined for c > 0 only")
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    desc = cone(pair)
    base = scale(lam.c, pair.z_frame)
    per_group = [chain_tuples(len(g), bound) for g in desc.groups]
    combos = [c for c in product(*per_group)
              if sum(sum(t) for t in c) <= bound]
    # graded lexicographic: by total exponent, then descending lex
    combos.sort(key=lambda c: (sum(sum(t) for t in c),
                               tuple(-a for t in c for a in t)))
    points = []
    for combo in combos:
        mu = base
        for gens, tup in zip(desc.groups, combo):
            for v, a in zip(gens, tup):
                mu = add(mu, scale(a, v))
        points.append(SupportPoint(mu, combo))
    assert len({p.mu for p in points}) == len(points), "support points must be distinct"
    return SupportTable(pair.pair_id, lam.c, bound, tuple(points))


def hull_membership(table: SupportTable, mu: Weight) -> bool:
    """Exact test whether mu is a convex combination of the table's points."""
    return convex_combination([p.mu for p in table.points], mu) is not None


def hull_cone_consistency(pair: HolomorphicPair, lam: OrbitParamG, bound: int,
                          probes) -> dict:
    """Compare the 0/1 cone decision against truncated-hull feasibility.

    Verdicts per probe: "agree" when both sides coincide, "inconclusive" when
    the cone says 1 but the truncation at `bound` misses the probe (increase
    the bound), and "disagree" when the hull contains a probe the cone
    rejects (which would be a defect, not a truncation artifact).
    """
    table = branch_support(pair, lam, bound)
    results = []
    for probe in probes:
        mu = validate_mu(pair, probe)
        res = cg_number(pair, lam, mu)
        feasible = hull_membership(table, mu.mu)
        if res.value == 1 and feasible:
            verdict = "agree"
        elif res.value == 0 and not feasible:
            verdict = "agree"
        elif res.value == 1 and not feasible:
            verdict = "inconclusive"
        else:
            verdict = "disagree"
        results.append({"probe": mu.mu, "cg": res.value,
                        "hull": feasible, "verdict": verdict})
    summary = {
        "pair": pair.pair_id,
        "bound": bound,
        "probes": len(results),
        "agree": sum(1 for r in results if r["verdict"] == "agree"),
        "disagree": sum(1 for r in results if r["verdict"] == "disagree"),
        "inconclusive": sum(1 for r in results if r["verdict"] == "inconclusive"),
        "results": results,
    }
    return summary
