"""Exact weight arithmetic and the classical root systems A-D.

Weights are tuples of ``fractions.Fraction`` in epsilon-coordinates with the
normalized form <e_i, e_j> = delta_ij.  No floating point enters this module:
dominance, reflections and coroots are exact decisions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable

Weight = tuple[Q, ...]


def weight(*coords) -> Weight:
    """Build a weight from ints, strings or Fractions."""
    return tuple(Q(c) for c in coords)


def zero(dim: int) -> Weight:
    return (Q(0),) * dim


def add(u: Weight, v: Weight) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Weight, v: Weight) -> Weight:
    return tuple(a - b for a, b in zip(u, v))


def neg(u: Weight) -> Weight:
    return tuple(-a for a in u)


def scale(q, u: Weight) -> Weight:
    q = Q(q)
    return tuple(q * a for a in u)


def is_zero(u: Weight) -> bool:
    return all(a == 0 for a in u)


def inner(u: Weight, v: Weight) -> Q:
    """Exact bilinear form; raises on rank mismatch."""
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(u, v)), Q(0))


def coroot(alpha: Weight) -> Weight:
    """2*alpha / <alpha, alpha>."""
    nn = inner(alpha, alpha)
    if nn == 0:
        raise ValueError("zero weight has no coroot")
    return scale(Q(2) / nn, alpha)


def reflect(mu: Weight, alpha: Weight) -> Weight:
    """Reflection of mu in the hyperplane orthogonal to alpha."""
    c = Q(2) * inner(mu, alpha) / inner(alpha, alpha)
    return sub(mu, scale(c, alpha))


def is_dominant(mu: Weight, positive_roots: Iterable[Weight]) -> bool:
    return all(inner(mu, a) >= 0 for a in positive_roots)


def lex_positive(w: Weight) -> bool:
    """First nonzero coordinate is positive."""
    for a in w:
        if a != 0:
            return a > 0
    return False


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    dim: int
    roots: frozenset[Weight]
    positive_roots: frozenset[Weight]
    simple_roots: tuple[Weight, ...]

    def is_root(self, w: Weight) -> bool:
        return w in self.roots


def _simple_from_positive(positives: frozenset[Weight] | set[Weight]) -> tuple[Weight, ...]:
    # indecomposables: not a sum of two positive roots
    out = []
    for p in positives:
        if not any(sub(p, q) in positives for q in positives if q != p):
            out.append(p)
    return tuple(sorted(out, reverse=True))


def root_system_from_positive(positives: Iterable[Weight], dim: int,
                              family: str = "derived") -> RootSystem:
    """Root system generated by an explicit set of positive roots."""
    pos = frozenset(positives)
    roots = frozenset(pos) | frozenset(neg(p) for p in pos)
    # rank = dimension of the span; exact Gaussian elimination
    rank = _span_rank(sorted(pos))
    return RootSystem(family, rank, dim, roots, pos, _simple_from_positive(pos))


def _span_rank(vectors: list[Weight]) -> int:
    rows = [list(v) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / lead
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def make_root_system(family: str, rank: int) -> RootSystem:
    """Standard epsilon-coordinate realization with the lexicographic
    positive system (e_1 > e_2 > ...)."""
    if rank < 1 or family not in ("A", "B", "C", "D") or (family == "D" and rank < 2):
        raise ValueError("unsupported root system")
    e = lambda i, d: tuple(Q(1) if j == i else Q(0) for j in range(d))
    pos: set[Weight] = set()
    if family == "A":
        dim = rank + 1
        for i in range(dim):
            for j in range(i + 1, dim):
                pos.add(sub(e(i, dim), e(j, dim)))
        simple = tuple(sub(e(i, dim), e(i + 1, dim)) for i in range(rank))
    else:
        dim = rank
        for i in range(dim):
            for j in range(i + 1, dim):
                pos.add(sub(e(i, dim), e(j, dim)))
                pos.add(add(e(i, dim), e(j, dim)))
        if family == "B":
            pos.update(e(i, dim) for i in range(dim))
        elif family == "C":
            pos.update(scale(2, e(i, dim)) for i in range(dim))
        chain = tuple(sub(e(i, dim), e(i + 1, dim)) for i in range(rank - 1))
        if family == "B":
            simple = chain + (e(rank - 1, dim),)
        elif family == "C":
            simple = chain + (scale(2, e(rank - 1, dim)),)
        else:
            simple = chain + (add(e(rank - 2, dim), e(rank - 1, dim)),)
    roots = frozenset(pos) | frozenset(neg(p) for p in pos)
    return RootSystem(family, rank, dim, roots, frozenset(pos), simple)


def weyl_canonicalize(mu: Weight, system: RootSystem) -> tuple[Weight, bool]:
    """Dominant representative of the Weyl orbit of mu, by repeated
    reflection along simple roots with negative pairing.  Returns the
    representative and whether any reflection was applied."""
    cur = mu
    changed = False
    guard = 0
    while True:
        for a in system.simple_roots:
            if inner(cur, a) < 0:
                cur = reflect(cur, a)
                changed = True
                break
        else:
            return cur, changed
        guard += 1
        if guard > 1_000_000:
            raise RuntimeError("weyl canonicalization failed to terminate")


# --- JSON encoding: rationals as explicit "p/q" strings -------------------

def rational_str(q: Q) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Q:
    try:
        return Q(s.strip())
    except ZeroDivisionError:
        raise ValueError("zero denominator") from None
    except ValueError:
        raise ValueError(f"malformed rational {s!r}") from None


def weight_to_json(w: Weight) -> list[str]:
    return [rational_str(a) for a in w]


def weight_from_json(items: Iterable) -> Weight:
    out = []
    for i, s in enumerate(items):
        try:
            out.append(parse_rational(str(s)))
        except ValueError as exc:
            raise ValueError(f"{exc} at coordinate {i}") from None
    return tuple(out)
