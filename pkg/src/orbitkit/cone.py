"""The closed convex cone spanned by the cascade roots, with exact membership.

Generators are grouped per noncompact factor of the associated algebra; inside
each group the admissible coefficient tuples form the chain chamber
t_1 >= ... >= t_r >= 0.  Strong orthogonality makes all generators pairwise
orthogonal, so membership reduces to exact orthogonal projection plus chain
checks; no linear programming is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from .pairs import HolomorphicPair, OrbitParamG
from .weights import Weight, add, coroot, inner, is_zero, scale, sub, zero


@dataclass(frozen=True)
class ConeDescriptor:
    groups: tuple[tuple[Weight, ...], ...]
    dim: int
    integral: bool = False

    @property
    def generators(self) -> tuple[Weight, ...]:
        return tuple(v for g in self.groups for v in g)


@dataclass(frozen=True)
class ConeCoefficients:
    groups: tuple[tuple[Q, ...], ...]

    def chain_valid(self) -> bool:
        for g in self.groups:
            if any(a < b for a, b in zip(g, g[1:])):
                return False
            if g and g[-1] < 0:
                return False
        return True

    def flat(self) -> tuple[Q, ...]:
        return tuple(t for g in self.groups for t in g)

    def is_integral(self) -> bool:
        return all(t.denominator == 1 for t in self.flat())


def cone(pair: HolomorphicPair, integral: bool = False) -> ConeDescriptor:
    """Cone generators: the per-factor cascade roots, in the t^tau frame."""
    groups = tuple(tuple(f.cascade.roots) for f in pair.noncompact_factors)
    desc = ConeDescriptor(groups, pair.frame_dim, integral)
    gens = desc.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            assert inner(gens[i], gens[j]) == 0, "cone generators must be orthogonal"
    for g in desc.groups:
        lengths = {inner(v, v) for v in g}
        assert len(lengths) == 1, "cascade roots of one factor must share length"
    return desc


def cone_expand(desc: ConeDescriptor, delta: Weight) -> tuple[ConeCoefficients, Weight]:
    """Unique orthogonal expansion of delta over the generators, plus the
    residual off the generator span."""
    rest = delta
    groups = []
    for g in desc.groups:
        coeffs = []
        for v in g:
            t = inner(delta, v) / inner(v, v)
            coeffs.append(t)
            rest = sub(rest, scale(t, v))
        groups.append(tuple(coeffs))
    return ConeCoefficients(tuple(groups)), rest


def cone_contains(desc: ConeDescriptor, delta: Weight):
    """Exact membership decision; coefficients are returned on success."""
    coeffs, residual = cone_expand(desc, delta)
    if not is_zero(residual):
        return False, None
    if not coeffs.chain_valid():
        return False, None
    if desc.integral and not coeffs.is_integral():
        return False, None
    return True, coeffs


def sinh_square_params(desc: ConeDescriptor, c: Q,
                       coeffs: ConeCoefficients) -> ConeCoefficients:
    """Convert cone-expansion coefficients t (over the generators nu) into the
    sinh^2 parameters s of the momentum image, via c*s*coroot(nu) = t*nu."""
    out = []
    for g, cs in zip(desc.groups, coeffs.groups):
        nn = inner(g[0], g[0])
        out.append(tuple(t * nn / (2 * Q(c)) for t in cs))
    return ConeCoefficients(tuple(out))


def cone_params_from_sinh(desc: ConeDescriptor, c: Q,
                          s: ConeCoefficients) -> ConeCoefficients:
    out = []
    for g, ss in zip(desc.groups, s.groups):
        nn = inner(g[0], g[0])
        out.append(tuple(2 * Q(c) * t / nn for t in ss))
    return ConeCoefficients(tuple(out))


def momentum_image_point(pair: HolomorphicPair, lam: OrbitParamG,
                         s: ConeCoefficients) -> Weight:
    """Exact image point c*(Z + sum_ij s_j^(i) H_j^(i)) on t^tau, where the
    s play the role of sinh^2 of the chamber parameters."""
    if lam.degenerate or lam.mirrored:
        raise ValueError("momentum image is defined for c > 0")
    if not s.chain_valid():
        raise ValueError("coefficients violate chamber constraints")
    desc = cone(pair)
    point = zero(pair.frame_dim)
    for g, ss in zip(desc.groups, s.groups):
        for v, t in zip(g, ss):
            point = add(point, scale(t, coroot(v)))
    return scale(lam.c, add(pair.z_frame, point))
