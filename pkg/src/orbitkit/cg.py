"""The Corwin-Greenleaf multiplicity evaluator.

The value is 0 or 1 by construction: after validating the orbit parameters,
it is exactly the cone-membership decision for mu - lambda restricted to the
t^tau frame, with the expansion coefficients returned as a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from .cone import ConeCoefficients, cone, cone_expand
from .pairs import HolomorphicPair, OrbitParamG, OrbitParamH, restrict
from .weights import Weight, inner, is_zero, neg, scale, weyl_canonicalize

ORBIT_KINDS = ("elliptic", "hyperbolic", "nilpotent", "mixed")


@dataclass(frozen=True)
class CGResult:
    value: int
    certificate: ConeCoefficients | None
    reason: str

    def __post_init__(self):
        assert self.value in (0, 1)
        assert (self.value == 1) == (self.certificate is not None)


def validate_lambda(pair: HolomorphicPair, c) -> OrbitParamG:
    """Orbit parameter lambda = c*Z; c < 0 is canonicalized by the mirror
    symmetry, c = 0 is the degenerate orbit {0}."""
    c = Q(c)
    if c == 0:
        return OrbitParamG(Q(0), degenerate=True)
    mirrored = c < 0
    cc = -c if mirrored else c
    lam = scale(cc, pair.algebra.characteristic)
    for beta in pair.algebra.noncompact_positive:
        assert inner(lam, beta) > 0, "positivity of lambda on p_+ failed"
    return OrbitParamG(cc, mirrored=mirrored)


def validate_mu(pair: HolomorphicPair, mu_raw: Weight) -> OrbitParamH:
    """Dominant representative of the H-orbit parameter on t^tau."""
    if len(mu_raw) == pair.algebra.dim:
        mu_raw = restrict(mu_raw, pair)
    if len(mu_raw) != pair.frame_dim:
        raise ValueError("dimension mismatch")
    if pair.algebra.label == "su":
        m = sum(mu_raw, Q(0)) / len(mu_raw)
        mu_raw = tuple(a - m for a in mu_raw)
    mu, changed = weyl_canonicalize(mu_raw, pair.k_tau_system)
    return OrbitParamH(mu, elliptic=True, canonicalized=changed)


def elliptic_gate(pair: HolomorphicPair, orbit_kind: str) -> CGResult | None:
    """Non-elliptic orbit kinds short-circuit to 0; elliptic passes through."""
    if orbit_kind not in ORBIT_KINDS:
        raise ValueError(f"unknown orbit kind {orbit_kind!r}")
    if orbit_kind != "elliptic":
        return CGResult(0, None, "non-elliptic-orbit")
    return None


def cg_number(pair: HolomorphicPair, lam: OrbitParamG, mu: OrbitParamH) -> CGResult:
    """The 0/1 decision: nonzero iff mu lies in lambda + Cone(p_+^{-tau})."""
    if not mu.elliptic:
        return CGResult(0, None, "non-elliptic-orbit")
    if lam.mirrored:
        mirrored_mu = validate_mu(pair, neg(mu.mu))
        return cg_number(pair, OrbitParamG(lam.c), mirrored_mu)
    if lam.degenerate:
        if is_zero(mu.mu):
            desc = cone(pair)
            empty = ConeCoefficients(tuple((Q(0),) * len(g) for g in desc.groups))
            return CGResult(1, empty, "cone-member")
        return CGResult(0, None, "outside-cone")
    desc = cone(pair)
    delta = tuple(a - b for a, b in zip(mu.mu, scale(lam.c, pair.z_frame)))
    coeffs, residual = cone_expand(desc, delta)
    if not is_zero(residual):
        return CGResult(0, None, "outside-span")
    if not coeffs.chain_valid():
        return CGResult(0, None, "outside-cone")
    return CGResult(1, coeffs, "cone-member")
