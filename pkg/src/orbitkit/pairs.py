"""Holomorphic-type symmetric pairs of the classical Hermitian algebras.

An involution tau commuting with the Cartan involution theta is encoded by a
sign vector sigma (acting by conjugation on root vectors) together with an
optional theta twist.  The action on the compact Cartan t is a diagonal
+-1 matrix; restricted weight data, the factorization of the tau*theta fixed
algebra into simple ideals, and one cascade per noncompact factor are all
computed structurally from that encoding and cross-checked at build time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from .hermitian import Cascade, HermitianAlgebra, cascade, hermitian_data
from .weights import (
    RootSystem,
    Weight,
    inner,
    is_zero,
    lex_positive,
    neg,
    root_system_from_positive,
)


class Involution:
    """tau restricted to t (a diagonal +-1 matrix ``eta``) plus the +-1 action
    on the root spaces of the eta-fixed roots."""

    __slots__ = ("eta", "_signs", "label")

    def __init__(self, eta, signs: dict[Weight, int], label: str = ""):
        self.eta = tuple(int(e) for e in eta)
        self._signs = dict(signs)
        self.label = label
        if any(e not in (1, -1) for e in self.eta):
            raise ValueError("involution matrix must be diagonal +-1")

    def apply(self, w: Weight) -> Weight:
        return tuple(Q(e) * a for e, a in zip(self.eta, w))

    def is_fixed(self, root: Weight) -> bool:
        return self.apply(root) == root

    def sign(self, root: Weight) -> int:
        return self._signs[root]

    def matrix(self) -> tuple[tuple[Q, ...], ...]:
        n = len(self.eta)
        return tuple(tuple(Q(self.eta[i]) if i == j else Q(0) for j in range(n))
                     for i in range(n))


@dataclass(frozen=True)
class PairDescriptor:
    g_label: str
    g_params: tuple[int, ...]
    h_name: str
    pair_id: str
    aliases: tuple[str, ...]
    sigma: tuple[int, ...]
    theta_twist: bool

    @property
    def is_theta_pair(self) -> bool:
        return self.theta_twist and all(s == 1 for s in self.sigma)


@dataclass(frozen=True)
class FactorData:
    index: int
    compact: bool
    roots: frozenset[Weight]
    source: frozenset[Weight]
    cascade: Cascade | None
    rank: int


@dataclass(frozen=True)
class OrbitParamG:
    c: Q
    mirrored: bool = False
    degenerate: bool = False


@dataclass(frozen=True)
class OrbitParamH:
    mu: Weight
    elliptic: bool = True
    canonicalized: bool = False


@dataclass(frozen=True)
class HolomorphicPair:
    descriptor: PairDescriptor
    algebra: HermitianAlgebra
    tau: Involution
    frame: tuple[int, ...]
    p_plus_tau: tuple[Weight, ...]
    p_plus_minus_tau: tuple[Weight, ...]
    compact_positive_tau: frozenset[Weight]
    k_tau_system: RootSystem
    factors: tuple[FactorData, ...]
    z_frame: Weight

    @property
    def pair_id(self) -> str:
        return self.descriptor.pair_id

    @property
    def frame_dim(self) -> int:
        return len(self.frame)

    @property
    def noncompact_factors(self) -> tuple[FactorData, ...]:
        return tuple(f for f in self.factors if not f.compact)

    @property
    def L(self) -> int:
        return len(self.noncompact_factors)

    @property
    def split_rank(self) -> int:
        return sum(f.rank for f in self.noncompact_factors)


def restrict(w: Weight, pair: HolomorphicPair) -> Weight:
    """Orthogonal projection onto t^tau, in the pair's coordinate frame.

    For su(p,q) the trace direction (the zero functional on the traceless
    Cartan) is projected out as well, so equal functionals get equal
    coordinates.
    """
    v = tuple(w[i] for i in pair.frame)
    if pair.algebra.label == "su":
        m = sum(v, Q(0)) / len(v)
        v = tuple(a - m for a in v)
    return v


def holomorphic_type(algebra: HermitianAlgebra, tau: Involution) -> str:
    """Classify tau by its action on the characteristic element."""
    z = algebra.characteristic
    fixed = tau.apply(z)
    if fixed == z:
        return "holomorphic"
    if fixed == neg(z):
        return "anti_holomorphic"
    raise ValueError("involution does not act by +-1 on the center of k")


def theta_involution(algebra: HermitianAlgebra) -> Involution:
    """The Cartan involution as a pair involution (sigma = +1, theta twist)."""
    return _make_involution(algebra, (1,) * _sigma_len(algebra), True)


def gl_type_involution(algebra: HermitianAlgebra) -> Involution:
    """The anti-holomorphic involution acting by -1 on t (GL(n,R)-type for
    sp(n,R)); used only for classification, never for building pairs."""
    return Involution((-1,) * algebra.dim, {}, "gl-type")


def _sigma_len(algebra: HermitianAlgebra) -> int:
    if algebra.label == "so2":
        return algebra.params[0]
    return algebra.dim


def _make_involution(algebra: HermitianAlgebra, sigma, theta_twist: bool) -> Involution:
    sigma = tuple(int(s) for s in sigma)
    if len(sigma) != _sigma_len(algebra) or any(s not in (1, -1) for s in sigma):
        raise ValueError("invalid sign vector for this algebra")
    if algebra.label == "so2":
        eta, char = _so2_sign_data(algebra, sigma)
    else:
        eta = (1,) * algebra.dim

        def char(root: Weight) -> int:
            s = 1
            for c, sg in zip(root, sigma):
                if c.denominator != 1:
                    raise ValueError("non-integral root coefficient")
                if c.numerator % 2:
                    s *= sg
            return s

    noncompact = algebra.noncompact_positive | frozenset(
        neg(b) for b in algebra.noncompact_positive)
    signs: dict[Weight, int] = {}
    for root in algebra.root_system.roots:
        if tuple(Q(e) * a for e, a in zip(eta, root)) != root:
            continue
        s = char(root)
        if theta_twist and root in noncompact:
            s = -s
        signs[root] = s
    return Involution(eta, signs)


def _so2_sign_data(algebra: HermitianAlgebra, sigma):
    """Plane bookkeeping for so(2,n): tau is conjugation by spatial signs.

    Torus planes are tiled inside each sign block; two odd blocks leave a
    mixed plane whose coordinate is reversed by tau (and is ordered last so
    that restriction preserves lexicographic positivity).
    """
    n = algebra.params[0]
    r = algebra.dim
    plus = [i for i, s in enumerate(sigma) if s == 1]
    minus = [i for i, s in enumerate(sigma) if s == -1]
    coord_signs = [1]  # time coordinate
    coord_signs += [1] * (len(plus) // 2) + [-1] * (len(minus) // 2)
    mixed = (len(plus) % 2 == 1) and (len(minus) % 2 == 1)
    extra_sign = None
    if len(plus) % 2 == 1 and not mixed:
        extra_sign = 1
    elif len(minus) % 2 == 1 and not mixed:
        extra_sign = -1
    eta = tuple([1] * len(coord_signs) + ([-1] if mixed else []))
    if len(eta) != r:
        raise ValueError("invalid sign vector for this algebra")

    def char(root: Weight) -> int:
        support = [i for i, c in enumerate(root) if c != 0]
        s = 1
        for i in support:
            s *= coord_signs[i]
        if len(support) == 1 and abs(root[support[0]]) == 1:
            # short root: pairs the plane with the leftover odd column
            assert extra_sign is not None
            s *= extra_sign
        return s

    return eta, char


# --- registry ---------------------------------------------------------------

def registry(max_rank: int = 6) -> list[PairDescriptor]:
    """Built-in holomorphic-type pairs for all algebras of Cartan rank up to
    max_rank, the Cartan involution pair included once per algebra."""
    out: list[PairDescriptor] = []
    for n in range(1, max_rank + 1):
        gid = f"sp{n}"
        out.append(_theta_descriptor("sp", (n,), gid, (f"{gid}:u{n}",)))
        for p in range(n - 1, 0, -1):
            q = n - p
            if p < q:
                continue
            sigma = (1,) * p + (-1,) * q
            out.append(PairDescriptor("sp", (n,), f"u({p},{q})",
                                      f"{gid}:u{p}{q}", (), sigma, True))
            out.append(PairDescriptor("sp", (n,), f"sp({p},R)+sp({q},R)",
                                      f"{gid}:sp{p}sp{q}", (), sigma, False))
    for p in range(1, max_rank + 1):
        for q in range(1, p + 1):
            if p + q - 1 > max_rank:
                continue
            gid = f"su{p}{q}"
            out.append(_theta_descriptor("su", (p, q), gid, (f"{gid}:u{p}u{q}",)))
            seen = set()
            for k in range(p + 1):
                for l in range(q + 1):
                    if (k, l) in ((0, 0), (p, q), (p, 0), (0, q)):
                        continue
                    pick = max((k, l), (p - k, q - l))
                    if pick in seen:
                        continue
                    seen.add(pick)
                    k2, l2 = pick
                    sigma = tuple(1 if (i < k2 or p <= i < p + l2) else -1
                                  for i in range(p + q))
                    out.append(PairDescriptor(
                        "su", (p, q), f"s(u({k2},{l2})+u({p - k2},{q - l2}))",
                        f"{gid}:u{k2}{l2}u{p - k2}{q - l2}", (), sigma, True))
    for n in range(3, max_rank + 1):
        gid = f"sostar{2 * n}"
        out.append(_theta_descriptor("sostar", (n,), gid, (f"{gid}:u{n}",)))
        for p in range(1, n // 2 + 1):
            sigma = (1,) * p + (-1,) * (n - p)
            out.append(PairDescriptor("sostar", (n,), f"u({p},{n - p})",
                                      f"{gid}:u{p}{n - p}", (), sigma, True))
            out.append(PairDescriptor("sostar", (n,), f"so*({2 * p})+so*({2 * (n - p)})",
                                      f"{gid}:sostar{2 * p}sostar{2 * (n - p)}",
                                      (), sigma, False))
    for n in range(1, 2 * max_rank):
        if 1 + n // 2 > max_rank:
            continue
        gid = f"so2_{n}"
        out.append(_theta_descriptor("so2", (n,), gid, (f"{gid}:so2so{n}",)))
        for k in range(n - 1, 0, -1):
            sigma = (1,) * k + (-1,) * (n - k)
            out.append(PairDescriptor("so2", (n,), f"so(2,{k})+so({n - k})",
                                      f"{gid}:so2_{k}so{n - k}", (), sigma, False))
    return out


def _theta_descriptor(label, params, gid, aliases) -> PairDescriptor:
    alg_sigma_len = params[0] if label in ("sp", "sostar", "so2") else params[0] + params[1]
    return PairDescriptor(label, tuple(params), "K", f"{gid}:K",
                          tuple(aliases), (1,) * alg_sigma_len, True)


def descriptor(pair_id: str, max_rank: int = 6) -> PairDescriptor:
    """Look up a pair id (or alias) in the registry."""
    for d in registry(max_rank):
        if pair_id == d.pair_id or pair_id in d.aliases:
            return d
    raise ValueError(f"unknown pair id {pair_id!r}")


def custom_descriptor(g_label: str, g_params, sigma, theta_twist: bool) -> PairDescriptor:
    """User-supplied involution via its sign-vector encoding."""
    sigma = tuple(int(s) for s in sigma)
    flag = "t" if theta_twist else "o"
    gid = g_label + "".join(str(p) for p in g_params)
    token = "".join("p" if s == 1 else "m" for s in sigma)
    return PairDescriptor(g_label, tuple(g_params), "custom",
                          f"{gid}:custom-{token}-{flag}", (), sigma, theta_twist)


# --- pair construction ------------------------------------------------------

def build_pair(desc: PairDescriptor) -> HolomorphicPair:
    algebra = hermitian_data(desc.g_label, *desc.g_params)
    tau = _make_involution(algebra, desc.sigma, desc.theta_twist)
    return build_pair_from_involution(algebra, tau, desc)


def build_pair_from_involution(algebra: HermitianAlgebra, tau: Involution,
                               desc: PairDescriptor) -> HolomorphicPair:
    if holomorphic_type(algebra, tau) != "holomorphic":
        raise ValueError("pair is not of holomorphic type")
    eta = tau.eta
    # reversed coordinates must come last: restriction then preserves the
    # lexicographic sign of every surviving leading coordinate
    flipped = [i for i, e in enumerate(eta) if e == -1]
    if flipped and flipped != list(range(len(eta) - len(flipped), len(eta))):
        raise ValueError("frame coordinates must form a prefix")
    frame = tuple(i for i, e in enumerate(eta) if e == 1)
    quotient = algebra.label == "su"

    def rest(w: Weight) -> Weight:
        v = tuple(w[i] for i in frame)
        if quotient:
            m = sum(v, Q(0)) / len(v)
            v = tuple(a - m for a in v)
        return v

    pp_tau: list[Weight] = []
    pp_minus: list[Weight] = []
    seen: set[Weight] = set()
    for b in sorted(algebra.noncompact_positive):
        tb = tau.apply(b)
        if tb == b:
            (pp_tau if tau.sign(b) == 1 else pp_minus).append(rest(b))
        else:
            key = min(b, tb)
            if key in seen:
                continue
            seen.add(key)
            r = rest(b)
            pp_tau.append(r)
            pp_minus.append(r)
    assert len(pp_tau) + len(pp_minus) == len(algebra.noncompact_positive)

    k_tau: list[Weight] = []
    seen.clear()
    for a in sorted(algebra.compact_positive):
        ta = tau.apply(a)
        if ta == a:
            if tau.sign(a) == 1:
                k_tau.append(rest(a))
        else:
            key = min(a, ta)
            if key in seen:
                continue
            seen.add(key)
            r = rest(a)
            if not is_zero(r):
                k_tau.append(r)

    # compatibility of the positive systems: every restriction of a positive
    # root is zero or lexicographically positive downstairs
    for a in sorted(algebra.compact_positive | algebra.noncompact_positive):
        r = rest(a)
        if not is_zero(r) and not lex_positive(r):
            raise ValueError("incompatible positive systems")

    g_assoc_pos = list(k_tau) + list(pp_minus)
    if len(set(g_assoc_pos)) != len(g_assoc_pos):
        raise ValueError("restricted root of multiplicity > 1; t^tau is not a "
                         "Cartan subalgebra of the associated algebra")

    factors = _factorize(g_assoc_pos, frozenset(pp_minus), len(frame))
    k_tau_system = root_system_from_positive(k_tau, len(frame))
    z_frame = rest(algebra.characteristic)

    return HolomorphicPair(
        descriptor=desc,
        algebra=algebra,
        tau=tau,
        frame=frame,
        p_plus_tau=tuple(sorted(pp_tau)),
        p_plus_minus_tau=tuple(sorted(pp_minus)),
        compact_positive_tau=frozenset(k_tau),
        k_tau_system=k_tau_system,
        factors=factors,
        z_frame=z_frame,
    )


def _factorize(positives: list[Weight], noncompact: frozenset[Weight],
               dim: int) -> tuple[FactorData, ...]:
    """Simple-ideal decomposition of the associated algebra via connectivity
    of the root graph (edges between non-orthogonal roots)."""
    roots = list(positives)
    parent = list(range(len(roots)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if inner(roots[i], roots[j]) != 0:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj

    groups: dict[int, list[Weight]] = {}
    for i, r in enumerate(roots):
        groups.setdefault(find(i), []).append(r)

    compact_roots: list[Weight] = []
    noncompact_comps: list[list[Weight]] = []
    for comp in groups.values():
        if any(r in noncompact for r in comp):
            noncompact_comps.append(sorted(comp))
        else:
            compact_roots.extend(comp)

    noncompact_comps.sort(key=lambda comp: max(r for r in comp if r in noncompact),
                          reverse=True)
    out = [FactorData(0, True,
                      frozenset(compact_roots) | frozenset(neg(r) for r in compact_roots),
                      frozenset(), None, 0)]
    for idx, comp in enumerate(noncompact_comps, start=1):
        source = frozenset(r for r in comp if r in noncompact)
        ambient = root_system_from_positive(comp, dim)
        casc = cascade(source, ambient)
        out.append(FactorData(idx, False, ambient.roots, source, casc,
                              len(casc.roots)))
    return tuple(out)


def compatible_positive_systems(pair: HolomorphicPair):
    """The compatible pair (Delta+(k,t), Delta+(k^tau, t^tau)); re-verifies
    exhaustively that no positive root restricts to a negative weight."""
    for a in pair.algebra.compact_positive:
        r = restrict(a, pair)
        if not is_zero(r) and not lex_positive(r):
            raise ValueError("incompatible positive systems")
        if r in pair.k_tau_system.roots and r not in pair.k_tau_system.positive_roots:
            raise ValueError("incompatible positive systems")
    return frozenset(pair.algebra.compact_positive), frozenset(pair.compact_positive_tau)
