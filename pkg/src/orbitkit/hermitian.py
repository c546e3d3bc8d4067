"""Classical Hermitian simple Lie algebras and strongly orthogonal cascades.

Each algebra is realized in epsilon-coordinates of a compact Cartan t with the
characteristic element Z solving beta(Z) = 1 on the noncompact positive roots
and alpha(Z) = 0 on the compact ones.  Both invariants are verified at
construction time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from .weights import (
    RootSystem,
    Weight,
    add,
    inner,
    make_root_system,
    scale,
    sub,
)

FAMILIES = ("sp", "su", "sostar", "so2")


@dataclass(frozen=True)
class HermitianAlgebra:
    label: str
    params: tuple[int, ...]
    name: str
    root_system: RootSystem
    compact_positive: frozenset[Weight]
    noncompact_positive: frozenset[Weight]
    characteristic: Weight  # Z, as a t-element in coordinates

    @property
    def dim(self) -> int:
        return len(self.characteristic)

    @property
    def rank(self) -> int:
        return self.root_system.rank


@dataclass(frozen=True)
class Cascade:
    roots: tuple[Weight, ...]
    source: frozenset[Weight]

    def __len__(self) -> int:
        return len(self.roots)


def _unit(i: int, dim: int) -> Weight:
    return tuple(Q(1) if j == i else Q(0) for j in range(dim))


def hermitian_data(label: str, *params: int) -> HermitianAlgebra:
    """Construct sp(n,R), su(p,q), so*(2n) or so(2,n) in epsilon-coordinates."""
    bad = ValueError("not a Hermitian algebra of this family")
    if label == "sp":
        (n,) = params
        if n < 1:
            raise bad
        system = make_root_system("C", n)
        compact = frozenset(sub(_unit(i, n), _unit(j, n))
                            for i in range(n) for j in range(i + 1, n))
        noncompact = frozenset(add(_unit(i, n), _unit(j, n))
                               for i in range(n) for j in range(i, n))
        z = scale(Q(1, 2), tuple(Q(1) for _ in range(n)))
        name = f"sp({n},R)"
    elif label == "su":
        p, q = params
        if p < 1 or q < 1:
            raise bad
        m = p + q
        system = make_root_system("A", m - 1)
        compact = frozenset(
            sub(_unit(i, m), _unit(j, m))
            for i in range(m) for j in range(i + 1, m)
            if (i < p) == (j < p))
        noncompact = frozenset(sub(_unit(i, m), _unit(j, m))
                               for i in range(p) for j in range(p, m))
        z = tuple([Q(q, m)] * p + [Q(-p, m)] * q)
        name = f"su({p},{q})"
    elif label == "sostar":
        (n,) = params
        if n < 2:
            raise bad
        system = make_root_system("D", n)
        compact = frozenset(sub(_unit(i, n), _unit(j, n))
                            for i in range(n) for j in range(i + 1, n))
        noncompact = frozenset(add(_unit(i, n), _unit(j, n))
                               for i in range(n) for j in range(i + 1, n))
        z = scale(Q(1, 2), tuple(Q(1) for _ in range(n)))
        name = f"so*({2 * n})"
    elif label == "so2":
        (n,) = params
        if n < 1:
            raise bad
        r = 1 + n // 2
        system = make_root_system("B" if n % 2 == 1 else "D", r)
        compact = frozenset(a for a in system.positive_roots if a[0] == 0)
        noncompact = frozenset(b for b in system.positive_roots if b[0] != 0)
        z = _unit(0, r)
        name = f"so(2,{n})"
    else:
        raise bad

    alg = HermitianAlgebra(label, tuple(params), name, system,
                           compact, noncompact, z)
    _check_invariants(alg)
    return alg


def _check_invariants(alg: HermitianAlgebra) -> None:
    pos = alg.root_system.positive_roots
    assert alg.compact_positive | alg.noncompact_positive == pos
    assert not (alg.compact_positive & alg.noncompact_positive)
    z = alg.characteristic
    for b in alg.noncompact_positive:
        assert inner(z, b) == 1, (alg.name, b)
    for a in alg.compact_positive:
        assert inner(z, a) == 0, (alg.name, a)


def real_rank(alg: HermitianAlgebra) -> int:
    """Classical real-rank table for the four families."""
    if alg.label == "sp":
        return alg.params[0]
    if alg.label == "su":
        return min(alg.params)
    if alg.label == "sostar":
        return alg.params[0] // 2
    n = alg.params[0]
    return 1 if n == 1 else 2


def strongly_orthogonal(alpha: Weight, beta: Weight, ambient: RootSystem) -> bool:
    """Neither alpha+beta nor alpha-beta is a root of the ambient system."""
    if not ambient.is_root(alpha) or not ambient.is_root(beta):
        raise ValueError("not a root")
    return not ambient.is_root(add(alpha, beta)) and not ambient.is_root(sub(alpha, beta))


def cascade(source, ambient: RootSystem) -> Cascade:
    """Greedy maximal chain of strongly orthogonal roots, highest first.

    "Highest" is the dominance order of the fixed positive system refined by
    the lexicographic order on coordinates; since every lex-positive root has
    lex-positive nonnegative combinations, the refinement reduces to plain
    lexicographic maximality.
    """
    pool = sorted(source, reverse=True)
    if not pool:
        raise ValueError("empty weight set")
    chain: list[Weight] = []
    while pool:
        head = pool[0]  # lex-max candidate
        chain.append(head)
        pool = [v for v in pool[1:] if strongly_orthogonal(head, v, ambient)]
    return Cascade(tuple(chain), frozenset(source))


def max_strongly_orthogonal(source, ambient: RootSystem) -> int:
    """Size of a maximum strongly orthogonal subset, by exhaustive search.

    Independent of the greedy construction; used to cross-check cascade
    lengths (the real rank of the corresponding factor).
    """
    items = sorted(source, reverse=True)

    def grow(pool: list[Weight]) -> int:
        best = 0
        for i, v in enumerate(pool):
            rest = [w for w in pool[i + 1:] if strongly_orthogonal(v, w, ambient)]
            best = max(best, 1 + grow(rest))
        return best

    return grow(items)
