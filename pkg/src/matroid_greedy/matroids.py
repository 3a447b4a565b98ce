"""Matroid independence oracles built from declarative specs.

Supported kinds: uniform (cardinality cap), partition (per-block caps),
graphic (forests of a multigraph, one element per edge), explicit (a
validated list of independent-set masks), plus dual and truncation wrappers
that compose with every other kind. Rank is computed by greedy augmentation,
which the exchange axiom makes order-independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .errors import GroundSetTooLargeError, InvalidSpecError
from .subsets import elements, full_mask

#: Base enumeration walks all 2^n masks.
MAX_BASE_ENUM_N = 16
#: Axiom checking walks all pairs of independent sets.
MAX_AXIOM_N = 10


@dataclass(frozen=True)
class UniformSpec:
    rank: int


@dataclass(frozen=True)
class PartitionSpec:
    blocks: tuple[tuple[int, ...], ...]
    capacities: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))
        object.__setattr__(self, "capacities", tuple(int(c) for c in self.capacities))


@dataclass(frozen=True)
class GraphicSpec:
    vertices: int
    edges: tuple[tuple[int, int], ...]  # element i is edges[i]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))


@dataclass(frozen=True)
class ExplicitSpec:
    independent: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "independent", frozenset(int(m) for m in self.independent))


@dataclass(frozen=True)
class DualSpec:
    of: "MatroidSpec"


@dataclass(frozen=True)
class TruncateSpec:
    of: "MatroidSpec"
    q: int


MatroidSpec = Union[UniformSpec, PartitionSpec, GraphicSpec, ExplicitSpec, DualSpec, TruncateSpec]


class Matroid:
    """Independence oracle over the ground set {0..n-1}.

    Instances are immutable and freely shareable across threads; the graphic
    union-find scratch state is per call.
    """

    __slots__ = ("n", "spec", "_test", "rank_full")

    def __init__(self, n: int, spec: MatroidSpec, test: Callable[[int], bool]) -> None:
        self.n = n
        self.spec = spec
        self._test = test
        self.rank_full = self.rank(full_mask(n))

    def is_independent(self, subset: int) -> bool:
        return self._test(subset)

    def rank(self, subset: int) -> int:
        """Size of a maximal independent subset, by greedy augmentation over ascending elements."""
        test = self._test
        picked = 0
        count = 0
        rest = subset
        while rest:
            low = rest & -rest
            rest ^= low
            if test(picked | low):
                picked |= low
                count += 1
        return count

    def enumerate_bases(self) -> list[int]:
        """All independent sets of full rank, in ascending mask order."""
        if self.n > MAX_BASE_ENUM_N:
            raise GroundSetTooLargeError(
                f"base enumeration is capped at n={MAX_BASE_ENUM_N}, got n={self.n}"
            )
        r = self.rank_full
        test = self._test
        return [m for m in range(1 << self.n) if m.bit_count() == r and test(m)]

    def dual(self) -> "Matroid":
        """Matroid whose independent sets avoid some base of this one.

        Implemented through the rank identity (a set is dual-independent iff
        removing it keeps the primal rank), so no base list is materialized.
        """
        inner = self
        full = full_mask(self.n)
        target = self.rank_full

        def test(subset: int, _inner: "Matroid" = inner, _full: int = full, _target: int = target) -> bool:
            return _inner.rank(_full & ~subset) == _target

        return Matroid(self.n, DualSpec(self.spec), test)

    def truncate(self, q: int) -> "Matroid":
        """Intersection with the cardinality-q uniform matroid."""
        if q < 0:
            raise InvalidSpecError(f"truncation bound must be >= 0, got {q}")
        inner_test = self._test

        def test(subset: int, _q: int = q, _t: Callable[[int], bool] = inner_test) -> bool:
            return subset.bit_count() <= _q and _t(subset)

        return Matroid(self.n, TruncateSpec(self.spec, q), test)

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.rank_full}, spec={self.spec!r})"


@dataclass(frozen=True)
class AxiomReport:
    """Result of the exhaustive independence-axiom check.

    ``witness`` is the first violating pair: (superset, missing subset) for a
    hereditary failure, (smaller, larger) for an exchange failure.
    """

    nonempty_ok: bool
    hereditary_ok: bool
    exchange_ok: bool
    witness: tuple[int, int] | None

    @property
    def all_ok(self) -> bool:
        return self.nonempty_ok and self.hereditary_ok and self.exchange_ok


def check_axioms(matroid: Matroid) -> AxiomReport:
    """Exhaustively test nonemptiness, heredity, and exchange on all subsets."""
    if matroid.n > MAX_AXIOM_N:
        raise GroundSetTooLargeError(
            f"axiom check is capped at n={MAX_AXIOM_N}, got n={matroid.n}"
        )
    size = 1 << matroid.n
    indep = [matroid.is_independent(s) for s in range(size)]
    nonempty = indep[0]

    hereditary = True
    h_wit: tuple[int, int] | None = None
    for big in range(1, size):
        if not indep[big]:
            continue
        sub = (big - 1) & big
        while True:
            if not indep[sub]:
                hereditary = False
                h_wit = (big, sub)
                break
            if sub == 0:
                break
            sub = (sub - 1) & big
        if not hereditary:
            break

    exchange = True
    e_wit: tuple[int, int] | None = None
    counts = [s.bit_count() for s in range(size)]
    members = [s for s in range(size) if indep[s]]
    for s1 in members:
        c1 = counts[s1]
        for s2 in members:
            if counts[s2] <= c1:
                continue
            rest = s2 & ~s1
            found = False
            while rest:
                low = rest & -rest
                rest ^= low
                if indep[s1 | low]:
                    found = True
                    break
            if not found:
                exchange = False
                e_wit = (s1, s2)
                break
        if not exchange:
            break

    if not hereditary:
        witness = h_wit
    elif not exchange:
        witness = e_wit
    else:
        witness = None
    return AxiomReport(nonempty, hereditary, exchange, witness)


def _validate_partition(spec: PartitionSpec, n: int) -> list[tuple[int, int]]:
    if len(spec.blocks) != len(spec.capacities):
        raise InvalidSpecError(
            f"{len(spec.blocks)} blocks but {len(spec.capacities)} capacities"
        )
    seen = 0
    pairs = []
    for block, cap in zip(spec.blocks, spec.capacities):
        if cap < 0:
            raise InvalidSpecError(f"block capacity must be >= 0, got {cap}")
        mask = 0
        for e in block:
            if not 0 <= e < n:
                raise InvalidSpecError(f"block element {e} out of range for n={n}")
            mask |= 1 << e
        if mask & seen:
            raise InvalidSpecError(
                f"blocks overlap on elements {elements(mask & seen)}"
            )
        seen |= mask
        pairs.append((mask, cap))
    if seen != full_mask(n):
        raise InvalidSpecError(
            f"blocks do not cover elements {elements(full_mask(n) & ~seen)}"
        )
    return pairs


def _validate_graphic(spec: GraphicSpec, n: int) -> None:
    if spec.vertices < 1:
        raise InvalidSpecError(f"graph needs at least one vertex, got {spec.vertices}")
    if len(spec.edges) != n:
        raise InvalidSpecError(
            f"graphic spec has {len(spec.edges)} edges but ground set size is {n}"
        )
    for i, (u, v) in enumerate(spec.edges):
        if not (0 <= u < spec.vertices and 0 <= v < spec.vertices):
            raise InvalidSpecError(f"edge {i} = ({u}, {v}) references a missing vertex")


def _graphic_test(spec: GraphicSpec) -> Callable[[int], bool]:
    edges = spec.edges
    vertices = spec.vertices

    def test(subset: int) -> bool:
        parent = list(range(vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        rest = subset
        while rest:
            low = rest & -rest
            rest ^= low
            u, v = edges[low.bit_length() - 1]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    return test


def _validate_explicit(spec: ExplicitSpec, n: int) -> None:
    fam = spec.independent
    limit = 1 << n
    for m in fam:
        if not 0 <= m < limit:
            raise InvalidSpecError(f"independent-set mask {m} out of range for n={n}")
    if 0 not in fam:
        raise InvalidSpecError("explicit family must contain the empty set")
    for big in sorted(fam):
        if big == 0:
            continue
        sub = (big - 1) & big
        while True:
            if sub not in fam:
                raise InvalidSpecError(
                    f"hereditary violation: subset {elements(sub)} of "
                    f"{elements(big)} is missing"
                )
            if sub == 0:
                break
            sub = (sub - 1) & big
    members = sorted(fam)
    for s1 in members:
        c1 = s1.bit_count()
        for s2 in members:
            if s2.bit_count() <= c1:
                continue
            rest = s2 & ~s1
            found = False
            while rest:
                low = rest & -rest
                rest ^= low
                if s1 | low in fam:
                    found = True
                    break
            if not found:
                raise InvalidSpecError(
                    f"exchange violation: no element of {elements(s2)} "
                    f"extends {elements(s1)}"
                )


def build_matroid(spec: MatroidSpec, n: int) -> Matroid:
    """Construct the independence oracle for a spec, validating it eagerly.

    Uniform/partition/graphic kinds are correct by construction; explicit
    families are checked against all three axioms here and reject bad input
    with a witness. A truncation bound above the inner rank is allowed and
    simply clamps.
    """
    if not 1 <= n:
        raise InvalidSpecError(f"ground set size must be positive, got {n}")
    if isinstance(spec, UniformSpec):
        if spec.rank < 0:
            raise InvalidSpecError(f"uniform rank must be >= 0, got {spec.rank}")
        k = spec.rank
        return Matroid(n, spec, lambda m, _k=k: m.bit_count() <= _k)
    if isinstance(spec, PartitionSpec):
        pairs = _validate_partition(spec, n)

        def test(m: int, _pairs=tuple(pairs)) -> bool:
            for mask, cap in _pairs:
                if (m & mask).bit_count() > cap:
                    return False
            return True

        return Matroid(n, spec, test)
    if isinstance(spec, GraphicSpec):
        _validate_graphic(spec, n)
        return Matroid(n, spec, _graphic_test(spec))
    if isinstance(spec, ExplicitSpec):
        _validate_explicit(spec, n)
        return Matroid(n, spec, spec.independent.__contains__)
    if isinstance(spec, DualSpec):
        return build_matroid(spec.of, n).dual()
    if isinstance(spec, TruncateSpec):
        return build_matroid(spec.of, n).truncate(spec.q)
    raise InvalidSpecError(f"unknown matroid spec {spec!r}")
