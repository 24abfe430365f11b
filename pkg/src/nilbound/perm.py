"""Exact arithmetic for finite permutation groups.

Points are 0-indexed and actions are on the right: ``g(point)`` is the image
of a point and ``a * b`` means "apply a, then b".  Group order and membership
come from a deterministic base/strong-generating-set chain that is built
once, on first demand, and never mutated afterwards, so groups are safe to
share across threads.
"""

from __future__ import annotations

import itertools
import json
import threading
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GroupError(Exception):
    """A group-theoretic precondition failed."""


class NotNilpotentError(GroupError):
    """Raised when an operation requires a nilpotent group."""


class GuardExceeded(GroupError):
    """A size guard or search budget was exceeded."""


class Permutation:
    """A bijection of {0, ..., n-1} stored as an image array."""

    __slots__ = ("_images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        n = len(images)
        seen = [False] * n
        for x in images:
            if not isinstance(x, int) or not 0 <= x < n or seen[x]:
                raise ValueError(f"not a permutation of 0..{n - 1}: {images!r}")
            seen[x] = True
        self._images = images

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> Permutation:
        """Build a permutation from disjoint cycles; omitted points are fixed."""
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return cls(images)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def __call__(self, point: int) -> int:
        return self._images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        # apply self first, then other
        if len(self._images) != len(other._images):
            raise ValueError("degree mismatch")
        o = other._images
        return _raw(tuple(o[x] for x in self._images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self._images)
        for i, x in enumerate(self._images):
            inv[x] = i
        return _raw(tuple(inv))

    def __pow__(self, n: int) -> Permutation:
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self, g: Permutation) -> Permutation:
        """Return g^-1 * self * g."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its minimum."""
        seen = set()
        out = []
        for i in range(len(self._images)):
            if i in seen or self._images[i] == i:
                continue
            cycle = [i]
            j = self._images[i]
            while j != i:
                seen.add(j)
                cycle.append(j)
                j = self._images[j]
            out.append(tuple(cycle))
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __lt__(self, other: Permutation) -> bool:
        return self._images < other._images

    def __repr__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return f"Permutation.identity({self.degree})"
        text = "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
        return f"Permutation[{self.degree}: {text}]"


def _raw(images: tuple[int, ...]) -> Permutation:
    """Wrap an image tuple that is already known to be a bijection."""
    p = Permutation.__new__(Permutation)
    p._images = images
    return p


def commutator(x: Permutation, y: Permutation) -> Permutation:
    """[x, y] = x^-1 y^-1 x y."""
    return x.inverse() * y.inverse() * x * y


class _Level:
    """One level of a stabilizer chain: a base point, the strong generators
    that move it, and a transversal mapping each orbit point to a coset
    representative u with point_base^u = point."""

    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int, identity: Permutation):
        self.point = point
        self.gens: list[Permutation] = []
        self.transversal: dict[int, Permutation] = {point: identity}


def _build_chain(
    degree: int, generators: Iterable[Permutation], base_prefix: Sequence[int] = ()
) -> list[_Level]:
    """Deterministic Schreier-Sims.

    Returns the stabilizer chain as a list of levels.  A strong generator is
    stored at the first level whose base point it moves; the group at level i
    is generated by everything stored at levels >= i.  Levels are verified
    bottom-up: every Schreier generator of level i must sift to the identity
    through the deeper levels, and any non-identity residue becomes a new
    strong generator, after which verification restarts at the residue's
    home level.
    """
    identity = Permutation.identity(degree)
    levels = [_Level(b, identity) for b in base_prefix]

    def level_gens(i: int) -> list[Permutation]:
        return [g for level in levels[i:] for g in level.gens]

    def place(g: Permutation) -> int:
        """Store g at its home level, extending the base when g fixes every
        current base point."""
        for i, level in enumerate(levels):
            if g.images[level.point] != level.point:
                level.gens.append(g)
                return i
        point = min(p for p in range(degree) if g.images[p] != p)
        levels.append(_Level(point, identity))
        levels[-1].gens.append(g)
        return len(levels) - 1

    def rebuild_transversal(i: int) -> None:
        level = levels[i]
        level.transversal = {level.point: identity}
        frontier = [level.point]
        gens = level_gens(i)
        while frontier:
            x = frontier.pop()
            u = level.transversal[x]
            for s in gens:
                y = s.images[x]
                if y not in level.transversal:
                    level.transversal[y] = u * s
                    frontier.append(y)

    def strip(h: Permutation, start: int) -> Permutation:
        for j in range(start, len(levels)):
            level = levels[j]
            x = h.images[level.point]
            if x not in level.transversal:
                return h
            h = h * level.transversal[x].inverse()
            if h.is_identity():
                return h
        return h

    for g in generators:
        if not g.is_identity():
            place(g)
    for i in range(len(levels)):
        rebuild_transversal(i)

    i = len(levels) - 1
    while i >= 0:
        level = levels[i]
        gens = level_gens(i)
        residue_home = None
        for x in list(level.transversal):
            u = level.transversal[x]
            for s in gens:
                y = s.images[x]
                schreier = u * s * level.transversal[y].inverse()
                if schreier.is_identity():
                    continue
                residue = strip(schreier, i + 1)
                if not residue.is_identity():
                    # residue fixes the base points of levels 0..i, so its
                    # home is at least i + 1
                    residue_home = place(residue)
                    break
            if residue_home is not None:
                break
        if residue_home is None:
            i -= 1
        else:
            for j in range(residue_home + 1):
                rebuild_transversal(j)
            i = residue_home
    return levels


class PermGroup:
    """A permutation group given by generators of one common degree."""

    def __init__(self, degree: int, generators: Iterable[Permutation] = ()):
        generators = tuple(generators)
        for g in generators:
            if g.degree != degree:
                raise ValueError("degree mismatch among generators")
        self._degree = degree
        self._generators = generators
        self._chain: list[_Level] | None = None
        self._lock = threading.Lock()

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self._generators

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self._degree)

    def _levels(self) -> list[_Level]:
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = _build_chain(self._degree, self._generators)
        return self._chain

    def order(self) -> int:
        n = 1
        for level in self._levels():
            n *= len(level.transversal)
        return n

    def __contains__(self, g: Permutation) -> bool:
        if not isinstance(g, Permutation) or g.degree != self._degree:
            return False
        h = g
        for level in self._levels():
            x = h.images[level.point]
            if x not in level.transversal:
                return False
            h = h * level.transversal[x].inverse()
        return h.is_identity()

    def contains_group(self, other: PermGroup) -> bool:
        """Whether every generator of other is a member (other <= self)."""
        return other.degree == self._degree and all(
            g in self for g in other.generators
        )

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self._generators)

    def is_abelian(self) -> bool:
        gens = self._generators
        return all(
            (a * b) == (b * a) for a, b in itertools.combinations(gens, 2)
        )

    def orbit(self, point: int) -> list[int]:
        """The orbit of point, sorted ascending."""
        if not 0 <= point < self._degree:
            raise ValueError(f"point {point} out of range for degree {self._degree}")
        seen = {point}
        frontier = [point]
        while frontier:
            x = frontier.pop()
            for g in self._generators:
                y = g.images[x]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return sorted(seen)

    def is_transitive(self) -> bool:
        return self._degree == 1 or len(self.orbit(0)) == self._degree

    def is_regular(self) -> bool:
        return self.is_transitive() and self.order() == self._degree

    def point_stabilizer(self, point: int) -> PermGroup:
        """The subgroup fixing point."""
        if not 0 <= point < self._degree:
            raise ValueError(f"point {point} out of range for degree {self._degree}")
        levels = _build_chain(self._degree, self._generators, base_prefix=(point,))
        gens: list[Permutation] = []
        for level in levels[1:]:
            gens.extend(level.gens)
        return PermGroup(self._degree, gens)

    def elements(self, limit: int = 1_000_000) -> list[Permutation]:
        """All group elements; raises GuardExceeded when order > limit."""
        if self.order() > limit:
            raise GuardExceeded(
                f"group of order {self.order()} exceeds element limit {limit}"
            )
        levels = self._levels()

        def products(i: int) -> Iterator[Permutation]:
            if i == len(levels):
                yield self.identity
                return
            for rest in products(i + 1):
                for u in levels[i].transversal.values():
                    yield rest * u

        return list(products(0))

    def normal_closure(self, seeds: Sequence[Permutation]) -> PermGroup:
        """Smallest normal subgroup of self containing the seeds."""
        for s in seeds:
            if s not in self:
                raise GroupError("seed is not a member of the group")
        gens = [s for s in seeds if not s.is_identity()]
        closure = PermGroup(self._degree, gens)
        changed = True
        while changed:
            changed = False
            for h in list(gens):
                for g in self._generators:
                    conj = h.conjugate(g)
                    if conj not in closure:
                        gens.append(conj)
                        closure = PermGroup(self._degree, gens)
                        changed = True
        return closure

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "degree": self._degree,
            "generators": [list(g.images) for g in self._generators],
        }

    @classmethod
    def from_json(cls, data: dict) -> PermGroup:
        degree = data["degree"]
        if not isinstance(degree, int) or degree < 1:
            raise ValueError("degree must be a positive integer")
        gens = []
        for i, images in enumerate(data.get("generators", [])):
            if len(images) != degree:
                raise ValueError(f"generators[{i}]: degree mismatch")
            try:
                gens.append(Permutation(images))
            except ValueError as exc:
                raise ValueError(f"generators[{i}]: {exc}") from exc
        return cls(degree, gens)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self._degree}, ngens={len(self._generators)})"


@dataclass(frozen=True)
class CentralSeries:
    """The descending commutator series G = term[0] >= term[1] >= ...

    nilpotency_class is None when the series stalls above the trivial group.
    """

    terms: tuple[PermGroup, ...]
    nilpotency_class: int | None

    @property
    def is_nilpotent(self) -> bool:
        return self.nilpotency_class is not None

    def order_profile(self) -> list[int]:
        return [t.order() for t in self.terms]


def commutator_subgroup(G: PermGroup, A: PermGroup, B: PermGroup) -> PermGroup:
    """The subgroup generated by all commutators [a, b] with a in A, b in B.

    Computed as the normal closure, inside <A, B>, of the commutators of
    generator pairs; this equals the full commutator subgroup whenever one
    of A, B is normal in <A, B>, which covers every use in this package.
    """
    for g in A.generators:
        if g not in G:
            raise GroupError("A is not a subgroup of G")
    for g in B.generators:
        if g not in G:
            raise GroupError("B is not a subgroup of G")
    joint = PermGroup(G.degree, A.generators + B.generators)
    seeds = [
        commutator(a, b)
        for a in A.generators
        for b in B.generators
    ]
    return joint.normal_closure([s for s in seeds if not s.is_identity()])


def lower_central_series(G: PermGroup) -> CentralSeries:
    """Iterate term[i+1] = [term[i], G] until the series stabilizes."""
    terms = [G]
    while True:
        current = terms[-1]
        if current.order() == 1:
            break
        nxt = commutator_subgroup(G, current, G)
        if nxt.order() == current.order():
            # stalled above the trivial group
            return CentralSeries(tuple(terms), None)
        terms.append(nxt)
    nontrivial = sum(1 for t in terms if t.order() > 1)
    return CentralSeries(tuple(terms), nontrivial)


def nilpotency_class(G: PermGroup) -> int:
    """Least c with the (c+1)-st commutator series term trivial; 0 for the
    trivial group."""
    series = lower_central_series(G)
    if series.nilpotency_class is None:
        raise NotNilpotentError("not nilpotent")
    return series.nilpotency_class


def center(G: PermGroup, limit: int = 1_000_000) -> PermGroup:
    """The subgroup of elements commuting with every generator.

    Uses a full element scan, so the group order must stay within limit.
    """
    if G.order() > limit:
        raise GuardExceeded("too large for center scan")
    central = [
        z
        for z in G.elements(limit)
        if not z.is_identity() and all(z * g == g * z for g in G.generators)
    ]
    return PermGroup(G.degree, central)
