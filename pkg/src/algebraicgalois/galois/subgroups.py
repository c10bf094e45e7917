# src/algebraicgalois/galois/subgroups.py
"""
Finite group theory on the multiplication table of an ambient field.

Groups here have at most a couple dozen elements, so everything is brute force
over index sets.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .ambient import AmbientGaloisField

logger = logging.getLogger(__name__)


def closure(ambient: AmbientGaloisField, generators: Iterable[int]) -> Tuple[int, ...]:
    """Sorted members of the subgroup generated by ``generators``."""
    members = {ambient.identity_index}
    frontier = list(set(generators))
    gens = list(frontier)
    members.update(frontier)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = ambient.table[a][g]
                if c not in members:
                    members.add(c)
                    nxt.append(c)
        frontier = nxt
    return tuple(sorted(members))


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup of Gal(N/Q), stored as the sorted set of automorphism indices."""

    ambient: AmbientGaloisField
    members: Tuple[int, ...]

    @classmethod
    def generated(cls, ambient: AmbientGaloisField, generators: Iterable[int]) -> "Subgroup":
        return cls(ambient, closure(ambient, generators))

    @classmethod
    def trivial(cls, ambient: AmbientGaloisField) -> "Subgroup":
        return cls(ambient, (ambient.identity_index,))

    @classmethod
    def whole(cls, ambient: AmbientGaloisField) -> "Subgroup":
        return cls(ambient, tuple(range(ambient.order)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.members == other.members and self.ambient == other.ambient

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, members={list(self.members)})"

    def __contains__(self, index: int) -> bool:
        return index in self._member_set

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def _member_set(self) -> FrozenSet[int]:
        return frozenset(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    def index_in(self, other: "Subgroup") -> int:
        return other.order // self.order

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return self._member_set <= other._member_set

    def is_closed(self) -> bool:
        if self.ambient.identity_index not in self:
            return False
        t = self.ambient.table
        return all(t[a][b] in self for a in self.members for b in self.members)

    def is_normal_in(self, other: "Subgroup") -> bool:
        if not self.is_subgroup_of(other):
            return False
        return all(self.ambient.conjugate(g, h) in self for g in other.generators for h in self.generators)

    def is_normal(self) -> bool:
        return self.is_normal_in(Subgroup.whole(self.ambient))

    def conjugate_by(self, g: int) -> "Subgroup":
        return Subgroup(self.ambient, tuple(sorted(self.ambient.conjugate(g, h) for h in self.members)))

    @cached_property
    def generators(self) -> Tuple[int, ...]:
        """A small generating set: greedily add the least element not yet generated."""
        gens: List[int] = []
        current = {self.ambient.identity_index}
        for m in self.members:
            if m not in current:
                gens.append(m)
                current = set(closure(self.ambient, gens))
        return tuple(gens)

    def left_cosets(self, outer: "Subgroup") -> List[Tuple[int, ...]]:
        """Left cosets ``gH`` of this subgroup in ``outer``, ordered by least element."""
        seen = set()
        cosets = []
        t = self.ambient.table
        for g in outer.members:
            if g in seen:
                continue
            coset = tuple(sorted(t[g][h] for h in self.members))
            seen.update(coset)
            cosets.append(coset)
        cosets.sort(key=lambda c: c[0])
        return cosets

    def coset_representatives(self, outer: "Subgroup") -> Tuple[int, ...]:
        return tuple(c[0] for c in self.left_cosets(outer))

    def join(self, other: "Subgroup") -> "Subgroup":
        return Subgroup.generated(self.ambient, self.generators + other.generators)

    def intersection(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.ambient, tuple(sorted(self._member_set & other._member_set)))

    def to_json(self) -> List[int]:
        return list(self.members)


def element_order(ambient: AmbientGaloisField, g: int) -> int:
    k, current = 1, g
    while current != ambient.identity_index:
        current = ambient.table[current][g]
        k += 1
    return k


def cyclic_subgroup(ambient: AmbientGaloisField, g: int) -> Subgroup:
    return Subgroup.generated(ambient, [g])


def all_subgroups(ambient: AmbientGaloisField) -> List[Subgroup]:
    """Every subgroup, sorted by order then members. Joins of cyclic subgroups."""
    found: Dict[Tuple[int, ...], Subgroup] = {}
    for g in range(ambient.order):
        s = cyclic_subgroup(ambient, g)
        found[s.members] = s
    frontier = list(found.values())
    cyclics = list(found.values())
    while frontier:
        nxt = []
        for s in frontier:
            for c in cyclics:
                if c.is_subgroup_of(s):
                    continue
                j = s.join(c)
                if j.members not in found:
                    found[j.members] = j
                    nxt.append(j)
        frontier = nxt
    return sorted(found.values(), key=lambda s: (s.order, s.members))


def normal_subgroups(ambient: AmbientGaloisField) -> List[Subgroup]:
    return [s for s in all_subgroups(ambient) if s.is_normal()]


def conjugacy_classes(ambient: AmbientGaloisField, within: Sequence[int] = None) -> List[Tuple[int, ...]]:
    """Conjugacy classes of the group (or of a subgroup ``within``), ordered by least element."""
    members = list(within) if within is not None else list(range(ambient.order))
    seen = set()
    classes = []
    for h in members:
        if h in seen:
            continue
        cls = tuple(sorted({ambient.conjugate(g, h) for g in members}))
        seen.update(cls)
        classes.append(cls)
    classes.sort(key=lambda c: c[0])
    return classes


def center(ambient: AmbientGaloisField) -> Subgroup:
    t = ambient.table
    members = tuple(z for z in range(ambient.order) if all(t[z][g] == t[g][z] for g in range(ambient.order)))
    return Subgroup(ambient, members)


def is_abelian(ambient: AmbientGaloisField, members: Sequence[int] = None) -> bool:
    members = list(members) if members is not None else list(range(ambient.order))
    t = ambient.table
    return all(t[a][b] == t[b][a] for a in members for b in members)


def root_stabilizer(ambient: AmbientGaloisField, k: int, r: int) -> Subgroup:
    return Subgroup(
        ambient, tuple(i for i in range(ambient.order) if ambient.root_permutations[i][k][r] == r)
    )


def roots_stabilizer(ambient: AmbientGaloisField, poly_indices: Iterable[int]) -> Subgroup:
    """Automorphisms fixing every root of the listed defining polynomials."""
    poly_indices = list(poly_indices)
    members = []
    for i in range(ambient.order):
        perms = ambient.root_permutations[i]
        if all(perms[k][r] == r for k in poly_indices for r in range(len(perms[k]))):
            members.append(i)
    return Subgroup(ambient, tuple(members))
