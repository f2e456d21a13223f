"""Subgroups as membership masks over the parent group's element indices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ForeignSubgroup, NotContained, NotNormal, ParentMismatch
from .group import Group, Morphism, quotient_by_mask
from .perm import Permutation


@dataclass(frozen=True)
class SubgroupSet:
    """A subgroup of ``parent`` identified by an element-index bitmask."""

    parent: Group
    mask: int

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    def indices(self) -> Iterator[int]:
        return mask_indices(self.mask)

    def permutations(self) -> list[Permutation]:
        return [self.parent.elements[i] for i in self.indices()]

    def contains(self, other: "SubgroupSet") -> bool:
        _same_parent(self, other)
        return other.mask & ~self.mask == 0

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_full(self) -> bool:
        return self.order == self.parent.order

    def __repr__(self) -> str:
        return f"<subgroup of order {self.order}, mask 0x{self.mask:x}>"


def mask_indices(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _same_parent(a: SubgroupSet, b: SubgroupSet) -> None:
    if a.parent is not b.parent:
        raise ParentMismatch("subgroups belong to different parent groups")


def require_subgroup_of(group: Group, sub: SubgroupSet) -> None:
    if sub.parent is not group:
        raise ForeignSubgroup("subgroup does not belong to this group")


def trivial_subgroup(group: Group) -> SubgroupSet:
    return SubgroupSet(group, 1 << group.identity_index)


def full_subgroup(group: Group) -> SubgroupSet:
    return SubgroupSet(group, group.full_mask())


def close_indices(group: Group, seeds: Iterable[int]) -> int:
    """Mask of the subgroup generated by the seed element indices."""
    gens = [s for s in dict.fromkeys(seeds) if s != group.identity_index]
    mask = 1 << group.identity_index
    elems = [group.identity_index]
    for x in elems:
        for s in gens:
            y = group.mul(x, s)
            if not mask >> y & 1:
                mask |= 1 << y
                elems.append(y)
    return mask


def subgroup_generated(group: Group, seeds: Iterable[int]) -> SubgroupSet:
    return SubgroupSet(group, close_indices(group, seeds))


def subgroup_from_permutations(group: Group, perms: Iterable[Permutation]) -> SubgroupSet:
    idxs = []
    for p in perms:
        i = group.index.get(p)
        if i is None:
            raise ForeignSubgroup(f"{p!r} is not an element of the group")
        idxs.append(i)
    return subgroup_generated(group, idxs)


def conjugate_mask(group: Group, mask: int, g: int) -> int:
    out = 0
    for i in mask_indices(mask):
        out |= 1 << group.conj(i, g)
    return out


def is_normal_mask(group: Group, mask: int) -> bool:
    return all(conjugate_mask(group, mask, g) == mask for g in group.gen_indices)


def is_normal(group: Group, sub: SubgroupSet) -> bool:
    require_subgroup_of(group, sub)
    return is_normal_mask(group, sub.mask)


def product_set(group: Group, a: SubgroupSet, b: SubgroupSet) -> int:
    """The complex product {xy : x in A, y in B} as an element mask.

    AB is a subgroup iff AB == BA; either way |AB| * |A n B| == |A| * |B|.
    """
    require_subgroup_of(group, a)
    require_subgroup_of(group, b)
    out = 0
    b_idxs = list(b.indices())
    for i in a.indices():
        for j in b_idxs:
            out |= 1 << group.mul(i, j)
    assert out.bit_count() * (a.mask & b.mask).bit_count() == a.order * b.order
    return out


class _IncrementalClosure:
    """Subgroup closure that accepts extra generators mid-flight.

    Each (element, generator) pair is multiplied exactly once, so the total
    cost stays |result| * |generators| no matter how generators arrive.
    """

    def __init__(self, group: Group):
        self.group = group
        self.mask = 1 << group.identity_index
        self.elems = [group.identity_index]
        self.applied = [0]
        self.gens: list[int] = []

    def add_generator(self, idx: int) -> None:
        if idx == self.group.identity_index or idx in self.gens:
            return
        self.gens.append(idx)
        self._run()

    def _run(self) -> None:
        group = self.group
        i = 0
        while i < len(self.elems):
            x = self.elems[i]
            start = self.applied[i]
            if start < len(self.gens):
                for g in self.gens[start:]:
                    y = group.mul(x, g)
                    if not self.mask >> y & 1:
                        self.mask |= 1 << y
                        self.elems.append(y)
                        self.applied.append(0)
                self.applied[i] = len(self.gens)
            i += 1


def normal_closure_with_gens(
    group: Group,
    seed_idxs: Sequence[int],
    ambient_gens: Sequence[int],
) -> tuple[int, list[int]]:
    """Smallest subgroup containing the seeds that is invariant under
    conjugation by the ambient generators; also returns a small generating
    set for it (the seeds plus the conjugates that had to be adjoined)."""
    closure = _IncrementalClosure(group)
    for s in seed_idxs:
        closure.add_generator(s)
    pending = list(closure.gens)
    while pending:
        s = pending.pop()
        for g in ambient_gens:
            t = group.conj(s, g)
            if not closure.mask >> t & 1:
                closure.add_generator(t)
                pending.append(t)
    return closure.mask, list(closure.gens)


def normal_closure(group: Group, sub: SubgroupSet) -> SubgroupSet:
    """Smallest normal subgroup of the group containing the subgroup."""
    require_subgroup_of(group, sub)
    mask, _ = normal_closure_with_gens(group, list(sub.indices()), group.gen_indices)
    assert mask & sub.mask == sub.mask
    assert is_normal_mask(group, mask)
    return SubgroupSet(group, mask)


def core(group: Group, sub: SubgroupSet) -> SubgroupSet:
    """Largest normal subgroup of the group inside the subgroup:
    the intersection of all conjugates."""
    require_subgroup_of(group, sub)
    out = sub.mask
    seen = {sub.mask}
    frontier = [sub.mask]
    for m in frontier:
        for g in group.gen_indices:
            c = conjugate_mask(group, m, g)
            if c not in seen:
                seen.add(c)
                frontier.append(c)
                out &= c
    assert is_normal_mask(group, out)
    return SubgroupSet(group, out)


def centralizer(group: Group, sub: SubgroupSet) -> SubgroupSet:
    require_subgroup_of(group, sub)
    targets = list(sub.indices())
    out = 0
    for g in range(group.order):
        if all(group.mul(g, t) == group.mul(t, g) for t in targets):
            out |= 1 << g
    return SubgroupSet(group, out)


def normalizer(group: Group, sub: SubgroupSet) -> SubgroupSet:
    require_subgroup_of(group, sub)
    out = 0
    for g in range(group.order):
        if conjugate_mask(group, sub.mask, g) == sub.mask:
            out |= 1 << g
    return SubgroupSet(group, out)


def quotient(group: Group, normal: SubgroupSet, *, name: str | None = None):
    """Quotient by a normal subgroup, realized by the regular action on
    cosets (degree = index), with the projection morphism."""
    require_subgroup_of(group, normal)
    key = ("quotient", normal.mask)

    def build():
        try:
            return quotient_by_mask(group, normal.mask, name=name)
        except NotNormal:
            raise NotNormal(
                f"subgroup 0x{normal.mask:x} is not normal in the group"
            ) from None

    return group.memo(key, build)


def subgroup_as_group(group: Group, sub: SubgroupSet):
    """Realize a subgroup as its own Group (same degree).

    Returns (subgroup_group, to_sub, to_parent): index maps in both
    directions between the parent's and the subgroup's element numbering.
    """
    require_subgroup_of(group, sub)

    def build():
        perms = [group.elements[i] for i in sub.indices()]
        gens = perms if len(perms) <= 16 else None
        if gens is None:
            # keep generator lists short for big subgroups
            picked: list[int] = []
            mask = 1 << group.identity_index
            for i in sub.indices():
                if mask >> i & 1:
                    continue
                picked.append(i)
                mask = close_indices(group, picked)
                if mask == sub.mask:
                    break
            gens = [group.elements[i] for i in picked]
        sub_group = Group(group.degree, gens or [Permutation.identity(group.degree)], perms)
        to_parent = tuple(group.index[p] for p in sub_group.elements)
        to_sub = {p: i for i, p in enumerate(to_parent)}
        return sub_group, to_sub, to_parent

    return group.memo(("as_group", sub.mask), build)


def mask_to_subgroup_of(sub_group: Group, to_sub: dict, mask: int) -> SubgroupSet:
    """Translate a parent-side mask into the subgroup-as-group numbering."""
    out = 0
    for i in mask_indices(mask):
        out |= 1 << to_sub[i]
    return SubgroupSet(sub_group, out)


def meet_join(a: SubgroupSet, b: SubgroupSet) -> tuple[SubgroupSet, SubgroupSet]:
    """Lattice meet (intersection) and join (generated subgroup)."""
    _same_parent(a, b)
    parent = a.parent
    meet = SubgroupSet(parent, a.mask & b.mask)
    join_mask = close_indices(parent, list(mask_indices(a.mask | b.mask)))
    return meet, SubgroupSet(parent, join_mask)


def require_normal_pair(group: Group, lower: SubgroupSet, upper: SubgroupSet) -> None:
    require_subgroup_of(group, lower)
    require_subgroup_of(group, upper)
    if lower.mask & ~upper.mask:
        raise NotContained("lower subgroup is not contained in the upper one")
    if not is_normal_mask(group, lower.mask):
        raise NotNormal("lower subgroup is not normal")
    if not is_normal_mask(group, upper.mask):
        raise NotNormal("upper subgroup is not normal")
