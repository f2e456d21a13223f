"""Exhaustive subgroup enumeration and the lattice operations on it."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OrderCapExceeded, SubgroupCapExceeded
from .group import Group
from .limits import LATTICE_ORDER_CAP, SUBGROUP_CAP
from .subgroups import (
    SubgroupSet,
    close_indices,
    conjugate_mask,
    full_subgroup,
    is_normal_mask,
    mask_indices,
    require_subgroup_of,
)


class SubgroupLattice:
    """All subgroups of a group, with precomputed containment and lazily
    built meet/join tables.  Lattice identity is the literal element mask."""

    def __init__(self, parent: Group, masks: list[int], gens: dict[int, list[int]]):
        self.parent = parent
        order = [(m.bit_count(), m) for m in masks]
        self.members = tuple(
            SubgroupSet(parent, m) for _, m in sorted(order)
        )
        self.masks = tuple(s.mask for s in self.members)
        self.position = {m: i for i, m in enumerate(self.masks)}
        self._gens = gens
        self._cache: dict = {}

    def __len__(self) -> int:
        return len(self.members)

    def member_for_mask(self, mask: int) -> SubgroupSet:
        return self.members[self.position[mask]]

    def generators_for(self, mask: int) -> list[int]:
        return self._gens[mask]

    def leq(self, i: int, j: int) -> bool:
        return self.masks[i] & ~self.masks[j] == 0

    def _memo(self, key, build):
        try:
            return self._cache[key]
        except KeyError:
            return self._cache.setdefault(key, build())

    @property
    def normal_flags(self) -> tuple[bool, ...]:
        return self._memo(
            "normal_flags",
            lambda: tuple(is_normal_mask(self.parent, m) for m in self.masks),
        )

    @property
    def meet_table(self) -> list[list[int]]:
        def build():
            n = len(self.members)
            pos = self.position
            masks = self.masks
            return [
                [pos[masks[i] & masks[j]] for j in range(n)] for i in range(n)
            ]

        return self._memo("meet_table", build)

    @property
    def join_table(self) -> list[list[int]]:
        def build():
            n = len(self.members)
            pos = self.position
            table = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    if self.leq(i, j):
                        k = j
                    elif self.leq(j, i):
                        k = i
                    else:
                        joined = close_indices(
                            self.parent,
                            self._gens[self.masks[i]] + self._gens[self.masks[j]],
                        )
                        k = pos[joined]
                    table[i][j] = k
                    table[j][i] = k
            return table

        return self._memo("join_table", build)

    def join_mask(self, a: int, b: int) -> int:
        return self.masks[self.join_table[self.position[a]][self.position[b]]]


def enumerate_subgroups(
    group: Group,
    *,
    max_order: int = LATTICE_ORDER_CAP,
    max_subgroups: int = SUBGROUP_CAP,
) -> SubgroupLattice:
    """Every subgroup, found by cyclic extension: seed with the prime-order
    cyclic subgroups and repeatedly join members with cyclic subgroups until
    nothing new appears.  Aborts (typed error) rather than truncating."""
    if group.order > max_order:
        raise OrderCapExceeded(
            f"lattice enumeration capped at order {max_order}, group has {group.order}"
        )

    def build():
        ident = group.identity_index
        trivial = 1 << ident
        cyclic: dict[int, int] = {}
        for e in range(group.order):
            if e == ident:
                continue
            m = group.cyclic_mask(e)
            cyclic.setdefault(m, e)
        orders = group.element_orders

        gens: dict[int, list[int]] = {trivial: []}
        for m, e in cyclic.items():
            gens.setdefault(m, [e])

        known = {trivial}
        queue = [trivial]
        for m, e in cyclic.items():
            if _is_prime(orders[e]) and m not in known:
                known.add(m)
                queue.append(m)
        for h in queue:
            for cm, ce in cyclic.items():
                if cm & ~h == 0:
                    continue
                joined = close_indices(group, gens[h] + [ce])
                if joined not in known:
                    if len(known) >= max_subgroups:
                        raise SubgroupCapExceeded(
                            f"more than {max_subgroups} subgroups"
                        )
                    known.add(joined)
                    gens.setdefault(joined, gens[h] + [ce])
                    queue.append(joined)
        return SubgroupLattice(group, sorted(known), gens)

    return group.memo(("lattice", max_order, max_subgroups), build)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class DistinguishedSubgroups:
    normal: tuple[SubgroupSet, ...]
    minimal_normal: tuple[SubgroupSet, ...]
    maximal: tuple[SubgroupSet, ...]
    frattini: SubgroupSet


def distinguished_subgroups(group: Group) -> DistinguishedSubgroups:
    """Normal, minimal-normal and maximal members plus the Frattini subgroup
    (intersection of the maximal members; the whole group when there is no
    proper maximal subgroup, i.e. only for the trivial group)."""

    def build():
        lat = enumerate_subgroups(group)
        flags = lat.normal_flags
        normal = tuple(s for s, f in zip(lat.members, flags) if f)
        nontrivial = [s for s in normal if not s.is_trivial()]
        minimal_normal = tuple(
            s
            for s in nontrivial
            if not any(t.mask != s.mask and t.mask & ~s.mask == 0 for t in nontrivial)
        )
        proper = [s for s in lat.members if not s.is_full()]
        maximal = tuple(
            s
            for s in proper
            if not any(
                t.mask != s.mask and s.mask & ~t.mask == 0 for t in proper
            )
        )
        if maximal:
            frat = group.full_mask()
            for s in maximal:
                frat &= s.mask
            frattini = SubgroupSet(group, frat)
        else:
            frattini = full_subgroup(group)
        return DistinguishedSubgroups(normal, minimal_normal, maximal, frattini)

    return group.memo("distinguished", build)


def sylow_subgroups(group: Group, p: int) -> list[SubgroupSet]:
    """All Sylow p-subgroups, filtered from the lattice (correct by
    exhaustiveness).  For p not dividing the order this is the trivial
    subgroup, the unique group of order p^0."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")

    def build():
        part = 1
        n = group.order
        while n % p == 0:
            part *= p
            n //= p
        lat = enumerate_subgroups(group)
        sylows = [s for s in lat.members if s.order == part]
        assert len(sylows) % p == 1
        # all Sylow p-subgroups are conjugate: the conjugation orbit of the
        # first one must already reach every one of them
        orbit = {sylows[0].mask}
        frontier = [sylows[0].mask]
        for m in frontier:
            for g in group.gen_indices:
                c = conjugate_mask(group, m, g)
                if c not in orbit:
                    orbit.add(c)
                    frontier.append(c)
        assert orbit == {s.mask for s in sylows}
        return sylows

    return group.memo(("sylow", p), build)


def is_modular_subgroup(group: Group, sub: SubgroupSet) -> bool:
    """Kurosh modular-element test over the full lattice:
    for all X <= Z:  <X, M n Z> == <X, M> n Z, and
    for all Y and Z >= M:  <M, Y n Z> == <M, Y> n Z."""
    require_subgroup_of(group, sub)

    def build():
        lat = enumerate_subgroups(group)
        n = len(lat)
        pos = lat.position[sub.mask]
        join = lat.join_table
        meet = lat.meet_table
        leq_pairs = [
            (x, z) for x in range(n) for z in range(n) if lat.leq(x, z)
        ]
        for x, z in leq_pairs:
            if join[x][meet[pos][z]] != meet[join[x][pos]][z]:
                return False
        above = [z for z in range(n) if lat.leq(pos, z)]
        for y in range(n):
            for z in above:
                if join[pos][meet[y][z]] != meet[join[pos][y]][z]:
                    return False
        return True

    return group.memo(("modular", sub.mask), build)
