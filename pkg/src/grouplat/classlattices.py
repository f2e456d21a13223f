"""Residual and radical, chief-factor predicates, hypercentral containment,
and the class-driven subgroup lattices they induce."""

from __future__ import annotations

from dataclasses import dataclass

from .classes import GroupClass, get_class
from .errors import NotContained, NotNormal
from .group import Group
from .lattice import enumerate_subgroups
from .series import (
    ChiefFactor,
    NormalSection,
    chief_series_between,
    is_central_factor,
    is_f_central,
    is_in_class,
    normal_subgroups,
    section_as_group,
)
from .subgroups import (
    SubgroupSet,
    close_indices,
    core,
    full_subgroup,
    mask_indices,
    normal_closure,
    quotient,
    require_subgroup_of,
)

CENTRAL = "central"
F_CENTRAL = "f-central"
F_MEMBER = "member"


@dataclass(frozen=True)
class DeltaSpec:
    """A conjugation-closed predicate on chief factors of one parent group.

    kind 'central': the parent centralizes the factor.
    kind 'f-central': the factor's semidirect product with the parent modulo
    its centralizer lies in ``group_class``.
    kind 'member': the factor itself, as a group, lies in ``group_class``.
    """

    parent: Group
    kind: str
    group_class: GroupClass | None = None

    def __post_init__(self):
        if self.kind not in (CENTRAL, F_CENTRAL, F_MEMBER):
            raise ValueError(f"unknown delta kind {self.kind!r}")
        if self.kind != CENTRAL and self.group_class is None:
            raise ValueError(f"delta kind {self.kind!r} needs a group class")

    @property
    def label(self) -> str:
        if self.kind == CENTRAL:
            return "central"
        return f"{self.kind}:{self.group_class.id}"

    def contains(self, factor: ChiefFactor) -> bool:
        if factor.parent is not self.parent:
            raise ValueError("factor does not belong to this delta's parent")
        if self.kind == CENTRAL:
            return is_central_factor(self.parent, factor)
        if self.kind == F_CENTRAL:
            return is_f_central(self.parent, factor, self.group_class)
        factor_group = section_as_group(
            self.parent, factor.section.lower, factor.section.upper
        )
        return is_in_class(factor_group, self.group_class)


def central_delta(group: Group) -> DeltaSpec:
    return DeltaSpec(group, CENTRAL)


def f_central_delta(group: Group, spec: GroupClass | str) -> DeltaSpec:
    return DeltaSpec(group, F_CENTRAL, get_class(spec))


def member_delta(group: Group, spec: GroupClass | str) -> DeltaSpec:
    return DeltaSpec(group, F_MEMBER, get_class(spec))


def z_delta_contains(group: Group, section: NormalSection, delta: DeltaSpec) -> bool:
    """Hypercentral-style containment: the section's top lies in the delta
    hypercenter over its bottom, i.e. either the section is degenerate or
    every chief factor of the group between its ends satisfies the delta."""
    if section.parent is not group or delta.parent is not group:
        raise ValueError("section and delta must belong to the given group")
    if section.is_degenerate():
        return True
    key = ("z_delta", section.lower.mask, section.upper.mask, delta.label)

    def build():
        factors = chief_series_between(group, section.lower, section.upper)
        return all(delta.contains(f) for f in factors)

    return group.memo(key, build)


def residual(group: Group, spec: GroupClass | str) -> SubgroupSet:
    """Smallest normal subgroup whose quotient lies in the class."""
    cls = get_class(spec)

    def build():
        mask = group.full_mask()
        for n in normal_subgroups(group):
            if quotient_in_class(group, n, cls):
                mask &= n.mask
        result = SubgroupSet(group, mask)
        if cls.formation:
            assert quotient_in_class(group, result, cls)
        return result

    return group.memo(("residual", cls.id), build)


def radical(group: Group, spec: GroupClass | str) -> SubgroupSet:
    """Join (= product) of all normal subgroups lying in the class."""
    cls = get_class(spec)

    def build():
        seeds: list[int] = []
        for n in normal_subgroups(group):
            if subgroup_in_class(group, n, cls):
                seeds.extend(mask_indices(n.mask))
        mask = close_indices(group, seeds)
        result = SubgroupSet(group, mask)
        if cls.fitting:
            assert subgroup_in_class(group, result, cls)
        return result

    return group.memo(("radical", cls.id), build)


def quotient_in_class(group: Group, normal: SubgroupSet, cls: GroupClass) -> bool:
    def build():
        quot, _ = quotient(group, normal)
        return is_in_class(quot, cls)

    return group.memo(("quotient_in_class", normal.mask, cls.id), build)


def subgroup_in_class(group: Group, sub: SubgroupSet, cls: GroupClass) -> bool:
    def build():
        from .subgroups import subgroup_as_group

        sub_group, _, _ = subgroup_as_group(group, sub)
        return is_in_class(sub_group, cls)

    return group.memo(("subgroup_in_class", sub.mask, cls.id), build)


def closure_core_section(group: Group, sub: SubgroupSet) -> NormalSection:
    """The normal section between the core and the normal closure of a subgroup."""
    require_subgroup_of(group, sub)

    def build():
        return NormalSection(group, core(group, sub), normal_closure(group, sub))

    return group.memo(("closure_core_section", sub.mask), build)


def in_class_lattice(group: Group, sub: SubgroupSet, spec: GroupClass | str) -> bool:
    """Membership in the class lattice: the section between the subgroup's
    core and its normal closure lies in the class (as a group)."""
    cls = get_class(spec)
    section = closure_core_section(group, sub)
    key = ("in_class_lattice", section.lower.mask, section.upper.mask, cls.id)

    def build():
        factor_group = section_as_group(group, section.lower, section.upper)
        return is_in_class(factor_group, cls)

    return group.memo(key, build)


def in_delta_lattice(group: Group, sub: SubgroupSet, delta: DeltaSpec) -> bool:
    """Membership in the delta lattice: the section between the subgroup's
    core and its normal closure sits inside the delta hypercenter."""
    return z_delta_contains(group, closure_core_section(group, sub), delta)


def lattice_members(group: Group, selector: "GroupClass | str | DeltaSpec") -> list[SubgroupSet]:
    """All subgroups in the class lattice (GroupClass selector) or the delta
    lattice (DeltaSpec selector).  The whole group is always a member."""
    if isinstance(selector, DeltaSpec):
        key = ("delta_lattice_members", selector.label)

        def build():
            lat = enumerate_subgroups(group)
            return tuple(
                s for s in lat.members if in_delta_lattice(group, s, selector)
            )

    else:
        cls = get_class(selector)
        key = ("class_lattice_members", cls.id)

        def build():
            lat = enumerate_subgroups(group)
            return tuple(
                s for s in lat.members if in_class_lattice(group, s, cls)
            )

    members = list(group.memo(key, build))
    assert any(s.is_full() for s in members)
    return members


def is_closed_sublattice(
    group: Group, members: list[SubgroupSet], mode: str = "both"
) -> tuple[bool, tuple[SubgroupSet, SubgroupSet, str] | None]:
    """Check closure of a subgroup family under meet and/or join.

    Returns (True, None) when closed, else (False, (a, b, op)) with the first
    witnessing pair in canonical order.
    """
    if mode not in ("meet", "join", "both"):
        raise ValueError(f"unknown closure mode {mode!r}")
    for s in members:
        require_subgroup_of(group, s)
    masks = {s.mask for s in members}
    ordered = sorted(members, key=lambda s: (s.order, s.mask))
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if mode in ("meet", "both"):
                if a.mask & b.mask not in masks:
                    return False, (a, b, "meet")
            if mode in ("join", "both"):
                joined = close_indices(
                    group, list(mask_indices(a.mask | b.mask))
                )
                if joined not in masks:
                    return False, (a, b, "join")
    return True, None


def class_vs_member_divergence(
    group: Group, spec: GroupClass | str
) -> tuple[list[SubgroupSet], list[SubgroupSet]]:
    """Diagnostic for the two readings of the class lattice.

    The primary reading takes subgroups whose closure/core section lies in
    the class; the alternative takes subgroups all of whose chief factors
    between core and closure lie in the class.  Returns (only-primary,
    only-alternative)."""
    cls = get_class(spec)
    primary = {s.mask for s in lattice_members(group, cls)}
    alt = {s.mask for s in lattice_members(group, member_delta(group, cls))}
    lat = enumerate_subgroups(group)
    only_primary = [s for s in lat.members if s.mask in primary - alt]
    only_alt = [s for s in lat.members if s.mask in alt - primary]
    return only_primary, only_alt
