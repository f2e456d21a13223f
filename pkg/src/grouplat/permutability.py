"""Permutability predicates: subnormality, S-permutability, quasinormality,
power automorphisms, Hall subgroups and the Sylow permutability condition."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotContained, NotNormal, OrderCapExceeded, SubgroupCapExceeded
from .group import Group
from .lattice import enumerate_subgroups, prime_factors, sylow_subgroups
from .subgroups import (
    SubgroupSet,
    is_normal,
    is_normal_mask,
    mask_indices,
    normal_closure_with_gens,
    product_set,
    quotient,
    require_subgroup_of,
)

T_GROUP = "T"
PT_GROUP = "PT"
PST_GROUP = "PST"
NOT_TPP = "NONE"


@dataclass(frozen=True)
class PermutabilityProfile:
    """How one subgroup sits inside its parent.  Bits requiring the full
    subgroup lattice are None when enumeration is capped out."""

    subject: SubgroupSet
    normal: bool
    subnormal: bool
    s_permutable: bool | None
    quasinormal: bool | None
    modular: bool | None

    def __post_init__(self):
        # the implication chain normal => quasinormal => s-permutable,
        # and quasinormal => modular, must hold whenever bits are decided
        if self.normal:
            assert self.subnormal
            if self.quasinormal is not None:
                assert self.quasinormal
        if self.quasinormal:
            assert self.s_permutable
            if self.modular is not None:
                assert self.modular


def is_subnormal(group: Group, sub: SubgroupSet) -> bool:
    """Descend by iterated normal closures: G >= A^G >= A^(A^G) >= ...;
    the subgroup is subnormal exactly when the chain reaches it."""
    require_subgroup_of(group, sub)

    def build():
        seeds = list(mask_indices(sub.mask))
        current_mask = group.full_mask()
        current_gens = list(group.gen_indices)
        while True:
            closed, gens = normal_closure_with_gens(group, seeds, current_gens)
            if closed == sub.mask:
                return True
            if closed == current_mask:
                return False
            current_mask = closed
            current_gens = gens

    return group.memo(("subnormal", sub.mask), build)


def is_s_permutable(group: Group, sub: SubgroupSet) -> bool:
    """Permutes with every Sylow subgroup of every prime (all conjugates,
    the literal definition)."""
    require_subgroup_of(group, sub)

    def build():
        for p in prime_factors(group.order):
            for syl in sylow_subgroups(group, p):
                if product_set(group, sub, syl) != product_set(group, syl, sub):
                    return False
        return True

    return group.memo(("s_permutable", sub.mask), build)


def is_quasinormal(group: Group, sub: SubgroupSet) -> bool:
    """Permutes with every subgroup."""
    require_subgroup_of(group, sub)

    def build():
        lat = enumerate_subgroups(group)
        for other in lat.members:
            if other.mask == sub.mask or sub.mask & ~other.mask == 0:
                continue
            if product_set(group, sub, other) != product_set(group, other, sub):
                return False
        return True

    return group.memo(("quasinormal", sub.mask), build)


def permutability_profile(group: Group, sub: SubgroupSet) -> PermutabilityProfile:
    """All five permutability bits for one subgroup.  The lattice-dependent
    bits degrade to None (undecided) instead of failing when the lattice
    caps are exceeded."""
    from .lattice import is_modular_subgroup

    require_subgroup_of(group, sub)
    normal = is_normal(group, sub)
    subnormal = is_subnormal(group, sub)
    try:
        s_perm = is_s_permutable(group, sub)
        quasi = is_quasinormal(group, sub)
        modular = is_modular_subgroup(group, sub)
    except (OrderCapExceeded, SubgroupCapExceeded):
        return PermutabilityProfile(sub, normal, subnormal, None, None, None)
    return PermutabilityProfile(sub, normal, subnormal, s_perm, quasi, modular)


def subnormal_subgroups(group: Group) -> list[SubgroupSet]:
    def build():
        lat = enumerate_subgroups(group)
        return tuple(s for s in lat.members if is_subnormal(group, s))

    return list(group.memo("subnormal_subgroups", build))


def classify_permutability(group: Group) -> str:
    """Strongest of T / PT / PST / NONE, by the definitional quantifier over
    all subnormal subgroups."""

    def build():
        subs = subnormal_subgroups(group)
        all_normal = all(is_normal(group, s) for s in subs)
        all_quasi = all(is_quasinormal(group, s) for s in subs)
        all_sperm = all(is_s_permutable(group, s) for s in subs)
        if all_normal:
            assert all_quasi and all_sperm
            return T_GROUP
        if all_quasi:
            assert all_sperm
            return PT_GROUP
        if all_sperm:
            return PST_GROUP
        return NOT_TPP

    return group.memo("classify", build)


def induces_power_automorphisms(
    group: Group,
    target: SubgroupSet,
    modulo: SubgroupSet | None = None,
) -> bool:
    """Whether conjugation by every group element maps each element of the
    target (taken modulo the optional normal subgroup) into its own cyclic
    subgroup - equivalently, every subgroup of the target (resp. the target
    modulo the given subgroup) is invariant under the whole group."""
    require_subgroup_of(group, target)
    if not is_normal_mask(group, target.mask):
        raise NotNormal("power-automorphism target must be normal")
    if modulo is not None:
        require_subgroup_of(group, modulo)
        if modulo.mask & ~target.mask:
            raise NotContained("modulo subgroup must lie inside the target")
        if not is_normal_mask(group, modulo.mask):
            raise NotNormal("modulo subgroup must be normal")
        quot, proj = quotient(group, modulo)
        image = proj.image_of_mask(target.mask)
        return induces_power_automorphisms(quot, SubgroupSet(quot, image))

    def build():
        for d in mask_indices(target.mask):
            cyc = group.cyclic_mask(d)
            for g in group.gen_indices:
                if not cyc >> group.conj(d, g) & 1:
                    return False
        return True

    return group.memo(("power_autos", target.mask), build)


def is_hall_subgroup(group: Group, sub: SubgroupSet) -> bool:
    """Order coprime to index."""
    import math

    require_subgroup_of(group, sub)
    return math.gcd(sub.order, group.order // sub.order) == 1


def sylow_pairs_permute(group: Group) -> bool:
    """Whether every two subgroups of any Sylow subgroup permute.

    One Sylow representative per prime is checked: the Sylow subgroups of a
    prime are a single conjugacy class, and conjugation carries permuting
    pairs to permuting pairs.
    """

    def build():
        lat = enumerate_subgroups(group)
        for p in prime_factors(group.order):
            syl = sylow_subgroups(group, p)[0]
            inside = [s for s in lat.members if s.mask & ~syl.mask == 0]
            for i, a in enumerate(inside):
                for b in inside[i + 1 :]:
                    if product_set(group, a, b) != product_set(group, b, a):
                        return False
        return True

    return group.memo("sylow_pairs_permute", build)
