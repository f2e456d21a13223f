"""The claim catalog: every numbered statement the suite verifies, as an
executable check over one group, plus suite execution and aggregation.

Verdicts: PASS / FAIL (with witness) / VACUOUS (hypothesis did not hold for
this group) / UNDECIDED (a needed sub-computation exceeded a cap; never
silently reported as passing).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .classes import ABELIAN, BUILTIN_CLASSES, NILPOTENT, SOLUBLE, SUPERSOLUBLE
from .classlattices import (
    DeltaSpec,
    central_delta,
    f_central_delta,
    is_closed_sublattice,
    lattice_members,
    quotient_in_class,
    subgroup_in_class,
    z_delta_contains,
)
from .errors import (
    GroupError,
    OrderCapExceeded,
    SearchCapExceeded,
    SubgroupCapExceeded,
)
from .group import Group, is_isomorphic
from .lattice import enumerate_subgroups, is_modular_subgroup
from .limits import ISO_SEARCH_CAP
from .permutability import (
    NOT_TPP,
    PT_GROUP,
    T_GROUP,
    classify_permutability,
    induces_power_automorphisms,
    is_hall_subgroup,
    is_quasinormal,
    subnormal_subgroups,
    sylow_pairs_permute,
)
from .series import (
    NormalSection,
    _make_chief_factor,
    all_chief_factors,
    chief_series_between,
    factor_semidirect,
    hypercenter,
    is_f_central,
    is_in_class,
    normal_subgroups,
)
from .subgroups import (
    SubgroupSet,
    core,
    full_subgroup,
    mask_indices,
    quotient,
    subgroup_as_group,
    trivial_subgroup,
)

PASS = "PASS"
FAIL = "FAIL"
VACUOUS = "VACUOUS"
UNDECIDED = "UNDECIDED"


@dataclass(frozen=True)
class CheckResult:
    check: str
    group: str
    verdict: str
    witness: str | None

    def __post_init__(self):
        if self.verdict == FAIL:
            assert self.witness, "FAIL must carry a witness"


@dataclass
class Report:
    results: list[CheckResult]

    @property
    def summary(self) -> dict[str, int]:
        counts = {"pass": 0, "fail": 0, "vacuous": 0, "undecided": 0}
        for r in self.results:
            counts[r.verdict.lower()] += 1
        return counts

    @property
    def fail_count(self) -> int:
        return self.summary["fail"]


def _fmt(sub: SubgroupSet) -> str:
    return f"0x{sub.mask:x}(order {sub.order})"


def _builtin_deltas(group: Group) -> list[DeltaSpec]:
    return [central_delta(group)] + [
        f_central_delta(group, cls) for cls in BUILTIN_CLASSES
    ]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _lattice_equality(group: Group) -> tuple[bool, SubgroupSet | None]:
    """L_NILPOTENT(G) == L_central-delta(G), with a separating subgroup."""

    def build():
        class_masks = {s.mask for s in lattice_members(group, NILPOTENT)}
        delta_masks = {
            s.mask for s in lattice_members(group, central_delta(group))
        }
        if class_masks == delta_masks:
            return True, None
        sep = min(class_masks ^ delta_masks)
        return False, SubgroupSet(group, sep)

    return group.memo("lattice_equality", build)


def _aggregate(parts: list[tuple[str, str | None]], pass_detail: str | None = None):
    for verdict, witness in parts:
        if verdict == FAIL:
            return FAIL, witness
    for verdict, witness in parts:
        if verdict == UNDECIDED:
            return UNDECIDED, witness
    if any(verdict == PASS for verdict, _ in parts):
        return PASS, pass_detail
    return VACUOUS, pass_detail


# --- lattice closure ---------------------------------------------------


def _check_delta_lattices_closed(group: Group) -> tuple[str, str | None]:
    """The delta lattice is meet- and join-closed for every built-in
    conjugation-closed chief-factor predicate."""
    for delta in _builtin_deltas(group):
        members = lattice_members(group, delta)
        closed, wit = is_closed_sublattice(group, members, "both")
        if not closed:
            a, b, op = wit
            return FAIL, f"delta={delta.label}: {op} of {_fmt(a)}, {_fmt(b)} escapes"
    return PASS, None


def _check_class_lattices_meet_closed(group: Group) -> tuple[str, str | None]:
    """The class lattice is meet-closed for every normally hereditary
    formation (all four registered classes)."""
    for cls in BUILTIN_CLASSES:
        if not (cls.formation and cls.normally_hereditary):
            continue
        members = lattice_members(group, cls)
        closed, wit = is_closed_sublattice(group, members, "meet")
        if not closed:
            a, b, op = wit
            return FAIL, f"class={cls.id}: {op} of {_fmt(a)}, {_fmt(b)} escapes"
    return PASS, None


def _check_class_lattices_fully_closed(group: Group) -> tuple[str, str | None]:
    """The class lattice is meet- and join-closed for the Fitting formations
    (NILPOTENT and SOLUBLE)."""
    for cls in BUILTIN_CLASSES:
        if not (cls.formation and cls.fitting):
            continue
        members = lattice_members(group, cls)
        closed, wit = is_closed_sublattice(group, members, "both")
        if not closed:
            a, b, op = wit
            return FAIL, f"class={cls.id}: {op} of {_fmt(a)}, {_fmt(b)} escapes"
    return PASS, None


# --- intersections of modular / quasinormal subgroups ------------------


def _check_modular_intersections(group: Group) -> tuple[str, str | None]:
    """For modular subgroups A and B, every chief factor between the core
    and the normal closure of A n B has prime order."""
    lat = enumerate_subgroups(group)
    modular = [s for s in lat.members if is_modular_subgroup(group, s)]
    for i, a in enumerate(modular):
        for b in modular[i:]:
            inter = SubgroupSet(group, a.mask & b.mask)
            lower = core(group, inter)
            upper = _normal_closure_cached(group, inter)
            for f in chief_series_between(group, lower, upper):
                if not _is_prime(f.factor_order):
                    return FAIL, (
                        f"A={_fmt(a)} B={_fmt(b)}: factor of order "
                        f"{f.factor_order} between core and closure"
                    )
    return PASS, f"{len(modular)} modular subgroups"


def _normal_closure_cached(group: Group, sub: SubgroupSet) -> SubgroupSet:
    from .subgroups import normal_closure

    return group.memo(
        ("normal_closure", sub.mask), lambda: normal_closure(group, sub)
    )


def _hypercentral_over_core(group: Group, closure: SubgroupSet, the_core: SubgroupSet) -> bool:
    quot, proj = quotient(group, the_core)
    hz = hypercenter(quot)
    return proj.image_of_mask(closure.mask) & ~hz.mask == 0


def _check_quasinormal_intersections(group: Group) -> tuple[str, str | None]:
    """For quasinormal A and B, the section of A n B between its core and its
    normal closure lies in the hypercenter of the quotient by the core."""
    lat = enumerate_subgroups(group)
    quasi = [s for s in lat.members if is_quasinormal(group, s)]
    for i, a in enumerate(quasi):
        for b in quasi[i:]:
            inter = SubgroupSet(group, a.mask & b.mask)
            lower = core(group, inter)
            upper = _normal_closure_cached(group, inter)
            if not _hypercentral_over_core(group, upper, lower):
                return FAIL, (
                    f"A={_fmt(a)} B={_fmt(b)}: closure/core of the "
                    f"intersection escapes the hypercenter"
                )
    return PASS, f"{len(quasi)} quasinormal subgroups"


def _check_quasinormal_hypercentral(group: Group) -> tuple[str, str | None]:
    """Every quasinormal subgroup has closure/core inside the hypercenter of
    the quotient by its core."""
    lat = enumerate_subgroups(group)
    quasi = [s for s in lat.members if is_quasinormal(group, s)]
    for a in quasi:
        lower = core(group, a)
        upper = _normal_closure_cached(group, a)
        if not _hypercentral_over_core(group, upper, lower):
            return FAIL, f"A={_fmt(a)}: closure/core escapes the hypercenter"
    nonnormal = sum(
        1 for a in quasi if a.mask != _normal_closure_cached(group, a).mask
    )
    return PASS, f"{len(quasi)} quasinormal ({nonnormal} non-normal)"


# --- residual structure under lattice equality -------------------------


def _residual_cached(group: Group, cls) -> SubgroupSet:
    from .classlattices import residual

    return residual(group, cls)


def _frattini_in_parent(group: Group, sub: SubgroupSet) -> SubgroupSet:
    from .lattice import distinguished_subgroups

    sub_group, _, to_parent = subgroup_as_group(group, sub)
    frat = distinguished_subgroups(sub_group).frattini
    mask = 0
    for i in mask_indices(frat.mask):
        mask |= 1 << to_parent[i]
    return SubgroupSet(group, mask)


def _check_residual_structure(group: Group) -> tuple[str, str | None]:
    """When the class and delta lattices agree for a normally hereditary
    saturated formation containing the nilpotent groups, and the residual is
    soluble, the residual is an abelian Hall subgroup of odd order, the whole
    group induces power automorphisms on it modulo its Frattini subgroup, and
    every chief factor below it has prime order."""
    parts = []
    exercised = []
    for cls in BUILTIN_CLASSES:
        if not (cls.normally_hereditary and cls.saturated and cls.contains_nilpotent):
            continue
        res = _residual_cached(group, cls)
        if not _subgroup_in_class(group, res, SOLUBLE):
            parts.append((VACUOUS, None))
            continue
        class_masks = {s.mask for s in lattice_members(group, cls)}
        delta_masks = {
            s.mask
            for s in lattice_members(group, f_central_delta(group, cls))
        }
        if class_masks != delta_masks:
            parts.append((VACUOUS, None))
            continue
        exercised.append(cls.id)
        if not _subgroup_in_class(group, res, ABELIAN):
            parts.append((FAIL, f"{cls.id}: residual {_fmt(res)} not abelian"))
            continue
        if not is_hall_subgroup(group, res):
            parts.append((FAIL, f"{cls.id}: residual {_fmt(res)} not Hall"))
            continue
        if res.order % 2 == 0:
            parts.append((FAIL, f"{cls.id}: residual {_fmt(res)} has even order"))
            continue
        frat = _frattini_in_parent(group, res)
        if not induces_power_automorphisms(group, res, frat if frat.order > 1 else None):
            parts.append(
                (FAIL, f"{cls.id}: no power automorphisms on residual mod Frattini")
            )
            continue
        bad = [
            f.factor_order
            for f in chief_series_between(group, trivial_subgroup(group), res)
            if not _is_prime(f.factor_order)
        ]
        if bad:
            parts.append(
                (FAIL, f"{cls.id}: non-prime chief factor {bad[0]} below residual")
            )
            continue
        parts.append((PASS, None))
    detail = f"hypothesis held for {','.join(exercised)}" if exercised else None
    return _aggregate(parts, detail)


def _check_power_autos_on_residual(group: Group) -> tuple[str, str | None]:
    """For a soluble group whose nilpotent-class lattice equals the
    central-delta lattice, conjugation induces power automorphisms on the
    nilpotent residual."""
    if not is_in_class(group, SOLUBLE):
        return VACUOUS, "group not soluble"
    equal, _ = _lattice_equality(group)
    if not equal:
        return VACUOUS, "lattices differ"
    res = _residual_cached(group, NILPOTENT)
    if induces_power_automorphisms(group, res):
        return PASS, None
    return FAIL, f"no power automorphisms on residual {_fmt(res)}"


# --- the main characterization and its corollaries ---------------------


def _check_pst_characterization(group: Group) -> tuple[str, str | None]:
    """A soluble group is PST exactly when its nilpotent-class lattice equals
    its central-delta lattice (both directions checked)."""
    if not is_in_class(group, SOLUBLE):
        return VACUOUS, "group not soluble"
    label = classify_permutability(group)
    is_pst = label != NOT_TPP
    equal, sep = _lattice_equality(group)
    if is_pst == equal:
        return PASS, f"classification={label}, lattice_eq={equal}"
    if sep is not None:
        return FAIL, (
            f"classification={label} but lattice_eq={equal}; "
            f"separating subgroup {_fmt(sep)}"
        )
    return FAIL, f"classification={label} but lattice_eq={equal}"


def _check_hypercentral_subnormals_give_pst(group: Group) -> tuple[str, str | None]:
    """If the group is soluble and every subnormal subgroup lies (modulo its
    core) in the hypercenter of the quotient by the core, the group is PST."""
    if not is_in_class(group, SOLUBLE):
        return VACUOUS, "group not soluble"
    for a in subnormal_subgroups(group):
        lower = core(group, a)
        quot, proj = quotient(group, lower)
        hz = hypercenter(quot)
        if proj.image_of_mask(a.mask) & ~hz.mask:
            return VACUOUS, f"premise fails at {_fmt(a)}"
    if classify_permutability(group) != NOT_TPP:
        return PASS, None
    return FAIL, "premise holds but group is not PST"


def _check_pt_residual_structure(group: Group) -> tuple[str, str | None]:
    """A soluble PT-group has an abelian normal Hall subgroup of odd order
    with nilpotent quotient on which the whole group induces power
    automorphisms (existence checked over all normal subgroups)."""
    if not is_in_class(group, SOLUBLE):
        return VACUOUS, "group not soluble"
    if classify_permutability(group) not in (T_GROUP, PT_GROUP):
        return VACUOUS, "group not PT"
    from .classlattices import _quotient_in_class

    for d in normal_subgroups(group):
        if d.order % 2 == 0:
            continue
        if not is_hall_subgroup(group, d):
            continue
        if not _subgroup_in_class(group, d, ABELIAN):
            continue
        if not _quotient_in_class(group, d, NILPOTENT):
            continue
        if induces_power_automorphisms(group, d):
            return PASS, f"witness D={_fmt(d)}"
    return FAIL, "no abelian normal Hall odd-order witness with the stated properties"


def _check_pt_characterization(group: Group) -> tuple[str, str | None]:
    """A soluble group is PT exactly when the lattice equality holds and
    every two subgroups of any Sylow subgroup permute."""
    if not is_in_class(group, SOLUBLE):
        return VACUOUS, "group not soluble"
    label = classify_permutability(group)
    is_pt = label in (T_GROUP, PT_GROUP)
    equal, _ = _lattice_equality(group)
    sylow_ok = sylow_pairs_permute(group)
    rhs = equal and sylow_ok
    if is_pt == rhs:
        return PASS, (
            f"classification={label}, lattice_eq={equal}, sylow_pairs={sylow_ok}"
        )
    return FAIL, (
        f"classification={label} but lattice_eq={equal}, sylow_pairs={sylow_ok}"
    )


# --- chief-factor lemmas ------------------------------------------------


def _semidirect_order(group: Group, factor) -> int:
    return factor.factor_order * (group.order // factor.centralizer.order)


def _check_factor_semidirect_invariance(group: Group) -> tuple[str, str | None]:
    """Factor semidirect products are invariant under quotients below the
    factor and under equivariant isomorphism of factors (which also forces
    equal centralizers)."""
    factors = all_chief_factors(group)
    if not factors:
        return VACUOUS, "no chief factors"
    parts: list[tuple[str, str | None]] = []
    normals = normal_subgroups(group)
    for f in factors:
        for n in normals:
            if n.mask & ~f.section.lower.mask:
                continue
            if _semidirect_order(group, f) > ISO_SEARCH_CAP:
                parts.append(
                    (UNDECIDED, f"semidirect order {_semidirect_order(group, f)} above iso cap")
                )
                continue
            lhs = factor_semidirect(group, f)
            quot, proj = quotient(group, n)
            lower_q = SubgroupSet(quot, proj.image_of_mask(f.section.lower.mask))
            upper_q = SubgroupSet(quot, proj.image_of_mask(f.section.upper.mask))
            assert _is_chief_in(quot, lower_q, upper_q)
            f_q = _make_chief_factor(quot, lower_q, upper_q)
            if _semidirect_order(quot, f_q) > ISO_SEARCH_CAP:
                parts.append((UNDECIDED, "quotient-side semidirect above iso cap"))
                continue
            rhs = factor_semidirect(quot, f_q)
            if not is_isomorphic(lhs, rhs):
                parts.append(
                    (
                        FAIL,
                        f"semidirect of {_fmt(f.section.upper)}/{_fmt(f.section.lower)} "
                        f"changes when passing to the quotient by {_fmt(n)}",
                    )
                )
                break
            parts.append((PASS, None))
    for i, f1 in enumerate(factors):
        for f2 in factors[i + 1 :]:
            if f1.factor_order != f2.factor_order:
                continue
            try:
                from .series import g_isomorphic

                related = g_isomorphic(group, f1, f2)
            except SearchCapExceeded as exc:
                parts.append((UNDECIDED, str(exc)))
                continue
            if not related:
                parts.append((PASS, None))
                continue
            if f1.centralizer.mask != f2.centralizer.mask:
                parts.append(
                    (
                        FAIL,
                        "equivariantly isomorphic factors "
                        f"{_fmt(f1.section.upper)}/{_fmt(f1.section.lower)} and "
                        f"{_fmt(f2.section.upper)}/{_fmt(f2.section.lower)} "
                        "have different centralizers",
                    )
                )
                continue
            if (
                _semidirect_order(group, f1) > ISO_SEARCH_CAP
                or _semidirect_order(group, f2) > ISO_SEARCH_CAP
            ):
                parts.append((UNDECIDED, "semidirect above iso cap"))
                continue
            if not is_isomorphic(
                factor_semidirect(group, f1), factor_semidirect(group, f2)
            ):
                parts.append(
                    (FAIL, "equivariantly isomorphic factors give non-isomorphic semidirects")
                )
            else:
                parts.append((PASS, None))
    return _aggregate(parts)


def _is_chief_in(group: Group, lower: SubgroupSet, upper: SubgroupSet) -> bool:
    for m in normal_subgroups(group):
        if (
            m.mask != lower.mask
            and m.mask != upper.mask
            and lower.mask & ~m.mask == 0
            and m.mask & ~upper.mask == 0
        ):
            return False
    return True


def _check_hypercentral_section_arithmetic(group: Group) -> tuple[str, str | None]:
    """Closure rules for delta-hypercentral sections: products, intersections
    and joins of hypercentral sections stay hypercentral."""
    normals = normal_subgroups(group)
    parts: list[tuple[str, str | None]] = []
    from .series import _normal_product

    for delta in _builtin_deltas(group):
        def z(lo: SubgroupSet, hi: SubgroupSet) -> bool:
            return z_delta_contains(group, NormalSection(group, lo, hi), delta)

        for k in normals:
            for h in normals:
                if k.mask & ~h.mask or not z(k, h):
                    continue
                for n in normals:
                    if n.mask & ~h.mask:
                        continue
                    kn = SubgroupSet(group, _normal_product(group, k.mask, n.mask))
                    meet = SubgroupSet(group, k.mask & n.mask)
                    left = z(k, kn)
                    right = z(meet, n)
                    if left != right:
                        parts.append(
                            (
                                FAIL,
                                f"delta={delta.label}: product/intersection "
                                f"rule fails for K={_fmt(k)} H={_fmt(h)} N={_fmt(n)}",
                            )
                        )
                        continue
                    if z(n, h) and not z(meet, h):
                        parts.append(
                            (
                                FAIL,
                                f"delta={delta.label}: meet rule fails for "
                                f"K={_fmt(k)} H={_fmt(h)} N={_fmt(n)}",
                            )
                        )
                        continue
                    parts.append((PASS, None))
                for v in normals:
                    if k.mask & ~v.mask:
                        continue
                    if z(k, v):
                        hv = SubgroupSet(group, _normal_product(group, h.mask, v.mask))
                        if not z(k, hv):
                            parts.append(
                                (
                                    FAIL,
                                    f"delta={delta.label}: join rule fails for "
                                    f"K={_fmt(k)} H={_fmt(h)} V={_fmt(v)}",
                                )
                            )
                            continue
                        parts.append((PASS, None))
    return _aggregate(parts)


def _check_all_factors_central_iff_member(group: Group) -> tuple[str, str | None]:
    """For each saturated built-in class containing the nilpotent groups:
    members have every chief factor class-central, and a group whose chief
    factors are all class-central is a member."""
    factors = all_chief_factors(group)
    parts: list[tuple[str, str | None]] = []
    for cls in (NILPOTENT, SUPERSOLUBLE, SOLUBLE):
        try:
            all_central = all(is_f_central(group, f, cls) for f in factors)
        except (OrderCapExceeded, SearchCapExceeded) as exc:
            parts.append((UNDECIDED, str(exc)))
            continue
        member = is_in_class(group, cls)
        if member and not all_central:
            bad = next(f for f in factors if not is_f_central(group, f, cls))
            parts.append(
                (
                    FAIL,
                    f"{cls.id}: member has non-central factor "
                    f"{_fmt(bad.section.upper)}/{_fmt(bad.section.lower)}",
                )
            )
        elif all_central and not member:
            parts.append(
                (FAIL, f"{cls.id}: all factors central but group not a member")
            )
        elif member or all_central:
            parts.append((PASS, None))
        else:
            parts.append((VACUOUS, None))
    return _aggregate(parts)


# --- catalog ------------------------------------------------------------


@dataclass(frozen=True)
class CheckDef:
    id: str
    summary: str
    run: Callable[[Group], tuple[str, str | None]]


CHECKS: dict[str, CheckDef] = {
    c.id: c
    for c in [
        CheckDef(
            "THM-1.1i",
            "delta lattices are sublattices (meet- and join-closed)",
            _check_delta_lattices_closed,
        ),
        CheckDef(
            "THM-1.1ii",
            "class lattices of normally hereditary formations are meet-closed",
            _check_class_lattices_meet_closed,
        ),
        CheckDef(
            "THM-1.1iii",
            "class lattices of Fitting formations are sublattices",
            _check_class_lattices_fully_closed,
        ),
        CheckDef(
            "COR-1.2",
            "intersections of modular subgroups have prime chief factors "
            "between core and closure",
            _check_modular_intersections,
        ),
        CheckDef(
            "COR-1.3",
            "intersections of quasinormal subgroups are hypercentral over their core",
            _check_quasinormal_intersections,
        ),
        CheckDef(
            "THM-1.4i",
            "lattice equality forces an abelian odd-order Hall residual with "
            "power automorphisms",
            _check_residual_structure,
        ),
        CheckDef(
            "THM-1.4ii",
            "lattice equality in soluble groups forces power automorphisms "
            "on the nilpotent residual",
            _check_power_autos_on_residual,
        ),
        CheckDef(
            "THM-1.5",
            "soluble PST-groups are exactly the groups with equal nilpotent "
            "and central-delta lattices",
            _check_pst_characterization,
        ),
        CheckDef(
            "COR-1.6",
            "hypercentral subnormal subgroups force PST (soluble groups)",
            _check_hypercentral_subnormals_give_pst,
        ),
        CheckDef(
            "COR-1.7",
            "soluble PT-groups have an abelian normal Hall odd-order subgroup "
            "with nilpotent quotient and power automorphisms",
            _check_pt_residual_structure,
        ),
        CheckDef(
            "COR-1.8",
            "soluble PT-groups are exactly: lattice equality plus permuting "
            "Sylow subgroup pairs",
            _check_pt_characterization,
        ),
        CheckDef(
            "LEM-2.1",
            "factor semidirects are invariant under quotients and "
            "equivariant isomorphism",
            _check_factor_semidirect_invariance,
        ),
        CheckDef(
            "LEM-2.2",
            "delta-hypercentral sections are closed under products, "
            "intersections and joins",
            _check_hypercentral_section_arithmetic,
        ),
        CheckDef(
            "REM-3.1",
            "class membership coincides with all chief factors class-central "
            "(saturated classes)",
            _check_all_factors_central_iff_member,
        ),
        CheckDef(
            "QN-HYP",
            "quasinormal subgroups are hypercentral over their core",
            _check_quasinormal_hypercentral,
        ),
    ]
}

CHECK_IDS: tuple[str, ...] = tuple(CHECKS)


def run_check(check_id: str, group: Group) -> CheckResult:
    check = CHECKS.get(check_id)
    if check is None:
        raise KeyError(f"unknown check {check_id!r}; choices: {', '.join(CHECK_IDS)}")
    try:
        verdict, witness = check.run(group)
    except (OrderCapExceeded, SubgroupCapExceeded, SearchCapExceeded) as exc:
        verdict, witness = UNDECIDED, str(exc)
    return CheckResult(check_id, group.name or f"order{group.order}", verdict, witness)


def run_suite(groups: list[Group], checks: list[str] | None = None) -> Report:
    """Cross-product execution in deterministic order."""
    ids = list(checks) if checks is not None else list(CHECK_IDS)
    for cid in ids:
        if cid not in CHECKS:
            raise KeyError(f"unknown check {cid!r}")
    results = []
    for group in groups:
        for cid in ids:
            results.append(run_check(cid, group))
    return Report(results)
