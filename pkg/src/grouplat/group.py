"""Fully enumerated finite permutation groups and the constructions between them.

Groups are immutable after construction and every operation is a pure
function of its inputs; internal memoization is idempotent, so concurrent
readers always see the same results.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .errors import (
    DegreeMismatch,
    InvalidAction,
    NotNormal,
    OrderCapExceeded,
    SearchCapExceeded,
)
from .limits import ISO_SEARCH_CAP, ORDER_CAP, TABLE_LIMIT
from .perm import Permutation


class Group:
    """A finite permutation group with a canonical (lexicographic) element order.

    Construct through :func:`group_generate` or the product constructors;
    the constructor itself trusts that ``elements`` is closed.
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        elements: Iterable[Permutation],
        name: str | None = None,
    ):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(set(elements)))
        self.order = len(self.elements)
        self.name = name
        self.index = {p: i for i, p in enumerate(self.elements)}
        self.identity_index = self.index[Permutation.identity(degree)]
        self._cache: dict = {}

    def __repr__(self) -> str:
        label = self.name or "group"
        return f"<{label}: order {self.order}, degree {self.degree}>"

    def __len__(self) -> int:
        return self.order

    def memo(self, key, build: Callable):
        """Idempotent per-group cache (safe for concurrent readers)."""
        try:
            return self._cache[key]
        except KeyError:
            value = build()
            return self._cache.setdefault(key, value)

    @property
    def table(self) -> list[list[int]] | None:
        """Cayley table on element indices, or None above TABLE_LIMIT."""

        def build():
            if self.order > TABLE_LIMIT:
                return None
            idx = self.index
            return [
                [idx[a * b] for b in self.elements] for a in self.elements
            ]

        return self.memo("table", build)

    @property
    def inverses(self) -> tuple[int, ...]:
        def build():
            return tuple(self.index[p.inverse()] for p in self.elements)

        return self.memo("inverses", build)

    @property
    def gen_indices(self) -> tuple[int, ...]:
        def build():
            out = []
            for g in self.generators:
                i = self.index[g]
                if i != self.identity_index and i not in out:
                    out.append(i)
            return tuple(out)

        return self.memo("gen_indices", build)

    def mul(self, i: int, j: int) -> int:
        tab = self.table
        if tab is not None:
            return tab[i][j]
        return self.index[self.elements[i] * self.elements[j]]

    def inv(self, i: int) -> int:
        return self.inverses[i]

    def conj(self, i: int, g: int) -> int:
        """Index of elements[i]^elements[g] = g^-1 * x * g."""
        return self.mul(self.mul(self.inv(g), i), g)

    def commutator(self, i: int, j: int) -> int:
        """Index of [x, y] = x^-1 y^-1 x y."""
        return self.mul(self.mul(self.mul(self.inv(i), self.inv(j)), i), j)

    @property
    def element_orders(self) -> tuple[int, ...]:
        def build():
            out = []
            for i in range(self.order):
                n = 1
                j = i
                while j != self.identity_index:
                    j = self.mul(j, i)
                    n += 1
                out.append(n)
            return tuple(out)

        return self.memo("element_orders", build)

    def cyclic_mask(self, i: int) -> int:
        """Membership mask of the cyclic subgroup generated by element i."""
        mask = 1 << self.identity_index
        j = i
        while j != self.identity_index:
            mask |= 1 << j
            j = self.mul(j, i)
        return mask

    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def same_permutation_set(self, other: "Group") -> bool:
        return self.degree == other.degree and self.elements == other.elements


class Morphism:
    """A total homomorphism between two enumerated groups, on element indices."""

    def __init__(self, source: Group, target: Group, mapping: Sequence[int]):
        self.source = source
        self.target = target
        self.mapping = tuple(mapping)
        if len(self.mapping) != source.order:
            raise ValueError("mapping must cover every source element")
        for i in range(source.order):
            for j in range(source.order):
                if self.mapping[source.mul(i, j)] != target.mul(
                    self.mapping[i], self.mapping[j]
                ):
                    raise ValueError("mapping is not a homomorphism")

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def image_of_mask(self, mask: int) -> int:
        out = 0
        for i in _mask_indices(mask):
            out |= 1 << self.mapping[i]
        return out

    @property
    def kernel_mask(self) -> int:
        tgt_id = self.target.identity_index
        out = 0
        for i, m in enumerate(self.mapping):
            if m == tgt_id:
                out |= 1 << i
        return out

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.order


def _mask_indices(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def group_generate(
    degree: int,
    gens: Sequence[Permutation],
    *,
    name: str | None = None,
    max_order: int = ORDER_CAP,
) -> Group:
    """Close the given generators under composition.

    Element order is canonical (lexicographic on image sequences), so every
    downstream mask, series and report is reproducible.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    for p in gens:
        if p.degree != degree:
            raise DegreeMismatch(
                f"generator of degree {p.degree} in a degree-{degree} group"
            )
    ident = Permutation.identity(degree)
    seen = {ident}
    frontier = [ident]
    for x in frontier:
        for g in gens:
            y = x * g
            if y not in seen:
                if len(seen) >= max_order:
                    raise OrderCapExceeded(
                        f"group closure exceeds the order cap {max_order}"
                    )
                seen.add(y)
                frontier.append(y)
    return Group(degree, gens, seen, name)


def direct_product(
    a: Group, b: Group, *, name: str | None = None, max_order: int = ORDER_CAP
) -> Group:
    """Product acting on the disjoint union of the two point sets."""
    if a.order * b.order > max_order:
        raise OrderCapExceeded(
            f"direct product of order {a.order * b.order} exceeds cap {max_order}"
        )
    da = a.degree

    def combine(pa: Permutation, pb: Permutation) -> Permutation:
        return Permutation(list(pa.images) + [da + i for i in pb.images])

    elements = [combine(pa, pb) for pa in a.elements for pb in b.elements]
    gens = [combine(g, Permutation.identity(b.degree)) for g in a.generators]
    gens += [combine(Permutation.identity(da), g) for g in b.generators]
    return Group(da + b.degree, gens, elements, name)


def semidirect_product(
    normal: Group,
    acting: Group,
    action: Callable[[Permutation, Permutation], Permutation],
    *,
    name: str | None = None,
    max_order: int = ORDER_CAP,
) -> Group:
    """Semidirect product N x| H for a left action of H on N by automorphisms.

    ``action(h, n)`` must return the image of ``n`` under the automorphism
    attached to ``h``, with action(h1*h2, n) == action(h1, action(h2, n)).
    Pairs multiply as (n1,h1)(n2,h2) = (n1 * action(h1)(n2), h1*h2).

    The result is realized faithfully on |N| + |H| points: H permutes its own
    element set regularly while pairs act on N's element set affinely, which
    keeps the degree small even for large factors.
    """
    order = normal.order * acting.order
    if order > max_order:
        raise OrderCapExceeded(
            f"semidirect product of order {order} exceeds cap {max_order}"
        )

    auto = _checked_action_tables(normal, acting, action)

    n_count = normal.order
    h_inv = acting.inverses

    def pair_perm(n_idx: int, h_idx: int) -> Permutation:
        tail = auto[h_inv[h_idx]]
        images = [tail[normal.mul(x, n_idx)] for x in range(n_count)]
        images += [n_count + acting.mul(y, h_idx) for y in range(acting.order)]
        return Permutation(images)

    elements = []
    for n_idx in range(n_count):
        for h_idx in range(acting.order):
            elements.append(pair_perm(n_idx, h_idx))
    if len(set(elements)) != order:
        raise AssertionError("semidirect realization is not faithful")

    gens = [pair_perm(normal.index[g], acting.identity_index) for g in normal.generators]
    gens += [pair_perm(normal.identity_index, acting.index[g]) for g in acting.generators]
    return Group(n_count + acting.order, gens, elements, name)


def _checked_action_tables(
    normal: Group,
    acting: Group,
    action: Callable[[Permutation, Permutation], Permutation],
) -> list[tuple[int, ...]]:
    """Validate the action and tabulate it as index maps, one per H element."""
    tables = []
    for h in acting.elements:
        row = []
        for n in normal.elements:
            img = action(h, n)
            idx = normal.index.get(img)
            if idx is None:
                raise InvalidAction(
                    f"action image {img!r} is not an element of the normal factor"
                )
            row.append(idx)
        if len(set(row)) != normal.order:
            raise InvalidAction(f"action of {h!r} is not a bijection")
        tables.append(tuple(row))
    # each image map must be an endomorphism
    for h_idx, row in enumerate(tables):
        for i in range(normal.order):
            for j in range(normal.order):
                if row[normal.mul(i, j)] != normal.mul(row[i], row[j]):
                    raise InvalidAction(
                        f"action of element {h_idx} is not a homomorphism"
                    )
    # the assignment h -> automorphism must itself be a left action
    gen_idxs = normal.gen_indices or (normal.identity_index,)
    for i in range(acting.order):
        for j in range(acting.order):
            composed = tables[acting.mul(i, j)]
            for n_idx in gen_idxs:
                if composed[n_idx] != tables[i][tables[j][n_idx]]:
                    raise InvalidAction(
                        "action map does not respect composition on generators"
                    )
    return tables


def trivial_action(h: Permutation, n: Permutation) -> Permutation:
    return n


def quotient_by_mask(group: Group, normal_mask: int, *, name: str | None = None):
    """Quotient realized by the regular action on cosets; see subgroups.quotient."""
    gen_idx = group.gen_indices
    for g in gen_idx:
        conj = 0
        for i in _mask_indices(normal_mask):
            conj |= 1 << group.conj(i, g)
        if conj != normal_mask:
            raise NotNormal("subgroup is not conjugation-invariant")

    # deterministic coset numbering: order of first appearance over the
    # canonical element order
    coset_of = [-1] * group.order
    reps: list[int] = []
    for i in range(group.order):
        if coset_of[i] >= 0:
            continue
        cid = len(reps)
        reps.append(i)
        for j in _mask_indices(normal_mask):
            coset_of[group.mul(j, i)] = cid
    count = len(reps)

    def induced(idx: int) -> Permutation:
        return Permutation(coset_of[group.mul(r, idx)] for r in reps)

    images = [induced(i) for i in range(group.order)]
    quot_gens = list(dict.fromkeys(images[g] for g in gen_idx))
    quot = Group(
        count,
        quot_gens or [Permutation.identity(count)],
        set(images),
        name,
    )
    assert quot.order * normal_mask.bit_count() == group.order
    morphism = Morphism(group, quot, [quot.index[im] for im in images])
    assert morphism.kernel_mask == normal_mask
    assert morphism.is_surjective()
    return quot, morphism


def _order_profile(g: Group) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = {}
    for o in g.element_orders:
        counts[o] = counts.get(o, 0) + 1
    return tuple(sorted(counts.items()))


def _center_size(g: Group) -> int:
    gens = g.gen_indices
    return sum(
        1
        for i in range(g.order)
        if all(g.mul(i, s) == g.mul(s, i) for s in gens)
    )


def generating_sequence(g: Group) -> list[int]:
    """A small generating sequence, found greedily (high element order first)."""
    if g.order == 1:
        return []
    full = g.full_mask()
    order_of = g.element_orders
    candidates = sorted(range(g.order), key=lambda i: (-order_of[i], i))
    gens: list[int] = []
    mask = 1 << g.identity_index
    for e in candidates:
        if mask >> e & 1:
            continue
        gens.append(e)
        mask = _close_gens(g, gens)
        if mask == full:
            return gens
    raise AssertionError("element scan failed to generate the group")


def _close_gens(g: Group, gens: Sequence[int]) -> int:
    mask = 1 << g.identity_index
    elems = [g.identity_index]
    for x in elems:
        for s in gens:
            y = g.mul(x, s)
            if not mask >> y & 1:
                mask |= 1 << y
                elems.append(y)
    return mask


def is_isomorphic(a: Group, b: Group, *, max_order: int = ISO_SEARCH_CAP) -> bool:
    """Generator-image backtracking with invariant pruning.

    Cheap invariants (order, element-order profile, center size) reject most
    non-isomorphic pairs before any search runs.
    """
    if a.order != b.order:
        return False
    if a.order > max_order:
        raise SearchCapExceeded(
            f"isomorphism search capped at order {max_order}, got {a.order}"
        )
    if a.order == 1:
        return True
    if _order_profile(a) != _order_profile(b):
        return False
    if _center_size(a) != _center_size(b):
        return False

    gens_a = generating_sequence(a)
    order_of_a = a.element_orders
    order_of_b = b.element_orders
    buckets: dict[int, list[int]] = {}
    for i in range(b.order):
        buckets.setdefault(order_of_b[i], []).append(i)

    def extend(assigned: list[tuple[int, int]]) -> dict[int, int] | None:
        """BFS the subgroup generated by the assigned generators, mapping
        words in parallel; None on any inconsistency."""
        mapping = {a.identity_index: b.identity_index}
        used = {b.identity_index}
        elems = [a.identity_index]
        for x in elems:
            mx = mapping[x]
            for ga, gb in assigned:
                y = a.mul(x, ga)
                yb = b.mul(mx, gb)
                known = mapping.get(y)
                if known is None:
                    if yb in used:
                        return None
                    mapping[y] = yb
                    used.add(yb)
                    elems.append(y)
                elif known != yb:
                    return None
        return mapping

    def dfs(k: int, assigned: list[tuple[int, int]], reached: dict[int, int]) -> bool:
        if k == len(gens_a):
            return len(reached) == a.order
        ga = gens_a[k]
        taken = set(reached.values())
        for gb in buckets.get(order_of_a[ga], ()):
            if gb in taken:
                continue
            trial = assigned + [(ga, gb)]
            mapping = extend(trial)
            if mapping is not None and dfs(k + 1, trial, mapping):
                return True
        return False

    return dfs(0, [], {a.identity_index: b.identity_index})
