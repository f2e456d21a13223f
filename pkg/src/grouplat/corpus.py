"""The built-in corpus of named small groups used by the verification suite."""

from __future__ import annotations

from typing import Callable

from .group import Group, direct_product, group_generate, semidirect_product
from .perm import Permutation


def cyclic(n: int, *, name: str | None = None) -> Group:
    if n == 1:
        return group_generate(1, [], name=name or "C1")
    rot = Permutation([(i + 1) % n for i in range(n)])
    return group_generate(n, [rot], name=name or f"C{n}")


def symmetric(n: int, *, name: str | None = None) -> Group:
    if n == 1:
        return group_generate(1, [], name=name or "S1")
    swap = Permutation([1, 0] + list(range(2, n)))
    rot = Permutation([(i + 1) % n for i in range(n)])
    return group_generate(n, [swap, rot], name=name or f"S{n}")


def alternating(n: int, *, name: str | None = None) -> Group:
    if n < 3:
        return group_generate(max(n, 1), [], name=name or f"A{n}")
    three = Permutation([1, 2, 0] + list(range(3, n)))
    if n % 2:
        rot = Permutation([(i + 1) % n for i in range(n)])
    else:
        rot = Permutation([0] + [1 + (i + 1) % (n - 1) for i in range(n - 1)])
    return group_generate(n, [three, rot], name=name or f"A{n}")


def dihedral(order: int, *, name: str | None = None) -> Group:
    """Dihedral group of the given (even, >= 4) order, acting on order/2 points."""
    if order % 2 or order < 4:
        raise ValueError("dihedral order must be an even integer >= 4")
    n = order // 2
    rot = Permutation([(i + 1) % n for i in range(n)])
    flip = Permutation([(n - i) % n for i in range(n)])
    return group_generate(n, [rot, flip], name=name or f"D{order}")


def dicyclic(n: int, *, name: str | None = None) -> Group:
    """Dicyclic group of order 4n (n >= 2 gives the generalized quaternions
    for n a power of 2), realized by its regular action."""
    if n < 1:
        raise ValueError("dicyclic parameter must be positive")
    order = 4 * n

    # elements a^i b^j, 0 <= i < 2n, j in {0,1}; b^2 = a^n, b a b^-1 = a^-1
    def mult(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        i, j = x
        k, l = y
        if j == 0:
            return ((i + k) % (2 * n), l)
        if l == 0:
            return ((i - k) % (2 * n), 1)
        return ((i - k + n) % (2 * n), 0)

    elems = [(i, j) for j in (0, 1) for i in range(2 * n)]
    return _from_abstract(elems, mult, [(1, 0), (0, 1)], name or f"Dic{n}")


def _from_abstract(elems, mult, gens, name: str) -> Group:
    """Realize an abstract multiplication by the right regular action."""
    pos = {e: i for i, e in enumerate(elems)}

    def perm_of(g):
        return Permutation(pos[mult(e, g)] for e in elems)

    return Group(len(elems), [perm_of(g) for g in gens], (perm_of(e) for e in elems), name)


def semidirect_cyclic(
    n_order: int, h_order: int, power: int, *, name: str
) -> Group:
    """C_n x| C_h where the canonical generator of C_h acts by x -> x**power."""
    normal = cyclic(n_order)
    acting = cyclic(h_order)
    gen = acting.elements[acting.gen_indices[0]] if acting.gen_indices else None
    exponent_of = {}
    probe = Permutation.identity(acting.degree)
    for i in range(acting.order):
        exponent_of[probe] = i
        if gen is not None:
            probe = probe * gen

    def action(h: Permutation, n: Permutation) -> Permutation:
        return n ** pow(power, exponent_of[h])

    return semidirect_product(normal, acting, action, name=name)


def elementary_abelian_2(k: int, *, name: str | None = None) -> Group:
    group = cyclic(2)
    for _ in range(k - 1):
        group = direct_product(group, cyclic(2))
    return Group(group.degree, group.generators, group.elements, name or f"C2^{k}")


def _named_product(a: Group, b: Group, name: str) -> Group:
    return direct_product(a, b, name=name)


_BUILDERS: list[tuple[str, Callable[[], Group]]] = [
    *[(f"C{n}", (lambda n=n: cyclic(n))) for n in range(1, 13)],
    ("V4", lambda: _named_product(cyclic(2), cyclic(2), "V4")),
    ("C2^3", lambda: elementary_abelian_2(3)),
    ("D8", lambda: dihedral(8)),
    ("D10", lambda: dihedral(10)),
    ("D12", lambda: dihedral(12)),
    ("D16", lambda: dihedral(16)),
    ("Q8", lambda: dicyclic(2, name="Q8")),
    ("Q16", lambda: dicyclic(4, name="Q16")),
    ("S3", lambda: symmetric(3)),
    ("S4", lambda: symmetric(4)),
    ("A4", lambda: alternating(4)),
    ("A5", lambda: alternating(5)),
    ("Dic3", lambda: dicyclic(3)),
    ("M16", lambda: semidirect_cyclic(8, 2, 5, name="M16")),
    ("F20", lambda: semidirect_cyclic(5, 4, 2, name="F20")),
    ("C7:C3", lambda: semidirect_cyclic(7, 3, 2, name="C7:C3")),
    ("S3xC2", lambda: _named_product(symmetric(3), cyclic(2), "S3xC2")),
    ("S3xC3", lambda: _named_product(symmetric(3), cyclic(3), "S3xC3")),
    ("D8xC2", lambda: _named_product(dihedral(8), cyclic(2), "D8xC2")),
    ("Q8xC3", lambda: _named_product(dicyclic(2, name="Q8"), cyclic(3), "Q8xC3")),
]

CORPUS_NAMES: tuple[str, ...] = tuple(name for name, _ in _BUILDERS)
_BY_NAME = dict(_BUILDERS)


def corpus() -> list[Group]:
    """Fresh instances of every built-in group, in a fixed order."""
    return [build() for _, build in _BUILDERS]


def builtin(name: str) -> Group:
    try:
        build = _BY_NAME[name]
    except KeyError:
        raise KeyError(
            f"unknown builtin group {name!r}; choices: {', '.join(CORPUS_NAMES)}"
        ) from None
    return build()
