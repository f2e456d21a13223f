"""Permutations of a finite point set: the carrier for all group elements."""

from __future__ import annotations

from typing import Iterable

from .errors import DegreeMismatch


class Permutation:
    """An immutable bijection of {0, ..., degree-1}.

    Composition is left-to-right: ``(a * b)`` applies ``a`` first, then ``b``.
    Permutations are hashable and totally ordered (lexicographically on their
    image sequences), which fixes the canonical element order everywhere.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        if not imgs or sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a bijection of 0..n-1: {imgs!r}")
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(degree))

    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.images))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatch(
                f"cannot compose degree {self.degree} with degree {other.degree}"
            )
        oimg = other.images
        return Permutation(oimg[i] for i in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, p in enumerate(self.images):
            inv[p] = i
        return Permutation(inv)

    def __pow__(self, n: int) -> "Permutation":
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

    def conjugate(self, g: "Permutation") -> "Permutation":
        """Return self^g = g^-1 * self * g."""
        return g.inverse() * self * g

    def order(self) -> int:
        n = 1
        p = self
        while not p.is_identity():
            p = p * self
            n += 1
        return n

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles in increasing order of their smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            p = self.images[start]
            while p != start:
                cyc.append(p)
                seen[p] = True
                p = self.images[p]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cyc)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __le__(self, other: "Permutation") -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation[{self.degree}]{self.cycle_string()}"


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation like ``(0 1)(2 3)`` into a permutation.

    Commas and whitespace both separate points.  Raises ValueError on
    malformed input; the group-file parser wraps that with a line number.
    """
    images = list(range(degree))
    used: set[int] = set()
    pos = 0
    text = text.strip()
    if not text:
        raise ValueError("empty cycle expression")
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise ValueError(f"expected '(' at position {pos}")
        end = text.find(")", pos)
        if end < 0:
            raise ValueError("unbalanced cycle: missing ')'")
        body = text[pos + 1 : end].replace(",", " ")
        points = []
        for tok in body.split():
            if not tok.isdigit():
                raise ValueError(f"bad point {tok!r}")
            points.append(int(tok))
        for p in points:
            if p >= degree:
                raise ValueError(f"point {p} out of range for degree {degree}")
            if p in used:
                raise ValueError(f"point {p} appears twice")
            used.add(p)
        for i, p in enumerate(points):
            images[p] = points[(i + 1) % len(points)]
        pos = end + 1
    return Permutation(images)
