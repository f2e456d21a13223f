"""Line-oriented group files: ``name``, ``degree`` and ``gen`` lines."""

from __future__ import annotations

from .errors import ParseError
from .group import Group, group_generate
from .limits import ORDER_CAP
from .perm import Permutation, parse_cycles


def parse_group(text: str, *, max_order: int = ORDER_CAP) -> Group:
    """Parse a group file.

    Grammar (one directive per line, ``#`` starts a comment)::

        name <token>
        degree <n>
        gen <cycles>     # zero or more, e.g.  gen (0 1)(2 3)

    ``name`` and ``degree`` are required and must precede any ``gen`` line.
    Cycles use 0-based points.
    """
    name: str | None = None
    degree: int | None = None
    gens: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 1)
        keyword = parts[0]
        rest = parts[1].strip() if len(parts) > 1 else ""
        if keyword == "name":
            if not rest or len(rest.split()) != 1:
                raise ParseError("name needs exactly one token", lineno)
            if name is not None:
                raise ParseError("duplicate name line", lineno)
            name = rest
        elif keyword == "degree":
            if degree is not None:
                raise ParseError("duplicate degree line", lineno)
            try:
                degree = int(rest)
            except ValueError:
                raise ParseError(f"bad degree {rest!r}", lineno) from None
            if degree < 1:
                raise ParseError("degree must be positive", lineno)
        elif keyword == "gen":
            if degree is None:
                raise ParseError("gen line before degree line", lineno)
            try:
                gens.append(parse_cycles(rest, degree))
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
        else:
            raise ParseError(f"unknown directive {keyword!r}", lineno)
    if name is None:
        raise ParseError("missing name line")
    if degree is None:
        raise ParseError("missing degree line")
    return group_generate(degree, gens, name=name, max_order=max_order)


def render_group(group: Group) -> str:
    """Group file text that parses back to the same permutation set."""
    lines = [f"name {group.name or 'G'}", f"degree {group.degree}"]
    for g in group.generators:
        if not g.is_identity():
            lines.append(f"gen {g.cycle_string()}")
    return "\n".join(lines) + "\n"
