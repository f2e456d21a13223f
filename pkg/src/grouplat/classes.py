"""Registry of built-in group classes with declared closure flags.

The closure flags quantify over all finite groups and cannot be computed;
they are declared metadata, spot-verified on the corpus by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownClass


@dataclass(frozen=True)
class GroupClass:
    id: str
    formation: bool
    normally_hereditary: bool
    saturated: bool
    fitting: bool
    contains_nilpotent: bool


ABELIAN = GroupClass(
    "ABELIAN",
    formation=True,
    normally_hereditary=True,
    saturated=False,
    fitting=False,
    contains_nilpotent=False,
)
NILPOTENT = GroupClass(
    "NILPOTENT",
    formation=True,
    normally_hereditary=True,
    saturated=True,
    fitting=True,
    contains_nilpotent=True,
)
SUPERSOLUBLE = GroupClass(
    "SUPERSOLUBLE",
    formation=True,
    normally_hereditary=True,
    saturated=True,
    fitting=False,
    contains_nilpotent=True,
)
SOLUBLE = GroupClass(
    "SOLUBLE",
    formation=True,
    normally_hereditary=True,
    saturated=True,
    fitting=True,
    contains_nilpotent=True,
)

BUILTIN_CLASSES: tuple[GroupClass, ...] = (ABELIAN, NILPOTENT, SUPERSOLUBLE, SOLUBLE)
_REGISTRY = {c.id: c for c in BUILTIN_CLASSES}


def get_class(spec: "GroupClass | str") -> GroupClass:
    if isinstance(spec, GroupClass):
        return spec
    cls = _REGISTRY.get(str(spec).upper())
    if cls is None:
        raise UnknownClass(f"unknown group class {spec!r}")
    return cls
