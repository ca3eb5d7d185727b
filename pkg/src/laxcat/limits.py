"""Size caps guarding every exhaustive search."""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, replace
from typing import Iterator

from .errors import SizeCapExceeded


@dataclass(frozen=True)
class Caps:
    max_objects: int = 64
    max_morphisms: int = 512
    # upper bound on the number of candidates any single enumeration may visit
    max_enumeration: int = 2_000_000
    max_vfunctor_candidates: int = 2**20


_CAPS: contextvars.ContextVar[Caps] = contextvars.ContextVar("laxcat_caps", default=Caps())


def current() -> Caps:
    return _CAPS.get()


@contextlib.contextmanager
def using(**overrides: int) -> Iterator[Caps]:
    """Temporarily override caps, e.g. ``with using(max_objects=8): ...``."""
    caps = replace(_CAPS.get(), **overrides)
    token = _CAPS.set(caps)
    try:
        yield caps
    finally:
        _CAPS.reset(token)


def check_category(cat) -> None:
    caps = _CAPS.get()
    if len(cat.objects) > caps.max_objects:
        raise SizeCapExceeded(
            f"{cat.name or 'category'} has {len(cat.objects)} objects (cap {caps.max_objects})"
        )
    if len(cat.morphisms) > caps.max_morphisms:
        raise SizeCapExceeded(
            f"{cat.name or 'category'} has {len(cat.morphisms)} morphisms (cap {caps.max_morphisms})"
        )


def check_count(count: int, what: str) -> None:
    cap = _CAPS.get().max_enumeration
    if count > cap:
        raise SizeCapExceeded(f"{what}: {count} candidates exceeds cap {cap}")
