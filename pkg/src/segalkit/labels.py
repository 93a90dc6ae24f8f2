"""Canonical ordering and rendering of simplex / morphism labels.

Input ids are strings.  Derived constructions (chains, ladders, tagged
unions, fiber-product pairs) build nested tuples of existing labels, so a
label is a string, an int, or a tuple of labels.
"""

from __future__ import annotations

import json
from typing import Any, Callable, Hashable, Iterable

Label = Hashable


def sort_key(label: Label) -> tuple:
    if isinstance(label, bool):
        raise TypeError(f"unsupported label {label!r}")
    if isinstance(label, int):
        return (0, label)
    if isinstance(label, str):
        return (1, label)
    if isinstance(label, tuple):
        return (2, tuple(sort_key(part) for part in label))
    raise TypeError(f"unsupported label {label!r}")


def canonical(labels: Iterable[Label]) -> tuple[Label, ...]:
    """Deduplicate and sort labels into the canonical order."""
    uniq = set(labels)
    try:
        # agrees with sort_key whenever the labels are mutually comparable
        return tuple(sorted(uniq))
    except TypeError:
        return tuple(sorted(uniq, key=sort_key))


def sorted_labels(items: Iterable, key: Callable = lambda item: item) -> list:
    """Sort by ``key`` in canonical label order, natively when the keys allow it."""
    items = list(items)
    try:
        return sorted(items, key=key)
    except TypeError:
        return sorted(items, key=lambda item: sort_key(key(item)))


def to_json(label: Label) -> Any:
    if isinstance(label, tuple):
        return [to_json(part) for part in label]
    return label


def from_json(value: Any) -> Label:
    if isinstance(value, list):
        return tuple(from_json(part) for part in value)
    if isinstance(value, (str, int)) and not isinstance(value, bool):
        return value
    raise TypeError(f"unsupported label {value!r}")


def render(label: Label) -> str:
    """Human-readable text form; plain strings are left unquoted."""
    if isinstance(label, str):
        return label
    return json.dumps(to_json(label), separators=(",", ":"))
