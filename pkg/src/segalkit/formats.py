"""JSON documents for categories, simplicial categories, functors and simplicial sets.

A category document looks like::

    {"objects": ["x", "y"],
     "morphisms": [["id_x", "x", "x"], ["id_y", "y", "y"], ["f", "x", "y"]],
     "identities": {"x": "id_x", "y": "id_y"},
     "compose": [["id_y", "f", "f"], ...],
     "weq": ["id_x", "id_y", "f"]}

``compose`` entries are ``[g, f, g∘f]``.  A simplicial category replaces
``morphisms``/``compose`` by ``mapspaces`` and ``composition``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional, Union

from .bisimp import FinSimpCat
from .fincat import FinCat, FinFunctor, WeqSpec, weq_spec
from .labels import from_json, to_json
from .simpset import SimpSet


class InputError(ValueError):
    """A document that does not parse or does not describe a valid structure."""


def load_document(path: Union[str, Path]) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InputError(f"{path}: top level must be an object")
    return doc


def _field(doc: dict, name: str, kind: type) -> Any:
    if name not in doc:
        raise InputError(f"missing field '{name}'")
    value = doc[name]
    if not isinstance(value, kind):
        raise InputError(f"field '{name}' must be a {kind.__name__}")
    return value


def _ident(value: Any, where: str) -> str:
    if not isinstance(value, str):
        raise InputError(f"{where}: ids must be strings, got {json.dumps(value)}")
    return value


def dumps_compact(value, indent: int = 0) -> str:
    """JSON with anything shorter than a line kept inline."""
    flat = json.dumps(value, ensure_ascii=False)
    if len(flat) + indent <= 100 or not isinstance(value, (list, dict)):
        return flat
    pad = " " * (indent + 2)
    if isinstance(value, list):
        body = ",\n".join(pad + dumps_compact(v, indent + 2) for v in value)
        return "[\n" + body + "\n" + " " * indent + "]"
    body = ",\n".join(f"{pad}{json.dumps(k)}: {dumps_compact(v, indent + 2)}" for k, v in value.items())
    return "{\n" + body + "\n" + " " * indent + "}"


def category_from_doc(doc: dict) -> FinCat:
    objects = [_ident(x, f"objects[{i}]") for i, x in enumerate(_field(doc, "objects", list))]
    morphisms = []
    for i, entry in enumerate(_field(doc, "morphisms", list)):
        if not (isinstance(entry, list) and len(entry) == 3):
            raise InputError(f"morphisms[{i}]: expected [id, source, target]")
        morphisms.append(tuple(_ident(v, f"morphisms[{i}]") for v in entry))
    ids = _field(doc, "identities", dict)
    identities = {_ident(x, "identities"): _ident(m, f"identities.{x}") for x, m in ids.items()}
    for x in objects:
        if x not in identities:
            raise InputError(f"identities: no identity given for object '{x}'")
    compose = {}
    for i, entry in enumerate(_field(doc, "compose", list)):
        if not (isinstance(entry, list) and len(entry) == 3):
            raise InputError(f"compose[{i}]: expected [g, f, g∘f]")
        g, f, h = (_ident(v, f"compose[{i}]") for v in entry)
        if (g, f) in compose and compose[(g, f)] != h:
            raise InputError(f"compose[{i}]: conflicting entries for {g}∘{f}")
        compose[(g, f)] = h
    return FinCat.build(objects, morphisms, identities, compose)


def category_to_doc(c: FinCat, weq: Optional[WeqSpec] = None) -> dict:
    doc = {
        "objects": [to_json(x) for x in c.objects],
        "morphisms": [[to_json(v) for v in m] for m in c.morphisms],
        "identities": {str(x): to_json(m) for x, m in c.identities.items()},
        "compose": [[to_json(g), to_json(f), to_json(h)] for (g, f), h in c.compose.items()],
    }
    if weq is not None:
        doc["weq"] = [to_json(m) for m in c.morphism_ids if m in weq.morphisms]
    return doc


def weq_from_doc(doc: dict, c: FinCat) -> Optional[WeqSpec]:
    if "weq" not in doc:
        return None
    ids = [_ident(m, f"weq[{i}]") for i, m in enumerate(_field(doc, "weq", list))]
    unknown = [m for m in ids if m not in c.source]
    if unknown:
        raise InputError(f"weq: unknown morphism '{unknown[0]}'")
    return weq_spec(c, ids)


def simpset_to_doc(x: SimpSet) -> dict:
    return {
        "simplices": [[to_json(s) for s in level] for level in x.simplices],
        "faces": [[list(t) for t in level] for level in x.faces],
        "degens": [[list(t) for t in level] for level in x.degens],
    }


def simpset_from_doc(doc: dict) -> SimpSet:
    try:
        simplices = tuple(tuple(from_json(s) for s in level) for level in doc["simplices"])
        faces = tuple(tuple(tuple(t) for t in level) for level in doc["faces"])
        degens = tuple(tuple(tuple(t) for t in level) for level in doc["degens"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"simplicial set: malformed document ({exc})") from None
    if not (len(simplices) == len(faces) == len(degens)):
        raise InputError("simplicial set: 'simplices', 'faces' and 'degens' disagree on the truncation")
    return SimpSet(simplices, faces, degens)


def simpcat_from_doc(doc: dict) -> FinSimpCat:
    objects = [_ident(x, f"objects[{i}]") for i, x in enumerate(_field(doc, "objects", list))]
    identities = {_ident(x, "identities"): from_json(v) for x, v in _field(doc, "identities", dict).items()}
    spaces = {}
    for i, entry in enumerate(_field(doc, "mapspaces", list)):
        if not isinstance(entry, dict) or not {"source", "target", "space"} <= entry.keys():
            raise InputError(f"mapspaces[{i}]: expected {{source, target, space}}")
        spaces[(entry["source"], entry["target"])] = simpset_from_doc(entry["space"])
    composition = {}
    for i, entry in enumerate(_field(doc, "composition", list)):
        if not isinstance(entry, dict) or not {"objects", "levels"} <= entry.keys():
            raise InputError(f"composition[{i}]: expected {{objects, levels}}")
        key = tuple(entry["objects"])
        composition[key] = tuple(
            {(from_json(g), from_json(f)): from_json(h) for g, f, h in level} for level in entry["levels"]
        )
    return FinSimpCat(tuple(objects), spaces, identities, composition)


def is_simpcat_doc(doc: dict) -> bool:
    return "mapspaces" in doc


def is_simpset_doc(doc: dict) -> bool:
    return "simplices" in doc and "faces" in doc


def functor_from_doc(doc: dict, source: FinCat, target: FinCat) -> FinFunctor:
    on_objects = {_ident(k, "functor.objects"): _ident(v, f"functor.objects.{k}") for k, v in _field(doc, "objects", dict).items()}
    on_morphisms = {
        _ident(k, "functor.morphisms"): _ident(v, f"functor.morphisms.{k}") for k, v in _field(doc, "morphisms", dict).items()
    }
    return FinFunctor(source, target, on_objects, on_morphisms)
