"""Regenerate the bundled JSON fixtures in src/segalkit/data."""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from segalkit.bisimp import simpcat_from_monoid
from segalkit.fincat import cyclic_group, discrete_category, walking_arrow, walking_iso, weq_spec
from segalkit.formats import category_to_doc, dumps_compact, simpset_to_doc
from segalkit.simpset import constant_monoid
from segalkit.labels import to_json


def simpcat_doc(sc) -> dict:
    return {
        "objects": list(sc.objects),
        "identities": {x: to_json(v) for x, v in sc.identities.items()},
        "mapspaces": [
            {"source": x, "target": y, "space": simpset_to_doc(sp)} for (x, y), sp in sorted(sc.mapspaces.items())
        ],
        "composition": [
            {"objects": list(key), "levels": [[[to_json(g), to_json(f), to_json(h)] for (g, f), h in lv.items()] for lv in table]}
            for key, table in sorted(sc.composition.items())
        ],
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "src" / "segalkit" / "data")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    wa = walking_arrow()
    docs = {
        "z2.json": category_to_doc(cyclic_group(2).as_category()),
        "z3.json": category_to_doc(cyclic_group(3).as_category()),
        "walking_arrow.json": category_to_doc(wa),
        "walking_arrow_weq.json": category_to_doc(wa, weq_spec(wa, ["id_x", "id_y", "f"])),
        "walking_iso.json": category_to_doc(walking_iso()),
        "discrete2.json": category_to_doc(discrete_category(["a", "b"])),
        "terminal.json": category_to_doc(discrete_category(["*"])),
    }
    bad = category_to_doc(cyclic_group(2).as_category())
    bad["compose"] = [e if e[:2] != ["1", "1"] else ["1", "1", "2"] for e in bad["compose"]]
    docs["corrupted.json"] = bad
    for n in (2, 3):
        docs[f"const_z{n}_simpcat.json"] = simpcat_doc(simpcat_from_monoid(constant_monoid(cyclic_group(n), 3)))
    for name, doc in docs.items():
        (args.out / name).write_text(dumps_compact(doc) + "\n")
        print(name)


if __name__ == "__main__":
    main()
