"""Property battery run on every category of a corpus."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bisimp import classification_diagram, classifying_diagram, segal_check
from .fincat import FinCat, find_isomorphism, weq_all, weq_iso
from .hammock import first_stable
from .segalsem import completeness_check, homotopy_category
from .simpset import _component_ids, homology


@dataclass(frozen=True)
class SweepConfig:
    """Truncations for the battery.

    Levels of a classifying diagram are nerves, which are 2-coskeletal, and a
    map of nerves bijective on vertices and edges is an iso in every
    dimension; so d = 1 already decides the Segal, Ho and classification
    checks exactly.  Completeness reads only levels 0 to 2 and gets a deeper
    truncation so the comparison sees homology.  Hammock counts are taken at
    the first stable bound from 3 up to len_max.
    """

    n_max: int = 3
    d: int = 1
    complete_d: int = 2
    complete_deg: int = 1
    len_max: int = 5
    hammock: bool = True


@dataclass
class CategoryResult:
    segal_iso: bool = False
    complete: bool = False
    ho_recovered: bool = False
    classification_matches: bool = False
    betti0_is_pi0: bool = False
    hammock_counts: dict = field(default_factory=dict)


def nerve_connected(c: FinCat) -> bool:
    parent = {x: x for x in c.objects}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for _, s, t in c.morphisms:
        parent[find(s)] = find(t)
    return len({find(x) for x in c.objects}) == 1


def check_category(c: FinCat, cfg: SweepConfig = SweepConfig()) -> CategoryResult:
    out = CategoryResult()
    wb = classifying_diagram(c, cfg.n_max, cfg.d)
    seg = segal_check(wb, max_deg=cfg.d - 1)
    out.segal_iso = seg.all_iso
    low = classifying_diagram(c, 2, cfg.complete_d)
    out.complete = completeness_check(low, cfg.complete_deg).complete
    out.ho_recovered = find_isomorphism(homotopy_category(wb).category, c) is not None
    out.classification_matches = classification_diagram(c, weq_iso(c), cfg.n_max, cfg.d) == wb
    out.betti0_is_pi0 = all(
        homology(x, 0).betti[0] == len(set(_component_ids(x))) for x in wb.levels + low.levels
    )
    if cfg.hammock and nerve_connected(c):
        w = weq_all(c)
        for x in c.objects:
            for y in c.objects:
                r = first_stable(c, w, x, y, cfg.len_max)
                out.hammock_counts[(x, y)] = (r.count, r.stable)
    return out
