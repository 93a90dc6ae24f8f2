"""Category-level semantics of strict Segal spaces.

Mapping spaces are strict fibers of (d_1, d_0): W_1 -> W_0 x W_0.  Before
using them we check two necessary conditions for that map to be a
fibration (so that strict and homotopy fibers agree): its vertex image is a
union of path components of W_0 x W_0, and fibers over one component have
the same number of components.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .bisimp import BiSimpMap, BiSimpSet, is_discrete
from .fincat import CategoryError, FinCat, iso_classes, validate_category
from .labels import Label, render, sort_key
from .simpset import (
    SimpMap,
    SimpSet,
    Verdict,
    _component_ids,
    components,
    homology,
    invariant_equiv,
    restrict,
)


class NotStrictSegal(ValueError):
    """The input is outside what strict fibers and strict lifts can handle."""


def objects(wb: BiSimpSet) -> tuple[Label, ...]:
    return wb.levels[0].simplices[0]


def _vertex_at(x0: SimpSet, m: int) -> dict[int, int]:
    """Index of s_0^m(v) in dimension m -> index of the vertex v."""
    out = {}
    for v in range(len(x0.simplices[0])):
        j = v
        for k in range(m):
            j = x0.degens[k][j][0]
        out[j] = v
    return out


def _fibers(wb: BiSimpSet) -> dict[tuple[int, int], list[list[int]]]:
    x0, x1 = wb.levels[0], wb.levels[1]
    out: dict[tuple[int, int], list[list[int]]] = {}
    for m in range(wb.dim + 1):
        base = _vertex_at(x0, m)
        d1, d0 = wb.hfaces[1][1][m], wb.hfaces[1][0][m]
        for j in range(len(x1.simplices[m])):
            a, b = base.get(d1[j]), base.get(d0[j])
            if a is None or b is None:
                continue
            keep = out.setdefault((a, b), [[] for _ in range(wb.dim + 1)])
            keep[m].append(j)
    return out


def mapping_space(wb: BiSimpSet, x: Label, y: Label) -> SimpSet:
    """Strict fiber of (d_1, d_0) over the degenerate simplices on (x, y)."""
    idx = wb.levels[0].index[0]
    if x not in idx or y not in idx:
        raise KeyError(f"unknown object {render(x) if x not in idx else render(y)}")
    keep = _fibers(wb).get((idx[x], idx[y]), [[] for _ in range(wb.dim + 1)])
    return restrict(wb.levels[1], keep)


def check_strict_fibers(wb: BiSimpSet) -> None:
    """Raise NotStrictSegal unless the necessary fibration conditions hold."""
    x0 = wb.levels[0]
    comp = _component_ids(x0) if x0.trunc >= 1 else list(range(len(x0.simplices[0])))
    fibers = _fibers(wb)
    sizes = {}
    for (a, b), keep in fibers.items():
        sizes[(a, b)] = len(set(_component_ids(restrict(wb.levels[1], keep)))) if wb.dim >= 1 else len(keep[0])
    by_block: dict[tuple[int, int], set[int]] = {}
    n = len(x0.simplices[0])
    for a, b in itertools.product(range(n), repeat=2):
        blk = (comp[a], comp[b])
        by_block.setdefault(blk, set()).add(sizes.get((a, b), 0))
    for blk, vals in by_block.items():
        if len(vals) > 1:
            raise NotStrictSegal(
                "(d1, d0): W1 -> W0 x W0 is not a fibration: fiber pi0 sizes "
                f"{sorted(vals)} vary over one component of W0 x W0; strict fibers are not homotopy fibers"
            )


def _vertex_segal(wb: BiSimpSet) -> dict[tuple[int, int], int]:
    """Inverse of the vertex-level Segal map W_{2,0} -> W_{1,0} x_{W_{0,0}} W_{1,0}."""
    if wb.n_max < 2:
        raise NotStrictSegal("need horizontal level 2 to compose")
    x1 = wb.levels[1]
    d0_1, d1_1 = wb.hfaces[1][0][0], wb.hfaces[1][1][0]
    d2, d0 = wb.hfaces[2][2][0], wb.hfaces[2][0][0]
    lift: dict[tuple[int, int], int] = {}
    for j in range(len(wb.levels[2].simplices[0])):
        key = (d2[j], d0[j])
        if key in lift:
            raise NotStrictSegal("vertex-level Segal map at n = 2 is not injective")
        lift[key] = j
    n1 = len(x1.simplices[0])
    by_source: dict[int, list[int]] = {}
    for b in range(n1):
        by_source.setdefault(d1_1[b], []).append(b)
    for a in range(n1):
        for b in by_source.get(d0_1[a], ()):
            if (a, b) not in lift:
                raise NotStrictSegal("vertex-level Segal map at n = 2 is not surjective")
    return lift


@dataclass(frozen=True)
class HoCategory:
    """Homotopy category; morphisms are named by their least representative vertex."""

    category: FinCat
    representatives: dict = field(repr=False)
    vertex_class: dict = field(repr=False)

    def class_of(self, vertex: Label) -> Label:
        return self.vertex_class[vertex]


def homotopy_category(wb: BiSimpSet) -> HoCategory:
    check_strict_fibers(wb)
    lift = _vertex_segal(wb)
    x0, x1 = wb.levels[0], wb.levels[1]
    fibers = _fibers(wb)
    vertex_class: dict[int, Label] = {}
    classes: dict[Label, list[int]] = {}
    mors = []
    for (a, b), keep in sorted(fibers.items()):
        sub = restrict(x1, keep)
        roots = _component_ids(sub) if sub.trunc >= 1 else list(range(len(sub.simplices[0])))
        groups: dict[int, list[int]] = {}
        for pos, r in enumerate(roots):
            groups.setdefault(r, []).append(keep[0][pos])
        for verts in groups.values():
            name = min((x1.simplices[0][v] for v in verts), key=sort_key)
            for v in verts:
                vertex_class[v] = name
            classes[name] = verts
            mors.append((name, x0.simplices[0][a], x0.simplices[0][b]))
    d1_1, d0_1 = wb.hfaces[1][1][0], wb.hfaces[1][0][0]
    s0 = wb.hdegens[0][0][0]
    identities = {x0.simplices[0][v]: vertex_class[s0[v]] for v in range(len(x0.simplices[0]))}
    d1_2 = wb.hfaces[2][1][0]
    compose: dict[tuple[Label, Label], Label] = {}
    for (f, g), j in lift.items():
        key = (vertex_class[g], vertex_class[f])
        h = vertex_class[d1_2[j]]
        prev = compose.setdefault(key, h)
        if prev != h:
            raise CategoryError(
                f"composition of classes {render(key[0])}∘{render(key[1])} depends on representatives"
            )
    cat = FinCat.build(x0.simplices[0], mors, identities, compose)
    problems = validate_category(cat)
    if problems:
        raise CategoryError("homotopy category fails axioms: " + "; ".join(map(str, problems[:3])))
    reps = {name: x1.simplices[0][verts[0]] for name, verts in classes.items()}
    return HoCategory(cat, reps, {x1.simplices[0][v]: c for v, c in vertex_class.items()})


@dataclass(frozen=True)
class HoequivSpace:
    space: SimpSet
    inclusion: SimpMap
    components: int
    of_components: int


def hoequiv_space(wb: BiSimpSet, ho: Optional[HoCategory] = None) -> HoequivSpace:
    """Union of the components of W_1 containing a vertex invertible in Ho(W)."""
    ho = homotopy_category(wb) if ho is None else ho
    x1 = wb.levels[1]
    roots = _component_ids(x1)
    good = {roots[v] for v, lab in enumerate(x1.simplices[0]) if ho.category.is_iso(ho.class_of(lab))}
    keep = [[j for j in range(len(x1.simplices[m])) if roots[x1.vertex_of(m, j)] in good] for m in range(x1.trunc + 1)]
    sub = restrict(x1, keep)
    incl = SimpMap(sub, x1, tuple(tuple(ks) for ks in keep))
    return HoequivSpace(sub, incl, len(good), len(set(roots)))


@dataclass(frozen=True)
class CompletenessReport:
    pi0_bijective: bool
    verdict: Verdict
    detail: str
    level0_components: int
    hoequiv_components: int
    strict_fiber_caveat: bool

    @property
    def complete(self) -> bool:
        return self.pi0_bijective and self.verdict is Verdict.EQUIVALENT


def completeness_check(wb: BiSimpSet, max_deg: Optional[int] = None) -> CompletenessReport:
    """Compare W_0 with W_hoequiv along the degeneracy s_0."""
    max_deg = wb.dim - 1 if max_deg is None else max_deg
    ho = homotopy_category(wb)
    he = hoequiv_space(wb, ho)
    x0, x1 = wb.levels[0], wb.levels[1]
    s0 = wb.hdegens[0][0]
    pos = {j: n for n, j in enumerate(he.inclusion.maps[0])}
    if any(s0[0][v] not in pos for v in range(len(x0.simplices[0]))):
        raise CategoryError("image of s_0 is not contained in the homotopy equivalences")
    r0 = _component_ids(x0)
    rh = _component_ids(he.space)
    image = {}
    for v in range(len(x0.simplices[0])):
        image.setdefault(r0[v], set()).add(rh[pos[s0[0][v]]])
    injective = all(len(t) == 1 for t in image.values()) and len({next(iter(t)) for t in image.values()}) == len(image)
    surjective = set().union(*image.values()) == set(rh) if image else not rh
    bijective = injective and surjective
    caveat = not is_discrete(x0)
    if not bijective:
        return CompletenessReport(False, Verdict.DISTINGUISHED, "s_0 is not a bijection on pi0", len(set(r0)), len(set(rh)), caveat)
    # compare each component of W_0 with the component it lands in
    comps0 = components(x0)
    compsh = components(he.space)
    order0 = sorted(set(r0))
    orderh = sorted(set(rh))
    for n, root in enumerate(order0):
        target = orderh.index(next(iter(image[root])))
        a = homology(comps0[n], max_deg).profile()
        b = homology(compsh[target], max_deg).profile()
        if a != b:
            return CompletenessReport(
                True, Verdict.DISTINGUISHED, f"component homology differs: {a} vs {b}", len(order0), len(orderh), caveat
            )
    return CompletenessReport(True, Verdict.EQUIVALENT, "pi0 bijective, component homology agrees", len(order0), len(orderh), caveat)


@dataclass(frozen=True)
class DKReport:
    equivalent: bool
    verdict: str
    failures: tuple[str, ...]
    pairs_checked: int


def dk_compare(f: BiSimpMap, max_deg: Optional[int] = None) -> DKReport:
    """Invariant-level Dwyer-Kan comparison of a map of strict Segal spaces."""
    src, tgt = f.source, f.target
    max_deg = min(src.dim, tgt.dim) - 1 if max_deg is None else max_deg
    ho_s, ho_t = homotopy_category(src), homotopy_category(tgt)
    objs_s, objs_t = objects(src), objects(tgt)
    on_obj = {x: objs_t[f.maps[0][0][i]] for i, x in enumerate(objs_s)}
    on_vert = {v: tgt.levels[1].simplices[0][f.maps[1][0][i]] for i, v in enumerate(src.levels[1].simplices[0])}
    failures = []
    pairs = 0
    for x, y in itertools.product(objs_s, repeat=2):
        pairs += 1
        fx, fy = on_obj[x], on_obj[y]
        ms, mt = mapping_space(src, x, y), mapping_space(tgt, fx, fy)
        rep = invariant_equiv(ms, mt, max_deg)
        if not rep.equivalent:
            failures.append(f"map({render(x)},{render(y)}) vs map({render(fx)},{render(fy)}): {rep.reason}")
            continue
        hom_s = ho_s.category.hom(x, y)
        images = {ho_t.class_of(on_vert[ho_s.representatives[h]]) for h in hom_s}
        if len(images) != len(hom_s) or len(images) != len(ho_t.category.hom(fx, fy)):
            failures.append(f"Ho(f) not bijective on Hom({render(x)},{render(y)})")
    classes_t = _iso_blocks(ho_t.category)
    hit = {classes_t[on_obj[x]] for x in objs_s}
    missing = [z for z in objs_t if classes_t[z] not in hit]
    if missing:
        failures.append(f"not essentially surjective: {render(missing[0])} is not isomorphic to an image")
    ok = not failures
    verdict = "DK-EQUIVALENT-AT-INVARIANT-LEVEL" if ok else "NOT-DK-EQUIVALENT"
    return DKReport(ok, verdict, tuple(failures), pairs)


def _iso_blocks(c: FinCat) -> dict[Label, int]:
    return {x: n for n, blk in enumerate(iso_classes(c)) for x in blk}
