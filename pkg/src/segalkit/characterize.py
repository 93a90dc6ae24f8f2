"""The classifying-diagram side computed directly from automorphism groups.

Level n of a classifying (or classification) diagram should be the disjoint
union, over iso classes of n-chains, of B Aut(chain).  Everything here works
from the composition table and never builds the diagram itself, so it can
serve as an independent check of it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

from .bisimp import FinSimpCat, classification_diagram, classifying_complex, classifying_diagram
from .fincat import CategoryError, FinCat, FinGroup, WeqSpec, iso_classes, we_subcategory
from .labels import Label, render
from .simpset import (
    EquivReport,
    FinSimpMonoid,
    MonoidLevel,
    SimpSet,
    disjoint_union,
    empty,
    invariant_equiv,
    pi0,
    restrict,
)


class NonGroupAutH(ValueError):
    """Aut^h(x) is a monoid but not a group; group completion is not attempted."""


# ---------------------------------------------------------------- chains and ladders


def _chains(c: FinCat, n: int) -> list[tuple[tuple[Label, ...], tuple[Label, ...]]]:
    """(objects x_0..x_n, arrows a_1..a_n) for every composable n-chain."""
    out = []

    def extend(objs, arrows):
        if len(arrows) == n:
            out.append((tuple(objs), tuple(arrows)))
            return
        for m in c.out_of(objs[-1]):
            objs.append(c.target[m])
            arrows.append(m)
            extend(objs, arrows)
            objs.pop()
            arrows.pop()

    for x in c.objects:
        extend([x], [])
    return out


def _ladders(c: FinCat, chain, vertical: frozenset) -> Iterator[tuple[tuple, tuple]]:
    """Pairs (target arrows, verticals) for invertible ladders out of ``chain``.

    Each vertical is invertible, so the target arrow b_i is forced to be
    v_i ∘ a_i ∘ v_{i-1}^{-1}.
    """
    objs, arrows = chain
    choices = [[m for m in c.out_of(x) if m in vertical] for x in objs]

    def extend(i, targets, verts):
        if i == len(objs):
            yield tuple(targets), tuple(verts)
            return
        for v in choices[i]:
            if i:
                b = c.comp(c.comp(v, arrows[i - 1]), c.inverse(verts[-1]))
                targets.append(b)
            verts.append(v)
            yield from extend(i + 1, targets, verts)
            verts.pop()
            if i:
                targets.pop()

    yield from extend(0, [], [])


def _vertical_set(c: FinCat, w: Optional[WeqSpec]) -> frozenset:
    if w is None:
        return frozenset(m for m in c.morphism_ids if c.is_iso(m))
    we_subcategory(c, w)
    bad = [m for m in w.morphisms if not c.is_iso(m)]
    if bad:
        raise CategoryError(
            f"characterization needs weak equivalences to be isomorphisms; {render(min(bad, key=str))} is not"
        )
    return frozenset(w.morphisms)


@dataclass(frozen=True)
class ChainClass:
    representative: tuple
    members: tuple
    automorphisms: FinGroup


def chain_classes(c: FinCat, n: int, w: Optional[WeqSpec] = None) -> list[ChainClass]:
    """Iso classes of n-chains under vertical ladders, with the stabilizer of a representative."""
    vertical = _vertical_set(c, w)
    chains = _chains(c, n)
    seen: set = set()
    out = []
    for chain in chains:
        if chain in seen:
            continue
        objs, arrows = chain
        orbit = {chain}
        autos = []
        for targets, verts in _ladders(c, chain, vertical):
            other = (tuple(c.target[v] for v in verts), targets)
            orbit.add(other)
            if other == chain:
                autos.append(verts)
        seen |= orbit
        mult = {(g, f): tuple(c.comp(a, b) for a, b in zip(g, f)) for g in autos for f in autos}
        ident = tuple(c.identities[x] for x in objs)
        members = tuple(sorted(orbit, key=lambda ch: (repr(ch[0]), repr(ch[1]))))
        out.append(ChainClass(chain, members, FinGroup(tuple(autos), mult, ident)))
    return out


def _constant(g: FinGroup, d: int) -> FinSimpMonoid:
    lv = MonoidLevel(g.elements, g.mult, g.identity)
    same = {a: a for a in g.elements}
    return FinSimpMonoid(
        tuple(lv for _ in range(d + 1)),
        tuple(tuple(same for _ in range(k + 1)) if k else () for k in range(d + 1)),
        tuple(tuple(same for _ in range(k + 1)) if k < d else () for k in range(d + 1)),
    )


def char_level(c: FinCat, n: int, w: Optional[WeqSpec] = None, d: int = 4) -> SimpSet:
    """Disjoint union over iso classes of n-chains of B Aut(chain)."""
    parts = [classifying_complex(_constant(cls.automorphisms, d)) for cls in chain_classes(c, n, w)]
    return disjoint_union(parts) if parts else empty(d)


# ---------------------------------------------------------------- level 0 for simplicial categories


def pi0_category(c: FinSimpCat) -> tuple[FinCat, dict[tuple[Label, Label], dict[Label, Label]]]:
    """The category of components, with the vertex-to-component assignment per hom."""
    blocks = {}
    morphisms = []
    for x, y in itertools.product(c.objects, repeat=2):
        assign = {}
        for block in pi0(c.map(x, y)):
            name = (x, y, block[0])
            morphisms.append((name, x, y))
            for v in block:
                assign[v] = name
        blocks[(x, y)] = assign
    compose = {}
    for x, y, z in itertools.product(c.objects, repeat=3):
        g_assign, f_assign = blocks[(y, z)], blocks[(x, y)]
        for gname in set(g_assign.values()):
            for fname in set(f_assign.values()):
                h = c.comp(x, y, z, 0, gname[2], fname[2])
                compose[(gname, fname)] = blocks[(x, z)][h]
    identities = {x: blocks[(x, x)][c.identities[x]] for x in c.objects}
    return FinCat.build(c.objects, morphisms, identities, compose), blocks


def endomorphism_monoid(c: FinSimpCat, x: Label) -> FinSimpMonoid:
    """Map(x, x) with composition, as a simplicial monoid."""
    return _submonoid(c, x, c.map(x, x))


def _submonoid(c: FinSimpCat, x: Label, sub: SimpSet) -> FinSimpMonoid:
    table = c.composition[(x, x, x)]
    levels = []
    for m in range(sub.trunc + 1):
        els = sub.simplices[m]
        mult = {(g, f): table[m][(g, f)] for g in els for f in els}
        levels.append(MonoidLevel(els, mult, c.identity_at(x, m)))
    faces = tuple(
        tuple({s: sub.face(m, i, s) for s in sub.simplices[m]} for i in range(m + 1)) if m else ()
        for m in range(sub.trunc + 1)
    )
    degens = tuple(
        tuple({s: sub.degen(m, i, s) for s in sub.simplices[m]} for i in range(m + 1)) if m < sub.trunc else ()
        for m in range(sub.trunc + 1)
    )
    return FinSimpMonoid(tuple(levels), faces, degens)


def aut_h(c: FinSimpCat, x: Label) -> FinSimpMonoid:
    """Components of Map(x, x) invertible in the component category, as a simplicial monoid."""
    cat, blocks = pi0_category(c)
    sp = c.map(x, x)
    good = {v for v, name in blocks[(x, x)].items() if cat.is_iso(name)}
    keep = [[i for i, s in enumerate(sp.simplices[m]) if sp.simplices[0][sp.vertex_of(m, 0)] in good] for m in range(sp.trunc + 1)]
    g = _submonoid(c, x, restrict(sp, keep))
    if not g.is_group():
        raise NonGroupAutH(f"Aut^h({render(x)}) is not a simplicial group; group completion is out of scope")
    return g


def char_level0(c: Union[FinCat, FinSimpCat], d: int = 4) -> SimpSet:
    """Disjoint union of B Aut^h(x), one x per equivalence class."""
    if isinstance(c, FinCat):
        return char_level(c, 0, None, d)
    cat, _ = pi0_category(c)
    parts = [classifying_complex(aut_h(c, block[0])) for block in iso_classes(cat)]
    return disjoint_union(parts) if parts else empty(c.dim)


def char_level1(c: FinCat, d: int = 4) -> SimpSet:
    return char_level(c, 1, None, d)


def char_level2(c: FinCat, d: int = 4) -> SimpSet:
    return char_level(c, 2, None, d)


# ---------------------------------------------------------------- verification


@dataclass(frozen=True)
class LevelVerdict:
    n: int
    report: EquivReport

    @property
    def equivalent(self) -> bool:
        return self.report.equivalent


@dataclass(frozen=True)
class CharacterizationReport:
    levels: tuple[LevelVerdict, ...]

    @property
    def all_equivalent(self) -> bool:
        return all(lv.equivalent for lv in self.levels)


def verify_characterization(
    c: FinCat,
    w: Optional[WeqSpec] = None,
    levels: Sequence[int] = (0, 1, 2),
    max_deg: int = 3,
    d: int = 4,
) -> CharacterizationReport:
    """Compare each requested level of the diagram with its characterization."""
    top = max(levels)
    vertical = _vertical_set(c, w)
    if w is None:
        wb = classifying_diagram(c, n_max=top, d=d)
    else:
        wb = classification_diagram(c, WeqSpec(vertical, w.two_of_three), n_max=top, d=d)
    out = []
    for n in sorted(set(levels)):
        out.append(LevelVerdict(n, invariant_equiv(wb.levels[n], char_level(c, n, w, d), max_deg)))
    return CharacterizationReport(tuple(out))
