"""Simplicial spaces (bisimplicial sets), built from categories and simplicial categories."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .fincat import (
    CategoryError,
    FinCat,
    FinFunctor,
    WeqSpec,
    arrow_category,
    chain_objects,
    iso_arrow_category,
    we_subcategory,
)
from .labels import Label, canonical, render
from .simpset import (
    FinSimpMonoid,
    SimpMap,
    SimpSet,
    SimplicialError,
    check_identities,
    discrete,
    fiber_product,
    invariant_equiv,
    nerve,
    nerve_data,
    nerve_map,
    product,
)

Table = tuple[int, ...]


@dataclass(frozen=True)
class BiSimpSet:
    """Simplicial space: ``levels[n]`` is the simplicial set X_{n,*}.

    ``hfaces[n][i][m]`` is the index table of the horizontal face
    d_i: X_{n,m} -> X_{n-1,m}; ``hdegens[n][i][m]`` likewise for
    s_i: X_{n,m} -> X_{n+1,m} (empty at the top horizontal level).
    """

    levels: tuple[SimpSet, ...]
    hfaces: tuple[tuple[tuple[Table, ...], ...], ...] = field(repr=False)
    hdegens: tuple[tuple[tuple[Table, ...], ...], ...] = field(repr=False)

    @classmethod
    def from_maps(
        cls,
        levels: Sequence[SimpSet],
        hface: Callable[[int, int, int, Label], Label],
        hdegen: Callable[[int, int, int, Label], Label],
    ) -> "BiSimpSet":
        """``hface(n, i, m, x)`` is d_i of the (n, m)-simplex x; same for ``hdegen``."""
        levels = tuple(levels)
        dims = {x.trunc for x in levels}
        if len(dims) != 1:
            raise SimplicialError(f"levels have different vertical truncations {sorted(dims)}")
        d = dims.pop()
        top = len(levels) - 1
        try:
            hfaces = tuple(
                ()
                if n == 0
                else tuple(
                    tuple(
                        tuple(levels[n - 1].index[m][hface(n, i, m, s)] for s in levels[n].simplices[m])
                        for m in range(d + 1)
                    )
                    for i in range(n + 1)
                )
                for n in range(top + 1)
            )
            hdegens = tuple(
                ()
                if n == top
                else tuple(
                    tuple(
                        tuple(levels[n + 1].index[m][hdegen(n, i, m, s)] for s in levels[n].simplices[m])
                        for m in range(d + 1)
                    )
                    for i in range(n + 1)
                )
                for n in range(top + 1)
            )
        except KeyError as exc:
            raise SimplicialError(f"horizontal map leaves the simplex set: {exc}") from None
        return cls(levels, hfaces, hdegens)

    @property
    def n_max(self) -> int:
        return len(self.levels) - 1

    @property
    def dim(self) -> int:
        return self.levels[0].trunc

    def counts(self) -> tuple[tuple[int, ...], ...]:
        return tuple(x.counts() for x in self.levels)

    def hface(self, n: int, i: int, m: int, label: Label) -> Label:
        lv = self.levels[n]
        return self.levels[n - 1].simplices[m][self.hfaces[n][i][m][lv.index[m][label]]]

    def hdegen(self, n: int, i: int, m: int, label: Label) -> Label:
        lv = self.levels[n]
        return self.levels[n + 1].simplices[m][self.hdegens[n][i][m][lv.index[m][label]]]

    def hface_map(self, n: int, i: int) -> SimpMap:
        return SimpMap(self.levels[n], self.levels[n - 1], self.hfaces[n][i])

    def hdegen_map(self, n: int, i: int) -> SimpMap:
        return SimpMap(self.levels[n], self.levels[n + 1], self.hdegens[n][i])

    def operator(self, theta: Sequence[int], n: int) -> tuple[Table, ...]:
        """Index tables of the map X_n -> X_k induced by monotone theta: [k] -> [n]."""
        theta = tuple(theta)
        if any(b < a for a, b in zip(theta, theta[1:])) or not theta or theta[-1] > n or theta[0] < 0:
            raise ValueError(f"{theta} is not a monotone map into [{n}]")
        d = self.dim
        tables = [tuple(range(len(self.levels[n].simplices[m]))) for m in range(d + 1)]
        image = sorted(set(theta))
        cur = n
        for i in sorted(set(range(n + 1)) - set(image), reverse=True):
            tables = [tuple(self.hfaces[cur][i][m][j] for j in tables[m]) for m in range(d + 1)]
            cur -= 1
        epi = [image.index(t) for t in theta]
        for t in range(len(epi) - 1):
            if epi[t] == epi[t + 1]:
                tables = [tuple(self.hdegens[cur][t][m][j] for j in tables[m]) for m in range(d + 1)]
                cur += 1
        return tuple(tables)

    def relabel(self, fn: Callable[[int, int, Label], Label]) -> "BiSimpSet":
        """Rename every (n, m)-simplex by ``fn(n, m, label)``."""
        levels = [x.relabel(lambda m, s, n=n: fn(n, m, s)) for n, x in enumerate(self.levels)]
        back = [[{fn(n, m, s): s for s in lvl} for m, lvl in enumerate(x.simplices)] for n, x in enumerate(self.levels)]
        return BiSimpSet.from_maps(
            levels,
            lambda n, i, m, s: fn(n - 1, m, self.hface(n, i, m, back[n][m][s])),
            lambda n, i, m, s: fn(n + 1, m, self.hdegen(n, i, m, back[n][m][s])),
        )


def check_bisimplicial(b: BiSimpSet) -> list[str]:
    """Simplicial identities in both directions plus commutation of the two structures."""
    errs = []
    for n, x in enumerate(b.levels):
        errs.extend(f"level {n}: {e}" for e in check_identities(x))
    for m in range(b.dim + 1):
        column = SimpSet(
            tuple(x.simplices[m] for x in b.levels),
            tuple(
                tuple(() for _ in b.levels[0].simplices[m])
                if n == 0
                else tuple(tuple(b.hfaces[n][i][m][j] for i in range(n + 1)) for j in range(len(b.levels[n].simplices[m])))
                for n in range(b.n_max + 1)
            ),
            tuple(
                tuple(() for _ in b.levels[n].simplices[m])
                if n == b.n_max
                else tuple(tuple(b.hdegens[n][i][m][j] for i in range(n + 1)) for j in range(len(b.levels[n].simplices[m])))
                for n in range(b.n_max + 1)
            ),
        )
        errs.extend(f"vertical dim {m}: {e}" for e in check_identities(column))
    for n in range(1, b.n_max + 1):
        for i in range(n + 1):
            if not b.hface_map(n, i).is_simplicial():
                errs.append(f"horizontal d{i} at level {n} does not commute with vertical maps")
    for n in range(b.n_max):
        for i in range(n + 1):
            if not b.hdegen_map(n, i).is_simplicial():
                errs.append(f"horizontal s{i} at level {n} does not commute with vertical maps")
    return errs


def is_discrete(x: SimpSet) -> bool:
    return all(not x.nondegenerate(k) for k in range(1, x.trunc + 1))


@dataclass(frozen=True)
class BiSimpMap:
    source: BiSimpSet
    target: BiSimpSet
    maps: tuple[tuple[Table, ...], ...] = field(repr=False)

    @classmethod
    def from_function(cls, source: BiSimpSet, target: BiSimpSet, fn: Callable[[int, int, Label], Label]) -> "BiSimpMap":
        try:
            maps = tuple(
                tuple(tuple(target.levels[n].index[m][fn(n, m, s)] for s in lvl) for m, lvl in enumerate(x.simplices))
                for n, x in enumerate(source.levels)
            )
        except KeyError as exc:
            raise SimplicialError(f"bisimplicial map leaves the target: {exc}") from None
        return cls(source, target, maps)

    def level(self, n: int) -> SimpMap:
        return SimpMap(self.source.levels[n], self.target.levels[n], self.maps[n])

    def is_bisimplicial(self) -> bool:
        s, t = self.source, self.target
        if not all(self.level(n).is_simplicial() for n in range(s.n_max + 1)):
            return False
        for n in range(1, s.n_max + 1):
            for i in range(n + 1):
                for m in range(s.dim + 1):
                    if any(
                        t.hfaces[n][i][m][self.maps[n][m][j]] != self.maps[n - 1][m][s.hfaces[n][i][m][j]]
                        for j in range(len(s.levels[n].simplices[m]))
                    ):
                        return False
        return True


def identity_bimap(b: BiSimpSet) -> BiSimpMap:
    return BiSimpMap(b, b, tuple(tuple(tuple(range(len(l))) for l in x.simplices) for x in b.levels))


# ---------------------------------------------------------------- diagonal and embeddings


def diagonal(b: BiSimpSet) -> SimpSet:
    """Diagonal simplicial set; truncated at min(n_max, vertical truncation)."""
    top = min(b.n_max, b.dim)
    levels = [b.levels[k].simplices[k] for k in range(top + 1)]

    def face(k, i, s):
        return b.levels[k - 1].face(k, i, b.hface(k, i, k, s))

    def degen(k, i, s):
        return b.levels[k + 1].degen(k, i, b.hdegen(k, i, k, s))

    return SimpSet.from_maps(levels, face, degen)


def const_embed(x: SimpSet, n_max: int) -> BiSimpSet:
    """Constant simplicial space with ``x`` at every horizontal level."""
    return BiSimpSet.from_maps([x] * (n_max + 1), lambda n, i, m, s: s, lambda n, i, m, s: s)


def transpose_embed(x: SimpSet, d: int) -> BiSimpSet:
    """Level n is the discrete simplicial set on X_n, truncated vertically at d."""
    levels = [discrete(x.simplices[n], d) for n in range(x.trunc + 1)]
    return BiSimpSet.from_maps(
        levels,
        lambda n, i, m, s: x.face(n, i, s),
        lambda n, i, m, s: x.degen(n, i, s),
    )


def levelwise_nerve(g: FinSimpMonoid, n_max: int) -> BiSimpSet:
    """(n, m)-simplices are n-tuples of elements of G_m."""
    d = g.trunc
    levels = []
    for n in range(n_max + 1):
        lv = [list(itertools.product(g.levels[m].elements, repeat=n)) for m in range(d + 1)]
        levels.append(
            SimpSet.from_maps(
                lv,
                lambda m, i, s: tuple(g.faces[m][i][a] for a in s),
                lambda m, i, s: tuple(g.degens[m][i][a] for a in s),
            )
        )

    def hface(n, i, m, s):
        if i == 0:
            return s[1:]
        if i == n:
            return s[:-1]
        return s[: i - 1] + (g.levels[m].mult[(s[i], s[i - 1])],) + s[i + 1 :]

    def hdegen(n, i, m, s):
        return s[:i] + (g.levels[m].unit,) + s[i:]

    return BiSimpSet.from_maps(levels, hface, hdegen)


def classifying_complex(g: FinSimpMonoid) -> SimpSet:
    """BG: the diagonal of the levelwise nerve."""
    return diagonal(levelwise_nerve(g, g.trunc))


# ---------------------------------------------------------------- simplicial categories


@dataclass(frozen=True)
class FinSimpCat:
    """Finite simplicial category.

    ``composition[(x, y, z)][m]`` maps (g, f) with g in Map(y, z)_m and f in
    Map(x, y)_m to g∘f in Map(x, z)_m.  ``identities[x]`` is a 0-simplex of
    Map(x, x).
    """

    objects: tuple[Label, ...]
    mapspaces: Mapping[tuple[Label, Label], SimpSet] = field(repr=False)
    identities: Mapping[Label, Label]
    composition: Mapping[tuple[Label, Label, Label], tuple[Mapping, ...]] = field(repr=False)

    @property
    def dim(self) -> int:
        return next(iter(self.mapspaces.values())).trunc

    def map(self, x: Label, y: Label) -> SimpSet:
        return self.mapspaces[(x, y)]

    def identity_at(self, x: Label, m: int) -> Label:
        """The identity of x as an m-simplex (iterated s_0)."""
        e = self.identities[x]
        mx = self.mapspaces[(x, x)]
        for k in range(m):
            e = mx.degen(k, 0, e)
        return e

    def comp(self, x, y, z, m: int, g: Label, f: Label) -> Label:
        return self.composition[(x, y, z)][m][(g, f)]

    def validate(self) -> list[str]:
        errs = []
        objs = self.objects
        dims = {sp.trunc for sp in self.mapspaces.values()}
        if len(dims) != 1:
            return [f"mapping spaces have different truncations {sorted(dims)}"]
        d = dims.pop()
        for x, y in itertools.product(objs, repeat=2):
            if (x, y) not in self.mapspaces:
                errs.append(f"missing Map({render(x)},{render(y)})")
        if errs:
            return errs
        for (x, y), sp in self.mapspaces.items():
            errs.extend(f"Map({render(x)},{render(y)}): {e}" for e in check_identities(sp))
        for x in objs:
            if self.identities.get(x) not in self.mapspaces[(x, x)].index[0]:
                errs.append(f"identity of {render(x)} is not a vertex of Map(x,x)")
        if errs:
            return errs
        for x, y, z in itertools.product(objs, repeat=3):
            table = self.composition.get((x, y, z))
            if table is None or len(table) != d + 1:
                errs.append(f"missing composition for {render(x)},{render(y)},{render(z)}")
                continue
            A, B, C = self.mapspaces[(y, z)], self.mapspaces[(x, y)], self.mapspaces[(x, z)]
            for m in range(d + 1):
                for g in A.simplices[m]:
                    for f in B.simplices[m]:
                        h = table[m].get((g, f))
                        if h is None or h not in C.index[m]:
                            errs.append(f"composite undefined at level {m}")
                            continue
                        if m > 0:
                            for i in range(m + 1):
                                if table[m - 1][(A.face(m, i, g), B.face(m, i, f))] != C.face(m, i, h):
                                    errs.append(f"composition does not commute with d{i} at level {m}")
                        if m < d:
                            for i in range(m + 1):
                                if table[m + 1][(A.degen(m, i, g), B.degen(m, i, f))] != C.degen(m, i, h):
                                    errs.append(f"composition does not commute with s{i} at level {m}")
        if errs:
            return errs
        for x, y in itertools.product(objs, repeat=2):
            sp = self.mapspaces[(x, y)]
            for m in range(d + 1):
                ix, iy = self.identity_at(x, m), self.identity_at(y, m)
                for f in sp.simplices[m]:
                    if self.comp(x, y, y, m, iy, f) != f or self.comp(x, x, y, m, f, ix) != f:
                        errs.append(f"unit law fails for {render(f)} in Map({render(x)},{render(y)})")
        for w, x, y, z in itertools.product(objs, repeat=4):
            for m in range(d + 1):
                for h in self.mapspaces[(y, z)].simplices[m]:
                    for g in self.mapspaces[(x, y)].simplices[m]:
                        hg = self.comp(x, y, z, m, h, g)
                        for f in self.mapspaces[(w, x)].simplices[m]:
                            if self.comp(w, x, z, m, hg, f) != self.comp(w, y, z, m, h, self.comp(w, x, y, m, g, f)):
                                errs.append(f"associativity fails at level {m}")
        return errs


def simpcat_from_fincat(c: FinCat, d: int) -> FinSimpCat:
    """A discrete category as a simplicial category with constant mapping spaces."""
    spaces = {(x, y): discrete(c.hom(x, y), d) for x in c.objects for y in c.objects}
    comp = {}
    for x, y, z in itertools.product(c.objects, repeat=3):
        table = {(g, f): c.compose[(g, f)] for g in c.hom(y, z) for f in c.hom(x, y)}
        comp[(x, y, z)] = tuple(table for _ in range(d + 1))
    return FinSimpCat(tuple(c.objects), spaces, dict(c.identities), comp)


def simpcat_from_monoid(g: FinSimpMonoid, obj: Label = "*") -> FinSimpCat:
    """One-object simplicial category whose endomorphisms are ``g``."""
    sp = g.underlying()
    comp = tuple(dict(lv.mult) for lv in g.levels)
    return FinSimpCat((obj,), {(obj, obj): sp}, {obj: g.levels[0].unit}, {(obj, obj, obj): comp})


def nerve_simpcat(c: FinSimpCat, n_max: int) -> BiSimpSet:
    """Nerve of a simplicial category; level 0 is discrete on the objects.

    Simplices are ``(object chain, tuple of mapping simplices)``.
    """
    d = c.dim
    levels = []
    for n in range(n_max + 1):
        parts = []
        for chain in itertools.product(c.objects, repeat=n + 1):
            spaces = [c.map(chain[j], chain[j + 1]) for j in range(n)]
            fac = product(spaces) if spaces else discrete([()], d)
            parts.append((chain, fac))
        lv = [[(chain, s) for chain, fac in parts for s in fac.simplices[m]] for m in range(d + 1)]
        facs = {chain: fac for chain, fac in parts}
        levels.append(
            SimpSet.from_maps(
                lv,
                lambda m, i, s, facs=facs: (s[0], facs[s[0]].face(m, i, s[1])),
                lambda m, i, s, facs=facs: (s[0], facs[s[0]].degen(m, i, s[1])),
            )
        )

    def hface(n, i, m, s):
        chain, maps = s
        if i == 0:
            return chain[1:], maps[1:]
        if i == n:
            return chain[:-1], maps[:-1]
        x, y, z = chain[i - 1], chain[i], chain[i + 1]
        h = c.comp(x, y, z, m, maps[i], maps[i - 1])
        return chain[:i] + chain[i + 1 :], maps[: i - 1] + (h,) + maps[i + 1 :]

    def hdegen(n, i, m, s):
        chain, maps = s
        x = chain[i]
        return chain[: i + 1] + chain[i:], maps[:i] + (c.identity_at(x, m),) + maps[i:]

    return BiSimpSet.from_maps(levels, hface, hdegen)


# ---------------------------------------------------------------- classifying diagrams


def face_theta(n: int, i: int) -> tuple[int, ...]:
    """Coface delta_i: [n-1] -> [n] skipping i."""
    return tuple(j for j in range(n + 1) if j != i)


def degen_theta(n: int, i: int) -> tuple[int, ...]:
    """Codegeneracy sigma_i: [n+1] -> [n] hitting i twice."""
    return tuple(range(i + 1)) + tuple(range(i, n + 1))


def restrict_chain(c: FinCat, chain, n: int, theta: Sequence[int]):
    """Object of C^[k] obtained by precomposing an n-chain with theta: [k] -> [n]."""
    xs = chain_objects(c, chain, n)
    k = len(theta) - 1
    if k == 0:
        return xs[theta[0]]
    out = []
    for a, b in zip(theta, theta[1:]):
        if a == b:
            out.append(c.identities[xs[a]])
        else:
            h = chain[a]
            for f in chain[a + 1 : b]:
                h = c.compose[(f, h)]
            out.append(h)
    return tuple(out)


def restrict_ladder(c: FinCat, mor, n: int, theta: Sequence[int]):
    k = len(theta) - 1
    if n == 0:
        verts = (mor,) * len(theta)
        alpha = beta = None
    else:
        alpha, beta, verts = mor
    if k == 0:
        return verts[theta[0]]
    if n == 0:
        src, tgt = c.source[mor], c.target[mor]
        return (
            tuple(c.identities[src] for _ in range(k)),
            tuple(c.identities[tgt] for _ in range(k)),
            tuple(verts[t] for t in theta),
        )
    return (
        restrict_chain(c, alpha, n, theta),
        restrict_chain(c, beta, n, theta),
        tuple(verts[t] for t in theta),
    )


def _diagram_from_categories(c: FinCat, cats: Sequence[FinCat], d: int) -> BiSimpSet:
    """Levelwise nerves of subcategories of C^[n], with horizontal maps induced
    by precomposition along the coface / codegeneracy maps of [n]."""
    data = [nerve_data(cat, d) for cat in cats]
    top = len(cats) - 1

    def tables(n, k, theta):
        return nerve_map(
            data[n],
            data[k],
            lambda x: restrict_chain(c, x, n, theta),
            lambda m: restrict_ladder(c, m, n, theta),
        )

    hfaces = tuple(
        () if n == 0 else tuple(tables(n, n - 1, face_theta(n, i)) for i in range(n + 1)) for n in range(top + 1)
    )
    hdegens = tuple(
        () if n == top else tuple(tables(n, n + 1, degen_theta(n, i)) for i in range(n + 1)) for n in range(top + 1)
    )
    return BiSimpSet(tuple(x.space for x in data), hfaces, hdegens)


def classifying_diagram(c: FinCat, n_max: int = 3, d: int = 4) -> BiSimpSet:
    """Level n is nerve(iso(C^[n])) truncated at d."""
    cats = [iso_arrow_category(c, n) for n in range(n_max + 1)]
    return _diagram_from_categories(c, cats, d)


def classification_diagram(c: FinCat, w: WeqSpec, n_max: int = 3, d: int = 4) -> BiSimpSet:
    """Level n is nerve(we(C^[n])): ladders whose components all lie in ``w``."""
    we_subcategory(c, w)
    cats = [arrow_category(c, n, vertical=w.morphisms) for n in range(n_max + 1)]
    return _diagram_from_categories(c, cats, d)


def classifying_diagram_map(f: FinFunctor, n_max: int = 3, d: int = 4) -> BiSimpMap:
    """The map N(C) -> N(D) induced by a functor."""
    src_cats = [iso_arrow_category(f.source, n) for n in range(n_max + 1)]
    tgt_cats = [iso_arrow_category(f.target, n) for n in range(n_max + 1)]
    src = _diagram_from_categories(f.source, src_cats, d)
    tgt = _diagram_from_categories(f.target, tgt_cats, d)
    maps = tuple(
        nerve_map(
            nerve_data(src_cats[n], d),
            nerve_data(tgt_cats[n], d),
            lambda x, n=n: f.on_chain(x, n),
            lambda m, n=n: f.on_ladder(m, n),
        )
        for n in range(n_max + 1)
    )
    return BiSimpMap(src, tgt, maps)


# ---------------------------------------------------------------- Segal maps


@dataclass(frozen=True)
class SegalTarget:
    """W_1 x_{W_0} ... x_{W_0} W_1 (n factors) with its projections onto W_1."""

    space: SimpSet
    projections: tuple[SimpMap, ...]


def segal_target(wb: BiSimpSet, n: int) -> SegalTarget:
    if n < 2 or n > wb.n_max:
        raise ValueError(f"n must lie in 2..{wb.n_max}")
    x1 = wb.levels[1]
    d0, d1 = wb.hface_map(1, 0), wb.hface_map(1, 1)
    space, projs = x1, [SimpMap(x1, x1, tuple(tuple(range(len(l))) for l in x1.simplices))]
    for _ in range(n - 1):
        last = projs[-1]
        to_base = SimpMap(space, wb.levels[0], tuple(tuple(d0.maps[m][j] for j in last.maps[m]) for m in range(space.trunc + 1)))
        pb = fiber_product(to_base, d1)
        projs = [
            SimpMap(pb.space, x1, tuple(tuple(p.maps[m][j] for j in pb.left.maps[m]) for m in range(pb.space.trunc + 1)))
            for p in projs
        ] + [SimpMap(pb.space, x1, pb.right.maps)]
        space = pb.space
    return SegalTarget(space, tuple(projs))


def segal_map(wb: BiSimpSet, n: int) -> tuple[SimpMap, SegalTarget]:
    """The canonical map W_n -> segal_target(W, n) through the edge inclusions."""
    target = segal_target(wb, n)
    edges = [wb.operator((j - 1, j), n) for j in range(1, n + 1)]
    x1 = wb.levels[1]

    def label(m, j):
        lab = x1.simplices[m][edges[0][m][j]]
        for e in edges[1:]:
            lab = (lab, x1.simplices[m][e[m][j]])
        return lab

    src = wb.levels[n]
    maps = tuple(
        tuple(target.space.index[m].get(label(m, j), -1) for j in range(len(src.simplices[m])))
        for m in range(src.trunc + 1)
    )
    if any(-1 in level for level in maps):
        raise SimplicialError("Segal map leaves its target; horizontal structure is inconsistent")
    return SimpMap(src, target.space, maps), target


class SegalStatus(str, Enum):
    ISO = "ISO"
    INVARIANT_EQUIVALENT = "INVARIANT-EQUIVALENT"
    DISTINGUISHED = "DISTINGUISHED"


@dataclass(frozen=True)
class SegalLevelReport:
    n: int
    status: SegalStatus
    source_counts: tuple[int, ...]
    target_counts: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class SegalReport:
    levels: tuple[SegalLevelReport, ...]
    strict_fiber_caveat: bool

    @property
    def all_iso(self) -> bool:
        return all(r.status is SegalStatus.ISO for r in self.levels)


def segal_check(wb: BiSimpSet, n_max: Optional[int] = None, max_deg: Optional[int] = None) -> SegalReport:
    """Classify the Segal map at each 2 <= n <= n_max.

    ISO means a levelwise bijection commuting with the vertical structure;
    otherwise the two sides are compared by pi0 and homology.
    """
    n_max = wb.n_max if n_max is None else n_max
    if n_max < 2:
        raise ValueError("Segal maps need n_max >= 2")
    max_deg = wb.dim - 1 if max_deg is None else max_deg
    out = []
    for n in range(2, n_max + 1):
        phi, target = segal_map(wb, n)
        if phi.is_bijective() and phi.is_simplicial():
            out.append(SegalLevelReport(n, SegalStatus.ISO, phi.source.counts(), target.space.counts(), "levelwise bijection"))
            continue
        rep = invariant_equiv(phi.source, target.space, max_deg)
        status = SegalStatus.INVARIANT_EQUIVALENT if rep.equivalent else SegalStatus.DISTINGUISHED
        out.append(SegalLevelReport(n, status, phi.source.counts(), target.space.counts(), rep.reason))
    return SegalReport(tuple(out), not is_discrete(wb.levels[0]))
