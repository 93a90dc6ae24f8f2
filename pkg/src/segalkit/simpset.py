"""Truncated simplicial sets and their computable invariants."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .fincat import FinCat, FinGroup
from .labels import Label, canonical, render, sort_key
from .snf import invariant_factors


class SimplicialError(ValueError):
    pass


@dataclass(frozen=True)
class SimpSet:
    """A simplicial set truncated at dimension ``trunc``.

    Simplices of each dimension are stored in canonical label order and all
    structure maps are index tables: ``faces[k][j][i]`` is the index of
    ``d_i`` of simplex ``j`` in dimension ``k - 1`` and ``degens[k][j][i]``
    the index of ``s_i`` in dimension ``k + 1`` (empty at the top).
    """

    simplices: tuple[tuple[Label, ...], ...]
    faces: tuple[tuple[tuple[int, ...], ...], ...] = field(repr=False)
    degens: tuple[tuple[tuple[int, ...], ...], ...] = field(repr=False)

    @classmethod
    def from_maps(
        cls,
        levels: Sequence[Iterable[Label]],
        face: Callable[[int, int, Label], Label],
        degen: Callable[[int, int, Label], Label],
    ) -> "SimpSet":
        """Build from label-level structure maps ``face(k, i, x)`` and ``degen(k, i, x)``."""
        simplices = tuple(canonical(level) for level in levels)
        index = [{s: j for j, s in enumerate(level)} for level in simplices]
        d = len(simplices) - 1
        try:
            faces = tuple(
                tuple(() for _ in simplices[0])
                if k == 0
                else tuple(tuple(index[k - 1][face(k, i, s)] for i in range(k + 1)) for s in simplices[k])
                for k in range(d + 1)
            )
            degens = tuple(
                tuple(() for _ in simplices[k])
                if k == d
                else tuple(tuple(index[k + 1][degen(k, i, s)] for i in range(k + 1)) for s in simplices[k])
                for k in range(d + 1)
            )
        except KeyError as exc:
            raise SimplicialError(f"structure map leaves the simplex set: {exc}") from None
        return cls(simplices, faces, degens)

    @property
    def trunc(self) -> int:
        return len(self.simplices) - 1

    @cached_property
    def index(self) -> tuple[dict[Label, int], ...]:
        return tuple({s: j for j, s in enumerate(level)} for level in self.simplices)

    def face(self, k: int, i: int, label: Label) -> Label:
        return self.simplices[k - 1][self.faces[k][self.index[k][label]][i]]

    def degen(self, k: int, i: int, label: Label) -> Label:
        return self.simplices[k + 1][self.degens[k][self.index[k][label]][i]]

    def counts(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.simplices)

    @cached_property
    def degenerate(self) -> tuple[frozenset[int], ...]:
        """Indices per dimension lying in the image of some degeneracy."""
        out = [set() for _ in self.simplices]
        for k in range(self.trunc):
            for row in self.degens[k]:
                out[k + 1].update(row)
        return tuple(frozenset(s) for s in out)

    def nondegenerate(self, k: int) -> list[int]:
        deg = self.degenerate[k]
        return [j for j in range(len(self.simplices[k])) if j not in deg]

    def vertex_of(self, k: int, j: int) -> int:
        """Index of the last vertex of simplex ``j`` in dimension ``k``."""
        while k > 0:
            j = self.faces[k][j][0]
            k -= 1
        return j

    def truncate(self, d: int) -> "SimpSet":
        if d > self.trunc:
            raise SimplicialError(f"cannot raise truncation {self.trunc} to {d}")
        degens = self.degens[:d] + (tuple(() for _ in self.simplices[d]),)
        return SimpSet(self.simplices[: d + 1], self.faces[: d + 1], degens)

    def relabel(self, fn: Callable[[int, Label], Label]) -> "SimpSet":
        return SimpSet.from_maps(
            [[fn(k, s) for s in level] for k, level in enumerate(self.simplices)],
            _relabelled(self, fn, "face"),
            _relabelled(self, fn, "degen"),
        )

    def __str__(self) -> str:
        return f"SimpSet(trunc={self.trunc}, counts={self.counts()})"


def _relabelled(x: SimpSet, fn, kind):
    back = [{fn(k, s): s for s in level} for k, level in enumerate(x.simplices)]
    if kind == "face":
        return lambda k, i, s: fn(k - 1, x.face(k, i, back[k][s]))
    return lambda k, i, s: fn(k + 1, x.degen(k, i, back[k][s]))


def check_identities(x: SimpSet) -> list[str]:
    """Violations of the simplicial identities within the truncation."""
    errs = []
    d = x.trunc
    F, S = x.faces, x.degens
    for k in range(2, d + 1):
        for j in range(len(x.simplices[k])):
            for a in range(k + 1):
                for b in range(a + 1, k + 1):
                    # d_a d_b = d_{b-1} d_a
                    if F[k - 1][F[k][j][b]][a] != F[k - 1][F[k][j][a]][b - 1]:
                        errs.append(f"d{a}d{b} != d{b - 1}d{a} on {render(x.simplices[k][j])}")
    for k in range(0, d - 1):
        for j in range(len(x.simplices[k])):
            for a in range(k + 1):
                for b in range(a, k + 1):
                    # s_a s_b = s_{b+1} s_a
                    if S[k + 1][S[k][j][b]][a] != S[k + 1][S[k][j][a]][b + 1]:
                        errs.append(f"s{a}s{b} != s{b + 1}s{a} on {render(x.simplices[k][j])}")
    for k in range(0, d):
        for j in range(len(x.simplices[k])):
            for jj in range(k + 1):
                t = S[k][j][jj]
                for i in range(k + 2):
                    got = F[k + 1][t][i]
                    if i in (jj, jj + 1):
                        want = j
                    elif k == 0:
                        continue
                    elif i < jj:
                        want = S[k - 1][F[k][j][i]][jj - 1]
                    else:
                        want = S[k - 1][F[k][j][i - 1]][jj]
                    if got != want:
                        errs.append(f"d{i}s{jj} identity fails on {render(x.simplices[k][j])}")
    return errs


@dataclass(frozen=True)
class SimpMap:
    source: SimpSet
    target: SimpSet
    maps: tuple[tuple[int, ...], ...] = field(repr=False)

    @classmethod
    def from_function(cls, source: SimpSet, target: SimpSet, fn: Callable[[int, Label], Label]) -> "SimpMap":
        try:
            maps = tuple(
                tuple(target.index[k][fn(k, s)] for s in level) for k, level in enumerate(source.simplices)
            )
        except KeyError as exc:
            raise SimplicialError(f"map leaves the target: {exc}") from None
        return cls(source, target, maps)

    def __call__(self, k: int, label: Label) -> Label:
        return self.target.simplices[k][self.maps[k][self.source.index[k][label]]]

    def is_simplicial(self) -> bool:
        src, tgt, m = self.source, self.target, self.maps
        if src.trunc > tgt.trunc:
            return False
        for k in range(src.trunc + 1):
            for j in range(len(src.simplices[k])):
                if k > 0 and any(tgt.faces[k][m[k][j]][i] != m[k - 1][src.faces[k][j][i]] for i in range(k + 1)):
                    return False
                if k < src.trunc and any(
                    tgt.degens[k][m[k][j]][i] != m[k + 1][src.degens[k][j][i]] for i in range(k + 1)
                ):
                    return False
        return True

    def is_bijective(self) -> bool:
        return all(
            len(set(level)) == len(level) == len(self.target.simplices[k]) for k, level in enumerate(self.maps)
        )


def identity_map(x: SimpSet) -> SimpMap:
    return SimpMap(x, x, tuple(tuple(range(len(level))) for level in x.simplices))


def compose_maps(g: SimpMap, f: SimpMap) -> SimpMap:
    return SimpMap(f.source, g.target, tuple(tuple(g.maps[k][j] for j in level) for k, level in enumerate(f.maps)))


# ---------------------------------------------------------------- constructions


def point(d: int) -> SimpSet:
    return discrete(["*"], d)


def empty(d: int) -> SimpSet:
    return SimpSet(tuple(() for _ in range(d + 1)), tuple(() for _ in range(d + 1)), tuple(() for _ in range(d + 1)))


def discrete(points: Iterable[Label], d: int) -> SimpSet:
    """Constant simplicial set: each point is its own (degenerate) k-simplex."""
    pts = list(points)
    return SimpSet.from_maps([pts] * (d + 1), lambda k, i, s: s, lambda k, i, s: s)


def standard_simplex(n: int, d: int) -> SimpSet:
    """Delta[n] truncated at d; k-simplices are nondecreasing (k+1)-tuples in [n]."""
    levels = [list(itertools.combinations_with_replacement(range(n + 1), k + 1)) for k in range(d + 1)]
    return SimpSet.from_maps(
        levels,
        lambda k, i, s: s[:i] + s[i + 1 :],
        lambda k, i, s: s[: i + 1] + s[i:],
    )


@dataclass(frozen=True)
class NerveData:
    """A nerve together with its integer encoding.

    ``chains[k]`` lists the k-simplices as tuples of morphism positions (into
    ``category.morphism_ids``); 0-simplices are object positions.
    """

    space: SimpSet
    category: FinCat
    objects: tuple[Label, ...]
    morphisms: tuple[Label, ...]
    chains: tuple[tuple, ...] = field(repr=False)
    positions: tuple[dict, ...] = field(repr=False)


def nerve_data(c: FinCat, d: int) -> NerveData:
    objs = canonical(c.objects)
    mors = canonical(c.morphism_ids)
    obj_pos = {x: i for i, x in enumerate(objs)}
    mor_pos = {m: i for i, m in enumerate(mors)}
    src = [obj_pos[c.source[m]] for m in mors]
    tgt = [obj_pos[c.target[m]] for m in mors]
    ident = [mor_pos[c.identities[x]] for x in objs]
    out = [[] for _ in objs]
    for i in range(len(mors)):
        out[src[i]].append(i)
    # composites only enter from dimension 2 on
    comp = {(mor_pos[g], mor_pos[f]): mor_pos[h] for (g, f), h in c.compose.items()} if d >= 2 else {}

    chains: list[list] = [list(range(len(objs)))]
    if d >= 1:
        level = [(i,) for i in range(len(mors))]
        chains.append(level)
        for _ in range(2, d + 1):
            level = [ch + (g,) for ch in level for g in out[tgt[ch[-1]]]]
            chains.append(level)
    # morphism and object positions follow canonical order, so lexicographic
    # order of the integer chains is the canonical order of their labels
    positions = [{ch: j for j, ch in enumerate(level)} for level in chains]

    faces = [tuple(() for _ in chains[0])]
    degens = []
    for k in range(1, d + 1):
        low = positions[k - 1]
        rows = []
        for s in chains[k]:
            if k == 1:
                rows.append((tgt[s[0]], src[s[0]]))
                continue
            row = [low[s[1:]]]
            for i in range(1, k):
                row.append(low[s[: i - 1] + (comp[(s[i], s[i - 1])],) + s[i + 1 :]])
            row.append(low[s[:-1]])
            rows.append(tuple(row))
        faces.append(tuple(rows))
    for k in range(d + 1):
        if k == d:
            degens.append(tuple(() for _ in chains[k]))
            continue
        up = positions[k + 1]
        if k == 0:
            degens.append(tuple((up[(ident[x],)],) for x in chains[0]))
            continue
        rows = []
        for s in chains[k]:
            row = []
            for i in range(k + 1):
                x_i = src[s[0]] if i == 0 else tgt[s[i - 1]]
                row.append(up[s[:i] + (ident[x_i],) + s[i:]])
            rows.append(tuple(row))
        degens.append(tuple(rows))
    simplices = [tuple(objs)] + [tuple(tuple(mors[i] for i in ch) for ch in level) for level in chains[1:]]
    space = SimpSet(tuple(simplices), tuple(faces), tuple(degens))
    return NerveData(space, c, objs, mors, tuple(tuple(l) for l in chains), tuple(positions))


def nerve(c: FinCat, d: int) -> SimpSet:
    """Nerve of a finite category truncated at ``d``.

    A k-simplex (k >= 1) is a tuple ``(f_1, ..., f_k)`` of composable
    morphisms with d_0 dropping f_1, d_k dropping f_k and the inner faces
    composing; 0-simplices are the objects.
    """
    return nerve_data(c, d).space


def nerve_map(source: NerveData, target: NerveData, on_objects, on_morphisms) -> tuple[tuple[int, ...], ...]:
    """Index tables of the simplicial map induced by a functor between the nerves."""
    tobj = {x: i for i, x in enumerate(target.objects)}
    tmor = {m: i for i, m in enumerate(target.morphisms)}
    omap = [tobj[on_objects(x)] for x in source.objects]
    mmap = [tmor[on_morphisms(m)] for m in source.morphisms]
    tables = [tuple(target.positions[0][omap[x]] for x in source.chains[0])]
    for k in range(1, len(source.chains)):
        pos = target.positions[k]
        tables.append(tuple(pos[tuple(mmap[i] for i in ch)] for ch in source.chains[k]))
    return tuple(tables)


def disjoint_union(xs: Sequence[SimpSet]) -> SimpSet:
    if not xs:
        raise SimplicialError("disjoint union of nothing has no truncation")
    d = xs[0].trunc
    if any(x.trunc != d for x in xs):
        raise SimplicialError(f"mismatched truncations {[x.trunc for x in xs]}")
    levels = [[(t, s) for t, x in enumerate(xs) for s in x.simplices[k]] for k in range(d + 1)]
    return SimpSet.from_maps(
        levels,
        lambda k, i, s: (s[0], xs[s[0]].face(k, i, s[1])),
        lambda k, i, s: (s[0], xs[s[0]].degen(k, i, s[1])),
    )


def product(xs: Sequence[SimpSet]) -> SimpSet:
    """Levelwise product; k-simplices are tuples of k-simplices."""
    d = min(x.trunc for x in xs) if xs else 0
    levels = [list(itertools.product(*(x.simplices[k] for x in xs))) for k in range(d + 1)]
    return SimpSet.from_maps(
        levels,
        lambda k, i, s: tuple(x.face(k, i, a) for x, a in zip(xs, s)),
        lambda k, i, s: tuple(x.degen(k, i, a) for x, a in zip(xs, s)),
    )


@dataclass(frozen=True)
class Pullback:
    space: SimpSet
    left: SimpMap
    right: SimpMap


def fiber_product(f: SimpMap, g: SimpMap) -> Pullback:
    """Levelwise pullback of X -f-> Z <-g- Y; simplices are pairs (x, y)."""
    if f.target != g.target:
        raise SimplicialError("maps do not share a target")
    if not (f.is_simplicial() and g.is_simplicial()):
        raise SimplicialError("input maps are not simplicial")
    X, Y = f.source, g.source
    d = min(X.trunc, Y.trunc)
    levels = []
    for k in range(d + 1):
        by_image: dict[int, list[Label]] = {}
        for j, y in enumerate(Y.simplices[k]):
            by_image.setdefault(g.maps[k][j], []).append(y)
        levels.append([(x, y) for j, x in enumerate(X.simplices[k]) for y in by_image.get(f.maps[k][j], ())])
    space = SimpSet.from_maps(
        levels,
        lambda k, i, s: (X.face(k, i, s[0]), Y.face(k, i, s[1])),
        lambda k, i, s: (X.degen(k, i, s[0]), Y.degen(k, i, s[1])),
    )
    left = SimpMap.from_function(space, X.truncate(d) if X.trunc > d else X, lambda k, s: s[0])
    right = SimpMap.from_function(space, Y.truncate(d) if Y.trunc > d else Y, lambda k, s: s[1])
    return Pullback(space, left, right)


def restrict(x: SimpSet, keep: Sequence[Iterable[int]]) -> SimpSet:
    """Sub-simplicial set on the given simplex indices (must be closed)."""
    keep_sets = [sorted(set(k)) for k in keep]
    pos = [{j: n for n, j in enumerate(ks)} for ks in keep_sets]
    try:
        simplices = tuple(tuple(x.simplices[k][j] for j in ks) for k, ks in enumerate(keep_sets))
        faces = tuple(
            tuple(() if k == 0 else tuple(pos[k - 1][i] for i in x.faces[k][j]) for j in ks)
            for k, ks in enumerate(keep_sets)
        )
        degens = tuple(
            tuple(tuple(pos[k + 1][i] for i in x.degens[k][j]) if k < x.trunc else () for j in ks)
            for k, ks in enumerate(keep_sets)
        )
    except KeyError:
        raise SimplicialError("subset is not closed under structure maps") from None
    return SimpSet(simplices, faces, degens)


# ---------------------------------------------------------------- components and homology


def _component_ids(x: SimpSet) -> list[int]:
    n = len(x.simplices[0])
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    if x.trunc >= 1:
        for d0, d1 in x.faces[1]:
            a, b = find(d0), find(d1)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def pi0(x: SimpSet) -> tuple[tuple[Label, ...], ...]:
    """Connected components as blocks of vertex labels, in canonical order."""
    if x.trunc < 1:
        raise SimplicialError("pi0 needs 1-simplices (trunc >= 1)")
    roots = _component_ids(x)
    blocks: dict[int, list[Label]] = {}
    for v, r in enumerate(roots):
        blocks.setdefault(r, []).append(x.simplices[0][v])
    return tuple(tuple(b) for _, b in sorted(blocks.items()))


def components(x: SimpSet) -> list[SimpSet]:
    """Connected components as sub-simplicial sets, ordered by least vertex."""
    roots = _component_ids(x)
    order = sorted(set(roots))
    slot = {r: n for n, r in enumerate(order)}
    keep: list[list[list[int]]] = [[[] for _ in x.simplices] for _ in order]
    for k, level in enumerate(x.simplices):
        for j in range(len(level)):
            keep[slot[roots[x.vertex_of(k, j)]]][k].append(j)
    return [restrict(x, ks) for ks in keep]


def boundary_columns(x: SimpSet, k: int) -> tuple[list[dict[int, int]], int]:
    """Normalized boundary matrix d_k as sparse columns, plus its row count."""
    rows = x.nondegenerate(k - 1)
    row_pos = {j: n for n, j in enumerate(rows)}
    cols = []
    for j in x.nondegenerate(k):
        col: dict[int, int] = {}
        for i, f in enumerate(x.faces[k][j]):
            r = row_pos.get(f)
            if r is not None:
                col[r] = col.get(r, 0) + (-1) ** i
        cols.append({r: v for r, v in col.items() if v})
    return cols, len(rows)


@dataclass(frozen=True)
class HomologyResult:
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    components: int

    def profile(self) -> tuple:
        return (self.betti, self.torsion)

    def euler(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))

    def is_trivial(self) -> bool:
        """Homology of a point in the reported range."""
        return self.betti[0] == 1 and not any(self.betti[1:]) and not any(self.torsion)


def homology(x: SimpSet, max_deg: int) -> HomologyResult:
    """Integral homology H_0..H_max_deg of the normalized chain complex."""
    if max_deg < 0 or max_deg > x.trunc - 1:
        raise SimplicialError(f"max_deg must lie in 0..{x.trunc - 1} (trunc {x.trunc})")
    factors = {}
    for k in range(1, max_deg + 2):
        cols, nrows = boundary_columns(x, k)
        factors[k] = invariant_factors(cols, nrows)
    betti, torsion = [], []
    for k in range(max_deg + 1):
        n_k = len(x.nondegenerate(k))
        rank_out = len(factors[k]) if k >= 1 else 0
        rank_in = len(factors[k + 1])
        betti.append(n_k - rank_out - rank_in)
        torsion.append(tuple(f for f in factors[k + 1] if f > 1))
    comps = len(set(_component_ids(x)))
    return HomologyResult(tuple(betti), tuple(torsion), comps)


def euler_characteristic(x: SimpSet, top: Optional[int] = None) -> int:
    top = x.trunc if top is None else top
    return sum((-1) ** k * len(x.nondegenerate(k)) for k in range(top + 1))


class Verdict(str, Enum):
    EQUIVALENT = "EQUIVALENT-AT-INVARIANT-LEVEL"
    DISTINGUISHED = "DISTINGUISHED"


@dataclass(frozen=True)
class EquivReport:
    verdict: Verdict
    reason: str
    components: tuple[int, int]
    profiles: tuple[tuple, tuple]

    @property
    def equivalent(self) -> bool:
        return self.verdict is Verdict.EQUIVALENT


def component_profiles(x: SimpSet, max_deg: int) -> list[tuple]:
    return [homology(comp, max_deg).profile() for comp in components(x)]


def invariant_equiv(x: SimpSet, y: SimpSet, max_deg: int) -> EquivReport:
    """Compare pi0 and the multiset of per-component homology up to ``max_deg``.

    Agreement is necessary for a weak equivalence, never sufficient.
    """
    if max_deg > min(x.trunc, y.trunc) - 1:
        raise SimplicialError("max_deg exceeds the reliable range of the truncations")
    px = sorted(component_profiles(x, max_deg))
    py = sorted(component_profiles(y, max_deg))
    counts = (len(px), len(py))
    if counts[0] != counts[1]:
        return EquivReport(Verdict.DISTINGUISHED, f"pi0: {counts[0]} vs {counts[1]} components", counts, (tuple(px), tuple(py)))
    if px != py:
        diff = Counter(px) - Counter(py)
        bad = next(iter(diff))
        return EquivReport(
            Verdict.DISTINGUISHED,
            f"component homology differs: betti={bad[0]} torsion={bad[1]} unmatched",
            counts,
            (tuple(px), tuple(py)),
        )
    return EquivReport(Verdict.EQUIVALENT, "pi0 and per-component homology agree", counts, (tuple(px), tuple(py)))


# ---------------------------------------------------------------- simplicial monoids


@dataclass(frozen=True)
class MonoidLevel:
    elements: tuple[Label, ...]
    mult: Mapping[tuple[Label, Label], Label] = field(repr=False)
    unit: Label = None


@dataclass(frozen=True)
class FinSimpMonoid:
    """Truncated simplicial monoid; ``faces[k][i]`` maps level k to k-1."""

    levels: tuple[MonoidLevel, ...]
    faces: tuple[tuple[Mapping[Label, Label], ...], ...] = field(repr=False)
    degens: tuple[tuple[Mapping[Label, Label], ...], ...] = field(repr=False)

    @property
    def trunc(self) -> int:
        return len(self.levels) - 1

    def underlying(self) -> SimpSet:
        return SimpSet.from_maps(
            [lv.elements for lv in self.levels],
            lambda k, i, s: self.faces[k][i][s],
            lambda k, i, s: self.degens[k][i][s],
        )

    def is_group(self) -> bool:
        for lv in self.levels:
            for a in lv.elements:
                if not any(lv.mult[(a, b)] == lv.unit == lv.mult[(b, a)] for b in lv.elements):
                    return False
        return True

    def validate(self) -> list[str]:
        errs = []
        for k, lv in enumerate(self.levels):
            els = lv.elements
            for a in els:
                if lv.mult[(a, lv.unit)] != a or lv.mult[(lv.unit, a)] != a:
                    errs.append(f"level {k}: unit law fails at {render(a)}")
            for a, b, c in itertools.product(els, repeat=3):
                if lv.mult[(lv.mult[(a, b)], c)] != lv.mult[(a, lv.mult[(b, c)])]:
                    errs.append(f"level {k}: associativity fails")
                    break
        for k in range(1, self.trunc + 1):
            lv, low = self.levels[k], self.levels[k - 1]
            for i, fmap in enumerate(self.faces[k]):
                if fmap[lv.unit] != low.unit or any(
                    fmap[lv.mult[(a, b)]] != low.mult[(fmap[a], fmap[b])] for a in lv.elements for b in lv.elements
                ):
                    errs.append(f"d{i} on level {k} is not a homomorphism")
        for k in range(self.trunc):
            lv, up = self.levels[k], self.levels[k + 1]
            for i, smap in enumerate(self.degens[k]):
                if smap[lv.unit] != up.unit or any(
                    smap[lv.mult[(a, b)]] != up.mult[(smap[a], smap[b])] for a in lv.elements for b in lv.elements
                ):
                    errs.append(f"s{i} on level {k} is not a homomorphism")
        errs.extend(check_identities(self.underlying()))
        return errs


def constant_monoid(g: FinGroup, d: int) -> FinSimpMonoid:
    """The constant simplicial group (or monoid) with value ``g``."""
    lv = MonoidLevel(tuple(canonical(g.elements)), dict(g.mult), g.identity)
    ident = {a: a for a in g.elements}
    return FinSimpMonoid(
        tuple(lv for _ in range(d + 1)),
        tuple(tuple(ident for _ in range(k + 1)) if k else () for k in range(d + 1)),
        tuple(tuple(ident for _ in range(k + 1)) if k < d else () for k in range(d + 1)),
    )
