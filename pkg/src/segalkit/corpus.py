"""Small categories for property checks: exhaustive up to isomorphism, or random."""

from __future__ import annotations

import itertools
import random
import time
from typing import Iterator, Optional

from .fincat import FinCat

OBJECT_NAMES = "abcdefgh"


def _hom_matrices(k: int, max_morphisms: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Hom-size matrices (identities included) up to simultaneous row/column permutation."""
    cells = [(i, j) for i in range(k) for j in range(k)]
    seen = set()

    def rec(idx, sizes, total):
        if idx == len(cells):
            mat = tuple(tuple(sizes[i * k + j] for j in range(k)) for i in range(k))
            key = min(
                tuple(mat[p[i]][p[j]] for i in range(k) for j in range(k)) for p in itertools.permutations(range(k))
            )
            if key not in seen:
                seen.add(key)
                yield mat
            return
        i, j = cells[idx]
        lo = 1 if i == j else 0
        for s in range(lo, max_morphisms - total + 1 + (1 if i == j else 0)):
            rest_min = sum(1 for a, b in cells[idx + 1 :] if a == b)
            if total + s + rest_min > max_morphisms:
                break
            yield from rec(idx + 1, sizes + [s], total + s)

    yield from rec(0, [], 0)


class _Shape:
    """Morphisms 0..k-1 are identities; the rest are listed hom by hom."""

    def __init__(self, mat):
        k = len(mat)
        self.k = k
        self.mat = mat
        self.src, self.tgt = list(range(k)), list(range(k))
        self.hom: dict[tuple[int, int], list[int]] = {}
        for i in range(k):
            self.hom[(i, i)] = [i]
        nxt = k
        for i in range(k):
            for j in range(k):
                for _ in range(mat[i][j] - (1 if i == j else 0)):
                    self.src.append(i)
                    self.tgt.append(j)
                    self.hom.setdefault((i, j), []).append(nxt)
                    nxt += 1
        self.n = nxt
        self.into = [[m for m in range(self.n) if self.tgt[m] == x] for x in range(k)]
        self.out = [[m for m in range(self.n) if self.src[m] == x] for x in range(k)]
        # composable pairs (g, f) with g after f
        self.pairs = [(g, f) for f in range(self.n) for g in self.out[self.tgt[f]]]


def _tables(shape: _Shape, deadline: Optional[float]) -> Iterator[list[list[int]]]:
    n = shape.n
    comp = [[-1] * n for _ in range(n)]
    for g, f in shape.pairs:
        if g < shape.k and shape.src[g] == shape.tgt[f]:
            comp[g][f] = f
        elif f < shape.k:
            comp[g][f] = g
    free = [(g, f) for g, f in shape.pairs if comp[g][f] < 0]
    src, tgt, out, into = shape.src, shape.tgt, shape.out, shape.into

    def consistent(g, f):
        v = comp[g][f]
        for e in into[src[f]]:  # (g f) e = g (f e)
            fe = comp[f][e]
            if fe >= 0 and comp[v][e] >= 0 and comp[g][fe] >= 0 and comp[v][e] != comp[g][fe]:
                return False
        for h in out[tgt[g]]:  # h (g f) = (h g) f
            hg = comp[h][g]
            if hg >= 0 and comp[h][v] >= 0 and comp[hg][f] >= 0 and comp[h][v] != comp[hg][f]:
                return False
        for b in into[src[g]]:  # g (b c) = (g b) c where b c = f
            gb = comp[g][b]
            if gb < 0:
                continue
            for c in into[src[b]]:
                if comp[b][c] == f and comp[gb][c] >= 0 and comp[gb][c] != v:
                    return False
        for b in out[tgt[f]]:  # (a b) f = a (b f) where a b = g
            bf = comp[b][f]
            if bf < 0:
                continue
            for a in out[tgt[b]]:
                if comp[a][b] == g and comp[a][bf] >= 0 and comp[a][bf] != v:
                    return False
        return True

    def rec(idx):
        if deadline is not None and time.monotonic() > deadline:
            return
        if idx == len(free):
            yield [row[:] for row in comp]
            return
        g, f = free[idx]
        for v in shape.hom.get((src[f], tgt[g]), ()):
            comp[g][f] = v
            if consistent(g, f):
                yield from rec(idx + 1)
        comp[g][f] = -1

    yield from rec(0)


def _canonical(shape: _Shape, comp) -> tuple:
    """Least relabelled table over object permutations fixing the hom matrix and
    permutations of non-identity morphisms inside each hom-set."""
    k, mat = shape.k, shape.mat
    best = None
    for p in itertools.permutations(range(k)):
        if any(mat[p[i]][p[j]] != mat[i][j] for i in range(k) for j in range(k)):
            continue
        # new object i is old object p[i]; new hom (i,j) takes old hom (p[i],p[j])
        blocks = []
        for i in range(k):
            for j in range(k):
                old = [m for m in shape.hom.get((p[i], p[j]), []) if m >= k]
                new = [m for m in shape.hom.get((i, j), []) if m >= k]
                if old:
                    blocks.append((old, new))
        fixed = {p[i]: i for i in range(k)}
        for choice in itertools.product(*(itertools.permutations(old) for old, _ in blocks)):
            rel = dict(fixed)
            for perm, (_, new) in zip(choice, blocks):
                rel.update(zip(perm, new))
            inv = {v: u for u, v in rel.items()}
            code = tuple(rel[comp[inv[g]][inv[f]]] for g, f in shape.pairs)
            if best is None or code < best:
                best = code
    return best


def _to_fincat(shape: _Shape, comp) -> FinCat:
    names = OBJECT_NAMES[: shape.k]
    counter: dict[tuple[int, int], int] = {}
    label = {}
    for m in range(shape.n):
        s, t = shape.src[m], shape.tgt[m]
        if m < shape.k:
            label[m] = f"id_{names[m]}"
        else:
            idx = counter.get((s, t), 0)
            counter[(s, t)] = idx + 1
            label[m] = f"{names[s]}{names[t]}{idx}"
    return FinCat.build(
        list(names),
        [(label[m], names[shape.src[m]], names[shape.tgt[m]]) for m in range(shape.n)],
        {names[i]: label[i] for i in range(shape.k)},
        {(label[g], label[f]): label[comp[g][f]] for g, f in shape.pairs},
    )


class Enumeration:
    """Iterates over all categories up to isomorphism within the bounds.

    ``complete`` is set once the search finishes inside the time budget.
    """

    def __init__(self, max_objects: int, max_morphisms: int, budget: Optional[float] = None):
        self.max_objects = max_objects
        self.max_morphisms = max_morphisms
        self.budget = budget
        self.complete = False
        self.count = 0

    def __iter__(self) -> Iterator[FinCat]:
        deadline = None if self.budget is None else time.monotonic() + self.budget
        for k in range(1, self.max_objects + 1):
            for mat in _hom_matrices(k, self.max_morphisms):
                shape = _Shape(mat)
                seen = set()
                for comp in _tables(shape, deadline):
                    key = _canonical(shape, comp)
                    if key in seen:
                        continue
                    seen.add(key)
                    self.count += 1
                    yield _to_fincat(shape, comp)
                if deadline is not None and time.monotonic() > deadline:
                    return
        self.complete = True


def enumerate_categories(max_objects: int, max_morphisms: int) -> list[FinCat]:
    return list(Enumeration(max_objects, max_morphisms))


def random_category(
    rng: random.Random,
    max_objects: int = 3,
    max_set: int = 3,
    generators: int = 3,
    min_morphisms: int = 9,
    max_morphisms: int = 14,
) -> FinCat:
    """A concrete category: random finite sets and the closure of random functions.

    Morphisms are (source, target, function) triples so that equal functions
    between different objects stay distinct.  Retries until the size lands
    in [min_morphisms, max_morphisms].
    """
    while True:
        k = rng.randint(1, max_objects)
        sizes = [rng.randint(1, max_set) for _ in range(k)]
        maps = {(x, x, tuple(range(sizes[x]))) for x in range(k)}
        for _ in range(generators):
            s, t = rng.randrange(k), rng.randrange(k)
            maps.add((s, t, tuple(rng.randrange(sizes[t]) for _ in range(sizes[s]))))
        frontier = set(maps)
        while frontier and len(maps) <= max_morphisms:
            new = set()
            for f in frontier:
                for g in list(maps):
                    for a, b in ((g, f), (f, g)):
                        if a[0] == b[1]:
                            h = (b[0], a[1], tuple(a[2][i] for i in b[2]))
                            if h not in maps:
                                new.add(h)
            maps |= new
            frontier = new
        if not (min_morphisms <= len(maps) <= max_morphisms):
            continue
        names = OBJECT_NAMES[:k]
        label = {m: f"{names[m[0]]}{names[m[1]]}:{''.join(map(str, m[2]))}" for m in maps}
        by_key = {(m[0], m[1], m[2]): m for m in maps}
        compose = {}
        for f in maps:
            for g in maps:
                if g[0] == f[1]:
                    h = by_key[(f[0], g[1], tuple(g[2][i] for i in f[2]))]
                    compose[(label[g], label[f])] = label[h]
        return FinCat.build(
            list(names),
            [(label[m], names[m[0]], names[m[1]]) for m in sorted(maps)],
            {names[x]: label[(x, x, tuple(range(sizes[x])))] for x in range(k)},
            compose,
        )
