"""Bounded-length hammock localization at the level of path components.

Vertices of Map(x, y) in the hammock localization are reduced zigzags
(width-0 hammocks); edges are width-1 hammocks, whose two rows are reduced
to give the endpoints.  Everything here is restricted to length <= len_max,
so results carry a stability flag rather than a completeness claim.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .fincat import FinCat, WeqSpec, we_subcategory
from .labels import Label, render, sort_key

FORWARD, BACKWARD = 1, -1
Column = tuple[Label, int]


@dataclass(frozen=True)
class Zigzag:
    """x = C_0 - C_1 - ... - C_n = y.  A forward column ``(m, 1)`` is m: C_{j-1} -> C_j;
    a backward column ``(m, -1)`` is m: C_j -> C_{j-1} and must be a weak equivalence."""

    source: Label
    target: Label
    columns: tuple[Column, ...]

    def __len__(self) -> int:
        return len(self.columns)

    def key(self) -> tuple:
        return (len(self.columns), tuple((0 if d == FORWARD else 1, sort_key(m)) for m, d in self.columns))

    def pattern(self) -> str:
        return "".join("F" if d == FORWARD else "B" for _, d in self.columns)

    def __str__(self) -> str:
        if not self.columns:
            return f"{render(self.source)} = {render(self.target)}"
        parts = [render(self.source)]
        for m, d in self.columns:
            parts.append(f"-{render(m)}->" if d == FORWARD else f"<-{render(m)}-")
        return " ".join(parts) + f" {render(self.target)}"


def zigzag_violations(c: FinCat, w: WeqSpec, z: Zigzag) -> list[str]:
    """Checks the reduced width-0 hammock conditions."""
    errs = []
    node = z.source
    for j, (m, d) in enumerate(z.columns):
        if c.is_identity(m):
            errs.append(f"column {j} is an identity")
        if j and z.columns[j - 1][1] == d:
            errs.append(f"columns {j - 1} and {j} point the same way")
        if d == BACKWARD and m not in w.morphisms:
            errs.append(f"backward column {j} is not a weak equivalence")
        start, end = (c.source[m], c.target[m]) if d == FORWARD else (c.target[m], c.source[m])
        if start != node:
            errs.append(f"column {j} does not attach")
        node = end
    if node != z.target:
        errs.append("zigzag does not end at its target")
    return errs


def reduce_columns(c: FinCat, columns: Iterable[Column]) -> tuple[Column, ...]:
    """Normal form: drop identity columns, compose adjacent same-direction columns."""
    out: list[Column] = []
    for m, d in columns:
        if c.is_identity(m):
            continue
        if out and out[-1][1] == d:
            prev, _ = out.pop()
            m = c.comp(m, prev) if d == FORWARD else c.comp(prev, m)
            if c.is_identity(m):
                continue
        out.append((m, d))
    return tuple(out)


def _incoming(c: FinCat, allowed) -> dict[Label, list[Label]]:
    into: dict[Label, list[Label]] = {x: [] for x in c.objects}
    for m, _, t in c.morphisms:
        if m in allowed:
            into[t].append(m)
    return into


def enumerate_zigzags(c: FinCat, w: WeqSpec, x: Label, y: Label, len_max: int) -> list[Zigzag]:
    """All reduced zigzags x ~> y of length <= len_max, in canonical order."""
    we_subcategory(c, w)
    into_w = _incoming(c, w.morphisms)
    found: list[Zigzag] = []

    def walk(node, last, cols):
        if node == y:
            found.append(Zigzag(x, y, tuple(cols)))
        if len(cols) == len_max:
            return
        if last != FORWARD:
            for m in c.out_of(node):
                if not c.is_identity(m):
                    cols.append((m, FORWARD))
                    walk(c.target[m], FORWARD, cols)
                    cols.pop()
        if last != BACKWARD:
            for m in into_w[node]:
                if not c.is_identity(m):
                    cols.append((m, BACKWARD))
                    walk(c.source[m], BACKWARD, cols)
                    cols.pop()

    walk(x, None, [])
    return sorted(found, key=Zigzag.key)


def length3_enumerate(c: FinCat, w: WeqSpec, x: Label, y: Label) -> list[Zigzag]:
    """Reduced zigzags of shape x <~ . -> . <~ y, shorter shapes by omitting columns."""
    shapes = {"", "B", "F", "BF", "FB", "BFB"}
    return [z for z in enumerate_zigzags(c, w, x, y, 3) if z.pattern() in shapes]


def hammock_moves(c: FinCat, w: WeqSpec, x: Label, y: Label, len_max: int) -> set[tuple[tuple, tuple]]:
    """Pairs (reduced top row, reduced bottom row) of width-1 reduced hammocks.

    Rows are alternating zigzags of equal length which may contain identity
    columns, joined by vertical weak equivalences (identities at x and y);
    no column consists of two identities and all squares commute.
    """
    return set(_hammock_depths(c, w, x, y, len_max))


def _hammock_depths(c: FinCat, w: WeqSpec, x: Label, y: Label, len_max: int) -> dict[tuple[tuple, tuple], int]:
    """Hammock pairs with the shortest hammock length that produces them."""
    W = w.morphisms
    into_w = _incoming(c, W)
    out_w: dict[Label, list[Label]] = {o: [] for o in c.objects}
    for m, s, _ in c.morphisms:
        if m in W:
            out_w[s].append(m)
    ident = c.identities
    idset = frozenset(ident.values())
    comp = c.compose
    # reduced rows are interned; push[(row, m, d)] caches the reduced extension
    rows: list[tuple] = [()]
    row_id: dict[tuple, int] = {(): 0}
    push: dict[tuple[int, Label, int], int] = {}

    def extend(r: int, m: Label, d: int) -> int:
        key = (r, m, d)
        out = push.get(key)
        if out is None:
            red = _push(c, rows[r], m, d)
            out = row_id.get(red)
            if out is None:
                out = row_id[red] = len(rows)
                rows.append(red)
            push[key] = out
        return out

    pairs: dict[tuple[tuple, tuple], int] = {}
    start = (x, x, ident[x], 0, 0, None)
    frontier = {start}
    seen = {start}
    for step in range(1, len_max + 1):
        nxt = set()
        for c0, c1, v, red0, red1, last in frontier:
            if last != FORWARD:
                for r0 in c.out_of(c0):
                    n0 = c.target[r0]
                    for v2 in out_w[n0]:
                        rhs = comp[(v2, r0)]
                        n1 = c.target[v2]
                        for r1 in c.hom(c1, n1):
                            if comp[(r1, v)] != rhs or (r0 in idset and r1 in idset):
                                continue
                            nxt.add((n0, n1, v2, extend(red0, r0, FORWARD), extend(red1, r1, FORWARD), FORWARD))
            if last != BACKWARD:
                for r0 in into_w[c0]:
                    n0 = c.source[r0]
                    lhs = comp[(v, r0)]
                    for r1 in into_w[c1]:
                        if r0 in idset and r1 in idset:
                            continue
                        n1 = c.source[r1]
                        for v2 in c.hom(n0, n1):
                            if v2 in W and comp[(r1, v2)] == lhs:
                                nxt.add((n0, n1, v2, extend(red0, r0, BACKWARD), extend(red1, r1, BACKWARD), BACKWARD))
        nxt -= seen
        seen |= nxt
        for c0, c1, v, red0, red1, _ in nxt:
            if c0 == y and c1 == y and v == ident[y] and red0 != red1:
                pairs.setdefault((rows[red0], rows[red1]), step)
        frontier = nxt
    return pairs


def _push(c: FinCat, red: tuple, m: Label, d: int) -> tuple:
    return reduce_columns(c, red + ((m, d),)) if (red and red[-1][1] == d) or c.is_identity(m) else red + ((m, d),)


@dataclass(frozen=True)
class Pi0Result:
    classes: tuple[tuple[Zigzag, ...], ...]
    stable: bool
    len_max: int

    @property
    def count(self) -> int:
        return len(self.classes)


def _classes(zigzags: list[Zigzag], pairs: Iterable[tuple[tuple, tuple]]) -> tuple[tuple[Zigzag, ...], ...]:
    pos = {z.columns: i for i, z in enumerate(zigzags)}
    parent = list(range(len(zigzags)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in pairs:
        ra, rb = find(pos[a]), find(pos[b])
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    blocks: dict[int, list[Zigzag]] = {}
    for i, z in enumerate(zigzags):
        blocks.setdefault(find(i), []).append(z)
    return tuple(tuple(b) for _, b in sorted(blocks.items()))


def pi0_mapping(c: FinCat, w: WeqSpec, x: Label, y: Label, len_max: int = 5) -> Pi0Result:
    """Components of Map_{L^H}(x, y) seen through zigzags and hammocks of length <= len_max.

    Stable means the classes at len_max - 2 map bijectively onto those at len_max.
    Reduced rows never exceed the hammock length, and BFS layers are monotone,
    so the shorter bound is read off the same search.
    """
    zigzags = enumerate_zigzags(c, w, x, y, len_max)
    depths = _hammock_depths(c, w, x, y, len_max)
    classes = _classes(zigzags, depths)
    stable = False
    if len_max >= 2:
        short = len_max - 2
        old = _classes([z for z in zigzags if len(z.columns) <= short], [p for p, k in depths.items() if k <= short])
        where = {z.columns: i for i, block in enumerate(classes) for z in block}
        images = [{where[z.columns] for z in block} for block in old]
        stable = (
            all(len(img) == 1 for img in images)
            and len({next(iter(img)) for img in images}) == len(old) == len(classes)
        )
    return Pi0Result(classes, stable, len_max)


def first_stable(c: FinCat, w: WeqSpec, x: Label, y: Label, len_max: int = 5, start: int = 3) -> Pi0Result:
    """pi0_mapping at the smallest bound in [start, len_max] that is stable, else at len_max."""
    for bound in range(min(start, len_max), len_max + 1):
        r = pi0_mapping(c, w, x, y, bound)
        if r.stable:
            return r
    return r
