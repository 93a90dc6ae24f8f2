"""Finite categories given by explicit composition tables."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Optional

from .labels import Label, canonical, render, sort_key, sorted_labels

log = logging.getLogger(__name__)


class CategoryError(ValueError):
    """Raised when a construction receives an ill-formed category or subset."""


@dataclass(frozen=True)
class Violation:
    axiom: str
    witnesses: tuple[Label, ...]
    detail: str = ""

    def __str__(self) -> str:
        names = ", ".join(render(w) for w in self.witnesses)
        return f"{self.axiom} [{names}] {self.detail}".rstrip()


@dataclass(frozen=True)
class FinCat:
    """A finite category.

    ``compose[(g, f)]`` is ``g∘f`` and is present exactly for pairs with
    ``target(f) == source(g)``.  Use :meth:`build` to get canonical ordering;
    the bare constructor keeps whatever it is given so that broken tables can
    still be validated.
    """

    objects: tuple[Label, ...]
    morphisms: tuple[tuple[Label, Label, Label], ...]
    identities: Mapping[Label, Label]
    compose: Mapping[tuple[Label, Label], Label] = field(repr=False)

    @classmethod
    def build(
        cls,
        objects: Iterable[Label],
        morphisms: Iterable[tuple[Label, Label, Label]],
        identities: Mapping[Label, Label],
        compose: Mapping[tuple[Label, Label], Label],
    ) -> "FinCat":
        objs = canonical(objects)
        mors = tuple(sorted_labels(set(morphisms), key=lambda m: m[0]))
        ids = {x: identities[x] for x in objs}
        comp = {k: compose[k] for k in sorted_labels(compose)}
        return cls(objs, mors, ids, comp)

    @cached_property
    def source(self) -> dict[Label, Label]:
        return {m: s for m, s, _ in self.morphisms}

    @cached_property
    def target(self) -> dict[Label, Label]:
        return {m: t for m, _, t in self.morphisms}

    @cached_property
    def morphism_ids(self) -> tuple[Label, ...]:
        return tuple(m for m, _, _ in self.morphisms)

    @cached_property
    def _homs(self) -> dict[tuple[Label, Label], tuple[Label, ...]]:
        homs: dict[tuple[Label, Label], list[Label]] = {}
        for m, s, t in self.morphisms:
            homs.setdefault((s, t), []).append(m)
        return {k: tuple(v) for k, v in homs.items()}

    @cached_property
    def _out(self) -> dict[Label, tuple[Label, ...]]:
        out: dict[Label, list[Label]] = {x: [] for x in self.objects}
        for m, s, _ in self.morphisms:
            out.setdefault(s, []).append(m)
        return {k: tuple(v) for k, v in out.items()}

    def hom(self, x: Label, y: Label) -> tuple[Label, ...]:
        return self._homs.get((x, y), ())

    def out_of(self, x: Label) -> tuple[Label, ...]:
        return self._out.get(x, ())

    def comp(self, g: Label, f: Label) -> Label:
        return self.compose[(g, f)]

    def is_identity(self, m: Label) -> bool:
        return self.identities.get(self.source[m]) == m

    @cached_property
    def _inverses(self) -> dict[Label, Label]:
        inv = {}
        for m, s, t in self.morphisms:
            for k in self.hom(t, s):
                if self.compose.get((k, m)) == self.identities[s] and self.compose.get((m, k)) == self.identities[t]:
                    inv[m] = k
                    break
        return inv

    def inverse(self, m: Label) -> Optional[Label]:
        return self._inverses.get(m)

    def is_iso(self, m: Label) -> bool:
        return m in self._inverses

    def subcategory(self, keep: Iterable[Label]) -> "FinCat":
        """Wide subcategory on the given morphisms (closure is checked)."""
        keep = set(keep)
        missing = [x for x in self.objects if self.identities[x] not in keep]
        if missing:
            raise CategoryError(f"subcategory misses identities of {[render(x) for x in missing]}")
        comp = {}
        for (g, f), h in self.compose.items():
            if g in keep and f in keep:
                if h not in keep:
                    raise CategoryError(f"not closed: {render(g)}∘{render(f)} = {render(h)}")
                comp[(g, f)] = h
        mors = tuple(m for m in self.morphisms if m[0] in keep)
        return FinCat(self.objects, mors, dict(self.identities), comp)

    def relabel(self, on_objects: Mapping[Label, Label], on_morphisms: Mapping[Label, Label]) -> "FinCat":
        return FinCat.build(
            (on_objects[x] for x in self.objects),
            ((on_morphisms[m], on_objects[s], on_objects[t]) for m, s, t in self.morphisms),
            {on_objects[x]: on_morphisms[i] for x, i in self.identities.items()},
            {(on_morphisms[g], on_morphisms[f]): on_morphisms[h] for (g, f), h in self.compose.items()},
        )


def validate_category(c: FinCat) -> list[Violation]:
    """Every violated category axiom, each with its witnesses; empty iff valid."""
    report: list[Violation] = []
    objs = set(c.objects)
    if len(objs) != len(c.objects):
        report.append(Violation("duplicate-object", tuple(x for x in c.objects if c.objects.count(x) > 1)))
    seen: set[Label] = set()
    for m, s, t in c.morphisms:
        if m in seen:
            report.append(Violation("duplicate-morphism", (m,)))
        seen.add(m)
        if s not in objs or t not in objs:
            report.append(Violation("unknown-endpoint", (m,), f"{render(s)} -> {render(t)}"))
    src, tgt = c.source, c.target

    for x in c.objects:
        i = c.identities.get(x)
        if i is None:
            report.append(Violation("missing-identity", (x,)))
        elif i not in src or src[i] != x or tgt[i] != x:
            report.append(Violation("identity-typing", (x, i)))

    for (g, f), h in c.compose.items():
        if f not in src or g not in src:
            report.append(Violation("unknown-operand", (g, f)))
            continue
        if tgt[f] != src[g]:
            report.append(Violation("non-composable-entry", (g, f)))
            continue
        if h not in src:
            report.append(Violation("unknown-composite", (g, f, h)))
        elif src[h] != src[f] or tgt[h] != tgt[g]:
            report.append(
                Violation(
                    "composite-typing",
                    (g, f),
                    f"{render(g)}∘{render(f)} = {render(h)} : {render(src[h])} -> {render(tgt[h])},"
                    f" expected {render(src[f])} -> {render(tgt[g])}",
                )
            )
    for f in c.morphism_ids:
        for g in c.out_of(tgt[f]):
            if (g, f) not in c.compose:
                report.append(Violation("missing-composite", (g, f)))

    # unit and associativity laws are checked wherever the needed entries exist
    comp = c.compose
    for m, s, t in c.morphisms:
        ids, idt = c.identities.get(s), c.identities.get(t)
        if ids is not None and (m, ids) in comp and comp[(m, ids)] != m:
            report.append(Violation("right-unit", (m, ids)))
        if idt is not None and (idt, m) in comp and comp[(idt, m)] != m:
            report.append(Violation("left-unit", (idt, m)))
    for f in c.morphism_ids:
        for g in c.out_of(tgt[f]):
            gf = comp.get((g, f))
            if gf is None:
                continue
            for h in c.out_of(tgt[g]):
                hg = comp.get((h, g))
                left = comp.get((hg, f)) if hg is not None else None
                right = comp.get((h, gf))
                if left is not None and right is not None and left != right:
                    report.append(Violation("associativity", (h, g, f), f"{render(left)} != {render(right)}"))
    return report


def check_category(c: FinCat) -> FinCat:
    problems = validate_category(c)
    if problems:
        raise CategoryError("; ".join(str(p) for p in problems[:5]))
    return c


# ---------------------------------------------------------------- weak equivalences


@dataclass(frozen=True)
class WeqSpec:
    morphisms: frozenset
    two_of_three: Optional[bool] = None


def two_of_three_holds(c: FinCat, ids: Iterable[Label]) -> bool:
    w = set(ids)
    for (g, f), h in c.compose.items():
        if sum((g in w, f in w, h in w)) == 2:
            return False
    return True


def weq_spec(c: FinCat, ids: Iterable[Label]) -> WeqSpec:
    """Build a WeqSpec, recording (and warning on) failure of two-out-of-three."""
    ids = frozenset(ids)
    ok = two_of_three_holds(c, ids)
    if not ok:
        log.warning("weak equivalences do not satisfy two-out-of-three")
    return WeqSpec(ids, ok)


def weq_all(c: FinCat) -> WeqSpec:
    return WeqSpec(frozenset(c.morphism_ids), True)


def weq_iso(c: FinCat) -> WeqSpec:
    return WeqSpec(frozenset(m for m in c.morphism_ids if c.is_iso(m)), True)


def weq_identities(c: FinCat) -> WeqSpec:
    return weq_spec(c, c.identities.values())


def we_subcategory(c: FinCat, w: WeqSpec) -> FinCat:
    unknown = w.morphisms - set(c.morphism_ids)
    if unknown:
        raise CategoryError(f"weak equivalences not in category: {sorted(map(render, unknown))}")
    return c.subcategory(w.morphisms)


def max_subgroupoid(c: FinCat) -> FinCat:
    return c.subcategory(m for m in c.morphism_ids if c.is_iso(m))


def iso_classes(c: FinCat) -> tuple[tuple[Label, ...], ...]:
    parent = {x: x for x in c.objects}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m, s, t in c.morphisms:
        if c.is_iso(m):
            a, b = find(s), find(t)
            if a != b:
                parent[max(a, b, key=sort_key)] = min(a, b, key=sort_key)
    blocks: dict[Label, list[Label]] = {}
    for x in c.objects:
        blocks.setdefault(find(x), []).append(x)
    return tuple(sorted((canonical(b) for b in blocks.values()), key=lambda b: sort_key(b[0])))


# ---------------------------------------------------------------- arrow categories


def chain_objects(c: FinCat, chain, n: int) -> tuple[Label, ...]:
    """Objects x_0..x_n of an n-chain (an object of C^[n])."""
    if n == 0:
        return (chain,)
    return (c.source[chain[0]],) + tuple(c.target[f] for f in chain)


def composable_chains(c: FinCat, n: int) -> list:
    """Objects of C^[n]: plain objects for n = 0, else n-tuples of morphisms."""
    if n == 0:
        return list(c.objects)
    chains: list[tuple] = [(f,) for f in c.morphism_ids]
    for _ in range(n - 1):
        chains = [ch + (g,) for ch in chains for g in c.out_of(c.target[ch[-1]])]
    return sorted(chains, key=sort_key)


def _ladders_from(c: FinCat, alpha: tuple, n: int, allowed: Optional[set] = None) -> Iterator[tuple[tuple, tuple]]:
    """All (beta, verticals) with a ladder alpha -> beta in C^[n], n >= 1,
    optionally with every vertical in ``allowed``."""
    xs = chain_objects(c, alpha, n)

    def extend(j, a_prev, beta, verts):
        if j > n:
            yield tuple(beta), tuple(verts)
            return
        f = alpha[j - 1]
        lhs_src = xs[j]
        y_prev = c.target[a_prev]
        for g in c.out_of(y_prev):
            rhs = c.compose[(g, a_prev)]
            for a in c.hom(lhs_src, c.target[g]):
                if (allowed is None or a in allowed) and c.compose[(a, f)] == rhs:
                    beta.append(g)
                    verts.append(a)
                    yield from extend(j + 1, a, beta, verts)
                    beta.pop()
                    verts.pop()

    for a0 in c.out_of(xs[0]):
        if allowed is None or a0 in allowed:
            yield from extend(1, a0, [], [a0])


def arrow_category(c: FinCat, n: int, vertical: Optional[Iterable[Label]] = None) -> FinCat:
    """The category C^[n] of n-chains and commuting ladders.

    Morphism ids are ``(source chain, target chain, verticals)``.  With
    ``vertical`` given, only ladders whose components all lie in that set are
    kept (this is ``we(C^[n])`` for a class of weak equivalences).  For
    ``n == 0`` the result is ``c`` itself (restricted to ``vertical``).
    """
    if n < 0:
        raise ValueError("level must be >= 0")
    if n == 0:
        return c if vertical is None else c.subcategory(vertical)
    allowed = None if vertical is None else set(vertical)
    objs = tuple(composable_chains(c, n))
    mors = []
    for alpha in objs:
        for beta, verts in _ladders_from(c, alpha, n, allowed):
            m = (alpha, beta, verts)
            mors.append((m, alpha, beta))
    identities = {alpha: (alpha, alpha, tuple(c.identities[x] for x in chain_objects(c, alpha, n))) for alpha in objs}
    mors = tuple(sorted_labels(mors, key=lambda m: m[0]))
    return FinCat(objs, mors, identities, LadderComposition(c, mors))


class LadderComposition(Mapping):
    """Composition table of C^[n], computed on demand.

    Level n of the diagrams has about |C|^(2n) composable pairs while the
    1-skeleton of its nerve needs none of them, so the table is never stored.
    Iteration follows the canonical order of the pairs.
    """

    def __init__(self, c: FinCat, mors: tuple) -> None:
        self._c = c
        self._mors = mors
        self._into: dict[Label, list] = {}
        for m, _, beta in mors:
            self._into.setdefault(beta, []).append(m)

    def __getitem__(self, key: tuple) -> tuple:
        k, m = key
        if not (isinstance(k, tuple) and isinstance(m, tuple) and len(k) == 3 and len(m) == 3) or m[1] != k[0]:
            raise KeyError(key)
        comp = self._c.compose
        return (m[0], k[1], tuple(comp[(b, a)] for b, a in zip(k[2], m[2])))

    def __iter__(self) -> Iterator[tuple]:
        for k, alpha, _ in self._mors:
            for m in self._into.get(alpha, ()):
                yield (k, m)

    def __len__(self) -> int:
        return sum(len(self._into.get(alpha, ())) for _, alpha, _ in self._mors)

    def __contains__(self, key: object) -> bool:
        try:
            self[key]
        except (KeyError, TypeError, ValueError):
            return False
        return True


def iso_arrow_category(c: FinCat, n: int) -> FinCat:
    """iso(C^[n]) built directly: a ladder is invertible iff every vertical is."""
    return arrow_category(c, n, vertical=[m for m in c.morphism_ids if c.is_iso(m)])


# ---------------------------------------------------------------- groups


@dataclass(frozen=True)
class FinGroup:
    elements: tuple[Label, ...]
    mult: Mapping[tuple[Label, Label], Label] = field(repr=False)
    identity: Label = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def validate(self) -> list[str]:
        els, mult, e = self.elements, self.mult, self.identity
        errs = []
        if e not in els:
            errs.append("identity not an element")
        for a, b in itertools.product(els, repeat=2):
            if mult.get((a, b)) not in els:
                errs.append(f"product {render(a)}*{render(b)} undefined")
        if errs:
            return errs
        for a in els:
            if mult[(a, e)] != a or mult[(e, a)] != a:
                errs.append(f"identity law fails at {render(a)}")
            if not any(mult[(a, b)] == e and mult[(b, a)] == e for b in els):
                errs.append(f"{render(a)} has no inverse")
        for a, b, d in itertools.product(els, repeat=3):
            if mult[(mult[(a, b)], d)] != mult[(a, mult[(b, d)])]:
                errs.append(f"associativity fails at {render(a)},{render(b)},{render(d)}")
                break
        return errs

    def element_order(self, a: Label) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mult[(x, a)]
            k += 1
        return k

    def as_category(self, obj: Label = "*") -> FinCat:
        return FinCat.build(
            [obj],
            [(g, obj, obj) for g in self.elements],
            {obj: self.identity},
            dict(self.mult),
        )


def cyclic_group(n: int) -> FinGroup:
    els = tuple(str(i) for i in range(n))
    mult = {(str(a), str(b)): str((a + b) % n) for a in range(n) for b in range(n)}
    return FinGroup(els, mult, "0")


def aut_group(c: FinCat, x: Label) -> FinGroup:
    els = tuple(m for m in c.hom(x, x) if c.is_iso(m))
    mult = {(g, f): c.compose[(g, f)] for g in els for f in els}
    return FinGroup(els, mult, c.identities[x])


def _generators(g: FinGroup) -> list[Label]:
    gens: list[Label] = []
    span = {g.identity}
    for a in sorted(g.elements, key=lambda a: (-g.element_order(a), sort_key(a))):
        if a in span:
            continue
        gens.append(a)
        frontier = list(span)
        span = set(span)
        while frontier:
            nxt = []
            for s in frontier:
                for b in gens:
                    p = g.mult[(s, b)]
                    if p not in span:
                        span.add(p)
                        nxt.append(p)
            frontier = nxt
    return gens


def groups_isomorphic(g: FinGroup, h: FinGroup) -> bool:
    """Exhaustive isomorphism search (intended for orders up to a few dozen)."""
    if g.order != h.order:
        return False
    if sorted(map(g.element_order, g.elements)) != sorted(map(h.element_order, h.elements)):
        return False
    gens = _generators(g)
    candidates = [[b for b in h.elements if h.element_order(b) == g.element_order(a)] for a in gens]
    for images in itertools.product(*candidates):
        phi = {g.identity: h.identity}
        frontier = [g.identity]
        ok = True
        while frontier and ok:
            nxt = []
            for s in frontier:
                for a, b in zip(gens, images):
                    p, q = g.mult[(s, a)], h.mult[(phi[s], b)]
                    if p in phi:
                        if phi[p] != q:
                            ok = False
                            break
                    else:
                        phi[p] = q
                        nxt.append(p)
                if not ok:
                    break
            frontier = nxt
        if not ok or len(set(phi.values())) != g.order:
            continue
        if all(phi[g.mult[(a, b)]] == h.mult[(phi[a], phi[b])] for a in g.elements for b in g.elements):
            return True
    return False


# ---------------------------------------------------------------- functors


@dataclass(frozen=True)
class FinFunctor:
    source: FinCat
    target: FinCat
    on_objects: Mapping[Label, Label]
    on_morphisms: Mapping[Label, Label]

    def validate(self) -> list[str]:
        s, t, fo, fm = self.source, self.target, self.on_objects, self.on_morphisms
        errs = []
        for m, a, b in s.morphisms:
            im = fm.get(m)
            if im is None or t.source.get(im) != fo.get(a) or t.target.get(im) != fo.get(b):
                errs.append(f"{render(m)} is not sent to a morphism {render(fo.get(a))} -> {render(fo.get(b))}")
        if errs:
            return errs
        for x in s.objects:
            if fm[s.identities[x]] != t.identities[fo[x]]:
                errs.append(f"identity of {render(x)} not preserved")
        for (g, f), h in s.compose.items():
            if t.compose[(fm[g], fm[f])] != fm[h]:
                errs.append(f"composite {render(g)}∘{render(f)} not preserved")
        return errs

    def on_chain(self, chain, n: int):
        if n == 0:
            return self.on_objects[chain]
        return tuple(self.on_morphisms[f] for f in chain)

    def on_ladder(self, mor, n: int):
        if n == 0:
            return self.on_morphisms[mor]
        alpha, beta, verts = mor
        return (self.on_chain(alpha, n), self.on_chain(beta, n), tuple(self.on_morphisms[a] for a in verts))


def find_isomorphism(c: FinCat, d: FinCat) -> Optional[FinFunctor]:
    """An isomorphism of categories c -> d, found by backtracking, or None."""
    if len(c.objects) != len(d.objects) or len(c.morphisms) != len(d.morphisms):
        return None
    objs = list(c.objects)
    for image in itertools.permutations(d.objects):
        fo = dict(zip(objs, image))
        if any(len(c.hom(x, y)) != len(d.hom(fo[x], fo[y])) for x in objs for y in objs):
            continue
        fm = {c.identities[x]: d.identities[fo[x]] for x in objs}
        rest = [m for m in c.morphism_ids if m not in fm]
        used = set(fm.values())

        def ok(m):
            for g, f in c.compose:
                if (g == m or f == m) and g in fm and f in fm:
                    h = c.compose[(g, f)]
                    if h in fm and d.compose[(fm[g], fm[f])] != fm[h]:
                        return False
            return True

        def extend(i):
            if i == len(rest):
                return True
            m = rest[i]
            for cand in d.hom(fo[c.source[m]], fo[c.target[m]]):
                if cand in used:
                    continue
                fm[m] = cand
                used.add(cand)
                # composites involving m whose result is already placed, and those producing m
                if ok(m) and all(
                    d.compose[(fm[g], fm[f])] == fm[m] for (g, f), h in c.compose.items() if h == m and g in fm and f in fm
                ) and extend(i + 1):
                    return True
                used.discard(cand)
                del fm[m]
            return False

        if extend(0):
            return FinFunctor(c, d, fo, dict(fm))
    return None


def collapse_functor(c: FinCat) -> FinFunctor:
    """The unique functor to the terminal category."""
    point = terminal_category()
    return FinFunctor(c, point, {x: "*" for x in c.objects}, {m: "id" for m in c.morphism_ids})


def identity_functor(c: FinCat) -> FinFunctor:
    return FinFunctor(c, c, {x: x for x in c.objects}, {m: m for m in c.morphism_ids})


# ---------------------------------------------------------------- small named categories


def terminal_category() -> FinCat:
    return FinCat.build(["*"], [("id", "*", "*")], {"*": "id"}, {("id", "id"): "id"})


def discrete_category(objects: Iterable[str]) -> FinCat:
    objs = list(objects)
    return FinCat.build(
        objs,
        [(f"id_{x}", x, x) for x in objs],
        {x: f"id_{x}" for x in objs},
        {(f"id_{x}", f"id_{x}"): f"id_{x}" for x in objs},
    )


def poset_category(elements: Iterable[str], leq) -> FinCat:
    """Category of a finite preorder; the morphism x -> y is named ``x<y``."""
    els = list(elements)
    name = lambda a, b: f"id_{a}" if a == b else f"{a}<{b}"
    mors = [(name(a, b), a, b) for a in els for b in els if leq(a, b)]
    comp = {}
    for a, b, d in itertools.product(els, repeat=3):
        if leq(a, b) and leq(b, d):
            comp[(name(b, d), name(a, b))] = name(a, d)
    return FinCat.build(els, mors, {a: name(a, a) for a in els}, comp)


def walking_arrow() -> FinCat:
    return FinCat.build(
        ["x", "y"],
        [("id_x", "x", "x"), ("id_y", "y", "y"), ("f", "x", "y")],
        {"x": "id_x", "y": "id_y"},
        {("id_x", "id_x"): "id_x", ("id_y", "id_y"): "id_y", ("f", "id_x"): "f", ("id_y", "f"): "f"},
    )


def walking_iso() -> FinCat:
    mors = [("id_x", "x", "x"), ("id_y", "y", "y"), ("u", "x", "y"), ("v", "y", "x")]
    comp = {
        ("id_x", "id_x"): "id_x", ("id_y", "id_y"): "id_y",
        ("u", "id_x"): "u", ("id_y", "u"): "u", ("v", "id_y"): "v", ("id_x", "v"): "v",
        ("v", "u"): "id_x", ("u", "v"): "id_y",
    }
    return FinCat.build(["x", "y"], mors, {"x": "id_x", "y": "id_y"}, comp)


def group_category(g: FinGroup) -> FinCat:
    return g.as_category()
