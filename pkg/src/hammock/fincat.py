"""Finite categories by total enumeration, plus the decidable checks.

A category here is a finite set of object and morphism identifiers together
with a complete composition table.  Morphism equality is identifier equality:
every composite is itself a named morphism.  All values are immutable after
construction and all operations are pure, so concurrent reads are safe and
every result is deterministic (iteration is lexicographic on identifiers).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import ValidationError


class FinCat:
    """A finite category: objects, morphisms, and a total composition table.

    Construct through :func:`validate_category` or :func:`free_acyclic`
    unless the laws are already known to hold (the stage-category builder
    relies on that escape hatch).
    """

    __slots__ = ("name", "_objects", "_source", "_target", "_identity",
                 "_comp", "_morphisms", "_hom", "_identities")

    def __init__(self, name: str, objects: Iterable[str],
                 source: Mapping[str, str], target: Mapping[str, str],
                 identity: Mapping[str, str],
                 comp: Mapping[tuple[str, str], str]):
        self.name = name
        self._objects = tuple(sorted(objects))
        self._source = dict(source)
        self._target = dict(target)
        self._identity = dict(identity)
        self._comp = dict(comp)
        self._morphisms = tuple(sorted(self._source))
        self._identities = frozenset(self._identity.values())
        hom: dict[tuple[str, str], list[str]] = {}
        for m in self._morphisms:
            hom.setdefault((self._source[m], self._target[m]), []).append(m)
        self._hom = {k: tuple(v) for k, v in hom.items()}

    def objects(self) -> tuple[str, ...]:
        return self._objects

    def morphisms(self) -> tuple[str, ...]:
        return self._morphisms

    def source(self, m: str) -> str:
        return self._source[m]

    def target(self, m: str) -> str:
        return self._target[m]

    def identity(self, x: str) -> str:
        return self._identity[x]

    def is_identity(self, m: str) -> bool:
        return m in self._identities

    def compose(self, g: str, f: str) -> str:
        """The composite g∘f; defined exactly when target(f) = source(g)."""
        return self._comp[(g, f)]

    def hom(self, x: str, y: str) -> tuple[str, ...]:
        return self._hom.get((x, y), ())

    def composition_table(self) -> Mapping[tuple[str, str], str]:
        return dict(self._comp)

    def composable_pairs(self) -> Iterator[tuple[str, str]]:
        """All (g, f) with target(f) = source(g), in table order."""
        return iter(sorted(self._comp))

    def __contains__(self, m: str) -> bool:
        return m in self._source

    def __repr__(self) -> str:
        return (f"FinCat({self.name!r}, {len(self._objects)} objects, "
                f"{len(self._morphisms)} morphisms)")


def validate_category(name: str, objects: Iterable[str],
                      morphisms: Mapping[str, tuple[str, str]],
                      identity: Mapping[str, str],
                      comp: Mapping[tuple[str, str], str]) -> FinCat:
    """Check all category laws exhaustively and return the validated FinCat.

    Raises ValidationError naming the first violated law and its witnesses:
    missing/undefined composites, endpoint mismatches, identity-law failures
    (witness: the morphism and the identity), and associativity failures
    (witness: the composable triple).
    """
    objs = tuple(sorted(set(objects)))
    source = {m: st[0] for m, st in morphisms.items()}
    target = {m: st[1] for m, st in morphisms.items()}

    for m in sorted(source):
        if source[m] not in objs or target[m] not in objs:
            raise ValidationError("unknown-object", (m, source[m], target[m]))
    for x in objs:
        if x not in identity:
            raise ValidationError("missing-identity", (x,))
        i = identity[x]
        if i not in source:
            raise ValidationError("unknown-morphism", (i,))
        if source[i] != x or target[i] != x:
            raise ValidationError("identity-endpoints", (x, i))
    for (g, f), h in sorted(comp.items()):
        if g not in source or f not in source:
            raise ValidationError("unknown-morphism", (g, f))
        if target[f] != source[g]:
            raise ValidationError("undefined-composite", (g, f))
        if h not in source:
            raise ValidationError("unknown-morphism", (h,))
        if source[h] != source[f] or target[h] != target[g]:
            raise ValidationError("composite-endpoints", (g, f, h))
    for g in sorted(source):
        for f in sorted(source):
            if target[f] == source[g] and (g, f) not in comp:
                raise ValidationError("missing-composite", (g, f))

    for f in sorted(source):
        i_t = identity[target[f]]
        if comp[(i_t, f)] != f:
            raise ValidationError("identity-law", (f, i_t))
        i_s = identity[source[f]]
        if comp[(f, i_s)] != f:
            raise ValidationError("identity-law", (f, i_s))

    for (g, f), gf in sorted(comp.items()):
        for h in sorted(source):
            if source[h] == target[g]:
                if comp[(comp[(h, g)], f)] != comp[(h, gf)]:
                    raise ValidationError("associativity", (h, g, f))

    return FinCat(name, objs, source, target, identity, comp)


def free_acyclic(name: str, vertices: Iterable[str],
                 edges: Mapping[str, tuple[str, str]]) -> FinCat:
    """The free category on a finite acyclic directed multigraph.

    Morphisms are all paths; identities are the empty paths, named
    ``id_<vertex>``, and a path [e1, ..., ek] (e1 first) is named
    ``ek∘...∘e1``.  Composition is path concatenation.  A cyclic input is
    rejected with the offending edge cycle as witness.
    """
    verts = tuple(sorted(set(vertices)))
    for e, (s, t) in sorted(edges.items()):
        if s not in verts or t not in verts:
            raise ValidationError("unknown-object", (e, s, t))

    out: dict[str, list[str]] = {v: [] for v in verts}
    for e in sorted(edges):
        out[edges[e][0]].append(e)

    # cycle detection (DFS colors: 0 new, 1 active, 2 done)
    color = {v: 0 for v in verts}

    def visit(v: str, path: list[str]) -> None:
        color[v] = 1
        for e in out[v]:
            w = edges[e][1]
            if color[w] == 1:
                cyc = [e]
                for back in reversed(path):
                    cyc.append(back)
                    if edges[back][0] == w:
                        break
                raise ValidationError("cycle", tuple(reversed(cyc)))
            if color[w] == 0:
                path.append(e)
                visit(w, path)
                path.pop()
        color[v] = 2

    for v in verts:
        if color[v] == 0:
            visit(v, [])

    def path_name(path: tuple[str, ...], v: str) -> str:
        if not path:
            return f"id_{v}"
        if len(path) == 1:
            return path[0]
        return "∘".join(reversed(path))

    # enumerate all paths breadth-first by length
    paths: list[tuple[str, tuple[str, ...], str]] = []  # (start, edges, end)
    frontier = [(v, (), v) for v in verts]
    while frontier:
        paths.extend(frontier)
        nxt = []
        for s, p, t in frontier:
            for e in out[t]:
                nxt.append((s, p + (e,), edges[e][1]))
        frontier = nxt

    names: dict[tuple[str, tuple[str, ...]], str] = {}
    morphisms: dict[str, tuple[str, str]] = {}
    for s, p, t in paths:
        nm = path_name(p, s)
        if nm in morphisms:
            raise ValidationError("name-collision", (nm,))
        names[(s, p)] = nm
        morphisms[nm] = (s, t)

    identity = {v: f"id_{v}" for v in verts}
    comp: dict[tuple[str, str], str] = {}
    for s1, p1, t1 in paths:
        for s2, p2, t2 in paths:
            if t1 == s2:
                comp[(names[(s2, p2)], names[(s1, p1)])] = names[(s1, p1 + p2)]

    return validate_category(name, verts, morphisms, identity, comp)


@dataclass(frozen=True)
class FunctorData:
    """A functor given by explicit object and morphism maps."""

    name: str
    source: FinCat
    target: FinCat
    obj_map: Mapping[str, str]
    mor_map: Mapping[str, str]

    def apply_obj(self, x: str) -> str:
        return self.obj_map[x]

    def apply_mor(self, m: str) -> str:
        return self.mor_map[m]


def identity_functor(cat: FinCat) -> FunctorData:
    return FunctorData(f"Id_{cat.name}", cat, cat,
                       {x: x for x in cat.objects()},
                       {m: m for m in cat.morphisms()})


def compose_functors(g: FunctorData, f: FunctorData,
                     name: str | None = None) -> FunctorData:
    """The composite g∘f (f first)."""
    if f.target is not g.source:
        raise ValidationError("functor-composability", (g.name, f.name))
    return FunctorData(name or f"{g.name}∘{f.name}", f.source, g.target,
                       {x: g.obj_map[f.obj_map[x]] for x in f.source.objects()},
                       {m: g.mor_map[f.mor_map[m]] for m in f.source.morphisms()})


def same_functor_maps(f: FunctorData, g: FunctorData) -> bool:
    """Structural equality of the underlying maps (names ignored)."""
    return (f.source is g.source and f.target is g.target
            and all(f.obj_map[x] == g.obj_map[x] for x in f.source.objects())
            and all(f.mor_map[m] == g.mor_map[m] for m in f.source.morphisms()))


def check_functor(f: FunctorData) -> None:
    """Check the functor laws exhaustively; raise on the first violation."""
    src, tgt = f.source, f.target
    for x in src.objects():
        if x not in f.obj_map:
            raise ValidationError("functor-object-map", (f.name, x))
        if f.obj_map[x] not in tgt.objects():
            raise ValidationError("functor-object-image", (f.name, x, f.obj_map[x]))
    for m in src.morphisms():
        if m not in f.mor_map:
            raise ValidationError("functor-morphism-map", (f.name, m))
        fm = f.mor_map[m]
        if fm not in tgt:
            raise ValidationError("functor-morphism-image", (f.name, m, fm))
        if (tgt.source(fm) != f.obj_map[src.source(m)]
                or tgt.target(fm) != f.obj_map[src.target(m)]):
            raise ValidationError("functor-endpoints", (f.name, m, fm))
    for x in src.objects():
        if f.mor_map[src.identity(x)] != tgt.identity(f.obj_map[x]):
            raise ValidationError("functor-identity", (f.name, x))
    for (g, m), gm in sorted(src.composition_table().items()):
        if tgt.compose(f.mor_map[g], f.mor_map[m]) != f.mor_map[gm]:
            raise ValidationError("functor-composition", (f.name, g, m))


@dataclass(frozen=True)
class NatTransData:
    """A natural transformation between functors with a common source/target."""

    name: str
    source: FunctorData
    target: FunctorData
    components: Mapping[str, str]


def check_nat_trans(eta: NatTransData) -> None:
    """Check every naturality square; raise on the first violation.

    Components with wrong endpoints are reported before any square, so a
    mistyped component never masquerades as a naturality failure.
    """
    f, g = eta.source, eta.target
    if f.source is not g.source or f.target is not g.target:
        raise ValidationError("nat-parallel", (eta.name,))
    cat, tgt = f.source, f.target
    for x in cat.objects():
        if x not in eta.components:
            raise ValidationError("nat-component-missing", (eta.name, x))
        c = eta.components[x]
        if c not in tgt:
            raise ValidationError("nat-component-unknown", (eta.name, x, c))
        if tgt.source(c) != f.obj_map[x] or tgt.target(c) != g.obj_map[x]:
            raise ValidationError("nat-component-endpoints", (eta.name, x, c))
    for m in cat.morphisms():
        x, y = cat.source(m), cat.target(m)
        lhs = tgt.compose(g.mor_map[m], eta.components[x])
        rhs = tgt.compose(eta.components[y], f.mor_map[m])
        if lhs != rhs:
            raise ValidationError("naturality", (eta.name, m))


def connected_components(cat) -> tuple[tuple, ...]:
    """Partition of the objects generated by "a morphism exists between".

    Works for any category value exposing objects()/morphisms()/source()/
    target(); used both for finite tables and for hammock stage categories.
    Blocks and their members are sorted, so the output is canonical.
    """
    objs = list(cat.objects())
    parent = {x: x for x in objs}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in cat.morphisms():
        a, b = find(cat.source(m)), find(cat.target(m))
        if a != b:
            if b < a:
                a, b = b, a
            parent[b] = a
    blocks: dict = {}
    for x in objs:
        blocks.setdefault(find(x), []).append(x)
    return tuple(tuple(sorted(v)) for _, v in sorted(blocks.items()))


@dataclass(frozen=True)
class EquivalenceReport:
    """Decision data for "is this functor an equivalence of categories"."""

    functor: str
    is_equivalence: bool
    # target object -> (source object c, to_image: d -> F c, from_image: F c -> d)
    iso_witnesses: Mapping[str, tuple[str, str, str]]
    hom_pairs_checked: int
    counterexample: tuple | None = None


def _iso_to(cat: FinCat, d: str, c_img: str) -> tuple[str, str] | None:
    """A two-sided inverse pair (u: d -> c_img, v: c_img -> d), if any."""
    for u in cat.hom(d, c_img):
        for v in cat.hom(c_img, d):
            if (cat.compose(v, u) == cat.identity(d)
                    and cat.compose(u, v) == cat.identity(c_img)):
                return u, v
    return None


def check_equivalence(f: FunctorData) -> EquivalenceReport:
    """Decide essential surjectivity and full-faithfulness exhaustively."""
    check_functor(f)
    src, tgt = f.source, f.target
    witnesses: dict[str, tuple[str, str, str]] = {}
    for d in tgt.objects():
        found = None
        for c in src.objects():
            pair = _iso_to(tgt, d, f.obj_map[c])
            if pair is not None:
                found = (c, pair[0], pair[1])
                break
        if found is None:
            return EquivalenceReport(f.name, False, witnesses, 0,
                                     ("essentially-surjective", d))
        witnesses[d] = found
    pairs = 0
    for a in src.objects():
        for b in src.objects():
            dom = src.hom(a, b)
            cod = tgt.hom(f.obj_map[a], f.obj_map[b])
            image = [f.mor_map[m] for m in dom]
            pairs += 1
            if len(set(image)) != len(image):
                return EquivalenceReport(f.name, False, witnesses, pairs,
                                         ("fully-faithful", a, b, "not injective"))
            if set(image) != set(cod):
                return EquivalenceReport(f.name, False, witnesses, pairs,
                                         ("fully-faithful", a, b, "not surjective"))
    return EquivalenceReport(f.name, True, witnesses, pairs)
