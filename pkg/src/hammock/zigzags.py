"""Zig-zags, ladders, and the stage categories they form.

A stage-n object between X and Y is an alternating string of n morphisms

    X = C_0  <-d_0-  C_1  -d_1->  C_2  <-d_2-  ...  <-d_{n-1}-  C_n = Y

with n odd and every backward (even-index) arrow a weak equivalence.  A
morphism of stage-n objects is a ladder: vertical components at the
interior nodes whose squares all commute, the endpoint verticals being
identities.  Stages are odd only; even stages are rejected.

Ladder spaces grow quickly (CYLFIX already has ~16M ladders at stage 7
between A and A), so the stage category is exposed as a lazy value whose
ladders are enumerated on demand, and materializing it into a finite
composition table is a separate, size-conscious step.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping

from .errors import ValidationError
from .fincat import FinCat, validate_category
from .relcat import RelCat


@dataclass(frozen=True, order=True)
class ZigZag:
    x: str
    y: str
    arrows: tuple[str, ...]
    nodes: tuple[str, ...] = field(compare=False)

    @property
    def stage(self) -> int:
        return len(self.arrows)

    def render(self) -> str:
        parts = [self.nodes[0]]
        for k, d in enumerate(self.arrows):
            parts.append(f"<-{d}-" if k % 2 == 0 else f"-{d}->")
            parts.append(self.nodes[k + 1])
        return " ".join(parts)


@dataclass(frozen=True, order=True)
class Ladder:
    src: ZigZag
    dst: ZigZag
    components: tuple[str, ...]

    @property
    def stage(self) -> int:
        return self.src.stage


def make_zigzag(r: RelCat, x: str, y: str, arrows) -> ZigZag:
    """Validate direction pattern, chaining, and weq membership."""
    arrows = tuple(arrows)
    n = len(arrows)
    if n % 2 == 0:
        raise ValidationError("even-stage", (n,))
    cat = r.cat
    if x not in cat.objects() or y not in cat.objects():
        raise ValidationError("unknown-object", (x, y))
    nodes = [x]
    for k, d in enumerate(arrows):
        if d not in cat:
            raise ValidationError("unknown-morphism", (d,))
        if k % 2 == 0:
            if cat.target(d) != nodes[k]:
                raise ValidationError("zigzag-chain", (k, d))
            if d not in r.weq:
                raise ValidationError("zigzag-weq", (k, d))
            nodes.append(cat.source(d))
        else:
            if cat.source(d) != nodes[k]:
                raise ValidationError("zigzag-chain", (k, d))
            nodes.append(cat.target(d))
    if nodes[-1] != y:
        raise ValidationError("zigzag-endpoint", (nodes[-1], y))
    return ZigZag(x, y, arrows, tuple(nodes))


def ladder_violation(r: RelCat, src: ZigZag, dst: ZigZag,
                     components) -> tuple | None:
    """First violated condition of a would-be ladder, or None.

    Returns ("shape", ...) for arity/endpoint mismatches, ("component", k,
    v) for a vertical with wrong endpoints at node k, and ("square", k) for
    the first non-commuting square at arrow index k.
    """
    components = tuple(components)
    n = src.stage
    if dst.stage != n or src.x != dst.x or src.y != dst.y:
        return ("shape", src.stage, dst.stage)
    if len(components) != n - 1:
        return ("shape", len(components), n - 1)
    cat = r.cat
    full = (cat.identity(src.x),) + components + (cat.identity(src.y),)
    for k in range(1, n):
        v = full[k]
        if v not in cat or cat.source(v) != src.nodes[k] \
                or cat.target(v) != dst.nodes[k]:
            return ("component", k, v)
    for k in range(n):
        d, d2 = src.arrows[k], dst.arrows[k]
        if k % 2 == 0:
            if cat.compose(full[k], d) != cat.compose(d2, full[k + 1]):
                return ("square", k)
        else:
            if cat.compose(full[k + 1], d) != cat.compose(d2, full[k]):
                return ("square", k)
    return None


def make_ladder(r: RelCat, src: ZigZag, dst: ZigZag, components) -> Ladder:
    bad = ladder_violation(r, src, dst, components)
    if bad is not None:
        raise ValidationError("ladder-" + bad[0], bad[1:])
    return Ladder(src, dst, tuple(components))


class _Idx:
    """Composition-table indexes shared by all enumerators over one RelCat."""

    __slots__ = ("comp", "from_obj", "weq_into", "right_factor", "factor_weq")

    def __init__(self, r: RelCat):
        cat = r.cat
        self.comp = cat.composition_table()
        from_obj: dict[str, list[str]] = {x: [] for x in cat.objects()}
        weq_into: dict[str, list[str]] = {x: [] for x in cat.objects()}
        for m in cat.morphisms():
            from_obj[cat.source(m)].append(m)
            if m in r.weq:
                weq_into[cat.target(m)].append(m)
        self.from_obj = {k: tuple(v) for k, v in from_obj.items()}
        self.weq_into = {k: tuple(v) for k, v in weq_into.items()}
        right_factor: dict[tuple[str, str], list[str]] = {}
        factor_weq: dict[str, list[tuple[str, str]]] = {}
        for (g, f), h in sorted(self.comp.items()):
            right_factor.setdefault((h, f), []).append(g)
            if g in r.weq:
                factor_weq.setdefault(h, []).append((g, f))
        self.right_factor = {k: tuple(v) for k, v in right_factor.items()}
        self.factor_weq = {k: tuple(v) for k, v in factor_weq.items()}


@lru_cache(maxsize=None)
def _index(r: RelCat) -> _Idx:
    return _Idx(r)


def enumerate_zigzags(r: RelCat, x: str, y: str, n: int) -> tuple[ZigZag, ...]:
    """The complete, duplicate-free, sorted set of stage-n zig-zags X to Y."""
    if n % 2 == 0 or n < 1:
        raise ValidationError("even-stage", (n,))
    cat = r.cat
    if x not in cat.objects() or y not in cat.objects():
        raise ValidationError("unknown-object", (x, y))
    idx = _index(r)
    out: list[ZigZag] = []
    arrows: list[str] = []
    nodes: list[str] = [x]

    def rec(k: int) -> None:
        node = nodes[k]
        if k % 2 == 0:
            if k == n - 1:
                for w in idx.weq_into[node]:
                    if cat.source(w) == y:
                        out.append(ZigZag(x, y, tuple(arrows) + (w,),
                                          tuple(nodes) + (y,)))
                return
            for w in idx.weq_into[node]:
                arrows.append(w)
                nodes.append(cat.source(w))
                rec(k + 1)
                arrows.pop()
                nodes.pop()
        else:
            for m in idx.from_obj[node]:
                arrows.append(m)
                nodes.append(cat.target(m))
                rec(k + 1)
                arrows.pop()
                nodes.pop()

    rec(0)
    out.sort()
    return tuple(out)


def iter_raw_ladders(r: RelCat, z: ZigZag) -> Iterator[tuple[tuple[str, ...], tuple[str, ...]]]:
    """All ladders out of z, as raw (target arrows, components) pairs.

    Streaming and allocation-light on purpose: stage-7 fixtures have
    millions of ladders.  Deterministic DFS order.
    """
    idx = _index(r)
    comp = idx.comp
    right_factor = idx.right_factor
    factor_weq = idx.factor_weq
    from_obj = idx.from_obj
    cat = r.cat
    n = z.stage
    arrows = z.arrows
    nodes = z.nodes
    id_y = cat.identity(z.y)
    tacc: list[str] = []
    vacc: list[str] = []

    def rec(k: int, vk: str) -> Iterator[tuple[tuple[str, ...], tuple[str, ...]]]:
        if k == n - 1:
            # final backward arrow: v_n = id_y forces d' = v_{n-1}∘d_{n-1}
            a = comp[(vk, arrows[k])]
            if a in r.weq:
                yield tuple(tacc) + (a,), tuple(vacc)
            return
        d = arrows[k]
        if k % 2 == 0:
            lhs = comp[(vk, d)]
            for a, b in factor_weq.get(lhs, ()):
                tacc.append(a)
                vacc.append(b)
                yield from rec(k + 1, b)
                tacc.pop()
                vacc.pop()
        else:
            for b in from_obj[nodes[k + 1]]:
                lhs = comp[(b, d)]
                for a in right_factor.get((lhs, vk), ()):
                    tacc.append(a)
                    vacc.append(b)
                    yield from rec(k + 1, b)
                    tacc.pop()
                    vacc.pop()

    yield from rec(0, cat.identity(z.x))


class StageCat:
    """The stage-n hammock category between two fixed endpoints.

    Objects are zig-zags (enumerated once and cached); ladders are
    enumerated on demand and never cached in bulk.  Composition is
    componentwise in the underlying category.
    """

    def __init__(self, relcat: RelCat, x: str, y: str, n: int):
        if n % 2 == 0 or n < 1:
            raise ValidationError("even-stage", (n,))
        self.relcat = relcat
        self.x = x
        self.y = y
        self.n = n
        self._objects: tuple[ZigZag, ...] | None = None
        self._by_arrows: dict[tuple[str, ...], ZigZag] | None = None

    @property
    def params(self) -> tuple:
        return (self.relcat, self.x, self.y, self.n)

    def __eq__(self, other) -> bool:
        return isinstance(other, StageCat) and self.params == other.params

    def __hash__(self) -> int:
        return hash((id(self.relcat.cat), self.relcat.weq, self.x, self.y, self.n))

    def __repr__(self) -> str:
        return (f"StageCat({self.relcat.cat.name}, {self.x!r} -> {self.y!r}, "
                f"n={self.n})")

    def objects(self) -> tuple[ZigZag, ...]:
        if self._objects is None:
            self._objects = enumerate_zigzags(self.relcat, self.x, self.y, self.n)
            self._by_arrows = {z.arrows: z for z in self._objects}
        return self._objects

    def lookup(self, arrows: tuple[str, ...]) -> ZigZag:
        self.objects()
        return self._by_arrows[arrows]

    def iter_ladders_from(self, z: ZigZag) -> Iterator[Ladder]:
        for dst_arrows, comps in iter_raw_ladders(self.relcat, z):
            yield Ladder(z, self.lookup(dst_arrows), comps)

    def morphisms(self) -> Iterator[Ladder]:
        for z in self.objects():
            yield from self.iter_ladders_from(z)

    def hom(self, z: ZigZag, z2: ZigZag) -> tuple[Ladder, ...]:
        return tuple(l for l in self.iter_ladders_from(z) if l.dst == z2)

    def source(self, l: Ladder) -> ZigZag:
        return l.src

    def target(self, l: Ladder) -> ZigZag:
        return l.dst

    def identity(self, z: ZigZag) -> Ladder:
        cat = self.relcat.cat
        return Ladder(z, z, tuple(cat.identity(o) for o in z.nodes[1:-1]))

    def is_identity(self, l: Ladder) -> bool:
        return l.src == l.dst and l == self.identity(l.src)

    def compose(self, g: Ladder, f: Ladder) -> Ladder:
        if f.dst != g.src:
            raise ValidationError("ladder-composability", ())
        comp = self.relcat.cat.compose
        return Ladder(f.src, g.dst,
                      tuple(comp(a, b) for a, b in zip(g.components, f.components)))


def stage_category(r: RelCat, x: str, y: str, n: int) -> StageCat:
    return StageCat(r, x, y, n)


def stage_inclusion(r: RelCat, z: ZigZag, i: int = 1) -> ZigZag:
    """Insert two consecutive identity arrows at node C_i (default C_1)."""
    n = z.stage
    if i < 0 or i > n:
        raise ValidationError("insert-position", (i, n))
    ident = r.cat.identity(z.nodes[i])
    arrows = z.arrows[:i] + (ident, ident) + z.arrows[i:]
    nodes = z.nodes[:i + 1] + (z.nodes[i], z.nodes[i]) + z.nodes[i + 1:]
    return ZigZag(z.x, z.y, arrows, nodes)


def stage_inclusion_ladder(r: RelCat, l: Ladder, i: int = 1) -> Ladder:
    """The inclusion applied to a ladder: the vertical at C_i is doubled."""
    cat = r.cat
    full = (cat.identity(l.src.x),) + l.components + (cat.identity(l.src.y),)
    doubled = full[:i + 1] + (full[i], full[i]) + full[i + 1:]
    return Ladder(stage_inclusion(r, l.src, i), stage_inclusion(r, l.dst, i),
                  doubled[1:-1])


def concatenate(r: RelCat, z1: ZigZag, z2: ZigZag) -> ZigZag:
    """Concatenation: the two adjacent backward arrows merge by composition."""
    if z1.y != z2.x:
        raise ValidationError("endpoint-mismatch", (z1.y, z2.x))
    cat = r.cat
    merged = cat.compose(z1.arrows[-1], z2.arrows[0])
    arrows = z1.arrows[:-1] + (merged,) + z2.arrows[1:]
    nodes = z1.nodes[:-1] + z2.nodes[1:]
    return ZigZag(z1.x, z2.y, arrows, nodes)


def identity_zigzag(r: RelCat, x: str) -> ZigZag:
    """The stage-1 unit for concatenation: a single backward identity."""
    return ZigZag(x, x, (r.cat.identity(x),), (x, x))


def as_letters(z: ZigZag) -> tuple[tuple[str, bool], ...]:
    """The localization word of a zig-zag: backward arrows become inverses."""
    return tuple((d, k % 2 == 0) for k, d in enumerate(z.arrows))


@dataclass(frozen=True)
class HammockStage:
    """A stage category materialized as a finite composition table."""

    stage: StageCat
    cat: FinCat
    zigzag_of: Mapping[str, ZigZag]
    ladder_of: Mapping[str, Ladder]
    name_of_zigzag: Mapping[ZigZag, str]
    name_of_ladder: Mapping[Ladder, str]
    validated: bool


def build_stage_category(r: RelCat, x: str, y: str, n: int,
                         validate: bool | None = None) -> HammockStage:
    """Materialize L^H_n(X, Y) as a FinCat of zig-zags and ladders.

    With validate=None the category laws are re-checked exhaustively when
    the result is small (<= 500 morphisms); larger tables are correct by
    construction (componentwise composition) and skipping the quadratic
    associativity sweep keeps big stages usable.
    """
    st = StageCat(r, x, y, n)
    objs = st.objects()
    owidth = max(2, len(str(max(len(objs) - 1, 0))))
    zname = {z: f"z{i:0{owidth}d}" for i, z in enumerate(objs)}

    ladders: list[Ladder] = []
    for z in objs:
        ladders.extend(st.iter_ladders_from(z))
    ladders.sort()
    mwidth = max(2, len(str(max(len(ladders) - 1, 0))))
    lname = {l: f"m{i:0{mwidth}d}" for i, l in enumerate(ladders)}

    morphisms = {lname[l]: (zname[l.src], zname[l.dst]) for l in ladders}
    identity = {zname[z]: lname[st.identity(z)] for z in objs}
    by_src: dict[ZigZag, list[Ladder]] = {z: [] for z in objs}
    for l in ladders:
        by_src[l.src].append(l)
    comp: dict[tuple[str, str], str] = {}
    for f in ladders:
        for g in by_src[f.dst]:
            comp[(lname[g], lname[f])] = lname[st.compose(g, f)]

    name = f"L^H_{n} {r.cat.name}({x},{y})"
    do_validate = validate if validate is not None else len(ladders) <= 500
    if do_validate:
        cat = validate_category(name, zname.values(), morphisms, identity, comp)
    else:
        source = {m: st_[0] for m, st_ in morphisms.items()}
        target = {m: st_[1] for m, st_ in morphisms.items()}
        cat = FinCat(name, zname.values(), source, target, identity, comp)
    return HammockStage(st, cat,
                        {v: k for k, v in zname.items()},
                        {v: k for k, v in lname.items()},
                        dict(zname), dict(lname), do_validate)


def pi0_stage(r: RelCat, x: str, y: str, n: int) -> tuple[tuple[ZigZag, ...], ...]:
    """Connected components of the stage category, canonically ordered."""
    st = StageCat(r, x, y, n)
    objs = st.objects()
    index = {z.arrows: i for i, z in enumerate(objs)}
    parent = list(range(len(objs)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, z in enumerate(objs):
        seen: set[tuple[str, ...]] = set()
        for dst_arrows, _ in iter_raw_ladders(r, z):
            if dst_arrows in seen:
                continue
            seen.add(dst_arrows)
            a, b = find(i), find(index[dst_arrows])
            if a != b:
                if b < a:
                    a, b = b, a
                parent[b] = a
    blocks: dict[int, list[ZigZag]] = {}
    for i, z in enumerate(objs):
        blocks.setdefault(find(i), []).append(z)
    return tuple(tuple(sorted(v)) for _, v in sorted(blocks.items()))


@dataclass(frozen=True)
class TowerMap:
    n_from: int
    n_to: int
    images: tuple[int, ...]  # class i at n_from -> class images[i] at n_to
    bijective: bool


@dataclass(frozen=True)
class TowerReport:
    x: str
    y: str
    assume_model: bool
    sizes: tuple[tuple[int, int], ...]      # (stage, |pi0|)
    maps: tuple[TowerMap, ...]
    verdict: str                            # "STABLE" | "INCONCLUSIVE"
    final: int | None
    final_basis: str | None                 # "stabilized" | "stage-3"


def pi0_tower(r: RelCat, x: str, y: str, n_max: int,
              assume_model: bool = False) -> TowerReport:
    """Component counts per stage plus the inclusion-induced maps.

    STABLE is a heuristic verdict: the last two inclusion-induced maps are
    bijections.  It is never upgraded to an exact claim here; agreement
    with the word oracle is a separate check.  With assume_model the
    stage-3 count is reported as final (model-category shortcut) while the
    tower is still computed and shown.
    """
    if n_max % 2 == 0 or n_max < 1:
        raise ValidationError("even-stage", (n_max,))
    ns = list(range(1, n_max + 1, 2))
    partitions = {n: pi0_stage(r, x, y, n) for n in ns}
    class_of: dict[int, dict[ZigZag, int]] = {}
    for n in ns:
        class_of[n] = {z: i for i, block in enumerate(partitions[n]) for z in block}
    maps: list[TowerMap] = []
    for n_from, n_to in zip(ns, ns[1:]):
        images: list[int] = []
        for block in partitions[n_from]:
            img = {class_of[n_to][stage_inclusion(r, z, 1)] for z in block}
            if len(img) != 1:
                raise ValidationError("tower-map-ill-defined", (n_from, block[0].arrows))
            images.append(img.pop())
        injective = len(set(images)) == len(images)
        surjective = set(images) == set(range(len(partitions[n_to])))
        maps.append(TowerMap(n_from, n_to, tuple(images), injective and surjective))
    stable = len(maps) >= 2 and maps[-1].bijective and maps[-2].bijective
    verdict = "STABLE" if stable else "INCONCLUSIVE"
    final = None
    basis = None
    if assume_model:
        if 3 in partitions:
            final = len(partitions[3])
            basis = "stage-3"
    elif stable:
        final = len(partitions[n_max])
        basis = "stabilized"
    sizes = tuple((n, len(partitions[n])) for n in ns)
    return TowerReport(x, y, assume_model, sizes, tuple(maps), verdict, final, basis)
