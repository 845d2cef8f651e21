"""Categories with weak equivalences and their homotopical payloads.

The weak-equivalence class is required to contain all identities and to be
closed under composition; closure is what makes the concatenation of
zig-zags produce legal backward arrows without any reduction step.

Witness fields that may either be an on-the-nose equality or a left
homotopy use the STRICT token for the former; a STRICT claim is checked by
table lookup when the payload is validated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Union

from .errors import ValidationError
from .fincat import (FinCat, FunctorData, NatTransData, check_functor,
                     check_nat_trans, compose_functors, identity_functor,
                     same_functor_maps)

STRICT = "STRICT"


@dataclass(frozen=True)
class RelCat:
    """A finite category together with its class of weak equivalences."""

    cat: FinCat
    weq: frozenset[str]

    def is_weq(self, m: str) -> bool:
        return m in self.weq

    def __repr__(self) -> str:
        return f"RelCat({self.cat.name!r}, {len(self.weq)} weqs)"


def validate_relcat(cat: FinCat, weq) -> RelCat:
    """Check that weq contains all identities and is composition closed."""
    w = frozenset(weq)
    for m in sorted(w):
        if m not in cat:
            raise ValidationError("weq-unknown", (m,))
    for x in cat.objects():
        if cat.identity(x) not in w:
            raise ValidationError("weq-missing-identity", (x, cat.identity(x)))
    for g in sorted(w):
        for f in sorted(w):
            if cat.target(f) == cat.source(g) and cat.compose(g, f) not in w:
                raise ValidationError("weq-closure", (g, f))
    return RelCat(cat, w)


def check_two_out_of_three(r: RelCat) -> tuple[str, str, str] | None:
    """Return None if W satisfies 2-out-of-3, else a counterexample (f, g, g∘f)."""
    cat = r.cat
    for (g, f) in cat.composable_pairs():
        h = cat.compose(g, f)
        inside = (f in r.weq) + (g in r.weq) + (h in r.weq)
        if inside == 2:
            return (f, g, h)
    return None


@dataclass(frozen=True)
class CylinderData:
    """A cylinder object for `base`: i0, i1 sections of the projection p."""

    base: str
    cyl: str
    i0: str
    i1: str
    p: str


def degenerate_cylinder(r: RelCat, a: str) -> CylinderData:
    """The trivial cylinder Cyl(A)=A with i0 = i1 = p = id_A."""
    i = r.cat.identity(a)
    return CylinderData(a, a, i, i, i)


def validate_cylinder(r: RelCat, c: CylinderData) -> None:
    cat = r.cat
    for m, (s, t) in ((c.i0, (c.base, c.cyl)), (c.i1, (c.base, c.cyl)),
                      (c.p, (c.cyl, c.base))):
        if m not in cat or cat.source(m) != s or cat.target(m) != t:
            raise ValidationError("cylinder-endpoints", (m, s, t))
    ident = cat.identity(c.base)
    if cat.compose(c.p, c.i0) != ident:
        raise ValidationError("cylinder-retraction", (c.p, c.i0))
    if cat.compose(c.p, c.i1) != ident:
        raise ValidationError("cylinder-retraction", (c.p, c.i1))
    for m in (c.i0, c.i1, c.p):
        if m not in r.weq:
            raise ValidationError("cylinder-weq", (m,))


@dataclass(frozen=True)
class LeftHomotopyData:
    """H: Cyl(A) -> B with H∘i0 = f and H∘i1 = g."""

    cylinder: CylinderData
    f: str
    g: str
    h: str


def strict_homotopy(r: RelCat, f: str) -> LeftHomotopyData:
    """The degenerate homotopy witnessing f ≃ f on the trivial cylinder."""
    return LeftHomotopyData(degenerate_cylinder(r, r.cat.source(f)), f, f, f)


def validate_left_homotopy(r: RelCat, lh: LeftHomotopyData) -> None:
    """Check cylinder invariants plus both boundary conditions."""
    validate_cylinder(r, lh.cylinder)
    cat, c = r.cat, lh.cylinder
    for m in (lh.f, lh.g):
        if m not in cat or cat.source(m) != c.base:
            raise ValidationError("homotopy-endpoints", (m, c.base))
    b = cat.target(lh.f)
    if cat.target(lh.g) != b:
        raise ValidationError("homotopy-endpoints", (lh.g, b))
    if lh.h not in cat or cat.source(lh.h) != c.cyl or cat.target(lh.h) != b:
        raise ValidationError("homotopy-endpoints", (lh.h, c.cyl, b))
    if cat.compose(lh.h, c.i0) != lh.f:
        raise ValidationError("homotopy-boundary", (lh.h, c.i0, lh.f))
    if cat.compose(lh.h, c.i1) != lh.g:
        raise ValidationError("homotopy-boundary", (lh.h, c.i1, lh.g))


Witness = Union[LeftHomotopyData, str]  # LeftHomotopyData or STRICT


def _resolve_witness(r: RelCat, w: Witness, f: str, g: str,
                     label: str) -> LeftHomotopyData:
    """Turn a witness into validated homotopy data for f ≃ g."""
    cat = r.cat
    if w == STRICT:
        if f != g:
            raise ValidationError("strict-claim", (label, f, g))
        return strict_homotopy(r, f)
    validate_left_homotopy(r, w)
    if w.f != f or w.g != g:
        raise ValidationError("witness-boundary", (label, w.f, w.g, f, g))
    return w


@dataclass(frozen=True)
class MonadData:
    """An endofunctor T with unit and multiplication."""

    name: str
    functor: FunctorData
    eta: NatTransData
    mu: NatTransData


def validate_monad(r: RelCat, m: MonadData) -> None:
    """Check functoriality, naturality, and the monad laws componentwise."""
    cat = r.cat
    t = m.functor
    if t.source is not cat or t.target is not cat:
        raise ValidationError("monad-endofunctor", (m.name,))
    check_functor(t)
    check_nat_trans(m.eta)
    check_nat_trans(m.mu)
    if not same_functor_maps(m.eta.source, identity_functor(cat)):
        raise ValidationError("monad-unit-source", (m.name,))
    if not same_functor_maps(m.eta.target, t):
        raise ValidationError("monad-unit-target", (m.name,))
    if not same_functor_maps(m.mu.source, compose_functors(t, t)):
        raise ValidationError("monad-mult-source", (m.name,))
    if not same_functor_maps(m.mu.target, t):
        raise ValidationError("monad-mult-target", (m.name,))
    for x in cat.objects():
        mu_x, eta_x = m.mu.components[x], m.eta.components[x]
        tx = t.obj_map[x]
        if cat.compose(mu_x, t.mor_map[m.mu.components[x]]) != \
                cat.compose(mu_x, m.mu.components[tx]):
            raise ValidationError("monad-associativity", (m.name, x))
        if cat.compose(mu_x, t.mor_map[eta_x]) != cat.identity(tx):
            raise ValidationError("monad-unit", (m.name, x, "T(eta)"))
        if cat.compose(mu_x, m.eta.components[tx]) != cat.identity(tx):
            raise ValidationError("monad-unit", (m.name, x, "eta(T)"))


def monad_preserves_weq(r: RelCat, m: MonadData) -> str | None:
    """The first weak equivalence whose T-image is not one, or None."""
    for w in sorted(r.weq):
        if m.functor.mor_map[w] not in r.weq:
            return w
    return None


@dataclass(frozen=True)
class HoAlgebraData:
    """A homotopy algebra: carrier, action, and the two law witnesses."""

    name: str
    monad: MonadData
    carrier: str
    action: str
    unit_witness: Witness
    assoc_witness: Witness


def validate_hoalgebra(r: RelCat, alg: HoAlgebraData) -> tuple[LeftHomotopyData, LeftHomotopyData]:
    """Validate and return the resolved (unit, associativity) homotopies."""
    cat = r.cat
    t = alg.monad.functor
    x, a = alg.carrier, alg.action
    tx = t.obj_map[x]
    if a not in cat or cat.source(a) != tx or cat.target(a) != x:
        raise ValidationError("algebra-action", (alg.name, a))
    unit = _resolve_witness(r, alg.unit_witness,
                            cat.compose(a, alg.monad.eta.components[x]),
                            cat.identity(x), f"{alg.name}.unit")
    assoc = _resolve_witness(r, alg.assoc_witness,
                             cat.compose(a, alg.monad.mu.components[x]),
                             cat.compose(a, t.mor_map[a]), f"{alg.name}.assoc")
    return unit, assoc


@dataclass(frozen=True)
class IdempotentData:
    """A coaugmented functor L with unit ell and per-object witnesses.

    wit[Z] witnesses L(ell_Z) ≃ ell_{LZ} : LZ -> LLZ, either STRICT or a
    left homotopy on a cylinder for LZ.
    """

    name: str
    functor: FunctorData
    ell: NatTransData
    wit: Mapping[str, Witness] = field(default_factory=dict)


@dataclass(frozen=True)
class IdempotentReport:
    name: str
    verdict: str                         # "pass" | "fail" | "UNKNOWN"
    failing: tuple[tuple[str, str], ...]  # (object, reason)
    unknown: tuple[str, ...]             # objects the oracle could not decide
    bound: int


def idempotent_witness(r: RelCat, d: IdempotentData, z: str) -> LeftHomotopyData:
    """The validated homotopy L(ell_Z) ≃ ell_{LZ} for object Z."""
    cat = r.cat
    l_ell = d.functor.mor_map[d.ell.components[z]]
    ell_l = d.ell.components[d.functor.obj_map[z]]
    return _resolve_witness(r, d.wit.get(z, STRICT), l_ell, ell_l,
                            f"{d.name}.wit[{z}]")


def validate_idempotent(r: RelCat, d: IdempotentData, bound: int = 8) -> IdempotentReport:
    """Check the homotopy-idempotency conditions; three-valued verdict.

    Weq-preservation and weq-ness of ell_{LZ} and L(ell_Z) are exact table
    checks.  "Equal in the localized category" is decided by the bounded
    word oracle, so the verdict may be UNKNOWN when the oracle does not
    saturate.  Structural defects (invalid functor/transformation/witness)
    raise instead of being reported.
    """
    from .oracle import equal_in_localization, make_word

    cat = r.cat
    check_functor(d.functor)
    if d.functor.source is not cat or d.functor.target is not cat:
        raise ValidationError("idempotent-endofunctor", (d.name,))
    check_nat_trans(d.ell)
    if not same_functor_maps(d.ell.source, identity_functor(cat)):
        raise ValidationError("idempotent-unit-source", (d.name,))
    if not same_functor_maps(d.ell.target, d.functor):
        raise ValidationError("idempotent-unit-target", (d.name,))

    failing: list[tuple[str, str]] = []
    unknown: list[str] = []
    for w in sorted(r.weq):
        if d.functor.mor_map[w] not in r.weq:
            failing.append((w, "L does not preserve this weak equivalence"))
    for z in cat.objects():
        lz = d.functor.obj_map[z]
        l_ell = d.functor.mor_map[d.ell.components[z]]
        ell_l = d.ell.components[lz]
        if l_ell not in r.weq:
            failing.append((z, "L(ell) is not a weak equivalence"))
            continue
        if ell_l not in r.weq:
            failing.append((z, "ell at LZ is not a weak equivalence"))
            continue
        idempotent_witness(r, d, z)
        llz = d.functor.obj_map[lz]
        u = make_word(r, lz, llz, ((l_ell, False),))
        v = make_word(r, lz, llz, ((ell_l, False),))
        verdict = equal_in_localization(r, u, v, bound)
        if verdict == "no-at-bound":
            failing.append((z, "L(ell) and ell(L) differ in the localization"))
        elif verdict == "UNKNOWN":
            unknown.append(z)
    if failing:
        verdict = "fail"
    elif unknown:
        verdict = "UNKNOWN"
    else:
        verdict = "pass"
    return IdempotentReport(d.name, verdict, tuple(failing), tuple(unknown), bound)


@dataclass(frozen=True)
class SpecBundle:
    """A validated category with weak equivalences plus named payloads."""

    relcat: RelCat
    functors: Mapping[str, FunctorData] = field(default_factory=dict)
    nats: Mapping[str, NatTransData] = field(default_factory=dict)
    cylinders: Mapping[str, CylinderData] = field(default_factory=dict)
    lhomotopies: Mapping[str, LeftHomotopyData] = field(default_factory=dict)
    monads: Mapping[str, MonadData] = field(default_factory=dict)
    algebras: Mapping[str, HoAlgebraData] = field(default_factory=dict)
    idems: Mapping[str, IdempotentData] = field(default_factory=dict)
