"""The canonical fixture zoo used across the test suite and the CLI docs.

PT      terminal category
ARR     walking arrow f: X -> Y, weqs = identities
WEQ     walking weak equivalence w: X -> Y
PARA    parallel pair f, w: A -> B with only w inverted
ISO     strict isomorphism pair u: U -> V, v: V -> U, weqs = identities
CYLFIX  a cylinder object for A with a homotopy H: f ≃ g into B
IDEMFIX WEQ with the collapse functor as homotopy idempotent, plus the
        derived monad and the strict algebra on Y

Each fixture is built through the validating constructors, so importing
this module re-proves all the table laws.
"""

from __future__ import annotations

from functools import cache

from .fincat import FunctorData, NatTransData, identity_functor, validate_category
from .relcat import (CylinderData, HoAlgebraData, IdempotentData,
                     LeftHomotopyData, MonadData, STRICT, SpecBundle,
                     validate_relcat)


def _table(morphisms, entries):
    """A full composition table: identity entries plus the listed ones."""
    ident = {}
    for m, (s, t) in morphisms.items():
        if m.startswith("id_"):
            ident[s] = m
    comp = {}
    for m, (s, t) in morphisms.items():
        comp[(ident[t], m)] = m
        comp[(m, ident[s])] = m
    comp.update(entries)
    return ident, comp


def _bundle(name, objects, morphisms, entries, weq, **payloads) -> SpecBundle:
    ident, comp = _table(morphisms, entries)
    cat = validate_category(name, objects, morphisms, ident, comp)
    return SpecBundle(relcat=validate_relcat(cat, weq), **payloads)


@cache
def pt() -> SpecBundle:
    return _bundle("PT", ["*"], {"id_*": ("*", "*")}, {}, {"id_*"})


@cache
def arr() -> SpecBundle:
    morphisms = {"id_X": ("X", "X"), "id_Y": ("Y", "Y"), "f": ("X", "Y")}
    return _bundle("ARR", ["X", "Y"], morphisms, {}, {"id_X", "id_Y"})


@cache
def weq() -> SpecBundle:
    morphisms = {"id_X": ("X", "X"), "id_Y": ("Y", "Y"), "w": ("X", "Y")}
    return _bundle("WEQ", ["X", "Y"], morphisms, {}, {"id_X", "id_Y", "w"})


@cache
def para() -> SpecBundle:
    morphisms = {"id_A": ("A", "A"), "id_B": ("B", "B"),
                 "f": ("A", "B"), "w": ("A", "B")}
    return _bundle("PARA", ["A", "B"], morphisms, {}, {"id_A", "id_B", "w"})


@cache
def iso() -> SpecBundle:
    morphisms = {"id_U": ("U", "U"), "id_V": ("V", "V"),
                 "u": ("U", "V"), "v": ("V", "U")}
    entries = {("v", "u"): "id_U", ("u", "v"): "id_V"}
    return _bundle("ISO", ["U", "V"], morphisms, entries, {"id_U", "id_V"})


@cache
def cylfix() -> SpecBundle:
    morphisms = {
        "id_A": ("A", "A"), "id_CA": ("CA", "CA"), "id_B": ("B", "B"),
        "i0": ("A", "CA"), "i1": ("A", "CA"), "p": ("CA", "A"),
        "i0p": ("CA", "CA"), "i1p": ("CA", "CA"),
        "f": ("A", "B"), "g": ("A", "B"), "H": ("CA", "B"),
        "fp": ("CA", "B"), "gp": ("CA", "B"),
    }
    entries = {
        ("p", "i0"): "id_A", ("p", "i1"): "id_A",
        ("H", "i0"): "f", ("H", "i1"): "g",
        ("i0", "p"): "i0p", ("i1", "p"): "i1p",
        ("f", "p"): "fp", ("g", "p"): "gp",
        ("p", "i0p"): "p", ("p", "i1p"): "p",
        ("i0p", "i0"): "i0", ("i0p", "i1"): "i0",
        ("i1p", "i0"): "i1", ("i1p", "i1"): "i1",
        ("i0p", "i0p"): "i0p", ("i0p", "i1p"): "i0p",
        ("i1p", "i0p"): "i1p", ("i1p", "i1p"): "i1p",
        ("H", "i0p"): "fp", ("H", "i1p"): "gp",
        ("fp", "i0"): "f", ("fp", "i1"): "f",
        ("gp", "i0"): "g", ("gp", "i1"): "g",
        ("fp", "i0p"): "fp", ("fp", "i1p"): "fp",
        ("gp", "i0p"): "gp", ("gp", "i1p"): "gp",
    }
    weqs = {"id_A", "id_CA", "id_B", "i0", "i1", "p", "i0p", "i1p"}
    cyl = CylinderData("A", "CA", "i0", "i1", "p")
    hom = LeftHomotopyData(cyl, "f", "g", "H")
    return _bundle("CYLFIX", ["A", "CA", "B"], morphisms, entries, weqs,
                   cylinders={"A": cyl}, lhomotopies={"Hfg": hom})


@cache
def idemfix() -> SpecBundle:
    base = weq().relcat
    cat = base.cat
    collapse = FunctorData("L", cat, cat, {"X": "Y", "Y": "Y"},
                           {"id_X": "id_Y", "id_Y": "id_Y", "w": "id_Y"})
    ident = identity_functor(cat)
    ell = NatTransData("ell", ident, collapse, {"X": "w", "Y": "id_Y"})
    # L∘L = L on the nose, so the multiplication is the identity on L
    ll = FunctorData("LL", cat, cat, dict(collapse.obj_map), dict(collapse.mor_map))
    mu = NatTransData("mu", ll, collapse, {"X": "id_Y", "Y": "id_Y"})
    monad = MonadData("T", collapse, ell, mu)
    alg = HoAlgebraData("AlgY", monad, "Y", "id_Y", STRICT, STRICT)
    idem = IdempotentData("Lidem", collapse, ell, {"X": STRICT, "Y": STRICT})
    return SpecBundle(relcat=base,
                      functors={"Id": ident, "L": collapse, "LL": ll},
                      nats={"ell": ell, "mu": mu},
                      monads={"T": monad},
                      algebras={"AlgY": alg},
                      idems={"Lidem": idem})


ALL = {"PT": pt, "ARR": arr, "WEQ": weq, "PARA": para, "ISO": iso,
       "CYLFIX": cylfix, "IDEMFIX": idemfix}
