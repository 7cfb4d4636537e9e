"""Closed-form catalogs of exceptional representations for two fixed quivers.

The triangle quiver has vertices a (bottom left), b (top), c (bottom right)
and arrows a->b, a->c, c->b.  The square quiver has vertices tl, tr, bl, br
and arrows tl->tr, bl->tl, br->tr, bl->br.  Each catalog consists of four
(triangle) or eight (square) series indexed by a level m >= 0 built from
coordinate projections and inclusions, plus sporadic small objects.  The
matrices are written over any field; exceptionality is verified on entry
construction.

The reoriented square (right edge flipped to tr->br) is the standard witness
that these properties are orientation-sensitive: it carries a pair of thin
exceptional representations with Hom and Ext^1 simultaneously nonzero.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exceptional import PairTable, pair_table
from .linalg import ExactMatrix, FieldSpec
from .quiver import Quiver
from .rep import Representation, DimVector, is_exceptional, thin_rep


def triangle_quiver() -> Quiver:
    return Quiver(("a", "b", "c"), [("a", "b"), ("a", "c"), ("c", "b")])


def square_quiver() -> Quiver:
    return Quiver(("tl", "tr", "bl", "br"),
                  [("tl", "tr"), ("bl", "tl"), ("br", "tr"), ("bl", "br")])


def reoriented_square_quiver() -> Quiver:
    return Quiver(("tl", "tr", "bl", "br"),
                  [("tl", "tr"), ("bl", "tl"), ("tr", "br"), ("bl", "br")])


# -- the four building-block map families ------------------------------------


def proj_drop_last(field: FieldSpec, m: int) -> ExactMatrix:
    """k^{m+1} -> k^m forgetting the last coordinate."""
    return ExactMatrix.from_rows(field, [[int(j == i) for j in range(m + 1)]
                                         for i in range(m)], shape=(m, m + 1))


def proj_drop_first(field: FieldSpec, m: int) -> ExactMatrix:
    """k^{m+1} -> k^m forgetting the first coordinate."""
    return ExactMatrix.from_rows(field, [[int(j == i + 1) for j in range(m + 1)]
                                         for i in range(m)], shape=(m, m + 1))


def incl_pad_last(field: FieldSpec, m: int) -> ExactMatrix:
    """k^m -> k^{m+1} appending a zero coordinate."""
    return ExactMatrix.from_rows(field, [[int(j == i) for j in range(m)]
                                         for i in range(m + 1)], shape=(m + 1, m))


def incl_pad_first(field: FieldSpec, m: int) -> ExactMatrix:
    """k^m -> k^{m+1} prepending a zero coordinate."""
    return ExactMatrix.from_rows(field, [[int(j == i - 1) for j in range(m)]
                                         for i in range(m + 1)], shape=(m + 1, m))


@dataclass(frozen=True)
class CatalogEntry:
    family: str
    level: int | None
    rep: Representation

    @property
    def label(self) -> str:
        return self.family if self.level is None else f"{self.family}[{self.level}]"


TRIANGLE_SERIES = ("E1", "E2", "E3", "E4")
TRIANGLE_SPORADIC = ("M", "M'")
SQUARE_SERIES = ("E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8")
SQUARE_SPORADIC = ("F+", "F-", "G+", "G-")


def _build(q: Quiver, dims: tuple[int, ...], maps: dict[int, ExactMatrix],
           field: FieldSpec) -> Representation:
    return Representation(q, DimVector(q, dims), field, maps)


def triangle_entry(family: str, m: int | None = None,
                   field: FieldSpec = FieldSpec.prime()) -> CatalogEntry:
    """Catalog entry of the triangle quiver; arrows are (a->b, a->c, c->b)."""
    q = triangle_quiver()
    ident = lambda n: ExactMatrix.identity(field, n)
    if family in TRIANGLE_SPORADIC:
        if m is not None:
            raise ValueError(f"sporadic object {family} takes no level")
        rep = thin_rep(q, {"c"} if family == "M" else {"a", "b"}, field)
        entry = CatalogEntry(family, None, rep)
    elif family in TRIANGLE_SERIES:
        if m is None or m < 0:
            raise ValueError(f"series {family} needs a level m >= 0")
        if family == "E1":
            rep = _build(q, (m + 1, m, m), {0: proj_drop_last(field, m),
                                            1: proj_drop_first(field, m),
                                            2: ident(m)}, field)
        elif family == "E2":
            rep = _build(q, (m, m + 1, m + 1), {0: incl_pad_last(field, m),
                                                1: incl_pad_first(field, m),
                                                2: ident(m + 1)}, field)
        elif family == "E3":
            rep = _build(q, (m, m + 1, m), {0: incl_pad_last(field, m),
                                            1: ident(m),
                                            2: incl_pad_first(field, m)}, field)
        else:  # E4
            rep = _build(q, (m + 1, m, m + 1), {0: proj_drop_last(field, m),
                                                1: ident(m + 1),
                                                2: proj_drop_first(field, m)}, field)
        entry = CatalogEntry(family, m, rep)
    else:
        raise ValueError(f"unknown triangle family {family!r}")
    if not is_exceptional(entry.rep):
        raise AssertionError(f"catalog entry {entry.label} failed the exceptionality check")
    return entry


def square_entry(family: str, m: int | None = None,
                 field: FieldSpec = FieldSpec.prime()) -> CatalogEntry:
    """Catalog entry of the square quiver; arrows are
    (tl->tr, bl->tl, br->tr, bl->br) and dims read (tl, tr, bl, br)."""
    q = square_quiver()
    ident = lambda n: ExactMatrix.identity(field, n)
    if family in SQUARE_SPORADIC:
        if m is not None:
            raise ValueError(f"sporadic object {family} takes no level")
        support = {"F+": {"tl"}, "F-": {"br"},
                   "G+": {"tl", "tr", "bl"}, "G-": {"tr", "bl", "br"}}[family]
        entry = CatalogEntry(family, None, thin_rep(q, support, field))
    elif family in SQUARE_SERIES:
        if m is None or m < 0:
            raise ValueError(f"series {family} needs a level m >= 0")
        # maps keyed by arrow id: 0 tl->tr, 1 bl->tl, 2 br->tr, 3 bl->br
        if family == "E1":
            dims, maps = (m, m, m + 1, m), {0: ident(m), 1: proj_drop_last(field, m),
                                            2: ident(m), 3: proj_drop_first(field, m)}
        elif family == "E2":
            dims, maps = (m + 1, m + 1, m, m + 1), {0: ident(m + 1), 1: incl_pad_last(field, m),
                                                    2: ident(m + 1), 3: incl_pad_first(field, m)}
        elif family == "E3":
            dims, maps = (m, m + 1, m, m), {0: incl_pad_last(field, m), 1: ident(m),
                                            2: incl_pad_first(field, m), 3: ident(m)}
        elif family == "E4":
            dims, maps = (m + 1, m, m + 1, m + 1), {0: proj_drop_last(field, m), 1: ident(m + 1),
                                                    2: proj_drop_first(field, m), 3: ident(m + 1)}
        elif family == "E5":
            dims, maps = (m, m + 1, m, m + 1), {0: incl_pad_last(field, m), 1: ident(m),
                                                2: ident(m + 1), 3: incl_pad_first(field, m)}
        elif family == "E6":
            dims, maps = (m + 1, m, m + 1, m), {0: proj_drop_last(field, m), 1: ident(m + 1),
                                                2: ident(m), 3: proj_drop_first(field, m)}
        elif family == "E7":
            dims, maps = (m, m, m + 1, m + 1), {0: ident(m), 1: proj_drop_last(field, m),
                                                2: proj_drop_first(field, m), 3: ident(m + 1)}
        else:  # E8
            dims, maps = (m + 1, m + 1, m, m), {0: ident(m + 1), 1: incl_pad_last(field, m),
                                                2: incl_pad_first(field, m), 3: ident(m)}
        entry = CatalogEntry(family, m, _build(q, dims, maps, field))
    else:
        raise ValueError(f"unknown square family {family!r}")
    if not is_exceptional(entry.rep):
        raise AssertionError(f"catalog entry {entry.label} failed the exceptionality check")
    return entry


def catalog_entries(which: str, max_m: int,
                    field: FieldSpec = FieldSpec.prime()) -> list[CatalogEntry]:
    """All catalog entries with level <= max_m plus the sporadic objects."""
    if which == "triangle":
        series, sporadic, build = TRIANGLE_SERIES, TRIANGLE_SPORADIC, triangle_entry
    elif which == "square":
        series, sporadic, build = SQUARE_SERIES, SQUARE_SPORADIC, square_entry
    else:
        raise ValueError(f"unknown catalog {which!r}, expected 'triangle' or 'square'")
    out = [build(fam, m, field) for fam in series for m in range(max_m + 1)]
    out.extend(build(fam, None, field) for fam in sporadic)
    return out


EXPECTED_COUPLES = {
    "triangle": [("M", "M'")],
    "square": [("F+", "G-"), ("F-", "G+")],
}


@lru_cache(maxsize=8)
def catalog_table(which: str, max_m: int,
                  field: FieldSpec = FieldSpec.prime()) -> PairTable:
    entries = catalog_entries(which, max_m, field)
    return pair_table([e.rep for e in entries], [e.label for e in entries])


@dataclass
class CoupleReport:
    which: str
    max_m: int
    found: list[tuple[str, str]]
    expected: list[tuple[str, str]]

    @property
    def ok(self) -> bool:
        return sorted(self.found) == sorted(self.expected)


def verify_couples(which: str, max_m: int,
                   field: FieldSpec = FieldSpec.prime()) -> CoupleReport:
    """The Ext-nontrivial couples of the catalog must be exactly the known ones."""
    table = catalog_table(which, max_m, field)
    return CoupleReport(which=which, max_m=max_m,
                        found=table.ext_nontrivial_couples(),
                        expected=list(EXPECTED_COUPLES[which]))


@dataclass
class RpReport:
    """Check of the two regularity-preserving implications over a catalog.

    Property 1: for a couple (C, C') and any exceptional X, if Hom and Ext
    from C to X both vanish then they both vanish from X to C'.  Property 2:
    if Hom(C, X) and Hom(X, Y) are nonzero while Hom and Ext from C to Y both
    vanish, then Hom(C', Y) is nonzero.  Both are checked for both orderings
    of every couple; instances whose antecedent never fires are vacuous.
    """

    which: str
    max_m: int
    prop1_checked: int = 0
    prop1_vacuous: int = 0
    prop2_checked: int = 0
    prop2_vacuous: int = 0
    violations: list = None

    def __post_init__(self):
        if self.violations is None:
            self.violations = []

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_rp_properties(which: str, max_m: int,
                         field: FieldSpec = FieldSpec.prime()) -> RpReport:
    table = catalog_table(which, max_m, field)
    labels = table.labels
    index = {lab: i for i, lab in enumerate(labels)}
    report = RpReport(which=which, max_m=max_m)
    couples = table.ext_nontrivial_couples()
    for pair in couples:
        for gamma, gamma_p in (pair, pair[::-1]):
            gi, gpi = index[gamma], index[gamma_p]
            for xi in range(len(labels)):
                c_gx = table.cells[gi][xi]
                if c_gx.hom == 0 and c_gx.ext1 == 0:
                    report.prop1_checked += 1
                    c_xgp = table.cells[xi][gpi]
                    if c_xgp.hom != 0 or c_xgp.ext1 != 0:
                        report.violations.append(
                            ("prop1", gamma, gamma_p, labels[xi],
                             c_xgp.hom, c_xgp.ext1))
                else:
                    report.prop1_vacuous += 1
            for xi in range(len(labels)):
                hom_gx = table.cells[gi][xi].hom
                for yi in range(len(labels)):
                    c_gy = table.cells[gi][yi]
                    if (hom_gx > 0 and table.cells[xi][yi].hom > 0
                            and c_gy.hom == 0 and c_gy.ext1 == 0):
                        report.prop2_checked += 1
                        if table.cells[gpi][yi].hom == 0:
                            report.violations.append(
                                ("prop2", gamma, gamma_p, labels[xi], labels[yi]))
                    else:
                        report.prop2_vacuous += 1
    return report


@dataclass
class SingleDegreeReport:
    which: str
    max_m: int
    violations: list[tuple[str, str]]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_single_degree(which: str, max_m: int,
                         field: FieldSpec = FieldSpec.prime()) -> SingleDegreeReport:
    """At most one of Hom and Ext^1 may be nonzero for every ordered pair."""
    table = catalog_table(which, max_m, field)
    return SingleDegreeReport(which=which, max_m=max_m,
                              violations=table.single_degree_violations())


def reoriented_square_pair(field: FieldSpec = FieldSpec.prime()
                           ) -> tuple[Representation, Representation]:
    """The thin exceptional pair on the reoriented square whose differential
    drops rank: dims (1,0,1,1) and (0,1,1,1)."""
    q = reoriented_square_quiver()
    return (thin_rep(q, {"tl", "bl", "br"}, field),
            thin_rep(q, {"tr", "bl", "br"}, field))
