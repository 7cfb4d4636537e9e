"""Quiver representations and the two-term Hom complex.

For representations r, s the differential maps the direct sum of the vertex
Hom spaces to the direct sum of the arrow Hom spaces by
f = (f_i) |-> (f_target(a) . r_a - s_a . f_source(a)).  Its kernel is
Hom(r, s) and its cokernel is Ext^1(r, s), so the whole homology of the pair
is read off one exact rank computation.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from . import linalg
from .linalg import ExactMatrix, FieldSpec
from .quiver import DimVector, Quiver, euler_form, dual_quiver, parse_quiver, serialize_quiver


class Representation:
    """Matrices over a fixed field attached to the arrows of a quiver.

    maps is keyed by arrow id; the matrix for arrow a has shape
    (dim[target(a)], dim[source(a)]).  Zero-dimensional shapes are legal.
    """

    __slots__ = ("quiver", "dim", "field", "maps")

    def __init__(self, quiver: Quiver, dim: DimVector, field: FieldSpec,
                 maps: Mapping[int, ExactMatrix]):
        if dim.quiver != quiver:
            raise ValueError("dimension vector lives on a different quiver")
        maps = dict(maps)
        for a in quiver.arrows:
            if a.id not in maps:
                raise ValueError(f"missing matrix for arrow {a.id} ({a.source}->{a.target})")
            m = maps[a.id]
            want = (dim[a.target], dim[a.source])
            if m.shape != want:
                raise ValueError(f"arrow {a.id} ({a.source}->{a.target}) expects shape "
                                 f"{want}, got {m.shape}")
            if m.field != field:
                raise ValueError(f"arrow {a.id} matrix is over {m.field}, expected {field}")
        if set(maps) != {a.id for a in quiver.arrows}:
            extra = set(maps) - {a.id for a in quiver.arrows}
            raise ValueError(f"matrices for unknown arrow ids {sorted(extra)}")
        self.quiver = quiver
        self.dim = dim
        self.field = field
        self.maps = maps

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.quiver == other.quiver and self.dim == other.dim
                and self.field == other.field
                and all(self.maps[a.id] == other.maps[a.id] for a in self.quiver.arrows))

    def __hash__(self):
        return hash((self.quiver, self.dim.entries, self.field))

    def __repr__(self):
        return f"Representation({self.dim.entries}, {self.field})"


def zero_rep(q: Quiver, dim: DimVector, field: FieldSpec) -> Representation:
    maps = {a.id: ExactMatrix.zeros(field, dim[a.target], dim[a.source]) for a in q.arrows}
    return Representation(q, dim, field, maps)


def thin_rep(q: Quiver, support: Iterable[str], field: FieldSpec) -> Representation:
    """Thin representation: dimension 1 on the support, identity on every
    arrow whose two endpoints both lie in the support."""
    support = set(support)
    dim = DimVector(q, (int(v in support) for v in q.vertices))
    maps = {}
    for a in q.arrows:
        if a.source in support and a.target in support:
            maps[a.id] = ExactMatrix.identity(field, 1)
        else:
            maps[a.id] = ExactMatrix.zeros(field, dim[a.target], dim[a.source])
    return Representation(q, dim, field, maps)


def random_rep(q: Quiver, dim: DimVector, field: FieldSpec,
               rng: np.random.Generator, bound: int = 10 ** 6) -> Representation:
    maps = {a.id: linalg.random_matrix(dim[a.target], dim[a.source], field, rng, bound)
            for a in q.arrows}
    return Representation(q, dim, field, maps)


@dataclass(frozen=True)
class HomReport:
    """Hom/Ext dimensions of an ordered pair, with the differential's size and
    rank.  Always: hom = cols - rank, ext1 = rows - rank, hom - ext1 = euler."""

    hom: int
    ext1: int
    euler: int
    rank: int
    rows: int
    cols: int

    @property
    def max_rank(self) -> bool:
        return self.rank == min(self.rows, self.cols)

    def to_dict(self) -> dict:
        return {"hom": self.hom, "ext1": self.ext1, "euler": self.euler,
                "rank": self.rank, "rows": self.rows, "cols": self.cols,
                "max_rank": self.max_rank}


def _check_pair(r: Representation, s: Representation):
    if r.quiver != s.quiver:
        raise ValueError("representations live on different quivers")
    if r.field != s.field:
        raise ValueError(f"field mismatch: {r.field} vs {s.field}")


def hom_differential(r: Representation, s: Representation) -> ExactMatrix:
    """Matrix of the Hom-complex differential for the ordered pair (r, s).

    Columns are grouped by vertex in canonical order, one group per vertex i
    of width r.dim[i] * s.dim[i]; rows are grouped by arrow in id order, one
    group per arrow a of height r.dim[source(a)] * s.dim[target(a)].  Each
    Hom(k^m, k^n) summand is flattened column-major, under which composition
    becomes a Kronecker product: the block in the target-vertex column group
    is kron(r_a^T, I) and the block in the source-vertex column group is
    -kron(I, s_a).  Arrows with a zero-size row group contribute nothing;
    vertex groups where either dimension vanishes have zero width.
    """
    _check_pair(r, s)
    q = r.quiver
    field = r.field
    col_off = {}
    off = 0
    for v in q.vertices:
        col_off[v] = off
        off += r.dim[v] * s.dim[v]
    cols = off
    row_off = {}
    off = 0
    for a in q.arrows:
        row_off[a.id] = off
        off += r.dim[a.source] * s.dim[a.target]
    rows = off

    if field.is_rational:
        data = np.full((rows, cols), Fraction(0), dtype=object)
    else:
        data = np.zeros((rows, cols), dtype=np.int64)
    p = field.char

    for a in q.arrows:
        h = r.dim[a.source] * s.dim[a.target]
        if h == 0:
            continue
        r0 = row_off[a.id]
        wt = r.dim[a.target] * s.dim[a.target]
        if wt > 0:
            blk = np.kron(r.maps[a.id].data.T, np.eye(s.dim[a.target], dtype=np.int64)
                          if not field.is_rational else _obj_eye(s.dim[a.target]))
            c0 = col_off[a.target]
            if field.is_rational:
                data[r0:r0 + h, c0:c0 + wt] += blk
            else:
                data[r0:r0 + h, c0:c0 + wt] = (data[r0:r0 + h, c0:c0 + wt] + blk) % p
        ws = r.dim[a.source] * s.dim[a.source]
        if ws > 0:
            blk = np.kron(np.eye(r.dim[a.source], dtype=np.int64)
                          if not field.is_rational else _obj_eye(r.dim[a.source]),
                          s.maps[a.id].data)
            c0 = col_off[a.source]
            if field.is_rational:
                data[r0:r0 + h, c0:c0 + ws] -= blk
            else:
                data[r0:r0 + h, c0:c0 + ws] = (data[r0:r0 + h, c0:c0 + ws] - blk) % p
    return ExactMatrix(field, data)


def _obj_eye(n: int) -> np.ndarray:
    m = np.full((n, n), Fraction(0), dtype=object)
    for i in range(n):
        m[i, i] = Fraction(1)
    return m


def hom_report(r: Representation, s: Representation) -> HomReport:
    """Hom and Ext^1 dimensions of the ordered pair (r, s)."""
    f = hom_differential(r, s)
    rk = linalg.rank(f)
    hom = f.cols - rk
    ext1 = f.rows - rk
    euler = euler_form(r.quiver, r.dim, s.dim)
    if hom - ext1 != euler:
        raise ArithmeticError(
            f"differential shape {f.shape} is inconsistent with the Euler form {euler}")
    return HomReport(hom=hom, ext1=ext1, euler=euler, rank=rk, rows=f.rows, cols=f.cols)


def is_exceptional(r: Representation) -> bool:
    """True iff End(r) is one-dimensional and r has no self-extensions."""
    rep = hom_report(r, r)
    return rep.hom == 1 and rep.ext1 == 0


def is_ext_nontrivial_couple(r: Representation, s: Representation) -> bool:
    """True iff r and s are exceptional with Ext^1 nonzero in both directions."""
    _check_pair(r, s)
    for name, rep in (("first", r), ("second", s)):
        if not is_exceptional(rep):
            raise ValueError(f"{name} representation is not exceptional")
    return hom_report(r, s).ext1 > 0 and hom_report(s, r).ext1 > 0


def dual_rep(r: Representation) -> Representation:
    """Representation of the opposite quiver with every matrix transposed.

    Hom and Ext of an ordered pair transfer to the swapped pair of duals.
    """
    qd = dual_quiver(r.quiver)
    maps = {a.id: r.maps[a.id].transpose() for a in r.quiver.arrows}
    return Representation(qd, DimVector(qd, r.dim.entries), r.field, maps)


def gl_act(g: Mapping[str, ExactMatrix], r: Representation) -> Representation:
    """Base change by a family of invertible vertex matrices:
    the matrix on arrow a becomes g[target] . r_a . g[source]^-1."""
    q = r.quiver
    for v in q.vertices:
        if v not in g:
            raise ValueError(f"missing base-change matrix at vertex {v}")
        if g[v].shape != (r.dim[v], r.dim[v]):
            raise ValueError(f"base change at {v} must be {r.dim[v]}x{r.dim[v]}, "
                             f"got {g[v].shape}")
    ginv = {v: linalg.inverse(g[v]) for v in q.vertices}
    maps = {a.id: g[a.target] @ r.maps[a.id] @ ginv[a.source] for a in q.arrows}
    return Representation(q, r.dim, r.field, maps)


def random_gl(q: Quiver, dim: DimVector, field: FieldSpec,
              rng: np.random.Generator, bound: int = 50) -> dict[str, ExactMatrix]:
    """Random invertible base-change matrices, resampled until invertible."""
    g = {}
    for v in q.vertices:
        n = dim[v]
        while True:
            cand = linalg.random_matrix(n, n, field, rng, bound)
            if linalg.rank(cand) == n:
                g[v] = cand
                break
    return g


# -- serialization -----------------------------------------------------------


def _entry_to_json(x, field: FieldSpec):
    if field.is_rational:
        f = Fraction(x)
        return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    return int(x)


def _entry_from_json(x, field: FieldSpec):
    if field.is_rational:
        if isinstance(x, str):
            num, den = x.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(x))
    if not isinstance(x, int):
        raise ValueError(f"prime-field entries must be integers, got {x!r}")
    return x


def rep_to_dict(r: Representation) -> dict:
    return {
        "format": "quiverhom-representation",
        "field": str(r.field),
        "quiver": serialize_quiver(r.quiver),
        "dims": {v: r.dim[v] for v in r.quiver.vertices},
        "maps": {str(a.id): [[_entry_to_json(x, r.field) for x in row]
                             for row in r.maps[a.id].to_rows()]
                 for a in r.quiver.arrows},
    }


def rep_from_dict(d: dict) -> Representation:
    tag = d.get("format")
    if tag != "quiverhom-representation":
        raise ValueError(f"not a representation file (format tag {tag!r})")
    field = FieldSpec.parse(d["field"])
    q = parse_quiver(d["quiver"])
    dim = DimVector.from_map(q, {k: int(v) for k, v in d["dims"].items()})
    maps = {}
    for a in q.arrows:
        key = str(a.id)
        if key not in d["maps"]:
            raise ValueError(f"missing matrix for arrow id {a.id}")
        rows = [[_entry_from_json(x, field) for x in row] for row in d["maps"][key]]
        maps[a.id] = ExactMatrix.from_rows(field, rows, shape=(dim[a.target], dim[a.source]))
    return Representation(q, dim, field, maps)


def rep_to_json(r: Representation) -> str:
    return json.dumps(rep_to_dict(r), indent=2)


def rep_from_json(text: str) -> Representation:
    return rep_from_dict(json.loads(text))
