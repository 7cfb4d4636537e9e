"""Quivers, dimension vectors, and the Euler form.

A quiver is a finite directed multigraph.  Vertices carry string labels in a
fixed canonical order; arrows carry integer ids assigned in declaration order
and are kept under the same ids by the duality and restriction operations, so
that structures keyed by arrow id stay aligned across those functors.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


@dataclass(frozen=True)
class Arrow:
    id: int
    source: str
    target: str


class QuiverParseError(ValueError):
    """Input text did not match the quiver format; carries line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class Quiver:
    """Immutable finite quiver.  Equality and hashing are structural."""

    __slots__ = ("vertices", "arrows", "_index")

    def __init__(self, vertices: Iterable[str], arrows: Iterable[tuple[str, str]]):
        vertices = tuple(vertices)
        seen = set()
        for v in vertices:
            if not v or any(c.isspace() for c in v) or "->" in v or v.startswith("#"):
                raise ValueError(f"bad vertex label {v!r}")
            if v in seen:
                raise ValueError(f"duplicate vertex label {v!r}")
            seen.add(v)
        if not vertices:
            raise ValueError("quiver needs at least one vertex")
        arrow_objs = []
        for i, (s, t) in enumerate(arrows):
            if s not in seen:
                raise ValueError(f"arrow source {s!r} is not a declared vertex")
            if t not in seen:
                raise ValueError(f"arrow target {t!r} is not a declared vertex")
            arrow_objs.append(Arrow(i, s, t))
        self.vertices = vertices
        self.arrows = tuple(arrow_objs)
        self._index = {v: i for i, v in enumerate(vertices)}

    # -- basic accessors -------------------------------------------------

    def vertex_index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"no vertex {label!r} in quiver") from None

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def degree(self, label: str) -> int:
        """Total degree in the underlying graph (loops count twice)."""
        return sum((a.source == label) + (a.target == label) for a in self.arrows)

    def neighbors(self, label: str) -> list[str]:
        """Neighbors in the underlying graph, with multiplicity, loops excluded."""
        out = []
        for a in self.arrows:
            if a.source == label and a.target != label:
                out.append(a.target)
            elif a.target == label and a.source != label:
                out.append(a.source)
        return out

    def has_self_loop(self) -> bool:
        return any(a.source == a.target for a in self.arrows)

    def is_connected(self) -> bool:
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in self.neighbors(stack.pop()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n_vertices

    def edge_multiplicity(self, u: str, v: str) -> int:
        """Number of arrows between u and v in either direction."""
        return sum((a.source == u and a.target == v) or (a.source == v and a.target == u)
                   for a in self.arrows)

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        arrows = ", ".join(f"{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver({list(self.vertices)}, [{arrows}])"


def parse_quiver(text: str) -> Quiver:
    """Parse the two-line quiver format.

    The first meaningful line is ``vertices: <label>+``, the second is
    ``arrows: (<label>-><label>)*``; ``#`` starts a comment, blank lines are
    skipped.  Errors carry line and column positions.
    """
    meaningful = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0]
        if stripped.strip():
            meaningful.append((lineno, stripped))
    if not meaningful:
        raise QuiverParseError("empty input, expected a 'vertices:' line", 1, 1)

    lineno, vline = meaningful[0]
    if not vline.lstrip().startswith("vertices:"):
        raise QuiverParseError("expected 'vertices:'", lineno, len(vline) - len(vline.lstrip()) + 1)
    vbody = vline.lstrip()[len("vertices:"):]
    labels = vbody.split()
    if not labels:
        raise QuiverParseError("vertex list is empty", lineno, len(vline) + 1)
    seen = set()
    for lab in labels:
        if lab in seen:
            raise QuiverParseError(f"duplicate vertex label {lab!r}", lineno, vline.index(lab) + 1)
        if "->" in lab:
            raise QuiverParseError(f"vertex label {lab!r} may not contain '->'",
                                   lineno, vline.index(lab) + 1)
        seen.add(lab)

    arrows: list[tuple[str, str]] = []
    if len(meaningful) >= 2:
        lineno, aline = meaningful[1]
        if not aline.lstrip().startswith("arrows:"):
            raise QuiverParseError("expected 'arrows:'", lineno,
                                   len(aline) - len(aline.lstrip()) + 1)
        abody = aline.lstrip()[len("arrows:"):]
        for tok in abody.split():
            if tok.count("->") != 1:
                raise QuiverParseError(f"bad arrow {tok!r}, expected 'src->dst'",
                                       lineno, aline.index(tok) + 1)
            s, t = tok.split("->")
            if not s or not t:
                raise QuiverParseError(f"bad arrow {tok!r}, missing endpoint",
                                       lineno, aline.index(tok) + 1)
            for end in (s, t):
                if end not in seen:
                    raise QuiverParseError(f"arrow endpoint {end!r} is not a declared vertex",
                                           lineno, aline.index(tok) + 1)
            arrows.append((s, t))
    if len(meaningful) > 2:
        lineno, extra = meaningful[2]
        raise QuiverParseError(f"unexpected extra line {extra.strip()!r}", lineno, 1)
    return Quiver(labels, arrows)


def serialize_quiver(q: Quiver) -> str:
    """Inverse of parse_quiver: two lines, vertices then arrows."""
    vline = "vertices: " + " ".join(q.vertices)
    aline = "arrows:" + "".join(f" {a.source}->{a.target}" for a in q.arrows)
    return vline + "\n" + aline + "\n"


class DimVector:
    """Nonnegative integer vector indexed by the vertices of a fixed quiver."""

    __slots__ = ("quiver", "entries")

    def __init__(self, quiver: Quiver, entries: Iterable[int]):
        entries = tuple(int(x) for x in entries)
        if len(entries) != quiver.n_vertices:
            raise ValueError(f"expected {quiver.n_vertices} entries, got {len(entries)}")
        if any(x < 0 for x in entries):
            raise ValueError(f"dimension vector entries must be nonnegative: {entries}")
        self.quiver = quiver
        self.entries = entries

    @classmethod
    def from_map(cls, quiver: Quiver, mapping: Mapping[str, int]) -> DimVector:
        extra = set(mapping) - set(quiver.vertices)
        if extra:
            raise ValueError(f"unknown vertices in dimension map: {sorted(extra)}")
        return cls(quiver, (mapping.get(v, 0) for v in quiver.vertices))

    @classmethod
    def zero(cls, quiver: Quiver) -> DimVector:
        return cls(quiver, (0,) * quiver.n_vertices)

    @classmethod
    def unit(cls, quiver: Quiver, vertex: str) -> DimVector:
        i = quiver.vertex_index(vertex)
        return cls(quiver, tuple(int(j == i) for j in range(quiver.n_vertices)))

    def __getitem__(self, vertex: str) -> int:
        return self.entries[self.quiver.vertex_index(vertex)]

    def support(self) -> tuple[str, ...]:
        return tuple(v for v, x in zip(self.quiver.vertices, self.entries) if x > 0)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def _check_quiver(self, other: DimVector):
        if self.quiver != other.quiver:
            raise ValueError("dimension vectors live on different quivers")

    def __add__(self, other: DimVector) -> DimVector:
        self._check_quiver(other)
        return DimVector(self.quiver, (a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: DimVector) -> DimVector:
        self._check_quiver(other)
        return DimVector(self.quiver, (a - b for a, b in zip(self.entries, other.entries)))

    def __mul__(self, k: int) -> DimVector:
        return DimVector(self.quiver, (k * a for a in self.entries))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DimVector):
            return NotImplemented
        return self.quiver == other.quiver and self.entries == other.entries

    def __hash__(self):
        return hash((self.quiver, self.entries))

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self):
        return f"DimVector{self.entries}"


def euler_form(q: Quiver, a: DimVector | Iterable[int], b: DimVector | Iterable[int]) -> int:
    """Euler form: sum_i a_i b_i - sum_{arrows} a_source b_target."""
    av = _entries_on(q, a)
    bv = _entries_on(q, b)
    total = sum(x * y for x, y in zip(av, bv))
    for arr in q.arrows:
        total -= av[q.vertex_index(arr.source)] * bv[q.vertex_index(arr.target)]
    return total


def symmetrized_form(q: Quiver, a: DimVector | Iterable[int], b: DimVector | Iterable[int]) -> Fraction:
    """Symmetrization (euler(a,b) + euler(b,a)) / 2, exact as a Fraction."""
    return Fraction(euler_form(q, a, b) + euler_form(q, b, a), 2)


def _entries_on(q: Quiver, a) -> tuple[int, ...]:
    if isinstance(a, DimVector):
        if a.quiver != q:
            raise ValueError("dimension vector lives on a different quiver")
        return a.entries
    entries = tuple(int(x) for x in a)
    if len(entries) != q.n_vertices:
        raise ValueError(f"expected {q.n_vertices} entries, got {len(entries)}")
    return entries


def dual_quiver(q: Quiver) -> Quiver:
    """Reverse every arrow; vertex order and arrow ids are unchanged."""
    return Quiver(q.vertices, [(a.target, a.source) for a in q.arrows])


def restrict(q: Quiver, keep: Iterable[str]) -> tuple[Quiver, dict[int, int]]:
    """Full subquiver on the given vertices.

    Returns the subquiver together with a map from its arrow ids to the
    original arrow ids (vertex order is inherited from q).
    """
    keep_set = set(keep)
    unknown = keep_set - set(q.vertices)
    if unknown:
        raise ValueError(f"unknown vertices: {sorted(unknown)}")
    vertices = [v for v in q.vertices if v in keep_set]
    kept_arrows = [a for a in q.arrows if a.source in keep_set and a.target in keep_set]
    sub = Quiver(vertices, [(a.source, a.target) for a in kept_arrows])
    id_map = {new.id: old.id for new, old in zip(sub.arrows, kept_arrows)}
    return sub, id_map
