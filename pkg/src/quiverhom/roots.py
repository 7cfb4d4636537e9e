"""Roots of the quadratic form attached to a quiver, and their shapes.

Reality of a vector is read off the Euler form (self-pairing 1 means real,
nonpositive symmetrized self-pairing means imaginary).  Positive roots of
Dynkin graphs come from the reflection closure of the simple roots; extended
types get their minimal imaginary root delta from the radical of the
symmetrized form, and their real roots are shifts of embedded Dynkin roots
by multiples of delta.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Iterable, Mapping

import numpy as np

from . import linalg
from .linalg import ExactMatrix, FieldSpec
from .quiver import DimVector, Quiver, euler_form, restrict, symmetrized_form
from .shapes import GraphShape, StarData, classify_graph


def is_real_root(q: Quiver, a: DimVector | Iterable[int]) -> bool:
    """True iff the self-pairing under the Euler form is 1."""
    a = a if isinstance(a, DimVector) else DimVector(q, a)
    if a.is_zero():
        raise ValueError("the zero vector is not a root")
    return euler_form(q, a, a) == 1


def is_thin(a: DimVector | Iterable[int]) -> bool:
    """True iff every nonzero entry equals 1."""
    entries = a.entries if isinstance(a, DimVector) else tuple(a)
    return all(x in (0, 1) for x in entries)


def _values(a, labels: Iterable[str]) -> list[int]:
    if isinstance(a, (DimVector, Mapping)):
        return [a[v] for v in labels]
    raise TypeError("expected a DimVector or a mapping from vertex labels")


def is_hill(shape: GraphShape | StarData, a) -> bool:
    """Hill condition on a star-shaped graph: along every ray the values are
    non-decreasing toward the center and the value adjacent to the center is
    strictly positive."""
    star = shape if isinstance(shape, StarData) else shape.star
    if star is None:
        raise ValueError("the hill condition needs a star-shaped graph")
    center = _values(a, [star.center])[0]
    for ray in star.rays:
        vals = _values(a, ray) + [center]
        if any(x > y for x, y in zip(vals, vals[1:])):
            return False
        if vals[-2] <= 0:
            return False
    return True


@dataclass(frozen=True)
class RootClassification:
    """reality in {real, imaginary, not_root}; shape in {thin, hill, other},
    first matching tag wins (a thin hill vector is tagged thin)."""

    reality: str
    shape: str


def classify_root(q: Quiver, a: DimVector | Iterable[int],
                  shape: GraphShape | None = None) -> RootClassification:
    a = a if isinstance(a, DimVector) else DimVector(q, a)
    if shape is None:
        shape = classify_graph(q)
    if a.is_zero():
        reality = "not_root"
    elif euler_form(q, a, a) == 1:
        reality = "real"
    elif symmetrized_form(q, a, a) <= 0:
        reality = "imaginary"
    else:
        reality = "not_root"
    if is_thin(a):
        tag = "thin"
    elif shape.star is not None and is_hill(shape, a):
        tag = "hill"
    else:
        tag = "other"
    return RootClassification(reality=reality, shape=tag)


def _neighbor_indices(q: Quiver) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in q.vertices]
    for a in q.arrows:
        if a.source == a.target:
            continue
        out[q.vertex_index(a.source)].append(q.vertex_index(a.target))
        out[q.vertex_index(a.target)].append(q.vertex_index(a.source))
    return out


def positive_roots(q: Quiver) -> list[DimVector]:
    """All positive roots of a Dynkin quiver, by reflection closure of the
    simple roots; sorted lexicographically in canonical vertex order."""
    shape = classify_graph(q)
    if not shape.is_dynkin:
        raise ValueError(f"positive_roots needs a Dynkin graph, got {shape.label}")
    n = q.n_vertices
    nbrs = _neighbor_indices(q)
    simples = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    seen: set[tuple[int, ...]] = set(simples)
    frontier = list(simples)
    while frontier:
        alpha = frontier.pop()
        for i in range(n):
            refl = list(alpha)
            refl[i] = -alpha[i] + sum(alpha[j] for j in nbrs[i])
            t = tuple(refl)
            if t not in seen:
                seen.add(t)
                frontier.append(t)
    positives = sorted(t for t in seen if all(x >= 0 for x in t))
    return [DimVector(q, t) for t in positives]


def minimal_imaginary_root(q: Quiver) -> DimVector:
    """Primitive positive generator of the radical of the symmetrized form.

    Only extended Dynkin graphs qualify; the radical must be a line, and the
    generator is normalized to coprime positive integer entries.  At least
    one vertex carries the value 1 and its removal leaves a Dynkin graph.
    """
    shape = classify_graph(q)
    if not shape.is_extended:
        raise ValueError(f"minimal imaginary root needs an extended Dynkin graph, "
                         f"got {shape.label}")
    n = q.n_vertices
    cartan = [[0] * n for _ in range(n)]
    for i in range(n):
        cartan[i][i] = 2
    for a in q.arrows:
        i, j = q.vertex_index(a.source), q.vertex_index(a.target)
        cartan[i][j] -= 1
        cartan[j][i] -= 1
    kern = linalg.kernel_basis(ExactMatrix.from_rows(FieldSpec.rationals(), cartan))
    if len(kern) != 1:
        raise ValueError(f"radical of the symmetrized form has dimension {len(kern)}, "
                         f"expected 1")
    fracs = [kern[0].data[i, 0] for i in range(n)]
    mult = lcm(*(f.denominator for f in fracs))
    ints = [int(f * mult) for f in fracs]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    if ints[0] < 0:
        ints = [-x for x in ints]
    if any(x <= 0 for x in ints):
        raise ValueError("radical generator is not strictly positive")
    delta = DimVector(q, ints)
    if not extending_vertices(q, delta):
        raise ValueError("no vertex of value 1 leaves a Dynkin graph on removal")
    return delta


def extending_vertices(q: Quiver, delta: DimVector) -> list[str]:
    """Vertices where delta is 1 and whose removal leaves a Dynkin graph."""
    out = []
    for v in q.vertices:
        if delta[v] != 1:
            continue
        sub, _ = restrict(q, [w for w in q.vertices if w != v])
        if sub.is_connected() and classify_graph(sub).is_dynkin:
            out.append(v)
    return out


def real_roots_extended(q: Quiver, max_level: int) -> list[DimVector]:
    """Positive real roots of an extended-E quiver up to the given level.

    Level a consists of a*delta + x and a*delta - x for the positive roots x
    of the Dynkin graph left after removing an extending vertex (level 0 is
    the embedded roots themselves).  Output is deduplicated and sorted.
    """
    shape = classify_graph(q)
    if shape.family not in ("E6~", "E7~", "E8~"):
        raise ValueError(f"extended real roots need an extended-E graph, got {shape.label}")
    if max_level < 0:
        raise ValueError("max_level must be nonnegative")
    delta = minimal_imaginary_root(q)
    star = extending_vertices(q, delta)[0]
    sub, _ = restrict(q, [w for w in q.vertices if w != star])
    embed = {v: q.vertex_index(v) for v in sub.vertices}
    xs = []
    for x in positive_roots(sub):
        full = [0] * q.n_vertices
        for v in sub.vertices:
            full[embed[v]] = x[v]
        xs.append(tuple(full))
    found: set[tuple[int, ...]] = set(xs)
    d = delta.entries
    for a in range(1, max_level + 1):
        for x in xs:
            found.add(tuple(a * di + xi for di, xi in zip(d, x)))
            minus = tuple(a * di - xi for di, xi in zip(d, x))
            if all(e >= 0 for e in minus):
                found.add(minus)
    roots = [DimVector(q, t) for t in sorted(found)]
    for r in roots:
        if euler_form(q, r, r) != 1:
            raise AssertionError(f"generated vector {r.entries} is not a real root")
    return roots


# -- hill arithmetic ---------------------------------------------------------


def delta_profile(star: StarData, center_value: int) -> dict[str, int]:
    """The radical profile on a star: value i * c / k at the i-th ray vertex
    counted from the leaf, where k is the ray size plus one.  Requires k to
    divide c for every ray."""
    out = {star.center: center_value}
    for ray in star.rays:
        k = len(ray) + 1
        if center_value % k != 0:
            raise ValueError(f"ray size {len(ray)} needs {k} | {center_value}")
        step = center_value // k
        for i, v in enumerate(ray, start=1):
            out[v] = i * step
    return out


def random_hill(star: StarData, hi: int, rng: np.random.Generator) -> dict[str, int]:
    """Uniform-ish random hill vector with center value in [1, hi]."""
    out = {star.center: int(rng.integers(1, hi + 1))}
    for ray in star.rays:
        vals = []
        prev = int(rng.integers(1, out[star.center] + 1))
        vals.append(prev)
        for _ in range(len(ray) - 1):
            prev = int(rng.integers(0, prev + 1))
            vals.append(prev)
        # vals were generated inward-out; rays are stored leaf-first
        for v, x in zip(ray, reversed(vals)):
            out[v] = x
    return out


@dataclass
class HillCheckReport:
    """Outcome of the hill arithmetic checks on one star shape."""

    shape_sizes: tuple[int, ...]
    cases: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)
    skipped_center_values: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(len(v) == 0 for v in self.failures.values())

    def lines(self) -> list[str]:
        out = []
        for clause in sorted(self.cases):
            status = "ok" if not self.failures.get(clause) else \
                f"FAILED ({len(self.failures[clause])} counterexamples)"
            out.append(f"{clause}: {self.cases[clause]} cases, {status}")
        for clause, vals in sorted(self.skipped_center_values.items()):
            out.append(f"{clause}: skipped center values {vals} (ray-size divisibility)")
        return out


def hill_arithmetic_checks(shape: GraphShape | StarData, samples: int,
                           rng: np.random.Generator,
                           center_values: tuple[int, ...] = (3, 6)) -> HillCheckReport:
    """Randomized checks of the closure rules for hill vectors.

    sum: the sum of two hill vectors is hill.  delta_pm_thin: the radical
    profile plus or minus a thin vector is hill (center value >= 3).
    delta_minus_hill: the profile minus a hill vector alpha is hill, provided
    alpha starts below c/k on every ray, climbs by at most c/k per step
    including the step onto the center, and stays below (k-1)c/k at the
    vertex adjacent to the center; samples violating those bounds are
    discarded, not counted.
    """
    star = shape if isinstance(shape, StarData) else shape.star
    if star is None:
        raise ValueError("hill arithmetic needs a star-shaped graph")
    report = HillCheckReport(shape_sizes=star.ray_sizes)
    report.cases = {"sum": 0, "delta_pm_thin": 0, "delta_minus_hill": 0}
    report.failures = {"sum": [], "delta_pm_thin": [], "delta_minus_hill": []}
    vertices = [star.center] + [v for ray in star.rays for v in ray]

    for _ in range(samples):
        a = random_hill(star, 6, rng)
        b = random_hill(star, 6, rng)
        total = {v: a[v] + b[v] for v in vertices}
        report.cases["sum"] += 1
        if not is_hill(star, total):
            report.failures["sum"].append((a, b))

    ks = [len(ray) + 1 for ray in star.rays]
    for c in center_values:
        if c < 3 or any(c % k != 0 for k in ks):
            report.skipped_center_values.setdefault("delta_pm_thin", []).append(c)
            report.skipped_center_values.setdefault("delta_minus_hill", []).append(c)
            continue
        delta = delta_profile(star, c)

        for _ in range(samples):
            thin = {v: int(rng.integers(0, 2)) for v in vertices}
            report.cases["delta_pm_thin"] += 1
            plus = {v: delta[v] + thin[v] for v in vertices}
            minus = {v: delta[v] - thin[v] for v in vertices}
            if not (is_hill(star, plus) and is_hill(star, minus)):
                report.failures["delta_pm_thin"].append((c, thin))

        accepted = 0
        attempts = 0
        while accepted < samples and attempts < 200 * samples:
            attempts += 1
            alpha = random_hill(star, c, rng)
            if not _delta_minus_hypotheses(star, alpha, c):
                continue
            accepted += 1
            report.cases["delta_minus_hill"] += 1
            diff = {v: delta[v] - alpha[v] for v in vertices}
            if not is_hill(star, diff):
                report.failures["delta_minus_hill"].append((c, alpha))
    return report


def _delta_minus_hypotheses(star: StarData, alpha: Mapping[str, int], c: int) -> bool:
    for ray in star.rays:
        k = len(ray) + 1
        step = c // k
        vals = [alpha[v] for v in ray] + [alpha[star.center]]
        if vals[0] > step:
            return False
        if any(y - x > step for x, y in zip(vals, vals[1:])):
            return False
        if vals[-2] >= (k - 1) * step:
            return False
    return True
