"""Batch verification suites over whole families of quivers.

Each runner returns a SuiteResult with human-readable lines and a machine
verdict; the command-line verify subcommand and the regression tests share
these entry points, so a theorem-level violation surfaces identically in
both.  Randomness is always drawn from an explicit seed.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import lcm

import numpy as np

from . import linalg
from .catalog import verify_couples, verify_rp_properties, verify_single_degree
from .exceptional import ConstructionConfig, construct_for_roots, pair_table, scan_max_rank
from .linalg import FieldSpec
from .quiver import DimVector, Quiver, euler_form
from .rep import Representation, dual_rep, hom_differential, hom_report, random_rep
from .roots import (classify_root, hill_arithmetic_checks, is_hill, delta_profile,
                    minimal_imaginary_root, positive_roots, real_roots_extended)
from .shapes import (GraphShape, all_orientations, classify_graph, named_quiver,
                     random_orientations, star_graph, orient)


@dataclass
class SuiteResult:
    suite: str
    ok: bool
    lines: list[str] = dc_field(default_factory=list)
    violations: list = dc_field(default_factory=list)
    stats: dict = dc_field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "ok": self.ok, "lines": self.lines,
                "violations": [list(map(str, v)) if isinstance(v, tuple) else str(v)
                               for v in self.violations],
                "stats": self.stats}


def expected_positive_roots(shape: GraphShape) -> int:
    """Closed-form positive root counts of the Dynkin families."""
    if not shape.is_dynkin:
        raise ValueError(f"not Dynkin: {shape.label}")
    if shape.family == "A":
        return shape.rank * (shape.rank + 1) // 2
    if shape.family == "D":
        return shape.rank * (shape.rank - 1)
    return {"E6": 36, "E7": 63, "E8": 120}[shape.family]


# -- dynkin -------------------------------------------------------------------


def run_dynkin(graphs: list[str], orientations: int | str = "all", seed: int = 0,
               fieldspec: FieldSpec = FieldSpec.prime(), build_reps: bool = True,
               max_retries: int = 8) -> SuiteResult:
    """Root census plus, optionally, the full pairwise scan per orientation.

    For every requested orientation all positive roots get an exceptional
    representation; any construction failure, Ext-nontrivial couple, or
    rank-deficient differential is a violation.
    """
    res = SuiteResult(suite="dynkin", ok=True)
    rng = np.random.default_rng(seed)
    for name in graphs:
        base = named_quiver(name)
        shape = classify_graph(base)
        roots = positive_roots(base)
        want = expected_positive_roots(shape)
        if len(roots) != want:
            res.ok = False
            res.violations.append(("root-count", name, len(roots), want))
        bad_shape = [r.entries for r in roots
                     if classify_root(base, r, shape).shape not in ("thin", "hill")]
        if bad_shape:
            res.ok = False
            res.violations.append(("root-shape", name, bad_shape[:5]))
        res.lines.append(f"{name}: {len(roots)} positive roots (expected {want}), "
                         f"{'all thin or hill' if not bad_shape else 'SHAPE VIOLATIONS'}")
        res.stats[name] = {"roots": len(roots)}
        if not build_reps:
            continue

        if orientations == "all":
            quivers = all_orientations(name)
        else:
            quivers = random_orientations(name, int(orientations), rng)
        failures = couples = rank_viols = pairs = 0
        base_entries = {r.entries for r in roots}
        for q in quivers:
            oroots = positive_roots(q)
            if {r.entries for r in oroots} != base_entries:
                res.ok = False
                res.violations.append(("roots-not-orientation-invariant", name))
            cfg = ConstructionConfig(field=fieldspec, seed=seed, max_retries=max_retries)
            built, failed = construct_for_roots(q, oroots, cfg)
            failures += len(failed)
            for root in failed:
                res.violations.append(("construction-failure", name, root.entries))
            table = pair_table([rep for _, rep in built],
                               [str(root.entries) for root, _ in built])
            pairs += len(table.labels) ** 2
            enc = table.ext_nontrivial_couples()
            couples += len(enc)
            for c in enc:
                res.violations.append(("ext-nontrivial-couple", name, c))
            viol = table.max_rank_violations()
            rank_viols += len(viol)
            for v in viol:
                res.violations.append(("max-rank", name, v))
        if failures or couples or rank_viols:
            res.ok = False
        res.lines.append(f"{name}: {len(quivers)} orientations, {pairs} ordered pairs: "
                         f"{failures} construction failures, {couples} ext-nontrivial "
                         f"couples, {rank_viols} max-rank violations")
        res.stats[name].update({"orientations": len(quivers), "pairs": pairs,
                                "failures": failures, "couples": couples,
                                "max_rank_violations": rank_viols})
    return res


# -- extended E types ---------------------------------------------------------


def run_extended(name: str, max_level: int = 1, seed: int = 0,
                 fieldspec: FieldSpec = FieldSpec.prime(),
                 max_retries: int = 8) -> SuiteResult:
    """Real-root census and pairwise max-rank scan on an extended-E quiver.

    Construction failures are recorded but are not violations: real roots in
    homogeneous position need not have exceptional representatives here.
    """
    res = SuiteResult(suite="extended-e", ok=True)
    q = named_quiver(name)
    shape = classify_graph(q)
    delta = minimal_imaginary_root(q)

    ks = [len(ray) + 1 for ray in shape.star.rays]
    profile = delta_profile(shape.star, lcm(*ks))
    if any(delta[v] != profile[v] for v in q.vertices) or not is_hill(shape, delta):
        res.ok = False
        res.violations.append(("delta-profile", name, delta.entries))
    res.lines.append(f"{name}: delta = {delta.entries}")

    roots = real_roots_extended(q, max_level)
    bad_shape = [r.entries for r in roots
                 if classify_root(q, r, shape).shape not in ("thin", "hill")]
    if bad_shape:
        res.ok = False
        res.violations.append(("root-shape", name, bad_shape[:5]))
    res.lines.append(f"{name}: {len(roots)} real roots up to level {max_level}, "
                     f"{'all thin or hill' if not bad_shape else 'SHAPE VIOLATIONS'}")

    cfg = ConstructionConfig(field=fieldspec, seed=seed, max_retries=max_retries)
    built, failed = construct_for_roots(q, roots, cfg)
    table = pair_table([rep for _, rep in built], [str(root.entries) for root, _ in built])
    scan = scan_max_rank([], table=table)
    if not scan.ok:
        res.ok = False
        for v in scan.violations:
            res.violations.append(("max-rank", name, v))
    res.lines.append(f"{name}: {len(built)} exceptional representations built "
                     f"({len(failed)} roots without one), {scan.pairs_checked} ordered "
                     f"pairs, {len(scan.violations)} max-rank violations")
    res.stats = {"roots": len(roots), "built": len(built), "unrepresented": len(failed),
                 "pairs": scan.pairs_checked, "max_rank_violations": len(scan.violations)}
    return res


# -- catalogs -----------------------------------------------------------------


def run_catalog(which: str, max_m: int = 5,
                fieldspec: FieldSpec = FieldSpec.prime()) -> SuiteResult:
    """Couples, the two regularity-preserving implications, and the
    single-nonzero-degree property over a closed-form catalog."""
    res = SuiteResult(suite=which, ok=True)
    couples = verify_couples(which, max_m, fieldspec)
    if not couples.ok:
        res.ok = False
        res.violations.append(("couples", couples.found, couples.expected))
    res.lines.append(f"{which} (m <= {max_m}): couples found {couples.found}, "
                     f"expected {couples.expected}")
    rp = verify_rp_properties(which, max_m, fieldspec)
    if not rp.ok:
        res.ok = False
        res.violations.extend(rp.violations)
    res.lines.append(f"{which}: rp property 1 checked {rp.prop1_checked} "
                     f"(vacuous {rp.prop1_vacuous}), property 2 checked {rp.prop2_checked} "
                     f"(vacuous {rp.prop2_vacuous}), {len(rp.violations)} violations")
    single = verify_single_degree(which, max_m, fieldspec)
    if not single.ok:
        res.ok = False
        res.violations.append(("single-degree", single.violations))
    res.lines.append(f"{which}: single-degree violations {single.violations}")
    res.stats = {"couples": couples.found, "rp1": rp.prop1_checked,
                 "rp2": rp.prop2_checked, "single_degree_violations": len(single.violations)}
    return res


# -- random fuzz --------------------------------------------------------------


def random_quiver(rng: np.random.Generator, max_vertices: int = 6) -> Quiver:
    """Connected loop-free random quiver: a random spanning tree plus up to
    n extra arrows, each edge oriented by coin flip; multi-arrows allowed."""
    n = int(rng.integers(1, max_vertices + 1))
    labels = tuple(f"v{i}" for i in range(1, n + 1))
    arrows = []
    for i in range(1, n):
        j = int(rng.integers(0, i))
        pair = (labels[i], labels[j]) if rng.integers(2) else (labels[j], labels[i])
        arrows.append(pair)
    if n >= 2:
        for _ in range(int(rng.integers(0, n + 1))):
            i, j = rng.choice(n, size=2, replace=False)
            arrows.append((labels[int(i)], labels[int(j)]))
    return Quiver(labels, arrows)


def random_dim(q: Quiver, rng: np.random.Generator, max_dim: int = 4) -> DimVector:
    return DimVector(q, (int(x) for x in rng.integers(0, max_dim + 1, size=q.n_vertices)))


def hom_dim_bruteforce(r: Representation, s: Representation) -> int:
    """Dimension of the intertwiner space by flat linear algebra.

    Deliberately independent of hom_differential: unknowns are laid out
    row-major per vertex, equations are written entry by entry, and the rank
    is taken by a plain Python elimination, not the jit kernels.
    """
    q = r.quiver
    offs = {}
    total = 0
    for v in q.vertices:
        offs[v] = total
        total += r.dim[v] * s.dim[v]
    rows = []
    for a in q.arrows:
        rho = r.maps[a.id].to_rows()
        sig = s.maps[a.id].to_rows()
        for i in range(s.dim[a.target]):
            for j in range(r.dim[a.source]):
                row = [0] * total
                for k in range(r.dim[a.target]):
                    row[offs[a.target] + i * r.dim[a.target] + k] += rho[k][j]
                for k in range(s.dim[a.source]):
                    row[offs[a.source] + k * r.dim[a.source] + j] -= sig[i][k]
                rows.append(row)
    if r.field.is_rational:
        rk = _plain_rank_rational(rows)
    else:
        rk = _plain_rank_modp(rows, r.field.char)
    return total - rk


def _plain_rank_modp(rows: list[list], p: int) -> int:
    rows = [[int(x) % p for x in row] for row in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _plain_rank_rational(rows: list[list]) -> int:
    rows = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col]
        rows[rank] = [x / inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def run_euler_fuzz(cases: int = 500, bruteforce_cases: int = 200, seed: int = 0,
                   fieldspec: FieldSpec = FieldSpec.prime(),
                   max_vertices: int = 6, max_dim: int = 4) -> SuiteResult:
    """Random pairs: the report must balance hom - ext1 = euler (checked
    inside hom_report against the Euler form), and on small cases the kernel
    dimension of the differential must match the brute-force intertwiner
    count."""
    res = SuiteResult(suite="euler-fuzz", ok=True)
    rng = np.random.default_rng(seed)
    for _ in range(cases):
        q = random_quiver(rng, max_vertices)
        r = random_rep(q, random_dim(q, rng, max_dim), fieldspec, rng)
        s = random_rep(q, random_dim(q, rng, max_dim), fieldspec, rng)
        rep = hom_report(r, s)
        if rep.hom - rep.ext1 != euler_form(q, r.dim, s.dim):
            res.ok = False
            res.violations.append(("euler", q, r.dim.entries, s.dim.entries))
    res.lines.append(f"euler consistency: {cases} random pairs ok")
    mismatches = 0
    for _ in range(bruteforce_cases):
        q = random_quiver(rng, 3)
        r = random_rep(q, random_dim(q, rng, 2), fieldspec, rng)
        s = random_rep(q, random_dim(q, rng, 2), fieldspec, rng)
        via_kernel = len(linalg.kernel_basis(hom_differential(r, s)))
        via_report = hom_report(r, s).hom
        via_brute = hom_dim_bruteforce(r, s)
        if not (via_kernel == via_report == via_brute):
            mismatches += 1
            res.ok = False
            res.violations.append(("bruteforce", r.dim.entries, s.dim.entries,
                                   via_kernel, via_report, via_brute))
    res.lines.append(f"brute-force intertwiner oracle: {bruteforce_cases} cases, "
                     f"{mismatches} mismatches")
    res.stats = {"cases": cases, "bruteforce_cases": bruteforce_cases,
                 "mismatches": mismatches}
    return res


def duality_spotcheck(cases: int = 200, seed: int = 0,
                      fieldspec: FieldSpec = FieldSpec.prime()) -> SuiteResult:
    """hom/ext of (r, s) must equal hom/ext of the transposed pair over the
    opposite quiver, including the maximal-rank verdict."""
    res = SuiteResult(suite="duality", ok=True)
    rng = np.random.default_rng(seed)
    for _ in range(cases):
        q = random_quiver(rng, 5)
        r = random_rep(q, random_dim(q, rng, 3), fieldspec, rng)
        s = random_rep(q, random_dim(q, rng, 3), fieldspec, rng)
        fwd = hom_report(r, s)
        bwd = hom_report(dual_rep(s), dual_rep(r))
        if (fwd.hom, fwd.ext1, fwd.euler, fwd.max_rank) != \
                (bwd.hom, bwd.ext1, bwd.euler, bwd.max_rank):
            res.ok = False
            res.violations.append(("duality", r.dim.entries, s.dim.entries, fwd, bwd))
    res.lines.append(f"duality transposition: {cases} random pairs, "
                     f"{len(res.violations)} mismatches")
    res.stats = {"cases": cases}
    return res


# -- hill arithmetic ----------------------------------------------------------

_HILL_SHAPES = ((1, 1, 1), (1, 2, 2), (2, 2, 2), (3, 3, 3))


def run_hill(samples: int = 1000, seed: int = 0,
             shapes: tuple[tuple[int, ...], ...] = _HILL_SHAPES) -> SuiteResult:
    """Randomized hill-closure checks across a few star shapes."""
    res = SuiteResult(suite="hill-arith", ok=True)
    rng = np.random.default_rng(seed)
    for sizes in shapes:
        q = orient(*star_graph(sizes))
        shape = classify_graph(q)
        report = hill_arithmetic_checks(shape, samples, rng)
        if not report.ok:
            res.ok = False
            for clause, fails in report.failures.items():
                if fails:
                    res.violations.append(("hill", sizes, clause, fails[:3]))
        for line in report.lines():
            res.lines.append(f"rays {sizes}: {line}")
        res.stats[str(sizes)] = report.cases
    return res
