"""Construction of exceptional representations and pairwise Hom/Ext tables.

A real root is attacked by sampling random matrices of the right shapes and
testing the End/Ext condition; over a large prime field a generic sample of
an exceptional orbit passes with overwhelming probability, so a handful of
retries either produces a certified representation or is strong evidence
that the root has no exceptional representative at all.  Retries are
deterministic: attempt i for a given root draws from a generator keyed by
(seed, root, i).
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .linalg import FieldSpec
from .quiver import DimVector, Quiver
from .rep import HomReport, Representation, hom_report, is_exceptional, random_rep
from .roots import is_real_root


@dataclass(frozen=True)
class ConstructionConfig:
    field: FieldSpec = FieldSpec.prime()
    seed: int = 0
    max_retries: int = 8
    bound: int = 10 ** 6


class ConstructionFailure(Exception):
    """No sampled representation of the root was exceptional.

    Either the root has no exceptional representative (common for extended
    types), or every sample was degenerate, which at a 31-bit prime has
    negligible probability.  Batch scans treat this as data, not as an error.
    """

    def __init__(self, dim: tuple[int, ...], attempts: int):
        super().__init__(f"no exceptional representation found for {dim} "
                         f"after {attempts} attempts")
        self.dim = dim
        self.attempts = attempts


def _attempt_rng(seed: int, dim: tuple[int, ...], attempt: int) -> np.random.Generator:
    key = f"{seed}|{','.join(map(str, dim))}|{attempt}".encode()
    digest = hashlib.blake2b(key, digest_size=8).digest()
    return np.random.default_rng(int.from_bytes(digest, "little"))


def construct_exceptional(q: Quiver, a: DimVector | Iterable[int],
                          config: ConstructionConfig = ConstructionConfig()) -> Representation:
    """Exceptional representation with dimension vector a, or ConstructionFailure.

    a must be a nonzero real root; anything else is a usage error.
    """
    a = a if isinstance(a, DimVector) else DimVector(q, a)
    if a.is_zero():
        raise ValueError("cannot construct a representation of the zero vector")
    if not is_real_root(q, a):
        raise ValueError(f"{a.entries} is not a real root (Euler self-pairing != 1)")
    for attempt in range(config.max_retries):
        rng = _attempt_rng(config.seed, a.entries, attempt)
        rep = random_rep(q, a, config.field, rng, config.bound)
        if is_exceptional(rep):
            return rep
    raise ConstructionFailure(a.entries, config.max_retries)


def construct_for_roots(q: Quiver, roots: Sequence[DimVector],
                        config: ConstructionConfig = ConstructionConfig(),
                        ) -> tuple[list[tuple[DimVector, Representation]], list[DimVector]]:
    """Construct for every root; returns (successes, failed roots)."""
    built = []
    failed = []
    for root in roots:
        try:
            built.append((root, construct_exceptional(q, root, config)))
        except ConstructionFailure:
            failed.append(root)
    return built, failed


def arrow_ranks_max(r: Representation) -> bool:
    """True iff every arrow matrix has maximal rank."""
    return all(linalg.is_max_rank(r.maps[a.id]) for a in r.quiver.arrows)


def default_labels(reps: Sequence[Representation]) -> list[str]:
    labels = []
    counts: dict[str, int] = {}
    for r in reps:
        base = "(" + ",".join(map(str, r.dim.entries)) + ")"
        n = counts.get(base, 0)
        counts[base] = n + 1
        labels.append(base if n == 0 else f"{base}#{n}")
    return labels


@dataclass
class PairTable:
    """All pairwise Hom/Ext reports for a list of exceptional representations."""

    labels: list[str]
    cells: list[list[HomReport]]

    def report(self, i: int, j: int) -> HomReport:
        return self.cells[i][j]

    def ext_nontrivial_couples(self) -> list[tuple[str, str]]:
        """Unordered pairs with Ext^1 nonzero in both directions."""
        out = []
        for i in range(len(self.labels)):
            for j in range(i + 1, len(self.labels)):
                if self.cells[i][j].ext1 > 0 and self.cells[j][i].ext1 > 0:
                    out.append((self.labels[i], self.labels[j]))
        return out

    def max_rank_violations(self) -> list[tuple[str, str]]:
        """Ordered pairs whose differential is not of maximal rank."""
        return [(self.labels[i], self.labels[j])
                for i in range(len(self.labels))
                for j in range(len(self.labels))
                if not self.cells[i][j].max_rank]

    def single_degree_violations(self) -> list[tuple[str, str]]:
        """Ordered pairs where Hom and Ext^1 are both nonzero."""
        return [(self.labels[i], self.labels[j])
                for i in range(len(self.labels))
                for j in range(len(self.labels))
                if self.cells[i][j].hom > 0 and self.cells[i][j].ext1 > 0]

    def to_dict(self) -> dict:
        return {
            "format": "quiverhom-pair-table",
            "labels": list(self.labels),
            "cells": [[c.to_dict() for c in row] for row in self.cells],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        """Square CSV with row/column labels; each cell is "hom/ext1"."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + list(self.labels))
        for i, li in enumerate(self.labels):
            w.writerow([li] + [f"{c.hom}/{c.ext1}" for c in self.cells[i]])
        return buf.getvalue()


def pair_table(reps: Sequence[Representation], labels: Sequence[str] | None = None) -> PairTable:
    """Full matrix of hom_report over ordered pairs.

    Every representation must be exceptional; the diagonal doubles as the
    check (End dimension 1, no self-extensions).
    """
    reps = list(reps)
    if not reps:
        raise ValueError("pair_table needs at least one representation")
    labels = list(labels) if labels is not None else default_labels(reps)
    if len(labels) != len(reps):
        raise ValueError(f"{len(reps)} representations but {len(labels)} labels")
    cells = [[hom_report(r, s) for s in reps] for r in reps]
    for i, lab in enumerate(labels):
        diag = cells[i][i]
        if diag.hom != 1 or diag.ext1 != 0:
            raise ValueError(f"representation {lab} is not exceptional "
                             f"(end={diag.hom}, self-ext={diag.ext1})")
    return PairTable(labels=labels, cells=cells)


@dataclass
class MaxRankScan:
    """Outcome of scanning every ordered pair for maximal differential rank."""

    table: PairTable
    violations: list[tuple[str, str]]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def pairs_checked(self) -> int:
        return len(self.table.labels) ** 2


def scan_max_rank(reps: Sequence[Representation], labels: Sequence[str] | None = None,
                  table: PairTable | None = None) -> MaxRankScan:
    """Check maximal rank of the differential over all ordered pairs.

    Accepts a precomputed PairTable to avoid recomputing the reports when a
    couple scan already ran on the same representations.
    """
    if table is None:
        table = pair_table(reps, labels)
    return MaxRankScan(table=table, violations=table.max_rank_violations())
