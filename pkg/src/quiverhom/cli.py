"""Command-line front end.

Ties the library together: validate quiver files, enumerate and classify
roots, compute Hom/Ext reports for serialized representations, construct
exceptional representations, emit pairwise tables, and run the verification
suites.  Exit codes are stable so the suites can run in CI: 0 success,
1 bad input, 2 unsupported graph shape, 3 verified-property violation.
"""
from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import click

from .catalog import catalog_table
from .exceptional import (ConstructionConfig, ConstructionFailure, PairTable,
                          construct_exceptional, pair_table)
from .linalg import FieldSpec
from .quiver import DimVector, Quiver, QuiverParseError, parse_quiver, serialize_quiver
from .rep import Representation, hom_report, rep_from_json, rep_to_json
from .roots import classify_root, positive_roots, real_roots_extended
from .shapes import classify_graph
from .verify import (run_catalog, run_dynkin, run_euler_fuzz, run_extended,
                     run_hill)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNSUPPORTED = 2
EXIT_VIOLATION = 3

EXTENDED_E = ("E6t", "E7t", "E8t")


@dataclass
class CliConfig:
    field: FieldSpec
    seed: int
    fmt: str


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_quiver(path: str) -> Quiver:
    try:
        text = Path(path).read_text()
    except OSError as e:
        _fail(str(e), EXIT_INPUT)
    try:
        return parse_quiver(text)
    except QuiverParseError as e:
        _fail(f"{path}: {e}", EXIT_INPUT)


def _load_rep(path: str) -> Representation:
    try:
        text = Path(path).read_text()
    except OSError as e:
        _fail(str(e), EXIT_INPUT)
    try:
        return rep_from_json(text)
    except (ValueError, KeyError, TypeError) as e:
        _fail(f"{path}: {e}", EXIT_INPUT)


def _emit_table(table: PairTable, fmt: str) -> None:
    if fmt == "json":
        click.echo(table.to_json())
    elif fmt == "csv":
        click.echo(table.to_csv(), nl=False)
    else:
        width = max(len(lab) for lab in table.labels) + 2
        cells = [[f"{c.hom}/{c.ext1}" for c in row] for row in table.cells]
        cell_w = max(max(len(c) for c in row) for row in cells) + 2
        click.echo(" " * width + "".join(lab.rjust(max(cell_w, len(lab) + 1))
                                         for lab in table.labels))
        for lab, row in zip(table.labels, cells):
            click.echo(lab.ljust(width) + "".join(
                c.rjust(max(cell_w, len(l2) + 1))
                for c, l2 in zip(row, table.labels)))
        couples = table.ext_nontrivial_couples()
        click.echo(f"ext-nontrivial couples: "
                   f"{', '.join('{%s, %s}' % c for c in couples) if couples else 'none'}")


@click.group()
@click.option("--field", "field_str", default="fp:2147483647", show_default=True,
              metavar="q|fp:<prime>", help="Ground field for all arithmetic.")
@click.option("--seed", type=int, default=None,
              help="RNG seed [default: $QUIVERHOM_SEED or 0].")
@click.option("--format", "fmt", type=click.Choice(["text", "csv", "json"]),
              default="text", show_default=True, help="Output format.")
@click.version_option(package_name="quiverhom")
@click.pass_context
def main(ctx: click.Context, field_str: str, seed: int | None, fmt: str) -> None:
    """Exact Hom/Ext calculator for quiver representations."""
    if seed is None:
        try:
            seed = int(os.environ.get("QUIVERHOM_SEED", "0"))
        except ValueError:
            _fail("QUIVERHOM_SEED must be an integer", EXIT_INPUT)
    try:
        field = FieldSpec.parse(field_str)
    except ValueError as e:
        _fail(str(e), EXIT_INPUT)
    ctx.obj = CliConfig(field=field, seed=seed, fmt=fmt)


@main.command("parse")
@click.argument("quiver_file", type=click.Path())
@click.pass_obj
def cmd_parse(cfg: CliConfig, quiver_file: str) -> None:
    """Validate a quiver file and echo its canonical form."""
    q = _load_quiver(quiver_file)
    try:
        label = classify_graph(q).label
    except ValueError as e:
        _fail(str(e), EXIT_UNSUPPORTED)
    if cfg.fmt == "json":
        click.echo(json.dumps({"vertices": list(q.vertices),
                               "arrows": [[a.source, a.target] for a in q.arrows],
                               "graph": label}, indent=2))
    else:
        click.echo(serialize_quiver(q), nl=False)
        click.echo(f"# graph: {label}")


@main.command("classify")
@click.argument("quiver_file", type=click.Path())
@click.pass_obj
def cmd_classify(cfg: CliConfig, quiver_file: str) -> None:
    """Report the shape of the underlying graph."""
    q = _load_quiver(quiver_file)
    try:
        shape = classify_graph(q)
    except ValueError as e:
        _fail(str(e), EXIT_UNSUPPORTED)
    info = {"kind": shape.kind, "label": shape.label}
    if shape.star is not None:
        info["splitting_vertex"] = shape.star.center
        info["rays"] = [list(ray) for ray in shape.star.rays]
    if cfg.fmt == "json":
        click.echo(json.dumps(info, indent=2))
    else:
        for k, v in info.items():
            click.echo(f"{k}: {v}")


@main.command("roots")
@click.argument("quiver_file", type=click.Path())
@click.option("--max-level", type=int, default=1, show_default=True,
              help="For extended types: bound on the imaginary-root multiple.")
@click.pass_obj
def cmd_roots(cfg: CliConfig, quiver_file: str, max_level: int) -> None:
    """List positive (real) roots with their thin/hill/other tag."""
    q = _load_quiver(quiver_file)
    try:
        shape = classify_graph(q)
    except ValueError as e:
        _fail(str(e), EXIT_UNSUPPORTED)
    if shape.is_dynkin:
        roots = positive_roots(q)
    elif shape.is_extended and shape.family in ("E6~", "E7~", "E8~"):
        roots = real_roots_extended(q, max_level)
    else:
        _fail(f"root enumeration needs a Dynkin or extended-E graph, got {shape.label}",
              EXIT_UNSUPPORTED)
    tagged = [(r, classify_root(q, r, shape).shape) for r in roots]
    if cfg.fmt == "json":
        click.echo(json.dumps([{"entries": list(r.entries), "shape": tag}
                               for r, tag in tagged], indent=2))
        return
    for r, tag in tagged:
        click.echo(",".join(map(str, r.entries)) + ("," if cfg.fmt == "csv" else " ") + tag)
    if cfg.fmt == "text":
        click.echo(f"{len(roots)} roots")


@main.command("hom")
@click.argument("rep_a", type=click.Path())
@click.argument("rep_b", type=click.Path())
@click.pass_obj
def cmd_hom(cfg: CliConfig, rep_a: str, rep_b: str) -> None:
    """Hom/Ext report for an ordered pair of serialized representations."""
    r = _load_rep(rep_a)
    s = _load_rep(rep_b)
    if r.quiver != s.quiver:
        _fail("the two representations live on different quivers", EXIT_INPUT)
    if r.field != s.field:
        _fail("the two representations use different ground fields", EXIT_INPUT)
    rep = hom_report(r, s)
    if cfg.fmt == "json":
        click.echo(json.dumps(rep.to_dict(), indent=2))
    elif cfg.fmt == "csv":
        click.echo("hom,ext1,euler,rank,rows,cols,max_rank")
        click.echo(f"{rep.hom},{rep.ext1},{rep.euler},{rep.rank},{rep.rows},"
                   f"{rep.cols},{str(rep.max_rank).lower()}")
    else:
        click.echo(f"hom={rep.hom} ext1={rep.ext1} euler={rep.euler} "
                   f"rank={rep.rank} rows={rep.rows} cols={rep.cols} "
                   f"max_rank={str(rep.max_rank).lower()}")


@main.command("exceptional")
@click.argument("quiver_file", type=click.Path())
@click.option("--root", "root_str", required=True, metavar="N,N,...",
              help="Dimension vector in declaration order of the vertices.")
@click.option("--max-retries", type=int, default=8, show_default=True)
@click.option("-o", "--output", type=click.Path(), default=None,
              help="Write the representation JSON here instead of stdout.")
@click.pass_obj
def cmd_exceptional(cfg: CliConfig, quiver_file: str, root_str: str,
                    max_retries: int, output: str | None) -> None:
    """Construct an exceptional representation for a real root."""
    q = _load_quiver(quiver_file)
    try:
        entries = tuple(int(x) for x in root_str.split(","))
        dim = DimVector(q, entries)
    except ValueError as e:
        _fail(f"bad --root: {e}", EXIT_INPUT)
    cfg_c = ConstructionConfig(field=cfg.field, seed=cfg.seed, max_retries=max_retries)
    try:
        rep = construct_exceptional(q, dim, cfg_c)
    except ValueError as e:
        _fail(str(e), EXIT_INPUT)
    except ConstructionFailure as e:
        _fail(f"{e} (the root may have no exceptional representative)", EXIT_INPUT)
    text = rep_to_json(rep)
    if output is None:
        click.echo(text)
    else:
        Path(output).write_text(text + "\n")
        click.echo(f"wrote {output}", err=True)


@main.command("table")
@click.argument("rep_files", type=click.Path(), nargs=-1, required=True)
@click.pass_obj
def cmd_table(cfg: CliConfig, rep_files: tuple[str, ...]) -> None:
    """Pairwise Hom/Ext table over exceptional representation files."""
    reps = [_load_rep(p) for p in rep_files]
    if any(r.quiver != reps[0].quiver for r in reps):
        _fail("all representations must live on the same quiver", EXIT_INPUT)
    labels, seen = [], {}
    for p in rep_files:
        stem = Path(p).stem
        n = seen.get(stem, 0)
        seen[stem] = n + 1
        labels.append(stem if n == 0 else f"{stem}#{n}")
    try:
        table = pair_table(reps, labels)
    except ValueError as e:
        _fail(str(e), EXIT_INPUT)
    _emit_table(table, cfg.fmt)


@main.command("catalog")
@click.argument("which", type=click.Choice(["q1", "triangle", "q2", "square"]))
@click.option("--max-m", type=int, default=5, show_default=True,
              help="Largest series level to include.")
@click.pass_obj
def cmd_catalog(cfg: CliConfig, which: str, max_m: int) -> None:
    """Hom/Ext table of a closed-form exceptional catalog.

    q1 (alias triangle) is the commutative-triangle quiver, q2 (alias
    square) the commutative-square quiver.
    """
    which = {"q1": "triangle", "q2": "square"}.get(which, which)
    table = catalog_table(which, max_m, cfg.field)
    _emit_table(table, cfg.fmt)


@main.command("verify")
@click.argument("suite", type=click.Choice(
    ["dynkin", "extended-e", "q1", "q2", "euler-fuzz", "hill-arith"]))
@click.option("--graphs", default="A4,D4", show_default=True,
              help="dynkin: comma-separated graph names.")
@click.option("--orientations", default="all", show_default=True,
              help="dynkin: 'all' or a sample count.")
@click.option("--type", "ext_type", type=click.Choice(EXTENDED_E), default="E6t",
              show_default=True, help="extended-e: which quiver.")
@click.option("--max-level", type=int, default=1, show_default=True,
              help="extended-e: root level bound.")
@click.option("--max-m", type=int, default=5, show_default=True,
              help="q1/q2: largest series level.")
@click.option("--cases", type=int, default=500, show_default=True,
              help="euler-fuzz: random pair count.")
@click.option("--bruteforce-cases", type=int, default=200, show_default=True,
              help="euler-fuzz: cases re-checked by the flat solver.")
@click.option("--samples", type=int, default=1000, show_default=True,
              help="hill-arith: samples per clause.")
@click.pass_obj
def cmd_verify(cfg: CliConfig, suite: str, graphs: str, orientations: str,
               ext_type: str, max_level: int, max_m: int, cases: int,
               bruteforce_cases: int, samples: int) -> None:
    """Run one verification suite; exit 3 if it finds a violation."""
    try:
        if suite == "dynkin":
            names = [g.strip() for g in graphs.split(",") if g.strip()]
            orient_arg: int | str = "all"
            if orientations != "all":
                orient_arg = int(orientations)
            res = run_dynkin(names, orientations=orient_arg, seed=cfg.seed,
                             fieldspec=cfg.field)
        elif suite == "extended-e":
            res = run_extended(ext_type, max_level=max_level, seed=cfg.seed,
                               fieldspec=cfg.field)
        elif suite in ("q1", "q2"):
            res = run_catalog("triangle" if suite == "q1" else "square",
                              max_m=max_m, fieldspec=cfg.field)
        elif suite == "euler-fuzz":
            res = run_euler_fuzz(cases=cases, bruteforce_cases=bruteforce_cases,
                                 seed=cfg.seed)
        else:
            res = run_hill(samples=samples, seed=cfg.seed)
    except ValueError as e:
        _fail(str(e), EXIT_INPUT)
    if cfg.fmt == "json":
        click.echo(json.dumps(res.to_dict(), indent=2))
    else:
        for line in res.lines:
            click.echo(line)
        for v in res.violations:
            click.echo(f"VIOLATION: {v}")
        click.echo("ok" if res.ok else "FAILED")
    sys.exit(EXIT_OK if res.ok else EXIT_VIOLATION)


if __name__ == "__main__":
    main()
