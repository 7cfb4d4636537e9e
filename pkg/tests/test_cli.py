"""Command-line surface: subcommands, exit codes, formats, seeding."""
import json

import jsonschema
import pytest
from click.testing import CliRunner

from quiverhom import schemas
from quiverhom.cli import main

A3 = "vertices: 1 2 3\narrows: 1->2 2->3\n"
E6T = ("vertices: c a1 a2 b1 b2 d1 d2\n"
       "arrows: a1->c a2->a1 b1->c b2->b1 d1->c d2->d1\n")
CYCLE = "vertices: 1 2 3 4\narrows: 1->2 2->3 3->4 4->1\n"
DISCONNECTED = "vertices: 1 2 3 4\narrows: 1->2 3->4\n"


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in [("a3", A3), ("e6t", E6T), ("cycle", CYCLE),
                       ("split", DISCONNECTED),
                       ("bad", "vertices: 1 2\narrows: 1->3\n")]:
        p = tmp_path / f"{name}.quiver"
        p.write_text(text)
        paths[name] = str(p)
    paths["dir"] = str(tmp_path)
    return paths


def build_rep(runner, files, root, name, extra=()):
    out = files["dir"] + f"/{name}.json"
    res = runner.invoke(main, [*extra, "exceptional", files["a3"],
                               "--root", root, "-o", out])
    assert res.exit_code == 0, res.output
    return out


class TestParse:
    def test_canonical_echo(self, runner, files):
        res = runner.invoke(main, ["parse", files["a3"]])
        assert res.exit_code == 0
        assert "vertices: 1 2 3" in res.output
        assert "# graph: A3" in res.output

    def test_json(self, runner, files):
        res = runner.invoke(main, ["--format", "json", "parse", files["a3"]])
        d = json.loads(res.output)
        assert d["graph"] == "A3"
        assert d["arrows"] == [["1", "2"], ["2", "3"]]

    def test_missing_file_exits_1(self, runner, files):
        res = runner.invoke(main, ["parse", files["dir"] + "/nope.quiver"])
        assert res.exit_code == 1
        assert "error:" in res.stderr

    def test_bad_syntax_reports_position(self, runner, files):
        res = runner.invoke(main, ["parse", files["bad"]])
        assert res.exit_code == 1
        assert "line 2" in res.stderr

    def test_disconnected_exits_2(self, runner, files):
        res = runner.invoke(main, ["parse", files["split"]])
        assert res.exit_code == 2


class TestClassify:
    def test_extended_star(self, runner, files):
        res = runner.invoke(main, ["classify", files["e6t"]])
        assert res.exit_code == 0
        assert "label: E6~" in res.output
        assert "splitting_vertex: c" in res.output

    def test_json_rays(self, runner, files):
        res = runner.invoke(main, ["--format", "json", "classify", files["e6t"]])
        d = json.loads(res.output)
        assert d["label"] == "E6~"
        assert len(d["rays"]) == 3

    def test_cycle_is_reported_not_rejected(self, runner, files):
        res = runner.invoke(main, ["classify", files["cycle"]])
        assert res.exit_code == 0
        assert "kind: cyclic" in res.output

    def test_disconnected_exits_2(self, runner, files):
        res = runner.invoke(main, ["classify", files["split"]])
        assert res.exit_code == 2


class TestRoots:
    def test_text_lists_and_counts(self, runner, files):
        res = runner.invoke(main, ["roots", files["a3"]])
        assert res.exit_code == 0
        lines = res.output.strip().split("\n")
        assert lines[-1] == "6 roots"
        assert "1,1,1 thin" in lines

    def test_csv_tag_column(self, runner, files):
        res = runner.invoke(main, ["--format", "csv", "roots", files["a3"]])
        assert "1,1,1,thin" in res.output

    def test_json_matches_schema(self, runner, files):
        res = runner.invoke(main, ["--format", "json", "roots", files["a3"]])
        data = json.loads(res.output)
        jsonschema.validate(data, schemas.ROOT_LIST)
        assert len(data) == 6

    def test_extended_level_bound(self, runner, files):
        res = runner.invoke(main, ["--format", "json", "roots", files["e6t"],
                                   "--max-level", "0"])
        assert len(json.loads(res.output)) == 36

    def test_cycle_exits_2(self, runner, files):
        res = runner.invoke(main, ["roots", files["cycle"]])
        assert res.exit_code == 2


class TestExceptional:
    def test_stdout_matches_schema(self, runner, files):
        res = runner.invoke(main, ["exceptional", files["a3"], "--root", "1,1,1"])
        assert res.exit_code == 0
        d = json.loads(res.output)
        jsonschema.validate(d, schemas.REPRESENTATION)
        assert d["dims"] == {"1": 1, "2": 1, "3": 1}

    def test_non_root_exits_1(self, runner, files):
        res = runner.invoke(main, ["exceptional", files["a3"], "--root", "2,1,1"])
        assert res.exit_code == 1
        assert "not a real root" in res.stderr

    def test_malformed_root_exits_1(self, runner, files):
        res = runner.invoke(main, ["exceptional", files["a3"], "--root", "1,x,1"])
        assert res.exit_code == 1

    def test_seed_flag_is_deterministic(self, runner, files):
        args = ["--seed", "5", "exceptional", files["a3"], "--root", "1,1,0"]
        out1 = runner.invoke(main, args).output
        out2 = runner.invoke(main, args).output
        assert out1 == out2
        other = runner.invoke(main, ["--seed", "6", "exceptional", files["a3"],
                                     "--root", "1,1,0"]).output
        assert out1 != other

    def test_env_seed_and_flag_override(self, runner, files):
        base = ["exceptional", files["a3"], "--root", "1,1,0"]
        via_flag = runner.invoke(main, ["--seed", "9", *base]).output
        via_env = runner.invoke(main, base, env={"QUIVERHOM_SEED": "9"}).output
        assert via_flag == via_env
        overridden = runner.invoke(main, ["--seed", "4", *base],
                                   env={"QUIVERHOM_SEED": "9"}).output
        assert overridden != via_env

    def test_bad_env_seed_exits_1(self, runner, files):
        res = runner.invoke(main, ["exceptional", files["a3"], "--root", "1,1,0"],
                            env={"QUIVERHOM_SEED": "many"})
        assert res.exit_code == 1

    def test_rational_field(self, runner, files):
        res = runner.invoke(main, ["--field", "q", "exceptional", files["a3"],
                                   "--root", "0,1,1"])
        assert res.exit_code == 0
        assert json.loads(res.output)["field"] == "q"

    def test_composite_field_rejected(self, runner, files):
        res = runner.invoke(main, ["--field", "fp:15", "exceptional",
                                   files["a3"], "--root", "1,0,0"])
        assert res.exit_code == 1


class TestHom:
    def test_report_text(self, runner, files):
        a = build_rep(runner, files, "1,1,0", "a")
        b = build_rep(runner, files, "0,1,1", "b")
        res = runner.invoke(main, ["hom", a, b])
        assert res.exit_code == 0
        assert res.output.strip() == ("hom=0 ext1=1 euler=-1 rank=1 rows=2 "
                                      "cols=1 max_rank=true")

    def test_json_matches_schema(self, runner, files):
        a = build_rep(runner, files, "1,1,1", "a")
        res = runner.invoke(main, ["--format", "json", "hom", a, a])
        d = json.loads(res.output)
        jsonschema.validate(d, schemas.HOM_REPORT)
        assert (d["hom"], d["ext1"]) == (1, 0)

    def test_field_mismatch_exits_1(self, runner, files):
        a = build_rep(runner, files, "1,1,0", "a")
        b = build_rep(runner, files, "0,1,1", "b", extra=["--field", "q"])
        res = runner.invoke(main, ["hom", a, b])
        assert res.exit_code == 1
        assert "different ground fields" in res.stderr

    def test_corrupt_rep_exits_1(self, runner, files, tmp_path):
        p = tmp_path / "junk.json"
        p.write_text("{\"format\": \"something-else\"}")
        a = build_rep(runner, files, "1,0,0", "a")
        res = runner.invoke(main, ["hom", str(p), a])
        assert res.exit_code == 1


class TestTable:
    def test_text_matrix_with_couples_line(self, runner, files):
        reps = [build_rep(runner, files, r, n)
                for r, n in [("1,0,0", "s1"), ("1,1,0", "s12"), ("1,1,1", "s123")]]
        res = runner.invoke(main, ["table", *reps])
        assert res.exit_code == 0
        assert "ext-nontrivial couples: none" in res.output
        assert "s12" in res.output

    def test_stem_labels_deduplicated(self, runner, files):
        a = build_rep(runner, files, "1,1,1", "a")
        res = runner.invoke(main, ["--format", "json", "table", a, a])
        d = json.loads(res.output)
        jsonschema.validate(d, schemas.PAIR_TABLE)
        assert d["labels"] == ["a", "a#1"]

    def test_quiver_mismatch_exits_1(self, runner, files, tmp_path):
        a = build_rep(runner, files, "1,0,0", "a")
        p = tmp_path / "other.quiver"
        p.write_text("vertices: 1 2\narrows: 1->2\n")
        res = runner.invoke(main, ["exceptional", str(p), "--root", "1,1",
                                   "-o", str(tmp_path / "o.json")])
        assert res.exit_code == 0
        res = runner.invoke(main, ["table", a, str(tmp_path / "o.json")])
        assert res.exit_code == 1


class TestCatalog:
    def test_q1_alias_and_couples(self, runner, files):
        res = runner.invoke(main, ["catalog", "q1", "--max-m", "2"])
        assert res.exit_code == 0
        assert "ext-nontrivial couples: {M, M'}" in res.output

    def test_square_json_schema(self, runner, files):
        res = runner.invoke(main, ["--format", "json", "catalog", "square",
                                   "--max-m", "1"])
        d = json.loads(res.output)
        jsonschema.validate(d, schemas.PAIR_TABLE)
        assert "F+" in d["labels"]

    def test_csv_round_trips(self, runner, files):
        res = runner.invoke(main, ["--format", "csv", "catalog", "triangle",
                                   "--max-m", "0"])
        lines = res.output.strip().split("\n")
        assert len(lines) == 7  # header + 4 series at level 0 + 2 sporadic


class TestVerify:
    def test_dynkin_ok(self, runner, files):
        res = runner.invoke(main, ["verify", "dynkin", "--graphs", "A3"])
        assert res.exit_code == 0
        assert res.output.strip().endswith("ok")

    def test_dynkin_bad_graph_exits_1(self, runner, files):
        res = runner.invoke(main, ["verify", "dynkin", "--graphs", "Z9"])
        assert res.exit_code == 1

    def test_extended_reports_violations(self, runner, files):
        res = runner.invoke(main, ["verify", "extended-e", "--type", "E6t",
                                   "--max-level", "1"])
        assert res.exit_code == 3
        assert "VIOLATION" in res.output
        assert res.output.strip().endswith("FAILED")

    def test_extended_json_schema(self, runner, files):
        res = runner.invoke(main, ["--format", "json", "verify", "extended-e",
                                   "--type", "E6t", "--max-level", "1"])
        assert res.exit_code == 3
        d = json.loads(res.output)
        jsonschema.validate(d, schemas.SUITE_RESULT)
        assert d["ok"] is False
        assert d["stats"]["max_rank_violations"] == 6

    def test_catalog_suites(self, runner, files):
        for suite in ("q1", "q2"):
            res = runner.invoke(main, ["verify", suite, "--max-m", "2"])
            assert res.exit_code == 0, res.output

    def test_fuzz_and_hill(self, runner, files):
        res = runner.invoke(main, ["verify", "euler-fuzz", "--cases", "15",
                                   "--bruteforce-cases", "5"])
        assert res.exit_code == 0
        res = runner.invoke(main, ["verify", "hill-arith", "--samples", "25"])
        assert res.exit_code == 0
