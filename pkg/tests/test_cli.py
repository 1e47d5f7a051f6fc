"""End-to-end CLI behavior: subcommands, exit codes, composition, determinism."""

import json
from pathlib import Path

import pytest

from lexnet.cli import run


@pytest.fixture(scope="module")
def fixture_dir(tmp_path_factory):
    root = tmp_path_factory.mktemp("fx")
    assert run(["fixture", "--out-dir", str(root)]) == 0
    return root


@pytest.fixture(scope="module")
def extracted(fixture_dir, tmp_path_factory):
    out = tmp_path_factory.mktemp("extracted")
    edges = out / "edges.tsv"
    nodes = out / "nodes.txt"
    rc = run(
        [
            "extract",
            "--corpus",
            str(fixture_dir / "corpus"),
            "--registry",
            str(fixture_dir / "registry.tsv"),
            "--out",
            str(edges),
            "--nodes-out",
            str(nodes),
        ]
    )
    assert rc == 0
    return edges, nodes


def _analyze(extracted, out_path, *extra):
    edges, nodes = extracted
    return run(
        ["analyze", "--edges", str(edges), "--nodes", str(nodes), "--out", str(out_path),
         "--null-samples", "10", *extra]
    )


class TestFixtureAndExtract:
    def test_fixture_layout(self, fixture_dir):
        assert (fixture_dir / "registry.tsv").exists()
        assert (fixture_dir / "README.md").exists()
        assert len(list((fixture_dir / "corpus").glob("*.txt"))) == 52

    def test_edge_list_is_sorted_tsv(self, extracted):
        edges, nodes = extracted
        lines = edges.read_text(encoding="utf-8").splitlines()
        keys = [tuple(line.split("\t")[:2]) for line in lines]
        assert keys == sorted(keys)
        assert len(nodes.read_text(encoding="utf-8").splitlines()) == 52


class TestAnalyze:
    def test_full_report(self, extracted, tmp_path):
        out = tmp_path / "report.json"
        assert _analyze(extracted, out) == 0
        report = json.loads(out.read_text(encoding="utf-8"))
        assert report["graph_summary"]["n"] == 52
        assert report["assessment"]["verdict"] == "concentrated_world"

    def test_determinism(self, extracted, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        assert _analyze(extracted, a, "--seed", "7") == 0
        assert _analyze(extracted, b, "--seed", "7") == 0
        assert a.read_bytes() == b.read_bytes()

    def test_seed_changes_nulls_only_deterministically(self, extracted, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        assert _analyze(extracted, a, "--seed", "7") == 0
        assert _analyze(extracted, b, "--seed", "8") == 0
        ra = json.loads(a.read_text(encoding="utf-8"))
        rb = json.loads(b.read_text(encoding="utf-8"))
        assert ra["roles"] == rb["roles"]
        assert ra["provenance"]["seed"] != rb["provenance"]["seed"]

    def test_partial_commands_compose(self, extracted, tmp_path):
        edges, nodes = extracted
        full = tmp_path / "full.json"
        assert _analyze(extracted, full) == 0
        report = json.loads(full.read_text(encoding="utf-8"))
        for command, section in (
            ("richclub", "rich_club"),
            ("communities", "communities"),
            ("nulls", "assessment"),
        ):
            partial_path = tmp_path / f"{command}.json"
            rc = run(
                [command, "--edges", str(edges), "--nodes", str(nodes),
                 "--out", str(partial_path), "--null-samples", "10"]
            )
            assert rc == 0
            partial = json.loads(partial_path.read_text(encoding="utf-8"))
            assert partial[section] == report[section]
            assert partial["graph_summary"] == report["graph_summary"]
        nulls = json.loads((tmp_path / "nulls.json").read_text(encoding="utf-8"))
        assert nulls["baselines"] == report["baselines"]

    def test_config_file_and_flag_override(self, extracted, tmp_path):
        edges, nodes = extracted
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"seed": 5, "null_samples": 10}), encoding="utf-8")
        out = tmp_path / "r.json"
        rc = run(
            ["analyze", "--edges", str(edges), "--nodes", str(nodes),
             "--config", str(config), "--seed", "99", "--out", str(out)]
        )
        assert rc == 0
        report = json.loads(out.read_text(encoding="utf-8"))
        assert report["provenance"]["seed"] == 99  # flag wins
        assert report["provenance"]["config"]["null_samples"] == 10

    def test_config_env_var(self, extracted, tmp_path, monkeypatch):
        edges, nodes = extracted
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"null_samples": 10, "seed": 13}), encoding="utf-8")
        monkeypatch.setenv("LEXNET_CONFIG", str(config))
        out = tmp_path / "r.json"
        assert run(["analyze", "--edges", str(edges), "--nodes", str(nodes), "--out", str(out)]) == 0
        report = json.loads(out.read_text(encoding="utf-8"))
        assert report["provenance"]["seed"] == 13


class TestExport:
    def test_dot_and_graphml(self, extracted, tmp_path):
        edges, nodes = extracted
        report_path = tmp_path / "report.json"
        assert _analyze(extracted, report_path) == 0
        dot = tmp_path / "g.dot"
        graphml = tmp_path / "g.graphml"
        rc = run(
            ["export", "--edges", str(edges), "--nodes", str(nodes),
             "--report", str(report_path), "--dot", str(dot), "--graphml", str(graphml)]
        )
        assert rc == 0
        dot_text = dot.read_text(encoding="utf-8")
        assert '"sante_publique" [shape=hexagon' in dot_text
        assert '"legion_honneur" [shape=diamond' in dot_text
        assert "<graphml" in graphml.read_text(encoding="utf-8")

    def test_dot_deterministic(self, extracted, tmp_path):
        edges, nodes = extracted
        report_path = tmp_path / "report.json"
        assert _analyze(extracted, report_path) == 0
        paths = [tmp_path / "a.dot", tmp_path / "b.dot"]
        for p in paths:
            assert run(
                ["export", "--edges", str(edges), "--nodes", str(nodes),
                 "--report", str(report_path), "--dot", str(p)]
            ) == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_export_requires_a_format(self, extracted, tmp_path):
        edges, nodes = extracted
        report_path = tmp_path / "report.json"
        assert _analyze(extracted, report_path) == 0
        assert run(
            ["export", "--edges", str(edges), "--nodes", str(nodes), "--report", str(report_path)]
        ) == 2


class TestExitCodes:
    def test_unknown_flag_is_usage_error(self, extracted, tmp_path, capsys):
        edges, nodes = extracted
        out = tmp_path / "never.json"
        rc = run(["analyze", "--edges", str(edges), "--bogus-flag", "--out", str(out)])
        assert rc == 2
        assert not out.exists()

    def test_unknown_subcommand(self):
        assert run(["frobnicate"]) == 2

    def test_malformed_edge_list(self, tmp_path):
        bad = tmp_path / "bad.tsv"
        bad.write_text("not a record\n", encoding="utf-8")
        assert run(["analyze", "--edges", str(bad)]) == 3

    def test_self_loop_edge_list(self, tmp_path):
        bad = tmp_path / "bad.tsv"
        bad.write_text("a\ta\t1\n", encoding="utf-8")
        assert run(["analyze", "--edges", str(bad)]) == 3

    def test_missing_file(self, tmp_path):
        assert run(["analyze", "--edges", str(tmp_path / "nope.tsv")]) == 3

    def test_degenerate_graph(self, tmp_path):
        tiny = tmp_path / "tiny.tsv"
        tiny.write_text("a\tb\t1\n", encoding="utf-8")
        assert run(["analyze", "--edges", str(tiny)]) == 4

    def test_bad_config_value(self, extracted, tmp_path):
        edges, nodes = extracted
        rc = run(["analyze", "--edges", str(edges), "--k-citing", "0", "--out", str(tmp_path / "x")])
        assert rc == 2
