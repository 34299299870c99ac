import json

import pytest
from click.testing import CliRunner

from flagbetti.cli import main
from flagbetti.complexes import read_facet_file, write_facet_file
from flagbetti.constructions import fano_complex
from flagbetti.graphs import encode_graph6, parse_graph6


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, args, **kw):
    return runner.invoke(main, args, catch_exceptions=False, **kw)


class TestBetti:
    def test_graph6(self, runner):
        res = invoke(runner, ["betti", "--graph6", "D~{"])  # K5
        assert res.exit_code == 0
        out = json.loads(res.output)
        assert out == {"betti": {"0": 4}, "total": 4, "field": "gf2"}

    def test_facets(self, runner, tmp_path):
        path = tmp_path / "fano.facets"
        path.write_text(write_facet_file(fano_complex().complex_))
        res = invoke(runner, ["--field", "rational", "betti", "--facets", str(path)])
        assert res.exit_code == 0
        out = json.loads(res.output)
        assert out == {"betti": {"1": 8}, "total": 8, "field": "rational"}

    def test_requires_exactly_one_input(self, runner):
        res = invoke(runner, ["betti"])
        assert res.exit_code == 2
        res = invoke(runner, ["betti", "--graph6", "Bw", "--facets", "x"])
        assert res.exit_code == 2

    def test_bad_graph6_is_usage_error(self, runner):
        res = invoke(runner, ["betti", "--graph6", "!!"])
        assert res.exit_code == 2


class TestBeta:
    def test_k3(self, runner):
        res = invoke(runner, ["beta", "--graph6", "Bw"])
        assert res.exit_code == 0
        out = json.loads(res.output)
        assert out["beta_total"] == 6

    def test_cap_respected(self, runner):
        from flagbetti.graphs import empty_graph

        word = encode_graph6(empty_graph(15))
        res = invoke(runner, ["beta", "--graph6", word])
        assert res.exit_code == 2


class TestTransforms:
    def test_dual_round_trip(self, runner, tmp_path):
        k = fano_complex().complex_
        path = tmp_path / "k.facets"
        path.write_text(write_facet_file(k))
        res = invoke(runner, ["dual", "--facets", str(path)])
        assert res.exit_code == 0
        dual = read_facet_file(res.output)
        assert dual.n == 7

    def test_bip(self, runner, tmp_path):
        path = tmp_path / "k.facets"
        path.write_text(write_facet_file(fano_complex().complex_))
        res = invoke(runner, ["bip", "--facets", str(path)])
        assert res.exit_code == 0
        g = parse_graph6(res.output.strip())
        assert g.n == 14

    def test_neigh(self, runner):
        res = invoke(runner, ["neigh", "--graph6", "Bw"])
        assert res.exit_code == 0
        k = read_facet_file(res.output)
        assert k.n == 3

    def test_dom(self, runner):
        res = invoke(runner, ["dom", "--graph6", "Bw"])
        assert res.exit_code == 0
        k = read_facet_file(res.output)
        # minimal dominating sets of K3 are the singletons
        assert len(k.facets) == 3


class TestBuild:
    def test_graph_case(self, runner):
        res = invoke(runner, ["build", "union_of_cliques", "10", "5"])
        assert res.exit_code == 0
        out = json.loads(res.output)
        assert out["expected"] == 16
        assert parse_graph6(out["graph6"]).n == 10

    def test_complex_case(self, runner):
        res = invoke(runner, ["build", "missing_face_complex", "5", "2"])
        out = json.loads(res.output)
        assert out["expected"] == 4
        assert read_facet_file(out["facets"]).n == 5

    def test_unknown(self, runner):
        res = invoke(runner, ["build", "petersen"])
        assert res.exit_code == 2

    def test_bad_params(self, runner):
        res = invoke(runner, ["build", "union_of_cliques", "7", "5"])
        assert res.exit_code == 2


class TestVerify:
    def test_lemmas_pass(self, runner):
        res = invoke(runner, ["verify", "--suite", "lemmas"])
        assert res.exit_code == 0
        out = json.loads(res.output)
        assert out["all_pass"]


class TestSearch:
    def test_internal_generator(self, runner):
        res = invoke(runner, ["search", "--metric", "b", "--n", "5"])
        assert res.exit_code == 0
        out = json.loads(res.output)
        assert out["max_value"] == 4
        assert out["maximizers"] == ["D~{"]
        assert out["all_within_bound"]

    def test_stdin_stream(self, runner):
        words = "Bw\nBo\nB?\n"
        res = invoke(runner, ["search", "--metric", "b", "--stdin"], input=words)
        assert res.exit_code == 0
        out = json.loads(res.output)
        assert out["graphs_examined"] == 3

    def test_strict_stream_error(self, runner):
        res = invoke(runner, ["search", "--metric", "b", "--stdin"], input="Bw\n!!\n")
        assert res.exit_code == 2

    def test_tsv(self, runner):
        res = invoke(runner, ["search", "--metric", "b", "--n", "4", "--tsv"])
        assert res.exit_code == 0
        assert res.output.split("\t")[0] == "4"

    def test_needs_one_source(self, runner):
        res = invoke(runner, ["search", "--metric", "b"])
        assert res.exit_code == 2


class TestConstants:
    def test_json(self, runner):
        res = invoke(runner, ["constants", "--dmax", "6"])
        assert res.exit_code == 0
        out = json.loads(res.output)
        assert out["theta"].startswith("1.3195")
        assert out["gamma"].startswith("1.2498")
        assert out["theta_maximal_up_to"] == 6


class TestCheck:
    def test_graph(self, runner):
        res = invoke(runner, ["check", "--graph6", "D~{", "--beta"])
        assert res.exit_code == 0
        out = json.loads(res.output)
        assert out["b"] == 4 and out["all_pass"]

    def test_complex(self, runner, tmp_path):
        path = tmp_path / "k.facets"
        path.write_text(write_facet_file(fano_complex().complex_))
        res = invoke(runner, ["check", "--facets", str(path)])
        assert res.exit_code == 0
        assert json.loads(res.output)["all_pass"]

    def test_field_option(self, runner):
        res = invoke(runner, ["--field", "gf3", "betti", "--graph6", "D~{"])
        assert json.loads(res.output)["field"] == "gf3"
        res = invoke(runner, ["--field", "bogus", "betti", "--graph6", "D~{"])
        assert res.exit_code == 2
