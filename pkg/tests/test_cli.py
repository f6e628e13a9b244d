import json

import pytest

from bergex.cli import main
from bergex.constructions import fano_plane, fano_incidence_graph
from bergex.core import complete_bipartite, cycle_graph
from bergex.serial import dump, to_text


@pytest.fixture()
def files(tmp_path):
    paths = {}
    paths["fano"] = tmp_path / "fano.txt"
    paths["fano"].write_text(to_text(fano_plane()))
    paths["k22"] = tmp_path / "k22.txt"
    paths["k22"].write_text(to_text(complete_bipartite(2, 2)))
    paths["c2"] = tmp_path / "c2.txt"
    paths["c2"].write_text(to_text(cycle_graph(2)))
    paths["inc"] = tmp_path / "inc.txt"
    dump(fano_incidence_graph(), paths["inc"], as_json=True)
    return paths


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out.strip()
    return code, json.loads(out) if out else None


class TestDetect:
    def test_contained(self, capsys, files):
        code, doc = run(capsys, ["detect", "--hypergraph", str(files["fano"]),
                                 "--pattern", str(files["k22"])])
        assert code == 0
        assert doc["result"]["contained"] is True
        assert doc["result"]["witness"]["core_map"]
        assert doc["manifest"]["command"] == "detect"

    def test_free(self, capsys, files):
        code, doc = run(capsys, ["detect", "--hypergraph", str(files["fano"]),
                                 "--pattern", str(files["c2"])])
        assert code == 1
        assert doc["result"]["contained"] is False

    def test_oracle_mode(self, capsys, files):
        code, doc = run(capsys, ["detect", "--hypergraph", str(files["fano"]),
                                 "--pattern", str(files["k22"]), "--oracle"])
        assert code == 0 and doc["result"]["oracle"] is True

    def test_input_error(self, capsys, tmp_path, files):
        bad = tmp_path / "bad.txt"
        bad.write_text("nonsense\n")
        code = main(["detect", "--hypergraph", str(bad),
                     "--pattern", str(files["k22"])])
        assert code == 2

    def test_graph_for_hypergraph_rejected(self, capsys, files):
        code = main(["detect", "--hypergraph", str(files["k22"]),
                     "--pattern", str(files["k22"])])
        assert code == 2


class TestSearchCommands:
    def test_exact(self, capsys, files):
        code, doc = run(capsys, ["exact", "--n", "6", "--r", "3",
                                 "--family", str(files["c2"])])
        assert code == 0
        assert doc["result"]["value"] == 4
        assert doc["result"]["status"] == "exact"

    def test_exact_budget_exhausted(self, capsys, files):
        code, doc = run(capsys, ["exact", "--n", "7", "--r", "3",
                                 "--family", str(files["k22"]),
                                 "--budget", "4"])
        assert code == 3
        assert doc["result"]["status"] == "lower_bound_only"

    def test_exact_graph(self, capsys, files):
        code, doc = run(capsys, ["exact-graph", "--n", "6", "--clique", "2",
                                 "--pattern", str(files["k22"])])
        assert code == 0 and doc["result"]["value"] == 7

    def test_sandwich(self, capsys, files):
        code, doc = run(capsys, ["sandwich", "--n", "5", "--r", "3",
                                 "--pattern", str(files["k22"])])
        assert code == 0
        assert doc["result"]["ok"] is True

    def test_sandwich_rejects_parallel(self, capsys, files):
        code = main(["sandwich", "--n", "4", "--r", "3",
                     "--pattern", str(files["c2"])])
        assert code == 2


class TestOtherCommands:
    def test_reduce(self, capsys, files):
        code, doc = run(capsys, ["reduce", "--hypergraph", str(files["fano"]),
                                 "--pattern", str(files["k22"]),
                                 "--shuffle", "5"])
        assert code == 0
        assert doc["result"]["certification"]["counting_identity_ok"]

    def test_engine(self, capsys, files):
        code, doc = run(capsys, ["engine", "--hypergraph", str(files["fano"]),
                                 "--pattern", str(files["k22"]), "--trace"])
        assert code == 0
        assert doc["result"]["status"] == "berge_found"
        assert doc["result"]["trace"]

    def test_audit(self, capsys, files):
        code, doc = run(capsys, ["audit", "--hypergraph", str(files["fano"]),
                                 "-t", "3"])
        assert code == 0 and doc["result"]["ok"]

    def test_bound(self, capsys):
        code, doc = run(capsys, ["bound", "cor_maincor",
                                 "--param", "t=7", "--param", "n=10000"])
        assert code == 0
        assert doc["result"]["value"]["rendered"] == "2449489.74278"

    def test_bound_fraction_param(self, capsys):
        code, doc = run(capsys, ["bound", "claim_clique_bound",
                                 "--param", "c=1/2", "--param", "x=4",
                                 "--param", "n=5", "--param", "i=1",
                                 "--param", "r=3", "--param", "ex_value=6"])
        assert code == 0
        assert doc["result"]["value"]["rational"] == "4/3"

    def test_bound_errors(self, capsys):
        assert main(["bound", "luo", "--param", "n=6"]) == 2
        assert main(["bound", "luo", "--param", "oops"]) == 2


class TestConstruct:
    def test_furedi_with_output(self, capsys, tmp_path):
        out = tmp_path / "g.txt"
        code, doc = run(capsys, ["construct", "furedi", "--q", "5", "--t", "3",
                                 "-o", str(out)])
        assert code == 0
        assert doc["result"]["edge_count"] == 28
        assert doc["result"]["freeness_holds"] is True
        assert out.exists()
        manifest = json.loads((tmp_path / "g.txt.manifest.json").read_text())
        assert manifest["command"] == "construct"
        assert str(out) in manifest["outputs"]

    def test_blowup(self, capsys, files):
        code, doc = run(capsys, ["construct", "blowup", "--graph",
                                 str(files["inc"]), "--r", "3", "--t", "2"])
        assert code == 0
        assert doc["result"]["vertices"] == 21
        assert doc["result"]["edge_count"] == 21

    def test_linear_is(self, capsys, tmp_path, files):
        gpath = tmp_path / "furedi53.txt"
        main(["construct", "furedi", "--q", "5", "--t", "3", "-o", str(gpath)])
        capsys.readouterr()
        code, doc = run(capsys, ["construct", "linear-is", "--graph",
                                 str(gpath), "--t", "3"])
        assert code == 0
        assert doc["result"]["freeness_holds"] is True
        assert doc["result"]["stats"]["selected"] >= 4

    def test_missing_params(self, capsys):
        assert main(["construct", "furedi", "--q", "5"]) == 2
        assert main(["construct", "blowup", "--r", "3", "--t", "2"]) == 2


class TestReplayDeterminism:
    def test_byte_identical_and_replayable(self, capsys, tmp_path, files):
        argv = ["detect", "--hypergraph", str(files["fano"]),
                "--pattern", str(files["k22"])]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        second = capsys.readouterr().out
        assert first == second

        mpath = tmp_path / "m.json"
        mpath.write_text(json.dumps(json.loads(first)["manifest"]))
        code, doc = run(capsys, ["replay", str(mpath)])
        assert code == 0
        assert doc["result"]["reproduced"] is True

    def test_replay_detects_drift(self, capsys, tmp_path, files):
        argv = ["exact", "--n", "5", "--r", "3", "--family", str(files["c2"])]
        main(argv)
        doc = json.loads(capsys.readouterr().out)
        manifest = doc["manifest"]
        manifest["outputs"]["result_sha256"] = "0" * 64
        mpath = tmp_path / "m.json"
        mpath.write_text(json.dumps(manifest))
        assert main(["replay", str(mpath)]) == 1
        capsys.readouterr()


class TestVerifyAll:
    def test_only_bounds(self, capsys):
        code, doc = run(capsys, ["verify-all", "--only", "bounds"])
        assert code == 0
        assert doc["result"]["criteria"][0]["passed"]

    def test_unknown_group(self, capsys):
        assert main(["verify-all", "--only", "nope"]) == 2

    def test_corrupt_suite_file(self, capsys, tmp_path):
        bad = tmp_path / "suite.json"
        bad.write_text("{broken")
        assert main(["verify-all", str(bad)]) == 2
