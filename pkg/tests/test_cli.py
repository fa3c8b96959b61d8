import json

import pytest

from distseq import fileio
from distseq.cli import dispatch


def lines_of(capsys):
    return capsys.readouterr().out.strip().split("\n")


def value_of(lines, key):
    for line in lines:
        if line.startswith(key + ":"):
            return line.split(":", 1)[1].strip()
    raise KeyError(key)


@pytest.fixture
def fig1_file(tmp_path):
    path = str(tmp_path / "fig1_n4.maut")
    assert dispatch(["extremal", "fig1", "--n", "4", "--out", path]) == 0
    return path


class TestPds:
    def test_pair_found(self, fig1_file, capsys):
        capsys.readouterr()
        code = dispatch(["pds", "--file", fig1_file, "--subset", "0,1"])
        out = lines_of(capsys)
        assert code == 0
        assert value_of(out, "status") == "ok"
        assert value_of(out, "result.word") == "1"
        assert value_of(out, "result.length") == "1"

    def test_triple_absent(self, fig1_file, capsys):
        capsys.readouterr()
        code = dispatch(["pds", "--file", fig1_file, "--subset", "0,1,2"])
        out = lines_of(capsys)
        assert code == 0
        assert value_of(out, "status") == "absent"

    def test_missing_file_is_error(self, capsys):
        code = dispatch(["pds", "--file", "/nonexistent.maut", "--subset", "0,1"])
        out = lines_of(capsys)
        assert code == 1
        assert value_of(out, "status") == "error"

    def test_worst_cap_gives_up(self, capsys):
        code = dispatch(["pds-worst", "--states", "3", "--inputs", "2",
                         "--outputs", "2", "--k", "2", "--cap", "100"])
        out = lines_of(capsys)
        assert code == 2
        assert value_of(out, "status") == "gave-up"

    def test_worst_tiny(self, capsys):
        code = dispatch(["pds-worst", "--states", "2", "--inputs", "2",
                         "--outputs", "2", "--k", "2"])
        out = lines_of(capsys)
        assert code == 0
        assert value_of(out, "result.max_length") == "1"


class TestLandauCommand:
    def test_k5(self, capsys):
        code = dispatch(["landau", "--k", "5"])
        out = lines_of(capsys)
        assert code == 0
        assert value_of(out, "result.value") == "6"
        assert value_of(out, "result.partition") == "2+3"

    def test_json_rendering(self, capsys):
        code = dispatch(["landau", "--k", "5", "--json"])
        report = json.loads(capsys.readouterr().out)
        assert code == 0
        assert report["status"] == "ok"
        assert report["result"] == {"value": 6, "partition": "2+3"}

    def test_out_of_range(self, capsys):
        assert dispatch(["landau", "--k", "0"]) == 1


class TestSemigroupCommands:
    def test_closure(self, capsys):
        code = dispatch(["semigroup", "closure", "--ground", "2",
                         "--maps", "1,0"])
        out = lines_of(capsys)
        assert code == 0
        assert value_of(out, "result.size") == "2"
        assert value_of(out, "result.max_level") == "2"

    def test_worst_t2(self, capsys):
        code = dispatch(["semigroup", "worst", "--ground", "2", "--set", "tn"])
        out = lines_of(capsys)
        assert code == 0
        assert value_of(out, "result.value") == "2"

    def test_diam_three_cycle(self, capsys):
        code = dispatch(["semigroup", "diam", "--ground", "3",
                         "--maps", "1,2,0"])
        out = lines_of(capsys)
        assert code == 0
        assert value_of(out, "result.value") == "3"

    def test_diam_rejects_non_bijection(self, capsys):
        assert dispatch(["semigroup", "diam", "--ground", "2",
                         "--maps", "0,0"]) == 1


class TestKgraphCommands:
    def test_build_and_dot(self, tmp_path, capsys):
        dot = str(tmp_path / "g.dot")
        code = dispatch(["kgraph", "build", "--ground", "3", "--k", "2",
                         "--maps", "0,1,2;1,2,0", "--dot", dot])
        out = lines_of(capsys)
        assert code == 0
        assert value_of(out, "result.vertices") == "3"
        assert open(dot).read().startswith("digraph")

    def test_scc(self, capsys):
        code = dispatch(["kgraph", "scc", "--ground", "3", "--k", "2",
                         "--maps", "0,1,2"])
        out = lines_of(capsys)
        assert code == 0
        assert value_of(out, "result.count") == "3"

    def test_compress(self, capsys):
        code = dispatch(["kgraph", "compress", "--ground", "3", "--k", "2",
                         "--maps", "1,2,0", "--start", "0,1",
                         "--walk", "0,0,0"])
        out = lines_of(capsys)
        assert code == 0
        assert value_of(out, "result.original_length") == "3"
        assert value_of(out, "result.eval_domain") == "0,1"

    def test_compress_bad_walk(self, capsys):
        assert dispatch(["kgraph", "compress", "--ground", "3", "--k", "2",
                         "--maps", "0,0,1", "--start", "0,1",
                         "--walk", "0"]) == 1


class TestExtremalAndSyncCommands:
    def test_sokolovskii_verify(self, capsys):
        code = dispatch(["extremal", "sokolovskii", "--n", "4", "--k", "2",
                         "--verify"])
        out = lines_of(capsys)
        assert code == 0
        assert value_of(out, "result.computed") == "3"
        assert value_of(out, "result.bound") == "3"
        assert value_of(out, "result.cycle_characterization") == "True"
        assert value_of(out, "result.state_numbering") == "q1..qn -> 0..n-1"

    def test_psemi_round_trip_through_sync(self, tmp_path, capsys):
        path = str(tmp_path / "sok.psemi")
        assert dispatch(["extremal", "sokolovskii", "--n", "4", "--k", "2",
                         "--out", path]) == 0
        assert fileio.load(path) is not None
        capsys.readouterr()
        code = dispatch(["sync", "careful", "--file", path])
        out = lines_of(capsys)
        # the sink absorbs everything, so a careful word exists
        assert code == 0
        assert value_of(out, "status") == "ok"

    def test_sync_check(self, tmp_path, capsys):
        path = str(tmp_path / "perm.psemi")
        fileio.dump(fileio.loads("psemi 2 1\n0 0 1\n1 0 0\n"), path)
        capsys.readouterr()
        code = dispatch(["sync", "check", "--file", path, "--word", ""])
        out = lines_of(capsys)
        assert code == 0
        assert value_of(out, "result.irreducible") == "True"

    def test_sync_needs_psemi(self, fig1_file, capsys):
        assert dispatch(["sync", "careful", "--file", fig1_file]) == 1


class TestBoundsCommands:
    def test_row(self, capsys):
        code = dispatch(["bounds", "row", "--n", "3", "--k", "2"])
        out = lines_of(capsys)
        assert code == 0
        assert value_of(out, "result.gill") == "9"
        assert value_of(out, "result.moore") == "2"

    def test_table_csv_byte_identical(self, tmp_path, capsys):
        p1, p2 = str(tmp_path / "a.csv"), str(tmp_path / "b.csv")
        assert dispatch(["bounds", "table", "--n-max", "12", "--csv", p1]) == 0
        assert dispatch(["bounds", "table", "--n-max", "12", "--csv", p2]) == 0
        assert open(p1, "rb").read() == open(p2, "rb").read()


def test_repeated_runs_identical_modulo_elapsed(fig1_file, capsys):
    def run():
        dispatch(["pds", "--file", fig1_file, "--subset", "1,3"])
        return [l for l in lines_of(capsys) if not l.startswith("elapsed")]
    assert run() == run()


def test_verify_quick(capsys):
    code = dispatch(["verify", "--level", "quick"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.count("PASS") >= 8
    assert "FAIL" not in out
