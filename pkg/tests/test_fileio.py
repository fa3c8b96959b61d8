import pytest

from distseq import fileio
from distseq.automata import MealyAutomaton, PartialSemiautomaton
from distseq.extremal import fig1_automaton, sokolovskii_instance


def test_mealy_round_trip(tmp_path):
    aut = fig1_automaton(5)
    path = tmp_path / "a.maut"
    fileio.dump(aut, path)
    assert fileio.load(path) == aut


def test_psemi_round_trip(tmp_path):
    semi = sokolovskii_instance(4, 2).semiautomaton
    path = tmp_path / "a.psemi"
    fileio.dump(semi, path)
    assert fileio.load(path) == semi


def test_comments_and_blank_lines():
    text = "# header comment\nmealy 1 1 1  # trailing\n\n0 0 0 0\n"
    aut = fileio.loads(text)
    assert isinstance(aut, MealyAutomaton)
    assert aut.nxt == ((0,),)


def test_partial_cells_stay_undefined():
    semi = fileio.loads("psemi 2 2\n0 0 1\n1 1 0\n")
    assert semi.nxt == ((1, None), (None, 0))
    assert not semi.is_complete()


def test_duplicate_pair_reports_line():
    with pytest.raises(fileio.FormatError, match="line 3"):
        fileio.loads("mealy 1 1 1\n0 0 0 0\n0 0 0 0\n")


def test_missing_cell():
    with pytest.raises(fileio.FormatError, match="missing"):
        fileio.loads("mealy 2 1 1\n0 0 1 0\n")


def test_bad_field_count():
    with pytest.raises(fileio.FormatError, match="line 2"):
        fileio.loads("psemi 2 1\n0 0\n")


def test_unknown_header():
    with pytest.raises(fileio.FormatError, match="unknown"):
        fileio.loads("moore 2 1\n")


def test_out_of_range_target():
    with pytest.raises(fileio.FormatError):
        fileio.loads("psemi 2 1\n0 0 7\n")
