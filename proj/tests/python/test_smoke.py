import json

import pytest

import nbhd


def two_step_model():
    return nbhd.Model(nbhd.Frame(2, [0, 0, 0, 0b01]), {"p": 0b11})


def test_parse_and_render():
    f = nbhd.parse("[]p -> p")
    assert str(f) == "~([]p & ~p)"
    assert f.kind == "negation"
    assert f.modal_depth == 1
    assert nbhd.parse(str(f)) == f
    assert f.subformulas() == ["p", "[]p", "~p", "[]p & ~p", "~([]p & ~p)"]
    assert nbhd.is_variable_free("top & []bot")
    assert not nbhd.is_variable_free("top & p")


def test_parse_error_position():
    with pytest.raises(nbhd.ParseError, match="position 4"):
        nbhd.parse("p & # q")
    assert issubclass(nbhd.ParseError, nbhd.Error)


def test_truth_sets():
    m = two_step_model()
    assert nbhd.truth_set(m, nbhd.parse("[]p")) == 0b01
    assert nbhd.truth_set(m, nbhd.parse("[][]p")) == 0
    assert nbhd.holds_at(m, 0, nbhd.parse("[]p & ~[][]p"))
    with pytest.raises(nbhd.FrameError):
        nbhd.holds_at(m, 5, nbhd.parse("p"))


def test_frame_validation():
    with pytest.raises(nbhd.FrameError, match="table length must be 4"):
        nbhd.Frame(2, [0, 0, 0])
    with pytest.raises(nbhd.FrameError):
        nbhd.Frame(2, [0, 0, 0, 4])


def test_properties_and_axioms():
    assert nbhd.properties(nbhd.Frame.identity(3)) == {
        "reflexive": True,
        "transitive": True,
        "monotonic": True,
        "regular": True,
    }
    rows = nbhd.axiom_report(nbhd.Frame(1, [1, 0]))
    assert [r["axiom"] for r in rows] == ["T", "M", "C", "4"]
    assert all(r["valid"] == r["holds"] for r in rows)
    assert not rows[1]["valid"]


def test_closures():
    split = nbhd.Frame(2, [0, 0b10, 0b10, 0])
    star = nbhd.intersection_closure(split)
    assert star.box(0) == 0b10
    assert nbhd.is_regular(star)
    assert nbhd.is_monotonic(nbhd.supplement(split))
    assert nbhd.rm_closure(split) == nbhd.supplement(star)
    hat = nbhd.hat_closure(split)
    assert nbhd.is_reflexive(hat) and nbhd.is_transitive(hat)


def test_kripke_import():
    fr = nbhd.kripke_to_neighborhood(2, [(0, 1)])
    assert fr.table == [0b10, 0b10, 0b11, 0b11]


def test_filtration():
    m = nbhd.Model(nbhd.Frame.identity(2), {"p": 0b01})
    out = nbhd.filtrate(m, nbhd.parse("[]p"), "s04")
    assert out["report"]["passed"]
    assert out["model"].frame.table == [0, 1, 0, 1]
    assert out["partition"] == [1, 2]
    irregular = nbhd.Model(nbhd.Frame(3, [0, 0, 0, 7, 0, 7, 7, 7]), {"p": 3})
    with pytest.raises(nbhd.PreconditionError, match="regularity precondition failed"):
        nbhd.filtrate(irregular, nbhd.parse("[]p"), "emc4")


def test_bounded_sat():
    f = nbhd.parse("[]p & ~[][]p")
    e = nbhd.bounded_sat(f, "E", max_worlds=2)
    assert e["outcome"] == "satisfiable"
    assert e["model"].worlds <= 2
    assert nbhd.holds_at(e["model"], e["world"], f)
    e4 = nbhd.bounded_sat(f, "E4", budget=1000)
    assert e4["outcome"] == "unknown"
    assert e4["frames_examined"] == 4 + 256 + 1000
    assert nbhd.countermodel("[]p -> [][]p", "E4", budget=1000)["outcome"] == "unknown"


def test_json_round_trip():
    m = two_step_model()
    text = nbhd.model_to_json(m)
    assert json.loads(text) == {"worlds": 2, "box": [0, 0, 0, 1], "valuation": {"p": 3}}
    assert nbhd.model_from_json(text) == m
    with pytest.raises(nbhd.FormatError):
        nbhd.model_from_json('{"worlds": 2}')


def test_quick_lemmas():
    results = nbhd.run_lemmas("quick")
    assert len(results) == 9
    assert all(passed for passed, _ in results)
