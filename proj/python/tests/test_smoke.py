import json
import os
from pathlib import Path

import pytest

import exbetti

FIXTURES = Path(os.environ.get("EXBETTI_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "tests" / "fixtures"))


def fixture(name):
    return json.loads((FIXTURES / name).read_text())


def test_betti_of_three_generators():
    table = exbetti.betti({"n": 6, "generators": ["x1^2", "x1*x2", "x1*x3"]})
    assert table["entries"] == [
        {"i": 0, "j": 2, "beta": 3},
        {"i": 1, "j": 3, "beta": 3},
        {"i": 2, "j": 4, "beta": 1},
    ]


def test_koszul_matches_formula_on_module():
    module = fixture("rank4_module.json")
    assert exbetti.koszul_betti(module) == exbetti.betti(module)


def test_corners_of_rank_four_module():
    out = exbetti.corners(fixture("rank4_module.json"))
    assert out["matrix"] == [[1, 0, 0, 0], [1, 0, 1, 3], [1, 0, 0, 0]]
    assert out["corner_ideals"] == [1, 3, 4]


def test_realize_ideal_and_stability():
    witness = exbetti.realize_ideal(fixture("spec_col1.json"))
    assert witness == fixture("col1_ideal.json")
    assert exbetti.is_strongly_stable(witness)
    assert not exbetti.is_strongly_stable({"n": 2, "generators": ["x2^2"]})


def test_mode_verdicts_differ():
    spec = fixture("spec_discrepancy.json")
    assert exbetti.check_values(spec, "coupled")["feasible"]
    assert not exbetti.check_values(spec, "strict-paper")["feasible"]
    with pytest.raises(exbetti.Error) as info:
        exbetti.realize_ideal(spec, mode="strict-paper")
    assert info.value.kind == "InfeasibleSpec"


def test_realize_module():
    out = exbetti.realize_module(fixture("spec_three_column_module.json"))
    assert len(out["module"]["components"]) == 3
    assert exbetti.corners(out["module"])["corners"] == [
        {"k": 5, "l": 2, "beta": 3},
        {"k": 3, "l": 3, "beta": 7},
        {"k": 2, "l": 5, "beta": 4},
    ]
    with pytest.raises(exbetti.Error):
        exbetti.realize_module(fixture("spec_module_bound_bad.json"))


def test_census_and_diagram():
    assert len(exbetti.census(2, 3)) == 14
    assert exbetti.diagram({"n": 2, "generators": ["x1"]}) == "0: 1\n"
