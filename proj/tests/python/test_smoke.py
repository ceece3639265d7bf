import json
import math
import os
from fractions import Fraction
from pathlib import Path

import pytest

import currentlab

FIXTURES = Path(os.environ.get("CURRENTLAB_FIXTURES", Path(__file__).resolve().parents[1] / "fixtures"))


def leaf(w):
    return currentlab.Current([(0, "1/2", w), ("1/2", 0, w)])


def test_current_basics():
    mu = leaf(Fraction(3, 2))
    assert len(mu) == 2
    assert mu.total_mass == 3
    assert mu.is_symmetric() and mu.is_lamination()
    assert mu.box_measure("3/4", "1/4", "1/3", "2/3") == Fraction(3, 2)


def test_json_round_trip():
    text = (FIXTURES / "lamination.json").read_text()
    mu = currentlab.Current.from_json(text)
    again = currentlab.Current.from_json(mu.to_json())
    assert again.chords() == mu.chords()


def test_single_leaf_segment():
    for w in (1, Fraction(3, 2), Fraction(22, 7)):
        cx = currentlab.dual_complex(leaf(w), w)
        assert cx["vertices"] == 2 and cx["dimension"] == 1
        assert cx["distances"][0][1] == w


def test_holonomy_ratios():
    mu = leaf(2)
    assert currentlab.cross_ratio(mu, 2, "3/4", "1/4", "1/3", "2/3") == 2
    assert currentlab.triple_ratio(mu, 2, "1/8", "3/8", "5/8") == 0
    assert currentlab.certify_rank(mu, 2, 2)


def test_errors_map_to_exceptions():
    with pytest.raises(currentlab.ValidationError):
        currentlab.Current([(0, 0, 1)])
    with pytest.raises(currentlab.CurrentlabError):
        currentlab.Current.from_json("{")
    with pytest.raises(currentlab.MassRangeError):
        currentlab.dual_complex(leaf(1), 5)


def test_periodic_and_mobius():
    text = (FIXTURES / "periodic_up.json").read_text()
    assert currentlab.translation_length(text, -2) == 3
    lhs, rhs = currentlab.verify_abc((3, 0, 0, 1 / 3), (5 / 4, 3 / 4, 3 / 4, 5 / 4))
    assert math.isclose(lhs, rhs, rel_tol=1e-9)


def test_finsler():
    assert currentlab.finsler_distance(0, 1) == 2
    assert currentlab.finsler_distance(0, -1) == 1
    assert math.isclose(currentlab.corridor_cross_ratio(1.0), 2 * math.sqrt(3), rel_tol=1e-12)


def test_cli_in_process():
    code, out, err = currentlab.run_cli(["check", str(FIXTURES / "leaf.json")])
    assert code == 0 and err == ""
    assert json.loads(out)["lamination"] is True
    code, _, err = currentlab.run_cli(["check", str(FIXTURES / "malformed.json")])
    assert code == 2 and json.loads(err)["error"] == "ParseError"
