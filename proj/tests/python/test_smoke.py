import math

import pytest

import urm


def test_construct_theorem12():
    inst = urm.construct(2, 5)
    assert inst["claimed_size"] == 6
    assert inst["provenance"] == "THEOREM12"
    assert inst["m"] == 5
    assert len(inst["components"]) == 6


def test_resolve_round_trip():
    inst = urm.construct(5, 4, kind="mixed")
    rep = urm.resolve({"m": inst["m"], "components": inst["components"]}, 5)
    assert rep["status"] == "UNIQUE"
    assert len(rep["witnesses"]) == 1

    fig3 = {
        "m": 5,
        "components": [[1, 2], [3, 4], [5], [1, 4], [3, 5], [2], [1, 5], [2, 3], [4]],
    }
    assert urm.resolve(fig3, 3)["status"] == "MULTIPLE"


def test_bounds_and_exact_values():
    rep = urm.bounds_report(7, 10)
    assert rep["lower"] == 21
    assert rep["upper"] == 70
    assert rep["exact"] is None

    assert urm.exact_value(2, 5) == 6
    assert urm.exact_value(13, 5) == 27
    assert urm.exact_value(4, 4) is None

    assert math.isclose(urm.binary_entropy(0.25), 0.8112781244591328, rel_tol=1e-12)
    assert urm.theorem23_k(7, 10) == 3
    assert urm.subset_criterion([2, 2, 2], 3)
    assert not urm.subset_criterion([3, 3], 3)
    assert urm.max_ground_size() >= 12


def test_exact_search_certifies():
    res = urm.g_exact_search(2, 3)
    assert res["value"] == 4
    assert res["exhausted"] is True
    assert res["witness"]["provenance"] == "SEARCH"

    pk = urm.p_k_search(2, 3)
    assert pk["value"] == 3
    assert pk["exhausted"] is True


def test_zebra_round_trip():
    pz = urm.generate_minimal_puzzle(2, 5, seed=1)
    assert len(pz["rules"]) == 4

    sols = urm.solve_puzzle(pz)
    assert len(sols) == 1
    assert set(sols[0]["people"][0]) == {c["name"] for c in pz["categories"]}

    ms = urm.puzzle_to_multiset(pz)
    assert ms["m"] == 5
    assert len(ms["components"]) == 6
    assert urm.resolve(ms, 2)["status"] == "UNIQUE"

    inst = urm.construct(3, 4)
    pz2 = urm.puzzle_from_instance(inst, seed=9)
    assert len(pz2["rules"]) == 3 * 4 - inst["claimed_size"]
    assert len(urm.solve_puzzle(pz2)) == 1


def test_errors_map_to_python_exceptions():
    with pytest.raises(urm.RegimeError):
        urm.construct(8, 4, kind="pair")
    with pytest.raises(urm.MalformedInputError):
        urm.resolve({"m": 2, "components": [[3]]}, 1)
    with pytest.raises(urm.CapacityError):
        urm.bounds_report(4, 30)
    with pytest.raises(urm.InconsistentPuzzleError):
        pz = urm.generate_minimal_puzzle(2, 2, seed=0)
        pz["rules"] = [
            {"cat_a": 0, "val_a": 0, "cat_b": 1, "val_b": 0},
            {"cat_a": 0, "val_a": 1, "cat_b": 1, "val_b": 0},
        ]
        urm.solve_puzzle(pz)
