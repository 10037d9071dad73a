"""Smoke tests for the python bindings.

These check that the extension exposes the main operations and that the
worked examples come out with the recorded matrices.
"""

import stratkit


def test_version():
    assert stratkit.__version__


def test_algebra_check_ex1():
    out = stratkit.algebra_check("EX1")
    assert out["exit_code"] == 0
    assert out["report"]["algebra"]["dim"] == 9
    assert out["report"]["algebra"]["minimal_verified_bound"] == 3


def test_algebra_check_ex2_dims():
    rep = stratkit.algebra_check("EX2")["report"]["algebra"]
    assert rep["dim"] == 10
    assert rep["vertices"]["1"]["P_dims"] == [2, 1, 1]
    assert rep["vertices"]["2"]["P_dims"] == [1, 2, 0]
    assert rep["vertices"]["3"]["P_dims"] == [1, 0, 2]


def test_stratify_ex1_regular():
    out = stratkit.stratify("EX1", ["P(1)", "P(2)", "P(3)"], verify_all=True)
    assert out["exit_code"] == 0
    rep = out["report"]
    assert rep["matrices"]["C"] == [[1, 0, 1], [0, 1, 1], [0, 0, 1]]
    assert rep["matrices"]["R"] == [[0, 0, 0], [0, 0, 0], [0, 0, 0]]
    assert rep["cartan_group"]["order"] == "1"


def test_stratify_ex2_diagonal():
    out = stratkit.stratify("EX2", ["P(1)", "P(2)", "P(3)"], verify_all=True)
    rep = out["report"]
    assert rep["matrices"]["C"] == [[1, 0, 0], [0, 2, 0], [0, 0, 2]]
    assert rep["matrices"]["R"] == [[0, -1, -1], [0, 0, 0], [0, 0, 0]]
    assert rep["cartan_group"]["structure"] == "Z/2 + Z/2"
    assert rep["verdicts"]["m_filtered"] == "no"


def test_tau_rigid_triple():
    out = stratkit.tau("EX1", ["EX1.M1", "EX1.M2", "EX1.M3"])
    assert out["report"]["tau_rigid"] == "yes"
    assert out["report"]["tau_tilting"] == "yes"


def test_non_rigid_pair_has_witness():
    out = stratkit.tau("EX1", ["S(1)", "S(2)"])
    assert out["report"]["tau_rigid"] == "no"
    assert "witness" in out["report"]


def test_smith():
    out = stratkit.smith([[2, 0], [0, 3]])
    assert out["invariant_factors"] == [1, 6]


def test_selftest_passes_and_is_deterministic():
    a = stratkit.selftest(seed=0)
    b = stratkit.selftest(seed=0, workers=4)
    assert a["exit_code"] == 0
    assert a["report"] == b["report"]
    assert a["report"]["pairing_suite"]["pairs"] >= 150
    assert a["report"]["sweep"]["pass"] is True
