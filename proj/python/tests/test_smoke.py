import json
from fractions import Fraction

import numpy as np
import pytest

import resnet


def test_reference_resistances():
    assert resnet.resistance_exact(resnet.hypercube(3), 0, 7) == Fraction(5, 6)
    assert resnet.resistance_exact(resnet.cycle(4), 0, 1) == Fraction(3, 4)
    assert resnet.resistance_exact(resnet.block_tower(2), 0, 6) == Fraction(5, 6)
    assert resnet.resistance_spectral(resnet.path(4), 0, 3) == pytest.approx(3.0, abs=1e-12)


def test_network_round_trip_with_fractions():
    net = resnet.ResistorNetwork(3)
    net.add_edge(0, 1, Fraction(1, 3))
    net.add_edge(1, 2, "1/6")
    net.add_edge(0, 2, 1)
    again = resnet.ResistorNetwork.from_text(net.to_text())
    assert again == net
    assert net.edges[0] == (0, 1, Fraction(1, 3), False)
    table = resnet.resistance_matrix_exact(net)
    assert table[0][1] == table[1][0]


def test_errors_map_to_python_exceptions():
    with pytest.raises(resnet.ParseError):
        resnet.ResistorNetwork.from_text("0 1 x\n")
    split = resnet.ResistorNetwork.from_text("0 1 1\n2 3 1\n")
    with pytest.raises(resnet.DisconnectedNetwork):
        resnet.resistance_exact(split, 0, 3)
    with pytest.raises(resnet.BudgetExceeded):
        resnet.conjecture_scan(2, 20, vertex_budget=10)
    assert issubclass(resnet.SingularSystem, resnet.ResnetError)


def test_spectra_are_numpy_arrays():
    s = resnet.hypercube_spectrum(3)
    assert isinstance(s.values, np.ndarray)
    assert sorted(np.round(s.values, 12)) == [0, 2, 2, 2, 4, 4, 4, 6]
    assert np.allclose(s.vectors.T @ s.vectors, np.eye(8), atol=1e-12)
    assert s.resistance(0, 7) == pytest.approx(5 / 6, abs=1e-12)


def test_closed_forms():
    assert resnet.hypercube_diameter(3) == Fraction(5, 6)
    assert resnet.kmn_resistance(2, 3, "m", "n") == Fraction(2, 3)
    assert resnet.ladder_gap(2) == pytest.approx(0.25, abs=1e-12)
    assert resnet.block_tower_decomposition(4)["residual"] == 0


def test_diameter_and_scan():
    d = resnet.resistance_diameter(resnet.block_tower(5))
    assert len(d["pairs"]) == 4
    report = resnet.conjecture_scan(2, 20)
    assert len(report["rows"]) == 19
    assert report["rows"][0]["R_n_exact"] == Fraction(5, 6)
    assert report["rows"][-1]["abs_dev_from_limit"] < 1e-8
    csv = resnet.conjecture_scan(2, 3, format="csv")
    assert csv.splitlines()[0] == "n,R_n,diff,abs_dev_from_limit"
    assert json.loads(resnet.conjecture_scan(3, 3, format="json"))["limit"] == "1/8"


def test_reductions():
    out = resnet.reduce(resnet.cycle(4), ["b1", "b3"], certify=True)
    assert out["fully_reduced"]
    assert out["final"].edges == [(0, 1, Fraction(1), False)]
    chain = resnet.fan_chain_reduce(2, 2)
    assert chain["endpoint_resistance"] == Fraction(2, 3)
    assert chain["apex_resistance"] == Fraction(11, 30)
