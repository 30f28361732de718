# Copyright 2026 The liouville authors
# SPDX-License-Identifier: Apache-2.0
import math

import pytest
from scipy import special

import liouville


def test_ei():
    r = liouville.integrate("exp(x)/x")
    assert r["status"] == "integrated"
    assert r["text"] == "Ei(x)"
    assert r["ei"] == [{"c": "1", "arg": "x"}]


def test_gamma_rational_with_report():
    r = liouville.integrate("exp(-x^2)", verify=True)
    assert r["gamma_rational"][0]["k"] == 2
    assert r["gamma_rational"][0]["m"] == -1
    assert r["diagnostics"][0]["report"]["ok"]


def test_gamma_irrational():
    r = liouville.integrate("exp((alpha-1)*log(x)-x)", constants=["alpha"])
    assert r["text"] == "-Gamma(alpha, x)"


def test_statuses():
    assert liouville.integrate("exp(x)/(x^2-2)")["status"] == "no_gamma_form_found"
    r = liouville.integrate("exp((1/2)*log(2*exp(-x)/x))")
    assert r["status"] == "unsupported"
    assert r["reason"] == "algebraic_extension"


def test_verify_report():
    rep = liouville.verify("2*exp(2*x)/(2*x+3)")
    assert rep["symbolic_ok"] and rep["numeric_ok"]
    assert len(rep["numeric_samples"]) >= 5
    assert rep["max_rel_error"] < 1e-9


def test_answer_matches_scipy():
    # exp(-3)*Ei(2x+3), checked against scipy's expi at a few points.
    r = liouville.integrate("2*exp(2*x)/(2*x+3)")
    assert r["text"] == "exp(-3)*Ei(2*x+3)"
    for x in (0.5, 1.0, 2.0):
        h = 1e-5
        f = lambda t: math.exp(-3) * special.expi(2 * t + 3)
        assert abs((f(x + h) - f(x - h)) / (2 * h) - 2 * math.exp(2 * x) / (2 * x + 3)) < 1e-5


def test_structure():
    r = liouville.structure("exp(2*x)", tower=["exp(x)"])
    assert r["status"] == "dependent"
    assert r["witness"] == [{"item": "exp(x)", "r": "2"}]
    assert liouville.structure("exp(x^2)")["status"] == "transcendental"


def test_parse_and_lower():
    assert liouville.parse("x + x") == liouville.parse("x+x")
    low = liouville.lower("exp(2*x)*exp(x)")
    assert low["tower"] == ["exp(x)"]
    with pytest.raises(ValueError):
        liouville.parse("exp(x")
    with pytest.raises(ValueError):
        liouville.structure("x+1")
