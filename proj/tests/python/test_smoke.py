import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import diskcert

DATA = Path(os.environ.get("DISKCERT_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))
FIXTURE = DATA / "reference_certificate.json"


def test_rational_approximation():
    assert diskcert.best_rational_approx(0.30103) == Fraction(3, 10)
    assert diskcert.best_rational_approx(3.141592653589793) == Fraction(22, 7)


def test_form_value_matches_reference_entry():
    coeffs = [1, Fraction(1, 2), Fraction(3, 10), Fraction(1, 12), Fraction(1, 44), 0, 0, 0, 0]
    assert diskcert.form_value(coeffs, 1, 3) == Fraction(-6193251389, 8944320000000)


def test_fixture_checks():
    report = diskcert.check(str(FIXTURE))
    assert report["overall"]
    assert len(report["intervals"]) == 56


def test_tampered_fixture_fails():
    cert = json.loads(FIXTURE.read_text())
    del cert["entries"][1]
    report = diskcert.check(cert)
    assert not report["overall"]
    assert "gap between 7 and 9" in report["coverage_detail"]


def test_malformed_certificate_raises():
    with pytest.raises(diskcert.CertificateError):
        diskcert.check('{"theta_star": "1/2"')


def test_certify_round_trip():
    row = diskcert.certify_m(1)
    assert row["b_left"] <= 4 and row["b_right"] >= 6
    assert row["coeffs"][0] == 1
    cert = diskcert.certify(1, 56)
    assert cert["complete"]
    assert diskcert.check(cert)["overall"]


def test_certify_failure_is_reported():
    with pytest.raises(diskcert.CertificationError):
        diskcert.certify_m(1, terms=0)


def test_large_b():
    report = diskcert.large_b()
    assert report["passed"]
    assert report["a_low"] == Fraction(253, 1000)
    assert report["b0_bound"] < 130
    assert not diskcert.large_b(100)["passed"]


def test_degennes_and_branches():
    result = diskcert.solve_degennes()
    assert abs(result["theta0"] - 0.590106125) <= 1e-5
    lam, m_star = diskcert.lambda1_upper(100.0)
    assert lam < 59.01 and abs(m_star - 43) <= 2


def test_cli_exit_codes():
    code, out, _ = diskcert.run_cli(["theorem", "--cert", str(FIXTURE)])
    assert code == 0 and "theorem verified" in out
    assert diskcert.run_cli(["check"])[0] == 2
