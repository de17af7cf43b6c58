"""Exact certificates for lambda_1(b) < Theta_0 b on the unit disk.

Rationals cross the boundary as "p/q" strings; the helpers below convert them
to :class:`fractions.Fraction`.
"""

import json
from fractions import Fraction

from . import _diskcert
from ._diskcert import (
    CertificateError,
    CertificationError,
    ParseError,
    branch_eigenvalue,
    lambda1_upper,
    run_cli,
    solve_degennes,
)

__all__ = [
    "CertificateError",
    "CertificationError",
    "ParseError",
    "best_rational_approx",
    "branch_eigenvalue",
    "certify",
    "certify_m",
    "check",
    "form_value",
    "lambda1_upper",
    "large_b",
    "run_cli",
    "solve_degennes",
]


def _fraction_text(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    return str(x)


def best_rational_approx(x, eps="1/100"):
    return Fraction(_diskcert.best_rational_approx(float(x), _fraction_text(eps)))


def form_value(coeffs, m, b, theta="5901/10000"):
    """h[u] - theta b ||u||^2 for u = r^m sum_j c_j (1 - r^2)^j, exactly."""
    text = [_fraction_text(c) for c in coeffs]
    return Fraction(_diskcert.form_value(text, m, _fraction_text(b), _fraction_text(theta)))


def certify_m(m, terms=8, theta_star="5901/10000"):
    row = _diskcert.certify_m(m, terms, _fraction_text(theta_star))
    row["coeffs"] = [Fraction(c) for c in row["coeffs"]]
    for key in ("left_value", "right_value"):
        if row[key] is not None:
            row[key] = Fraction(row[key])
    return row


def certify(m_lo=1, m_hi=56, terms=8, theta_star="5901/10000"):
    """Certificate for m_lo..m_hi as a JSON-compatible dict."""
    return json.loads(_diskcert.certify_range_json(m_lo, m_hi, terms, _fraction_text(theta_star)))


def check(certificate):
    """Exact check of a certificate given as a dict, JSON text or file path."""
    if isinstance(certificate, dict):
        text = json.dumps(certificate)
    elif isinstance(certificate, str) and certificate.lstrip().startswith("{"):
        text = certificate
    else:
        with open(certificate, encoding="utf-8") as fh:
            text = fh.read()
    return _diskcert.check_json(text)


def large_b(threshold=130, theta0=None, xi0=None, c1=None):
    """Large-field bound; enclosures default to the built-in rational ones."""
    overrides = [theta0, xi0, c1]
    if all(e is None for e in overrides):
        endpoints = []
    elif any(e is None for e in overrides):
        raise ValueError("give all three enclosures or none")
    else:
        endpoints = [_fraction_text(x) for pair in overrides for x in pair]
    report = _diskcert.large_b(threshold, endpoints)
    return {k: (v if k == "passed" else Fraction(v)) for k, v in report.items()}
