"""Rebuild data/reference_certificate.json from the interval, coefficient and
endpoint-value LaTeX tables of a source document."""

import json
import re
import sys
from pathlib import Path

FRAC = re.compile(r"(-?)\s*\\frac\s*\{(\d+)\}\s*\{(\d+)\}|(-?\d+)")


def rationals(text):
    out = []
    for sign, num, den, whole in FRAC.findall(text):
        out.append(f"{sign}{num}/{den}" if num else whole)
    return out


def tables(lines):
    blocks, current = [], None
    for line in lines:
        if "\\midrule" in line:
            current = []
        elif "\\bottomrule" in line and current is not None:
            blocks.append(current)
            current = None
        elif current is not None:
            current.append(line)
    return blocks


def main(source, out):
    intervals_rows, coeff_rows, value_rows = tables(Path(source).read_text().splitlines())[:3]

    intervals = {}
    for row in intervals_rows:
        for m, lo, hi in re.findall(r"\\\(\s*(\d+)\\\)\s*&\s*\\\(\[\s*(\d+),\s*(\d+)\]\\\)", row):
            intervals[int(m)] = (int(lo), int(hi))

    coeffs = {}
    for row in coeff_rows:
        head, _, body = row.partition("&")
        if head.strip().isdigit():
            coeffs[int(head)] = rationals(body.replace("\\\\", ""))

    values = {}
    for row in value_rows:
        head, _, body = row.partition("&")
        if head.strip().isdigit():
            left, right = body.replace("\\\\", "").split("&")
            values[int(head)] = (rationals(left)[0], rationals(right)[0])

    entries = []
    for m in sorted(intervals):
        lo, hi = intervals[m]
        entries.append({"m": m, "b_left": lo, "b_right": hi, "coeffs": coeffs[m],
                        "left_value": values[m][0], "right_value": values[m][1]})
    cert = {"theta_star": "5901/10000", "basis_dim": 8, "coverage_target": 131,
            "large_b_threshold": 130, "complete": True, "entries": entries}
    Path(out).write_text(json.dumps(cert, indent=2) + "\n")


if __name__ == "__main__":
    main(*sys.argv[1:3])
