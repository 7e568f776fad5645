"""Report assembly and deterministic rendering.

These builders are the single service layer behind both the HTTP endpoints
and the command line: same inputs, same dict, byte-identical JSON.  Floats
are printed with 17 significant digits so every value round-trips exactly.
"""

import math
import time

from . import __version__, cap, moments, mountain, qform
from .quadrature import DEFAULT_QUAD
from .suites import SUITE_NAMES, run_suite


def format_number(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if not math.isfinite(value):
        return "null"
    if value == 0.0:
        return "0"
    return format(value, ".17g")


def render_json(value, indent=0):
    """Deterministic JSON with 17-significant-digit floats (insertion order kept)."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        parts = [f'{inner}"{key}": {render_json(item, indent + 1)}'
                 for key, item in value.items()]
        return "{\n" + ",\n".join(parts) + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        parts = [f"{inner}{render_json(item, indent + 1)}" for item in value]
        return "[\n" + ",\n".join(parts) + "\n" + pad + "]"
    if value is None:
        return "null"
    if isinstance(value, str):
        return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(value, (bool, int, float)):
        return format_number(value)
    raise TypeError(f"cannot render {type(value)!r}")


def render_report(report):
    return render_json(report) + "\n"


def _matrix(rows):
    return [[float(x) for x in row] for row in rows]


def constants_report(n, c, quad=DEFAULT_QUAD):
    """A, B, both S_c routes, the remainder weight, and cap data when c < 0."""
    if n < 3:
        raise ValueError("n must be >= 3")
    t_c = -c / (n - 2) + 0.0  # normalize -0.0
    a_val = moments.compute_A(n, t_c, quad)
    b_val = moments.compute_B(n, t_c)
    closed, integral = moments.compute_Sc(n, c, quad)
    report = {
        "n": int(n),
        "c": float(c),
        "t_c": t_c,
        "t_c_extrapolated": t_c < 0.0,
        "A": a_val,
        "B": b_val,
        "S_c_closed": closed,
        "S_c_integral": integral,
        "lambda": mountain.lambda_const(n, c, a_val, b_val),
        "tool_version": __version__,
    }
    if c < 0.0:
        geometry = cap.cap_from_c(n, c)
        report["cap_angle"] = geometry.r
        report["cap_boundary_volume"] = geometry.b_cap
    return report


def constants_csv(report):
    skip = {"tool_version"}
    lines = ["quantity,value"]
    lines.extend(f"{key},{format_number(value)}"
                 for key, value in report.items() if key not in skip)
    return "\n".join(lines) + "\n"


def qmatrix_report(n, c, a=qform.KAPPA_A_DEFAULT):
    """Both matrix expression forms, the reduced matrix, kappa, and the sign."""
    if n < 7:
        raise ValueError("n must be >= 7")
    if c > 0.0:
        raise ValueError("the form is defined for c <= 0 (t_c >= 0)")
    t_c = -c / (n - 2) + 0.0  # normalize -0.0
    q = qform.build_q(n, t_c)
    vector = qform.TestVector(a=a, t_c=t_c)
    kappa = qform.kappa_components(n, t_c, a)
    value = float(kappa @ q.form2 @ kappa)
    via_matrix, via_closed = qform.quadratic_value(q, vector)
    return {
        "n": int(n),
        "c": float(c),
        "t_c": t_c,
        "a": float(a),
        "admissible_a": vector.admissible,
        "kappa": [float(x) for x in kappa],
        "kappa_q_kappa": value,
        "negative": value < 0.0,
        "reduced_value_matrix_route": via_matrix,
        "reduced_value_closed_form": via_closed,
        "congruence_scale": qform.congruence_scale(n),
        "q_form1": _matrix(q.form1),
        "q_form2": _matrix(q.form2),
        "q_bar": _matrix(q.q_bar),
        "tool_version": __version__,
    }


def qmatrix_csv(report):
    lines = ["quantity,value"]
    for key in ("n", "c", "t_c", "a", "admissible_a", "kappa_q_kappa", "negative",
                "reduced_value_matrix_route", "reduced_value_closed_form"):
        lines.append(f"{key},{format_number(report[key])}")
    for idx, value in enumerate(report["kappa"]):
        lines.append(f"kappa_{idx + 1},{format_number(value)}")
    for label in ("q_form1", "q_form2", "q_bar"):
        matrix = report[label]
        for i in range(4):
            for j in range(i, 4):
                lines.append(f"{label}_{i + 1}{j + 1},{format_number(matrix[i][j])}")
    return "\n".join(lines) + "\n"


def threshold_report(n_min, n_max, tol=1e-8):
    """c0(n) table for n_min..n_max."""
    if not 7 <= n_min <= n_max:
        raise ValueError("need 7 <= n_min <= n_max")
    rows = []
    for n in range(n_min, n_max + 1):
        c0 = cap.find_c0(n, tol=tol)
        row = {"n": int(n), "c0": c0}
        if not math.isfinite(c0):
            row["unbounded"] = True  # defensive sentinel; a violation always exists
        rows.append(row)
    return {
        "n_min": int(n_min),
        "n_max": int(n_max),
        "tol": float(tol),
        "rows": rows,
        "tool_version": __version__,
    }


def threshold_csv(report):
    lines = ["n,c0"]
    lines.extend(f"{row['n']},{format_number(row['c0'])}" for row in report["rows"])
    return "\n".join(lines) + "\n"


def verify_report(suite, seed=42, tol=None, deterministic=False, quad=DEFAULT_QUAD):
    """The machine-readable verification report for one suite (or all)."""
    if suite != "all" and suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}")
    cases = run_suite(suite, seed=seed, tol=tol, quad=quad)
    report = {
        "suite": suite,
        "seed": int(seed),
        "tool_version": __version__,
    }
    if not deterministic:
        report["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    report["cases"] = [
        {
            "name": case.name,
            "provenance": case.provenance,
            "expected": case.expected,
            "computed": case.computed,
            "tol": case.tol,
            "pass": case.passed,
        }
        for case in cases
    ]
    passed = sum(case.passed for case in cases)
    report["summary"] = {"pass": passed, "fail": len(cases) - passed}
    return report
