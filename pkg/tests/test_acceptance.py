"""Acceptance criteria, one test each; every comparison is exact.

Run ``pytest tests/test_acceptance.py`` for the pass/fail summary (printed in
the terminal summary), or ``python -m tests.test_acceptance`` for the plain listing.
"""

import json
import random
from fractions import Fraction
from math import factorial

import pytest

from stirling_lab.bell import (
    bell_factorial_closed_form,
    bell_partitions,
    bell_series_table,
    factorial_args,
    lah_a,
)
from stirling_lab.cli import main
from stirling_lab.identities import coefficient_vector, verify_identity
from stirling_lab.strategies import (
    build_table,
    s_diagonal_extension,
    s_nested_harmonic,
    s_triangular,
)
from stirling_lab.table import SignedStirlingTable

RESULTS: dict[str, tuple[bool, str]] = {}


def _report(name, ok, detail=""):
    RESULTS[name] = (ok, detail)
    return ok


@pytest.fixture(scope="module")
def big():
    return s_triangular(90)


def test_c01_oracle_self_consistency(big):
    bad = []
    for n in range(1, 61):
        if big(n, 1) != (-1) ** (n - 1) * factorial(n - 1) or big(n, n) != 1:
            bad.append(n)
        if any((-1) ** (n - k) * big(n, k) <= 0 for k in range(1, n + 1)):
            bad.append(n)
        if n >= 2 and sum(big.row(n)) != 0:
            bad.append(n)
    assert _report("1 oracle self-consistency (n<=60)", not bad, f"bad rows {bad[:5]}")


def test_c02_strategy_equivalence(big):
    N = 60
    ref = s_triangular(N)
    mismatches = {}
    for strategy in ("genfun", "harmonic_recurrence", "row_horizontal", "row_from_above", "column_vertical", "faa_route"):
        built = build_table(strategy, N, big)
        cells = [(n, k) for n in range(1, N + 1) for k in range(1, n + 1) if built(n, k) != ref(n, k)]
        if cells:
            mismatches[strategy] = cells[:3]
    cells = [(n, k) for n in range(2, N + 1) for k in range(2, n + 1) if s_nested_harmonic(n, k) != ref(n, k)]
    if cells:
        mismatches["nested_harmonic"] = cells[:3]
    cells, count = [], 0
    for d in range(1, N):
        if N - d <= d:
            break
        for k, v in enumerate(s_diagonal_extension(d, N - d, ref), start=d + 1):
            count += 1
            if v != ref(k + d, k):
                cells.append((k + d, k))
    if cells or count != sum(1 for n in range(1, N + 1) for k in range(1, n) if 2 * k > n):
        mismatches["diagonal_extension"] = cells[:3] or ["coverage"]
    assert _report("2 strategy equivalence (n<=60)", not mismatches, str(mismatches))


def test_c03_fifth_recurrence_adjudication(big):
    corrected = verify_identity("VF7_corrected", 40, big)
    printed = verify_identity("VF7_printed", 40, big)
    ok = (
        corrected.ok
        and corrected.checked == 41 * 42 // 2
        and bool(printed.failures)
        and all(f.n % 2 == 0 for f in printed.failures)
    )
    detail = f"corrected {corrected.passed}/{corrected.checked}, printed failures {len(printed.failures)}, odd-n {[f.n for f in printed.failures if f.n % 2][:3]}"
    assert _report("3 fifth-recurrence adjudication (n+1<=41)", ok, detail)


def test_c04_theorem_identities(big):
    failing = {}
    for id in ("D10", "D10K", "D11", "U20", "CASE18", "CASE19"):
        res = verify_identity(id, 40, big)
        if res.failures:
            failing[id] = [(f.n, f.k) for f in res.failures[:4]] + [f"... {len(res.failures)} cells"]
    assert _report("4 diagonal identities (1<=k<=n<=40)", not failing, str(failing))


def test_c05_vacuity():
    bad = []
    for n in range(1, 31):
        for k in range(1, n + 1):
            for variant in ("D10", "D10K"):
                vec = coefficient_vector(n, k, variant)
                if vec.get(0) != 1 or any(c for l, c in vec.items() if l):
                    bad.append((variant, n, k))
            # the constructive region 2k > n of the diagonal extension (n - k >= 1)
            if 2 * k > n > k:
                vec = coefficient_vector(n, k, "CASE18")
                if not any(c for l, c in vec.items() if l >= 1):
                    bad.append(("CASE18", n, k))
    assert _report("5 vacuity analysis (n<=30)", not bad, str(bad[:6]))


def test_c06_bell_closed_forms(big):
    results = [verify_identity("BELL8", 20, big), verify_identity("BELL9", 20, big), verify_identity("BELL21", 25, big)]
    lah_bad = [
        (n, k)
        for n in range(1, 26)
        for k in range(1, n + 1)
        if not (bell_partitions(n, k, factorial_args(n - k + 1)) == lah_a(n, n - k) == bell_factorial_closed_form(n, k))
    ]
    ok = all(r.ok for r in results) and not lah_bad
    assert _report("6 Bell closed forms", ok, f"{[(r.id, len(r.failures)) for r in results]} lah {lah_bad[:3]}")


def test_c07_bell_structural(big):
    scale = verify_identity("SCALE14", 15, big)
    shift = verify_identity("SHIFT15", 12, big)
    ok = scale.ok and shift.ok and scale.checked == 20 * 120 and shift.checked == 78
    assert _report("7 Bell scaling/shift", ok, f"scale {scale.passed}/{scale.checked}, shift {shift.passed}/{shift.checked}")


def test_c08_exp_reciprocal(big):
    res = verify_identity("EXPREC", 15, big)
    ok = res.ok and res.checked == 2 * sum(range(1, 16))
    assert _report("8 exp(+-1/t) coefficients (i<=15)", ok, f"{res.passed}/{res.checked}")


def test_c09_log_convexity(big):
    res = verify_identity("LOGCVX", 30, big)
    ok = res.ok and res.checked == 8 * 29
    assert _report("9 log-convexity (k<=8, n<=29)", ok, f"{res.passed}/{res.checked}")


def test_c10_bell_route_equivalence():
    rng = random.Random(10)
    bad = []
    for trial in range(100):
        xs = [Fraction(rng.randint(-50, 50), rng.randint(1, 30)) for _ in range(20)]
        series = bell_series_table(20, xs)
        for n in range(21):
            for k in range(n + 1):
                if bell_partitions(n, k, xs[: max(n - k + 1, 0)]) != series[n, k]:
                    bad.append((trial, n, k))
    assert _report("10 Bell partition/series routes (100 vectors, n<=20)", not bad, str(bad[:3]))


def _cli(capsys, *argv):
    code = main(list(argv))
    out, _ = capsys.readouterr()
    return code, out


def test_c11_cli_contract(capsys, tmp_path, monkeypatch):
    monkeypatch.delenv("STIRLING_LAB_CACHE", raising=False)
    checks = {}
    code, out = _cli(capsys, "table", "--max-n", "4", "--strategy", "triangular", "--format", "csv")
    checks["table 4"] = code == 0 and "4,2,11" in out.splitlines()
    code, out = _cli(capsys, "table", "--max-n", "1")
    checks["table 1"] = code == 0 and out.splitlines() == ["0,0,1", "1,0,0", "1,1,1"]
    _, tri = _cli(capsys, "table", "--max-n", "40", "--strategy", "triangular")
    code, gen = _cli(capsys, "table", "--max-n", "40", "--strategy", "genfun")
    checks["table genfun"] = code == 0 and tri == gen
    for argv, expected in ((["3", "2", "1", "1"], "3"), (["4", "2", "1", "2", "6"], "36"), (["2", "1", "1/2", "2/3"], "2/3")):
        code, out = _cli(capsys, "bell", *argv)
        checks[f"bell {' '.join(argv)}"] = code == 0 and out.strip() == expected
    code, out = _cli(capsys, "verify", "--max-n", "40")
    report = json.loads(out) if out else {"results": []}
    vf7 = [r for r in report["results"] if r["id"] == "VF7_printed"]
    checks["verify 40"] = code == 0 and bool(vf7) and bool(vf7[0]["failures"]) and all(
        f["n"] % 2 == 0 for f in vf7[0]["failures"]
    )
    code, _ = _cli(capsys, "verify", "--identities", "LOGCVX", "--max-n", "30")
    checks["verify LOGCVX"] = code == 0
    code, _ = _cli(capsys, "verify", "--max-n", "0")
    checks["verify 0"] = code == 2
    cache = tmp_path / "cache.json"
    code, cold = _cli(capsys, "table", "--max-n", "60", "--format", "json", "--cache", str(cache))
    code2, warm = _cli(capsys, "table", "--max-n", "60", "--format", "json", "--cache", str(cache))
    loaded = SignedStirlingTable.from_json_obj(json.loads(cache.read_text())["table"])
    checks["cache 60"] = code == code2 == 0 and cold == warm and loaded == s_triangular(60)
    failed = [k for k, v in checks.items() if not v]
    assert _report("11 CLI contract", not failed, str(failed))


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
