"""Acceptance suite: each headline criterion as a test, one pass/fail line
printed per criterion (run with -s to see them live)."""

import pytest

from fsg.verify import ACCEPTANCE, acceptance_checks


@pytest.fixture(scope="module")
def results():
    out = {r["name"]: r for r in acceptance_checks()}
    for r in out.values():
        status = "pass" if r["passed"] else "FAIL"
        print(f"[{status}] {r['name']} ({r['seconds']:.2f}s) {r['detail']}")
    return out


@pytest.mark.parametrize("name", [name for name, _ in ACCEPTANCE])
def test_acceptance_criterion(results, name):
    r = results[name]
    assert r["passed"], f"{name}: {r['detail']}"


TIME_BUDGETS = {
    "order-formula table (168 ... 6065280 ... 12096)": 1.0,
    "simple-group census to 10000": 5.0,
    "mathieu chain |M24|, |M23|, |M22|, 5-transitivity": 10.0,
    "golay weights and Steiner S(5,8,24)": 30.0,
    "leech kissing number 196560 = theta q^2": 5.0,
    "moonshine j, j^(1/3) and dimension identities": 1.0,
    "small-group catalog below order 16": 5.0,
    "S3/S4 character tables, exact orthogonality": 2.0,
    "order 20160: Alt_8 vs PSL_3(4) separated": 60.0,
}


@pytest.mark.parametrize("name", sorted(TIME_BUDGETS))
def test_acceptance_runtime_budget(results, name):
    assert results[name]["seconds"] < TIME_BUDGETS[name], \
        f"{name} took {results[name]['seconds']:.2f}s"


def test_total_runtime_under_three_minutes(results):
    total = sum(r["seconds"] for r in results.values())
    print(f"acceptance suite total: {total:.1f}s")
    assert total < 180
