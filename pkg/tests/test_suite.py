import pytest

from ternops.errors import UnknownFilter
from ternops.suite import CHECKS, format_json, format_text, run_check, run_suite, select_checks

SLOW = {"sweep-iso-distributive", "sweep-iso-monoid", "sweep-ag-star-permutations", "sweep-ag-natural",
        "sweep-iso-semigroup", "inverse-roundtrips", "sweep-lateral-commutativity"}


def test_ids_unique_and_sorted():
    ids = [c.id for c in CHECKS]
    assert ids == sorted(set(ids))
    for required in ("prop2", "prop39", "thm20-roundtrip", "ex3-not-standard"):
        assert required in ids


@pytest.mark.parametrize("check", CHECKS, ids=[c.id for c in CHECKS])
def test_check_passes(check, request):
    if check.id in SLOW:
        request.node.add_marker(pytest.mark.slow)
    outcome = run_check(check)
    assert outcome.passed, outcome.details


def test_unknown_filter():
    with pytest.raises(UnknownFilter):
        select_checks("zzz")


def test_reports_are_deterministic():
    a = run_suite("ex")
    b = run_suite("ex")
    assert format_json(a) == format_json(b)
    assert format_text(a).splitlines()[-1] == f"{len(a)}/{len(a)} checks passed"
