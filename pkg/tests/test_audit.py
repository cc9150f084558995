import pytest

from bp2cert import CapacityError, audit, safe_acceptance_check, star_poly_cross_check
from bp2cert.audit import CLAIM_IDS, format_counterexamples, format_report


@pytest.fixture(scope="module")
def small_report():
    return audit(3, 4, parallelism=1)


def test_audit_counts_order_three(small_report):
    r = audit(3, 3, parallelism=1)
    assert r.claims["L1"].checked == 8
    assert r.claims["L1"].agreements == 8
    assert r.claims["L2/L3"].checked == 8
    # the edgeless graph is the one and only 3-vertex graph needing >2 parts,
    # and its empty sequence is accepted
    assert r.claims["T-verify-complete"].checked == 1
    assert r.claims["T-verify-complete"].agreements == 1


def test_audit_claim_bookkeeping(small_report):
    assert set(small_report.claims) == set(CLAIM_IDS)
    for claim, result in small_report.claims.items():
        assert result.checked == result.agreements + len(result.counterexamples)
        assert list(result.counterexamples) == sorted(result.counterexamples)
    assert small_report.claims["L1"].checked == 72
    assert small_report.wall_time > 0


def test_audit_expected_claims_hold_small(small_report):
    for claim in ("L1", "L2/L3", "L4/C5", "L-del", "T-verify-sound"):
        assert small_report.claims[claim].counterexamples == ()


def test_audit_parallel_equals_serial(small_report):
    parallel = audit(3, 4, parallelism=2)
    assert parallel.claims == small_report.claims


def test_audit_capacity_and_range_errors():
    with pytest.raises(CapacityError):
        audit(3, 9)
    with pytest.raises(CapacityError):
        audit(0, 3)
    with pytest.raises(ValueError):
        audit(4, 3)


def test_format_report_is_deterministic(small_report):
    text = format_report(small_report)
    assert text.splitlines()[0] == "audit orders 3..4"
    assert text == format_report(audit(3, 4, parallelism=2))
    for claim in CLAIM_IDS:
        assert claim in text
    cex = format_counterexamples(small_report)
    assert cex.count("#") == len(CLAIM_IDS)


def test_star_cross_check_small():
    res = star_poly_cross_check(2, 4, parallelism=1)
    assert res.graphs_checked == 2 + 8 + 64
    assert res.invalid_witnesses == ()
    assert res.scope_missed == () and res.scope_spurious == ()
    assert star_poly_cross_check(2, 4, parallelism=2) == res
    with pytest.raises(CapacityError):
        star_poly_cross_check(1, 4)


def test_safe_acceptance_check_small():
    res = safe_acceptance_check(3, 4, parallelism=1)
    assert res.rejections == ()
    # order 3: the edgeless graph; order 4: the edgeless graph plus the six
    # labelings of a single edge with two isolated vertices
    assert res.graphs_checked == 8
    assert res.safe_sequences_checked == 17
    with pytest.raises(CapacityError):
        safe_acceptance_check(3, 7)
