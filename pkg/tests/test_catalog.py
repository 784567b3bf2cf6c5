import pytest

from polarcographs import catalog, cotrees, expressions, graphs
from polarcographs.catalog import (
    ClaimParameterError,
    UnknownClaimError,
    check_conjectures,
    check_lemma5,
    check_lemma7,
    instantiate,
    verify_claim,
    verify_list,
    verify_recursion,
    write_claim_files,
)
from polarcographs.polarity import INF


def _codes(exprs):
    return {
        cotrees.canonical_code(cotrees.cotree_of(expressions.evaluate(e)))
        for e in exprs
    }


def test_instantiate_counts():
    assert len(instantiate("fig1")) == 4
    assert len(instantiate("thm2")) == 8
    assert len(instantiate("thm6", 2)) == 4
    assert len(instantiate("thm15", 2)) == 3
    assert len(instantiate("thm15", 3)) == 10
    assert len(instantiate("thm18", 3)) == 2
    assert len(instantiate("cor-type-k+1-k", 2)) == 7
    assert len(instantiate("cor-type-k-k-1", 3)) == 8
    assert len(instantiate("thm21")) == 23
    assert len(instantiate("thm22")) == 49


def test_instantiated_lists_are_isomorph_free():
    for claim, k in (("thm21", 2), ("thm22", 3), ("thm15", 3), ("fig1", None)):
        exprs = instantiate(claim, k)
        assert len(_codes(exprs)) == len(exprs)


def test_thm2_is_complement_closed():
    codes = _codes(instantiate("thm2"))
    for e in instantiate("thm2"):
        comp = graphs.complement(expressions.evaluate(e))
        assert cotrees.canonical_code(cotrees.cotree_of(comp)) in codes


def test_parameter_validation():
    with pytest.raises(ClaimParameterError):
        instantiate("thm15", 1)
    with pytest.raises(ClaimParameterError):
        instantiate("thm21", 3)
    with pytest.raises(UnknownClaimError):
        instantiate("nope", 2)


def test_verify_list_fig1(cache):
    report = verify_list("fig1", cache=cache)
    assert report.status == "PASS"
    assert report.expected == report.actual == 4


def test_verify_detects_tampering(cache):
    # drop one expression: the verifier must flag the mined record as extra
    exprs = instantiate("fig1")[:3]
    report = verify_list("fig1", cache=cache, expected_exprs=exprs)
    assert report.status == "FAIL"
    assert len(report.extra) == 1


def test_verify_recursion_thm17(cache):
    assert verify_recursion("thm17", 2, cache=cache).status == "PASS"


def test_conjecture_reports(cache):
    reports = check_conjectures(2, 10, cache=cache)
    assert {r.claim for r in reports} == {"conj1", "conj2"}
    assert all(r.status == "PASS" for r in reports)


def test_lemma_suites(cache):
    records = cache.mine(INF, 2, 9)
    assert check_lemma5(records, 2).status == "PASS"
    assert check_lemma7(records, 2).status == "PASS"


def test_verdict_json_shape(cache):
    report = verify_list("fig1", cache=cache)
    import json

    payload = json.loads(report.to_json())
    assert payload["status"] == "PASS"
    assert payload["claim"] == "fig1"
    assert "missing" in payload and "extra" in payload


def test_claim_files_roundtrip(tmp_path, cache):
    written = write_claim_files(tmp_path, 2)
    assert written
    report = verify_claim("thm21", 2, cache=cache, catalog_dir=str(tmp_path))
    assert report.status == "PASS"


def test_unknown_claim_raises(cache):
    with pytest.raises(UnknownClaimError):
        verify_claim("thm99", 2, cache=cache)


def test_info_claim():
    report = verify_claim("sixteen-note")
    assert report.status == "INFO" and report.passed
