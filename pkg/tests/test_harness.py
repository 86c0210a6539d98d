import dataclasses

import pytest

from staropen import checks as checks_module
from staropen.checks import CHECKS, CHECKS_BY_ID
from staropen.harness import (
    UnknownCheckId,
    UnknownWitnessId,
    replay,
    run_lemma_suite,
    search_counterexample,
    suite_exit_code,
)
from staropen.maps import constant, is_continuous, is_open_map
from staropen.regular import is_star_open
from staropen.searches import SEARCHES
from staropen.space import discrete
from staropen.spacefile import dump_witness, parse_witness
from staropen.witness import FAIL, PASS, WitnessReport
from staropen.zoo import sierpinski


def test_lemma1_chain_small():
    [r] = run_lemma_suite(3, ["L1-chain"])
    # 1*2 + 4*4 + 29*8 space/subset instances
    assert (r.status, r.population) == (PASS, 250)


def test_theorem32_four_points():
    [r] = run_lemma_suite(4, ["T32"])
    assert (r.status, r.population) == (PASS, 389)


def test_lemma9_parts_have_verdicts():
    first = run_lemma_suite(3, ["L9.2", "L9.3"])
    second = run_lemma_suite(3, ["L9.2", "L9.3"])
    assert first == second
    assert all(r.empirical and r.status in (PASS, FAIL) for r in first)


def test_all_checks_pass_at_three_points():
    reports = run_lemma_suite(3)
    assert [r.check_id for r in reports] == [c.id for c in CHECKS]
    assert all(r.status == PASS for r in reports)
    assert suite_exit_code(reports) == 0


def test_broken_predicate_yields_replayable_witness(monkeypatch):
    # Claim every star-open set is regular open; the harness must refute it.
    def claim(w):
        s, (a,) = w.space, w.sets
        return not is_star_open(s, a) or checks_module.is_regular_open(s, a)

    broken = dataclasses.replace(CHECKS_BY_ID["L1-chain"], id="BROKEN", holds=claim)
    monkeypatch.setitem(CHECKS_BY_ID, "BROKEN", broken)
    [r] = run_lemma_suite(3, ["BROKEN"])
    assert r.status == FAIL and r.witness is not None
    assert r.witness.space.n == 3
    assert replay("BROKEN", r.witness) == FAIL
    assert suite_exit_code([r]) == 1


def test_empirical_failures_do_not_affect_exit():
    reports = [WitnessReport("L9.2", FAIL, 10, None, empirical=True), WitnessReport("T32", PASS, 10)]
    assert suite_exit_code(reports) == 0


def test_parallel_matches_serial():
    ids = ["L1.5", "C10", "S3-IFF", "L12"]
    assert run_lemma_suite(3, ids, jobs=1) == run_lemma_suite(3, ids, jobs=3)


def test_unknown_ids():
    with pytest.raises(UnknownCheckId):
        run_lemma_suite(2, ["nope"])
    with pytest.raises(UnknownWitnessId):
        search_counterexample("nope", 2)


@pytest.mark.parametrize("search", SEARCHES, ids=lambda s: s.id)
def test_search_minimality_and_replay(search):
    r = search_counterexample(search.id, 4)
    if r.witness is None:
        return
    k = r.witness.carrier_size
    if k > 1:
        assert search_counterexample(search.id, k - 1).witness is None
    check, status, w = parse_witness(dump_witness(r.check_id, r.status, r.witness))
    assert replay(check, w) == status == r.status


def test_open_continuous_image_already_at_two_points():
    # Constant map from one point onto the open point of the Sierpinski space:
    # open, continuous, and the image {0} of the star-open point is not star-open.
    s2 = sierpinski()
    f = constant(discrete(1), s2, 0)
    assert is_continuous(f) and is_open_map(f)
    assert not is_star_open(s2, 0b01)
    assert search_counterexample("CE-open-cont-image", 4).witness.carrier_size == 2


def test_locally_connected_converse_not_found():
    # Every minimal neighbourhood of a finite space is connected.
    r = search_counterexample("CE-locally-connected-converse", 4)
    assert r.status == "not-found" and r.population == 389
