"""Exit criteria.  Each test prints one PASS/FAIL line in the terminal summary."""

import time

from staropen.census import enumerate_topologies, naive_topologies
from staropen.cli import main
from staropen.harness import (
    default_jobs,
    replay,
    run_lemma_suite,
    search_counterexample,
    suite_exit_code,
)
from staropen.spacefile import dump_witness, parse_witness
from staropen.witness import FAIL, FOUND, PASS, WitnessReport


def _assert_clean(reports):
    bad = [(r.check_id, r.witness.describe()) for r in reports if r.status != PASS]
    assert not bad, bad


def test_criterion_01_census_counts_match_oracle():
    start = time.perf_counter()
    counts = [enumerate_topologies(n).count for n in range(1, 5)]
    elapsed = time.perf_counter() - start
    assert counts == [1, 4, 29, 355]
    assert counts == [len(naive_topologies(n)) for n in range(1, 5)]
    assert elapsed < 10


def test_criterion_02_lemma1_suite():
    start = time.perf_counter()
    reports = run_lemma_suite(4, ["L1-chain", "L1.2", "L1.3", "L1.4", "L1.5"])
    elapsed = time.perf_counter() - start
    _assert_clean(reports)
    # 2 + 4*4 + 29*8 + 355*16 space/subset pairs over the 389 spaces
    assert all(r.population == 5930 for r in reports)
    assert elapsed < 30


def test_criterion_03_semiregularization_suite():
    reports = run_lemma_suite(4, ["T32", "L5", "L7", "L8", "SS-SUB", "RO-MEET", "RC-COMPLEMENT"])
    _assert_clean(reports)


def test_criterion_04_semi_regularity():
    [r] = run_lemma_suite(4, ["L6"])
    assert r.status == PASS and r.population == 389


def test_criterion_05_subspace_suite():
    _assert_clean(run_lemma_suite(4, ["L9.1", "C10"]))
    first = run_lemma_suite(4, ["L9.2", "L9.3"])
    assert first == run_lemma_suite(4, ["L9.2", "L9.3"])
    for r in first:
        assert r.empirical and r.status in (PASS, FAIL)
        if r.status == FAIL:
            assert r.witness.space.n <= 4 and replay(r.check_id, r.witness) == FAIL
    flipped = [WitnessReport(r.check_id, FAIL, r.population, r.witness, empirical=True) for r in first]
    assert suite_exit_code(flipped) == 0


def test_criterion_06_product_suite():
    reports = run_lemma_suite(3, ["L12", "PROD-ID", "PROD-RO"])
    _assert_clean(reports)
    # every ordered pair of the 34 spaces on at most three points
    assert {r.check_id: r.population > 34 * 34 for r in reports} == {"L12": True, "PROD-ID": True, "PROD-RO": True}


def test_criterion_07_transfer_suite():
    _assert_clean(run_lemma_suite(4, ["L18", "L19", "L25"]))


def test_criterion_08_map_suite():
    start = time.perf_counter()
    reports = run_lemma_suite(
        3,
        ["S3-IFF", "S3-STAR-ALMOST", "S3-OPEN-ALMOST", "S3-PROJ", "L29"],
        jobs=default_jobs(),
    )
    elapsed = time.perf_counter() - start
    _assert_clean(reports)
    # The population contains all 29*29*27 maps between 3-point spaces.
    assert reports[0].population >= 29 * 29 * 27
    assert elapsed < 60


def _found_at(witness_id, n):
    r = search_counterexample(witness_id, 4)
    assert r.status == FOUND
    assert r.witness.carrier_size == n, f"{witness_id}: smallest carrier is {r.witness.carrier_size}"
    check, status, w = parse_witness(dump_witness(r.check_id, r.status, r.witness))
    assert replay(check, w) == FOUND


def test_criterion_09_open_not_star():
    _found_at("CE-open-not-star", 2)
    r = search_counterexample("CE-open-not-star", 4)
    assert r.witness.space.opens == (0, 0b01, 0b11) and r.witness.sets == (0b01,)


def test_criterion_09_star_not_regular():
    _found_at("CE-star-not-regular", 3)


def test_criterion_09_star_cont_not_cont():
    _found_at("CE-star-cont-not-cont", 2)


def test_criterion_09_cont_not_star_cont():
    _found_at("CE-cont-not-star-cont", 3)


def test_criterion_09_open_cont_image():
    _found_at("CE-open-cont-image", 3)


def test_criterion_09_closure_image():
    _found_at("CE-closure-image", 3)


def test_criterion_10_determinism(tmp_path, capsys):
    serial, parallel = tmp_path / "j1.txt", tmp_path / "j8.txt"
    assert main(["lemmas", "--max-points", "4", "--jobs", "1", "--report", str(serial)]) == 0
    assert main(["lemmas", "--max-points", "4", "--jobs", "8", "--report", str(parallel)]) == 0
    capsys.readouterr()
    assert serial.read_bytes() == parallel.read_bytes()
    assert serial.read_text().startswith("CHECK L1-chain pass 5930\n")
