"""
The seeded property suite: every verdict on 200 random instances with n in [4, 25],
at every k in [1, n-1]
"""
from ksetlab.arrangement import build_arrangement
from ksetlab.ksets import Side, count_at_most_k
from ksetlab.verifier import verify_instance


def test_every_verdict_holds(random_instances):
    failures = []
    reports = 0
    lemma_applicable = 0
    for index, inst in enumerate(random_instances):
        arr = build_arrangement(inst)
        for k in range(1, inst.n):
            report = verify_instance(inst, k, arr)
            reports += 1
            lemma_applicable += report.crossing_lemma_applicable
            if not report.all_hold:
                failures.append((index, inst.n, k, report.failed()))
            assert report.bound_ok
            assert report.below_level <= report.nk
    print(f"{reports} reports, crossing lemma applicable in {lemma_applicable}")
    assert failures == []


def test_population_shape(random_instances):
    sizes = [inst.n for inst in random_instances]
    assert len(sizes) == 200
    assert min(sizes) >= 4 and max(sizes) <= 25


def test_at_most_k_sets_within_nk(random_instances):
    for inst in random_instances[:40]:
        for k in range(1, inst.n):
            assert count_at_most_k(inst, k, Side.ABOVE) <= inst.n * k
