"""Per-professor indicator arithmetic against hand-computed values.

The f1 expectations below are worked out on paper from the fixture in
conftest.py; each professor isolates a different code path (uncited paper,
IF-less journal, dual-SC journal, position vs uniform credit).
"""
from fractions import Fraction

import pytest

from sciprod.baselines import BaselineTable, build_baselines
from sciprod.cohort import apply_eligibility_filters
from sciprod.config import CreditConfig
from sciprod.indicators import (
    CostProfile,
    compute_indicators,
    compute_professor,
    cost_profile,
    staffed_years,
)

from conftest import make_bundle, make_professor, make_pub

WINDOW = (2011, 2015)


def exact(number, denominator=None):
    return float(Fraction(number, denominator) if denominator else Fraction(number))


@pytest.fixture
def f1_vectors(f1, tiny_cohort_config):
    cohort = apply_eligibility_filters(f1, tiny_cohort_config)
    return compute_indicators(f1, cohort, build_baselines(f1),
                              CreditConfig(), WINDOW)


def test_staffed_years_without_gaps(f1):
    prof = f1.professors_by_id["P1"]
    years = staffed_years(prof, WINDOW)
    assert years == [(y, "full") for y in range(2011, 2016)]


def test_staffed_years_pads_from_nearest_rank():
    prof = make_professor("PX", ranks={2012: "assistant", 2014: "full"}, years=4)
    years = staffed_years(prof, WINDOW)
    # 2011 imputes from 2012; 2013 is equidistant and the earlier year wins
    assert years == [
        (2011, "assistant"),
        (2012, "assistant"),
        (2013, "assistant"),
        (2014, "full"),
    ]


def test_cost_profile_averages_salary(f1):
    prof = make_professor("PX", ranks={2012: "assistant", 2014: "full"}, years=4)
    profile = cost_profile(prof, "Clinical medicine", f1, WINDOW)
    assert profile.yearly_salary == pytest.approx((3 * 40000 + 80000) / 4)
    assert profile.yearly_capital == 10000.0
    assert profile.research_cost == pytest.approx(25000 + 10000)


def test_research_cost_halves_salary():
    assert CostProfile(80000.0, 10000.0).research_cost == 50000.0


def test_f1_p1(f1_vectors):
    # t=5, cost=50000; W1 f=1/2 c*=per-SC 10/15, W2 f=1 c*=0, both IF*=0.8
    v = f1_vectors["P1"]
    assert v.t == 5 and v.cost == 50000.0 and v.n_pubs == 2
    assert v.o == pytest.approx(exact(1, 125000), rel=1e-12)
    assert v.fo == pytest.approx(exact(3, 500000), rel=1e-12)
    assert v.ac == pytest.approx(exact(1, 3), rel=1e-12)
    assert v.aif == pytest.approx(0.8, rel=1e-12)
    assert v.fss == pytest.approx(exact(1, 750000), rel=1e-12)
    assert v.n_cit_defined == 2 and v.n_if_defined == 2


def test_f1_p2(f1_vectors):
    # uniform credit; W6 has no IF so AIF rests on W3 alone
    v = f1_vectors["P2"]
    assert v.t == 3 and v.cost == 35000.0
    assert v.o == pytest.approx(exact(1, 52500), rel=1e-12)
    assert v.fo == pytest.approx(exact(1, 140000), rel=1e-12)
    assert v.ac == pytest.approx(exact(27, 58), rel=1e-12)
    assert v.aif == pytest.approx(0.5, rel=1e-12)
    assert v.fss == pytest.approx(exact(13, 4060000), rel=1e-12)
    assert v.n_if_defined == 1


def test_f1_p3(f1_vectors):
    # dual-SC W4: baseline mean(15, 29/3) -> c*=60/37, IF*=4/3; W5 c*=1, IF*=1
    v = f1_vectors["P3"]
    assert v.t == 5 and v.cost == 57000.0
    assert v.o == pytest.approx(exact(1, 142500), rel=1e-12)
    assert v.fo == pytest.approx(exact(1, 570000), rel=1e-12)
    assert v.ac == pytest.approx(exact(97, 74), rel=1e-12)
    assert v.aif == pytest.approx(exact(7, 6), rel=1e-12)
    assert v.fss == pytest.approx(exact(127, 52725000), rel=1e-12)


def test_only_eligible_professors_are_computed(f1_vectors):
    assert sorted(f1_vectors) == ["P1", "P2", "P3"]


def test_value_accessor_and_flags(f1_vectors):
    v = f1_vectors["P2"]
    assert v.value("O") == v.o
    assert v.value("FSS") == v.fss
    assert v.undefined_flags == frozenset()


def test_missing_baselines_degrade_gracefully(f1, tiny_cohort_config):
    # cited papers with no reference cell drop out of AC and add 0 to FSS;
    # uncited papers still standardize to 0.0
    cohort = apply_eligibility_filters(f1, tiny_cohort_config)
    prof = f1.professors_by_id["P1"]
    v = compute_professor(prof, "CARD", "Clinical medicine", f1,
                          BaselineTable(), CreditConfig(), WINDOW,
                          {"W1": ("CARD",), "W2": ("CARD",)},
                          {"W1": 2.0, "W2": 2.0})
    assert v.fss == 0.0
    assert v.ac == 0.0  # W2 only
    assert v.n_cit_defined == 1
    assert v.aif is None
    assert v.undefined_flags == frozenset({"AIF"})
    assert v.o == pytest.approx(exact(1, 125000), rel=1e-12)


def test_scale_invariance_in_cost_and_time(f1, tiny_cohort_config):
    # doubling every salary and capital halves O, FO and FSS exactly
    doubled = make_bundle(
        f1.professors,
        f1.publications,
        [(a.pub_id, a.professor_id, a.position) for a in f1.authorships],
        [(j.journal_id, j.year, j.impact_factor, j.subject_categories)
         for j in f1.journals],
        salary={k: 2 * v for k, v in f1.cost_table.salary.items()},
        capital={k: 2 * v for k, v in f1.cost_table.capital.items()},
    )
    cohort = apply_eligibility_filters(f1, tiny_cohort_config)
    base = compute_indicators(f1, cohort, build_baselines(f1), CreditConfig(), WINDOW)
    scaled = compute_indicators(doubled, cohort, build_baselines(doubled),
                                CreditConfig(), WINDOW)
    for pid in base:
        for name in ("O", "FO", "FSS"):
            assert scaled[pid].value(name) == pytest.approx(
                base[pid].value(name) / 2, rel=1e-12)
        for name in ("AC", "AIF"):  # cost plays no role
            assert scaled[pid].value(name) == pytest.approx(
                base[pid].value(name), rel=1e-12)
