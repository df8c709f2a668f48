"""Reference-value cells, fallback chain and standardization rules."""
from fractions import Fraction

import pytest

from sciprod.baselines import (
    BaselineTable,
    build_baselines,
    standardize_citations,
    standardize_impact_factor,
)

from conftest import make_bundle, make_professor, make_pub


def test_f1_citation_cells(f1):
    table = build_baselines(f1)
    assert table.citation_mean[(2013, "CARD")] == 15.0  # W1=10, W4=20
    assert table.citation_mean[(2013, "MATH")] == pytest.approx(29 / 3)
    assert table.citation_mean[(2014, "CARD")] == 8.0
    assert (2013, "CARD") in table.citation_support
    assert table.citation_support[(2013, "CARD")] == 2
    assert table.citation_support[(2013, "MATH")] == 3


def test_f1_if_cells(f1):
    table = build_baselines(f1)
    assert table.if_mean[(2013, "CARD")] == 2.5  # J1=2.0, J3=3.0
    assert table.if_mean[(2013, "MATH")] == 2.0  # J2=1.0, J3=3.0; J4 has none
    assert table.if_support[(2013, "MATH")] == 2


def test_uncited_publications_do_not_seed_cells(f1):
    # W2 (0 citations) must appear in neither the citation nor the IF cell
    table = build_baselines(f1)
    assert table.citation_support[(2013, "CARD")] == 2
    assert table.if_support[(2013, "CARD")] == 2


def test_discipline_and_year_cells(f1):
    table = build_baselines(f1)
    # W4 counts once per discipline and once at year level
    assert table.citation_mean_discipline[(2013, "Clinical medicine")] == 15.0
    assert table.citation_mean_discipline[(2013, "Mathematics")] == pytest.approx(29 / 3)
    assert table.citation_mean_year[2013] == pytest.approx(39 / 4)
    assert table.citation_mean_year[2014] == 8.0
    assert table.if_mean_year[2013] == 2.0


def test_fallback_chain_order():
    table = BaselineTable(
        citation_mean={(2013, "CARD"): 4.0},
        citation_mean_discipline={(2013, "Clinical medicine"): 6.0},
        citation_mean_year={2013: 9.0},
    )
    assert table.citation_baseline(2013, "CARD", "Clinical medicine") == 4.0
    # unknown SC in a known discipline -> discipline mean
    assert table.citation_baseline(2013, "ONCO", "Clinical medicine") == 6.0
    # unknown discipline -> year mean
    assert table.citation_baseline(2013, "ALG", "Mathematics") == 9.0
    # unknown year -> nothing
    assert table.citation_baseline(2012, "CARD", "Clinical medicine") is None


def test_standardize_uncited_is_exact_zero(f1):
    table = build_baselines(f1)
    value = standardize_citations(0, 2013, ("CARD",), f1, table)
    assert value == 0.0
    assert isinstance(value, float)


def test_standardize_single_sc(f1):
    table = build_baselines(f1)
    assert standardize_citations(10, 2013, ("CARD",), f1, table) == pytest.approx(10 / 15)


def test_standardize_multi_sc_averages_baselines(f1):
    # the baseline of a dual-SC publication is the mean of the cell values:
    # W4: 20 / mean(15, 29/3) = 60/37
    table = build_baselines(f1)
    value = standardize_citations(20, 2013, ("CARD", "MATH"), f1, table)
    assert value == pytest.approx(float(Fraction(60, 37)), rel=1e-12)


def test_standardize_no_baseline_anywhere(f1):
    table = BaselineTable()
    assert standardize_citations(5, 2013, ("CARD",), f1, table) is None


def test_zero_baseline_treated_as_undefined(f1):
    table = BaselineTable(citation_mean={(2013, "CARD"): 0.0})
    assert standardize_citations(5, 2013, ("CARD",), f1, table) is None


def test_standardize_if(f1):
    table = build_baselines(f1)
    assert standardize_impact_factor(2.0, 2013, ("CARD",), f1, table) == pytest.approx(0.8)
    # W4's journal carries both SCs: 3 / mean(2.5, 2.0) = 4/3
    assert standardize_impact_factor(3.0, 2013, ("CARD", "MATH"), f1, table) == pytest.approx(4 / 3)
    assert standardize_impact_factor(None, 2013, ("CARD",), f1, table) is None


def test_if_fallback_to_discipline_cell():
    # RARE's only cited publication sits in an IF-less journal, so the
    # (2013, RARE) IF cell is empty and the discipline cell must step in
    bundle = make_bundle(
        professors=[make_professor("P1")],
        publications=[
            make_pub("W1", 2013, "JR", citations=3, authors=1),   # RARE, no IF
            make_pub("W2", 2013, "JC", citations=6, authors=1),   # CARD, IF 2.0
        ],
        authorships=[("W1", "P1", 1), ("W2", "P1", 1)],
        journals=[("JR", 2013, None, ("RARE",)), ("JC", 2013, 2.0, ("CARD",))],
        sc_entries={
            "CARD": ("Clinical medicine", "position_weighted"),
            "RARE": ("Clinical medicine", "position_weighted"),
        },
        capital={("IT", "Clinical medicine"): 10000.0},
    )
    table = build_baselines(bundle)
    assert (2013, "RARE") not in table.if_mean
    assert table.if_mean_discipline[(2013, "Clinical medicine")] == 2.0
    # an IF in RARE standardizes against the discipline mean
    assert standardize_impact_factor(1.0, 2013, ("RARE",), bundle, table) == pytest.approx(0.5)


def test_citation_cells_keyed_by_publication_year(f1):
    # W5 is from 2014; its cell must not leak into 2013
    table = build_baselines(f1)
    assert (2014, "MATH") not in table.citation_mean
    assert table.citation_mean[(2014, "CARD")] == 8.0
