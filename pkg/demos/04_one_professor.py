"""Follow one professor's portfolio through the whole calculation.

A tiny hand-built dataset makes every intermediate quantity readable:
citation baselines per (year, field), the yearly research cost, the
fractional credit of each paper, and the five indicators they produce.

Run:  python3 demos/04_one_professor.py
"""
from sciprod.baselines import build_baselines, standardize_citations
from sciprod.cohort import apply_eligibility_filters, publication_sc_table
from sciprod.config import CohortConfig, CreditConfig
from sciprod.indicators import compute_indicators, cost_profile
from sciprod.models import (
    AuthorshipRecord,
    CostTable,
    DatasetBundle,
    JournalRecord,
    ProfessorRecord,
    PublicationRecord,
    SCMap,
)

bundle = DatasetBundle(
    professors=[
        ProfessorRecord("ROSSI", "IT", "F",
                        {y: "associate" for y in range(2011, 2016)}, 5),
        ProfessorRecord("CONTI", "IT", "M",
                        {y: "full" for y in range(2011, 2016)}, 5),
        ProfessorRecord("BERG", "NO", "F",
                        {y: "full" for y in range(2011, 2016)}, 5),
    ],
    publications=[
        # pub_id, year, journal, citations, total authors, affiliations
        PublicationRecord("A", 2012, "J-CARD", 12, 4, 1),
        PublicationRecord("B", 2012, "J-CARD", 6, 6, 3),
        PublicationRecord("C", 2012, "J-CARD", 0, 2, 1),
        PublicationRecord("D", 2013, "J-CARD", 9, 3, 2),
    ],
    authorships=[
        AuthorshipRecord("A", "ROSSI", 1),   # first author, single site
        AuthorshipRecord("B", "ROSSI", 6),   # last author, collaboration
        AuthorshipRecord("C", "ROSSI", 2),   # uncited note
        AuthorshipRecord("A", "CONTI", 4),
        AuthorshipRecord("B", "BERG", 1),
        AuthorshipRecord("D", "BERG", 2),
    ],
    journals=[JournalRecord("J-CARD", y, 2.4, ("CARDIOLOGY",))
              for y in range(2011, 2016)],
    cost_table=CostTable(
        salary={("IT", "associate"): 70000.0, ("IT", "full"): 100000.0,
                ("NO", "full"): 95000.0},
        capital={("IT", "Clinical medicine"): 30000.0,
                 ("NO", "Clinical medicine"): 32000.0},
    ),
    sc_map=SCMap({"CARDIOLOGY": ("Clinical medicine", "position_weighted")}),
)

window = (2011, 2015)
baselines = build_baselines(bundle)
print("2012 cardiology citation baseline (cited papers only):",
      baselines.citation_mean[(2012, "CARDIOLOGY")])

scs = publication_sc_table(bundle)
for pub in bundle.publications:
    std = standardize_citations(pub.citations, pub.year, scs[pub.pub_id],
                                bundle, baselines)
    print(f"  paper {pub.pub_id}: {pub.citations:>2} citations "
          f"-> standardized {std:.3f}")

rossi = bundle.professors_by_id["ROSSI"]
cost = cost_profile(rossi, "Clinical medicine", bundle, window)
print(f"\nROSSI yearly cost: {cost.yearly_salary:.0f}/2 salary "
      f"+ {cost.yearly_capital:.0f} capital = {cost.research_cost:.0f} EUR")

cohort = apply_eligibility_filters(bundle, CohortConfig(min_sc_professors=1))
vectors = compute_indicators(bundle, cohort, baselines, CreditConfig(), window)
vector = vectors["ROSSI"]
print(f"\nROSSI over {vector.t} staffed years, {vector.n_pubs} papers:")
for name in ("O", "FO", "AC", "AIF", "FSS"):
    print(f"  {name:<4} = {vector.value(name):.6g}")
