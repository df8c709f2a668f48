"""How co-author credit is split across a byline.

Fields with alphabetical bylines split credit evenly. Life-science
fields signal contribution through byline position: the first and last
author carry the largest shares, with different splits for single-site
(intramural) and multi-site (extramural) papers. Short bylines collapse
the named roles onto fewer people and the vector is renormalized.

Run:  python3 demos/03_credit_weights.py
"""
from sciprod.credit import position_weights, uniform_weights


def show(label, weights):
    cells = "  ".join(f"{w:.4f}" for w in weights)
    print(f"{label:<28} {cells}   (sum {sum(weights):.4f})")


print("six-author byline")
show("uniform", uniform_weights(6).weights)
show("positional, intramural", position_weights(6, intramural=True).weights)
show("positional, extramural", position_weights(6, intramural=False).weights)

print("\nshort bylines collapse the named roles")
for n in (1, 2, 3, 4):
    show(f"extramural, {n} author(s)", position_weights(n, intramural=False).weights)

print("\nlong tails thin out the middle")
show("extramural, 12 authors", position_weights(12, intramural=False).weights)
