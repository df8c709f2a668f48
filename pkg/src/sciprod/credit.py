"""Fractional co-author credit.

A professor's contribution to a publication is a weight in [0, 1] that
depends on the discipline's byline convention:

* uniform regime: every author gets 1/n (alphabetical-byline fields);
* position-weighted regime (life sciences): first and last author carry the
  largest share, with different splits for intramural publications (single
  affiliation in the address list) and extramural collaborations. Intramural:
  40% to first and to last, 20% pooled over everyone else. Extramural: 30%
  to first and to last, 15% to second and to second-to-last, 10% pooled over
  the rest.

For short bylines the named roles can overlap (or leave the pool empty); a
position then collects every role weight mapped to it and the vector is
renormalized so the weights always sum to one. Weights are computed in exact
rational arithmetic and converted to float at the end, which keeps the
canonical vectors (e.g. extramural n=6) bit-exact.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .config import CreditConfig
from .models import PublicationRecord, REGIME_POSITION, REGIME_UNIFORM, SCMap


class CreditWeights:
    """Per-position weight vector for one publication's byline."""

    __slots__ = ("pub_id", "weights")

    def __init__(self, pub_id: str, weights: tuple[float, ...]):
        self.pub_id = pub_id
        self.weights = weights

    def for_position(self, position: int) -> float:
        if not 1 <= position <= len(self.weights):
            raise ValueError(
                f"position {position} outside byline 1..{len(self.weights)} of '{self.pub_id}'"
            )
        return self.weights[position - 1]


def _exact(value: float) -> Fraction:
    # decimal reading of the configured constant (0.4 -> 2/5, not the binary float)
    return Fraction(str(value))


@lru_cache(maxsize=4096)
def _uniform_vector(total_authors: int) -> tuple[float, ...]:
    share = Fraction(1, total_authors)
    return (float(share),) * total_authors


@lru_cache(maxsize=None)
def _position_vector(total_authors: int, intramural: bool,
                     config: CreditConfig) -> tuple[float, ...]:
    n = total_authors
    weights = [Fraction(0)] * n
    if intramural:
        first_last = _exact(config.intramural_first_last)
        pool = _exact(config.intramural_others_pool)
        weights[0] += first_last
        weights[n - 1] += first_last
        middle = range(1, n - 1)
    else:
        first_last = _exact(config.extramural_first_last)
        second = _exact(config.extramural_second)
        pool = _exact(config.extramural_others_pool)
        weights[0] += first_last
        weights[n - 1] += first_last
        if n >= 2:
            weights[1] += second
            weights[n - 2] += second
        middle = range(2, n - 2)
    if len(middle):
        share = pool / len(middle)
        for i in middle:
            weights[i] += share
    total = sum(weights)
    if total != 1:
        weights = [w / total for w in weights]
    return tuple(float(w) for w in weights)


def uniform_weights(total_authors: int, pub_id: str = "") -> CreditWeights:
    """Equal split: every byline position receives 1/total_authors."""
    if total_authors < 1:
        raise ValueError(f"total_authors must be >= 1, got {total_authors}")
    return CreditWeights(pub_id, _uniform_vector(total_authors))


def position_weights(total_authors: int, intramural: bool,
                     config: CreditConfig = CreditConfig(),
                     pub_id: str = "") -> CreditWeights:
    """Byline-position split for the position-weighted regime."""
    if total_authors < 1:
        raise ValueError(f"total_authors must be >= 1, got {total_authors}")
    return CreditWeights(pub_id, _position_vector(total_authors, intramural, config))


def is_intramural(pub: PublicationRecord) -> bool:
    """A publication is intramural when its address list holds exactly one
    affiliation."""
    return pub.affiliation_count == 1


def detect_regime(sc: str, scmap: SCMap) -> str:
    """Credit regime of the SC's discipline."""
    if sc not in scmap.entries:
        raise KeyError(f"unknown SC '{sc}'")
    return scmap.regime_of(sc)


def credit_weights_for(pub: PublicationRecord, regime: str,
                       config: CreditConfig = CreditConfig()) -> CreditWeights:
    """Weight vector applicable to one publication under the given regime."""
    if regime == REGIME_UNIFORM:
        return uniform_weights(pub.total_authors, pub.pub_id)
    if regime == REGIME_POSITION:
        return position_weights(pub.total_authors, is_intramural(pub), config, pub.pub_id)
    raise ValueError(f"unknown credit regime '{regime}'")


def fractional_contribution(position: int, pub: PublicationRecord, regime: str,
                            config: CreditConfig = CreditConfig()) -> float:
    """The professor's f_i for one publication: the weight of their byline
    position under the applicable regime and intramural flag."""
    return credit_weights_for(pub, regime, config).for_position(position)
