"""The property battery over every category the enumerator can exhaust quickly."""

from __future__ import annotations

import random

import pytest

from oracles import fundamental_group_order
from segalkit.corpus import Enumeration, random_category
from segalkit.sweep import SweepConfig, check_category
from strategies import small_corpus

PROPERTIES = ("segal_iso", "complete", "ho_recovered", "classification_matches", "betti0_is_pi0")


def failed(r) -> list[str]:
    return [name for name in PROPERTIES if not getattr(r, name)]


def test_exhaustive_corpus_with_hammocks() -> None:
    bad, mismatches, unstable = [], [], []
    for i, c in enumerate(small_corpus(4)):
        r = check_category(c)
        if failed(r):
            bad.append((i, failed(r)))
        if r.hammock_counts:
            order = fundamental_group_order(c)
            for key, (count, stable) in r.hammock_counts.items():
                if stable and count != order:
                    mismatches.append((i, key, count, order))
                if not stable:
                    unstable.append((i, order))
    assert bad == [] and mismatches == []
    # unstable pairs only where pi_1 is infinite
    assert all(order == 0 for _, order in unstable)


def test_five_morphism_corpus_properties() -> None:
    cfg = SweepConfig(hammock=False)
    e = Enumeration(3, 5)
    bad = [(i, failed(r)) for i, r in enumerate(check_category(c, cfg) for c in e) if failed(r)]
    assert e.complete and e.count == 394
    assert bad == []


@pytest.mark.parametrize("seed", range(20))
def test_random_concrete_categories(seed) -> None:
    c = random_category(random.Random(seed))
    # hammock counts are covered on the exhaustive corpus; large monoids make them slow
    r = check_category(c, SweepConfig(hammock=False))
    assert failed(r) == []
