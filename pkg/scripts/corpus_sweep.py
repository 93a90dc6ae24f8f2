"""Run the property battery over the exhaustive corpus and compare hammock pi0
against the fundamental-group oracle.

    python scripts/corpus_sweep.py --morphisms 5 --dim 1
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from oracles import fundamental_group_order  # noqa: E402

from segalkit.corpus import Enumeration  # noqa: E402
from segalkit.sweep import SweepConfig, check_category  # noqa: E402

PROPERTIES = ("segal_iso", "complete", "ho_recovered", "classification_matches", "betti0_is_pi0")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--objects", type=int, default=3)
    ap.add_argument("--morphisms", type=int, default=5)
    ap.add_argument("--dim", type=int, default=1, help="vertical truncation of the diagrams")
    ap.add_argument("--nmax", type=int, default=3)
    ap.add_argument("--len", type=int, default=5)
    ap.add_argument("--budget", type=float, default=None, help="seconds")
    args = ap.parse_args()

    cfg = SweepConfig(n_max=args.nmax, d=args.dim, len_max=args.len)
    failures: Counter = Counter()
    unstable, mismatches, slow = [], [], []
    corpus = Enumeration(args.objects, args.morphisms, args.budget)
    t0 = time.monotonic()
    for i, c in enumerate(corpus):
        t = time.monotonic()
        r = check_category(c, cfg)
        slow.append((round(time.monotonic() - t, 2), i, len(c.objects), len(c.morphisms)))
        for name in PROPERTIES:
            if not getattr(r, name):
                failures[name] += 1
                print(f"#{i} fails {name}: {c.morphism_ids}", flush=True)
        if r.hammock_counts:
            order = fundamental_group_order(c)
            for key, (count, stable) in r.hammock_counts.items():
                if not stable:
                    unstable.append((i, key, count, order))
                elif order != count:
                    mismatches.append((i, key, count, order))
    print(f"categories: {corpus.count} complete: {corpus.complete} seconds: {time.monotonic() - t0:.1f}")
    print(f"property failures: {dict(failures)}")
    print(f"hammock: {len(mismatches)} stable mismatches, {len(unstable)} unstable pairs")
    for row in mismatches[:10]:
        print("  mismatch", row)
    for row in unstable[:10]:
        print("  unstable", row)
    print("slowest:", sorted(slow)[-5:])


if __name__ == "__main__":
    main()
