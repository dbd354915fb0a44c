#!/usr/bin/env python3
"""Cross-check the two connectivity routes over pure monomial quotients.

For every pure simplicial complex in the configured range, the
minimal-prime graph's connectivity (union-find over height-one edges)
is compared against the exhaustive disconnecting-partition search.
The two routes must agree everywhere; any disagreement is printed
with the complex that produced it.
"""

import argparse
import random
import time
from itertools import combinations

from ringgraph import (
    build_gamma,
    complex_from_lists,
    disconnection_exists,
    face_ring,
    is_connected,
)


def routes_agree(facets, n: int) -> bool:
    pres = face_ring(complex_from_lists(n, facets))
    via_graph = is_connected(build_gamma(pres)).connected
    via_partition = disconnection_exists(pres).status != "disconnected"
    return via_graph == via_partition


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-vertices", type=int, default=5)
    parser.add_argument("--min-facet-size", type=int, default=2)
    parser.add_argument("--max-facet-size", type=int, default=4)
    parser.add_argument(
        "--max-facets",
        type=int,
        default=0,
        help="exhaust only facet sets up to this size (0 = no bound)",
    )
    parser.add_argument(
        "--random",
        type=int,
        default=0,
        metavar="N",
        help="additionally draw N random complexes at the largest vertex count",
    )
    parser.add_argument("--seed", type=int, default=20260819)
    args = parser.parse_args()

    started = time.perf_counter()
    checked = disagreements = 0

    for n in range(2, args.max_vertices + 1):
        for size in range(args.min_facet_size, min(args.max_facet_size, n) + 1):
            pool = list(combinations(range(1, n + 1), size))
            top = len(pool) if args.max_facets == 0 else min(args.max_facets, len(pool))
            for count in range(1, top + 1):
                for facets in combinations(pool, count):
                    checked += 1
                    if not routes_agree([list(f) for f in facets], n):
                        disagreements += 1
                        print(f"DISAGREEMENT n={n} facets={list(facets)}")

    rng = random.Random(args.seed)
    n = args.max_vertices
    for _ in range(args.random):
        size = rng.randint(args.min_facet_size, min(args.max_facet_size, n))
        pool = list(combinations(range(1, n + 1), size))
        facets = rng.sample(pool, rng.randint(1, len(pool)))
        checked += 1
        if not routes_agree([list(f) for f in facets], n):
            disagreements += 1
            print(f"DISAGREEMENT n={n} facets={facets}")

    elapsed = time.perf_counter() - started
    print(f"checked={checked} disagreements={disagreements} elapsed={elapsed:.1f}s")
    return 0 if disagreements == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
