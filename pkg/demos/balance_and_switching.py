"""Walk through balance detection and switching on the bundled fixture.

Run from the repo root after installing the package:

    python3 demos/balance_and_switching.py
"""

import os

from signedgraph import (
    balance_partition,
    classify_balancing_edges,
    harary_bipartition,
    is_balanced,
    min_balancing_set,
    parse,
    serialize,
    switch_set,
)

HERE = os.path.dirname(__file__)
FIXTURE = os.path.join(HERE, "..", "tests", "fixtures", "sigma4.sg")


def main():
    with open(FIXTURE, "rb") as fh:
        g = parse(fh.read())
    print("input graph:")
    print(serialize(g).decode())

    part = balance_partition(g)
    print(f"balanced: {is_balanced(g)}")
    print(f"b(E) = {part.b}, V0 = {sorted(v + 1 for v in part.v0)}")
    print(f"harary bipartition: {harary_bipartition(g)}")

    print("\nper-edge balancing classification:")
    for eid, kind in sorted(classify_balancing_edges(g).items()):
        print(f"  {eid}: {kind}")

    s = min_balancing_set(g)
    print(f"\nminimum balancing edge set: {sorted(s)} (size {len(s)})")

    # switching never changes any of this; demonstrate on a vertex subset
    g2 = switch_set(g, [1, 2])
    part2 = balance_partition(g2)
    print("\nafter switching vertices {2,3}:")
    print(f"b(E) = {part2.b}, V0 = {sorted(v + 1 for v in part2.v0)}")
    print("edge signs now:", {e.id: e.sign for e in g2.edges if e.is_ordinary})


if __name__ == "__main__":
    main()
