"""Chromatic polynomials three ways, hyperplane regions, and acyclic
orientations on the bundled fixture.

    python3 demos/regions_and_chromatic.py
"""

import os

from signedgraph import (
    arrangement,
    chromatic_numbers,
    chromatic_poly_delcon,
    chromatic_poly_subset,
    chromatic_via_expansion,
    count_proper,
    format_polynomial,
    parse,
    region_count,
)

HERE = os.path.dirname(__file__)
FIXTURE = os.path.join(HERE, "..", "tests", "fixtures", "sigma4.sg")


def main():
    with open(FIXTURE, "rb") as fh:
        g = parse(fh.read())

    chi = chromatic_poly_delcon(g)
    print("chromatic polynomial (deletion-contraction):", format_polynomial(chi))
    print("same by subset expansion:", chromatic_poly_subset(g) == chi)
    print("same by zero-free expansion over stable sets:",
          chromatic_via_expansion(g) == chi)

    star = chromatic_poly_delcon(g, zero_free=True)
    print("zero-free polynomial:", format_polynomial(star))
    for k in (0, 1, 2):
        print(f"  k={k}: chi({2 * k + 1}) = {chi(2 * k + 1)}"
              f" = brute count {count_proper(g, k)}")
    print("chromatic numbers (with zero, zero-free):", chromatic_numbers(g))

    print("\nhyperplane arrangement:")
    for hp in arrangement(g):
        print(f"  {hp.edge_id}: {hp.equation()}")
    rep = region_count(g, oracle=True, count_acyclic=True)
    print(f"regions by (-1)^n p(-1): {rep.region_count}")
    print(f"regions by sign-vector oracle: {rep.sign_vector_regions}")
    print(f"acyclic orientations: {rep.acyclic_count}")


if __name__ == "__main__":
    main()
