"""Show that Reisner's criterion can depend on the field.

The facet ideal here is the Stanley-Reisner ideal of a six-vertex
triangulation of the real projective plane, whose first homology is Z/2.
It is Cohen-Macaulay in every characteristic except 2.

    python scripts/field_dependence.py
"""

from facetideal.cm import cm_reisner
from facetideal.complex import Complex
from facetideal.ideals import minimal_nonfaces

TRIANGLES = [(0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 5), (0, 3, 4),
             (1, 2, 3), (1, 2, 4), (1, 3, 5), (2, 4, 5), (3, 4, 5)]


def main():
    universe = tuple("abcdef")
    rp2 = Complex(universe, tuple(sum(1 << v for v in t) for t in TRIANGLES))
    c = Complex(universe, tuple(minimal_nonfaces(rp2)))
    print(f"facets: {c}")
    for p in (0, 2, 3, 5):
        rep = cm_reisner(c, p)
        note = "" if rep.cm else f"  obstruction at face {list(rep.obstruction[0])}, degree {rep.obstruction[1]}"
        print(f"char {p}: CM {rep.cm}{note}")


if __name__ == "__main__":
    main()
