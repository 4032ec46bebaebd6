"""Published data for the two non-cyclic neighborly 4-polytopes with 8 facets.

Vertex lists and matrices are transcribed as printed.  The printed list for
P0 repeats the vertex {0, 1, 5, 6}, so it names only 19 distinct vertices;
the twentieth comes from the convex hull of the coordinates.
"""

from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"
P0_POINTS = FIXTURES / "P0_4_8_points.json"
P1_POINTS = FIXTURES / "P1_4_8_points.json"
POLYTOPES = FIXTURES / "polytopes"

P0_PRINTED_VERTICES = [
    (0, 1, 2, 3), (0, 1, 2, 7), (0, 1, 3, 4), (0, 1, 4, 5),
    (0, 1, 5, 6), (0, 1, 6, 7), (0, 2, 3, 4), (0, 2, 4, 5),
    (0, 2, 5, 6), (0, 2, 6, 7), (1, 3, 4, 6), (1, 3, 6, 7),
    (1, 4, 5, 6), (2, 3, 4, 7), (0, 1, 5, 6), (2, 4, 5, 7),
    (2, 5, 6, 7), (3, 4, 5, 6), (3, 4, 5, 7), (3, 5, 6, 7),
]

P1_PRINTED_VERTICES = [
    (0, 1, 2, 3), (0, 1, 2, 4), (0, 1, 3, 7), (0, 1, 4, 5),
    (0, 1, 5, 6), (0, 1, 6, 7), (0, 2, 3, 4), (0, 3, 4, 5),
    (0, 3, 5, 6), (0, 3, 6, 7), (1, 2, 3, 7), (1, 2, 4, 5),
    (1, 2, 5, 7), (1, 5, 6, 7), (2, 3, 4, 6), (2, 3, 6, 7),
    (2, 4, 5, 7), (2, 4, 6, 7), (3, 4, 5, 6), (4, 5, 6, 7),
]

P0_MATRICES = {
    "a1": [[1, 0, 0, 0, 1, 0, 0, 1],
           [0, 1, 0, 0, 1, 0, 1, 0],
           [0, 0, 1, 0, 1, 1, 1, 0],
           [0, 0, 0, 1, 0, 1, 0, 1]],
    "a2": [[1, 0, 0, 0, 1, 0, 0, 1],
           [0, 1, 0, 0, 1, 0, 1, 0],
           [0, 0, 1, 0, 1, 1, 1, 1],
           [0, 0, 0, 1, 0, 1, 0, 1]],
    "a3": [[1, 0, 0, 0, 0, 0, 1, 1],
           [0, 1, 0, 0, 1, 0, 1, 0],
           [0, 0, 1, 0, 1, 1, 1, 0],
           [0, 0, 0, 1, 0, 1, 0, 1]],
    "a4": [[1, 0, 0, 0, 0, 0, 1, 1],
           [0, 1, 0, 0, 1, 0, 1, 0],
           [0, 0, 1, 0, 1, 1, 0, 1],
           [0, 0, 0, 1, 0, 1, 1, 1]],
    "a5": [[1, 0, 0, 0, 0, 0, 1, 1],
           [0, 1, 0, 0, 1, 1, 0, 1],
           [0, 0, 1, 0, 1, 0, 1, 0],
           [0, 0, 0, 1, 0, 1, 1, 1]],
    "a6": [[1, 0, 0, 0, 0, 0, 1, 1],
           [0, 1, 0, 0, 1, 1, 1, 1],
           [0, 0, 1, 0, 1, 0, 1, 0],
           [0, 0, 0, 1, 0, 1, 0, 1]],
    "a7": [[1, 0, 0, 0, 0, 1, 1, 1],
           [0, 1, 0, 0, 1, 1, 0, 1],
           [0, 0, 1, 0, 1, 1, 1, 0],
           [0, 0, 0, 1, 1, 0, 1, 1]],
}

P1_MATRICES = {
    "a1": [[1, 0, 0, 0, 1, 0, 0, 1],
           [0, 1, 0, 0, 1, 1, 1, 0],
           [0, 0, 1, 0, 0, 1, 0, 1],
           [0, 0, 0, 1, 1, 1, 1, 1]],
    "a2": [[1, 0, 0, 0, 1, 0, 0, 1],
           [0, 1, 0, 0, 1, 1, 1, 1],
           [0, 0, 1, 0, 0, 1, 0, 1],
           [0, 0, 0, 1, 1, 1, 1, 0]],
    "a3": [[1, 0, 0, 0, 0, 1, 1, 1],
           [0, 1, 0, 0, 1, 0, 1, 0],
           [0, 0, 1, 0, 0, 1, 0, 1],
           [0, 0, 0, 1, 1, 0, 1, 1]],
}

# the printed generator of Aut(P0): facet i goes to TAU[i]
TAU = (5, 6, 4, 1, 0, 2, 7, 3)

# the four automorphisms listed before concluding that TAU generates
P0_AUT_ELEMENTS = [
    (0, 1, 2, 3, 4, 5, 6, 7),
    (5, 6, 4, 1, 0, 2, 7, 3),
    (2, 7, 0, 6, 5, 4, 3, 1),
    (4, 3, 5, 7, 2, 0, 1, 6),
]

# printed action of TAU on the seven classes
TAU_ACTION = {"a1": "a5", "a2": "a6", "a3": "a4", "a4": "a2", "a5": "a1", "a6": "a3", "a7": "a7"}

P0_ORBITS = [{"a1", "a5"}, {"a2", "a3", "a4", "a6"}, {"a7"}]

# hull point i carries printed facet label *_PRINTED_LABELS[i]; the lexicographically
# smallest of the relabelings that carry the hull onto the printed vertex list
P0_PRINTED_LABELS = (0, 7, 1, 6, 5, 2, 3, 4)
P1_PRINTED_LABELS = (0, 7, 1, 2, 6, 3, 5, 4)

# the vertex missing from the printed P0 list (printed labels)
P0_MISSING_VERTEX = (1, 2, 3, 7)
