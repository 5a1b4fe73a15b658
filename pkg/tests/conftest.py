import pytest

from predsim import Predication, load_corpus, load_hierarchy

# Hand-enumerated concept fixture.  Ancestor sets:
#   C1 -> {C1, A, R}        C2 -> {C2, A, R}         (siblings: 2/4 = 0.5)
#   OA -> {OA, U1, U2, X1, X2, X3}                   (6 members)
#   OB -> {OB, V1, V2, V3, X1, X2, X3}               (7 members; overlap 3 -> 0.3)
#   D1 -> {D1, E1}                                   (disjoint from the rest)
CONCEPT_EDGES = [
    ("C1", "A"),
    ("C2", "A"),
    ("A", "R"),
    ("OA", "U1"),
    ("U1", "U2"),
    ("U2", "X1"),
    ("X1", "X2"),
    ("X2", "X3"),
    ("OB", "V1"),
    ("V1", "V2"),
    ("V2", "V3"),
    ("V3", "X1"),
    ("D1", "E1"),
]

# TREATS/PREVENTS/CAUSES are siblings under AFFECTS -> RELATED:
#   sim(TREATS, PREVENTS) = |{AFFECTS, RELATED}| / 4 = 0.5
RELATION_EDGES = [
    ("TREATS", "AFFECTS"),
    ("PREVENTS", "AFFECTS"),
    ("CAUSES", "AFFECTS"),
    ("AFFECTS", "RELATED"),
]


@pytest.fixture
def concept_h():
    return load_hierarchy(CONCEPT_EDGES, source="concept-fixture")


@pytest.fixture
def relation_h():
    return load_hierarchy(RELATION_EDGES, source="relation-fixture")


@pytest.fixture
def small_corpus():
    return load_corpus(
        [
            ("d1", "C1", "TREATS", "OA"),
            ("d1", "C1", "CAUSES", "D1"),
            ("d2", "C1", "TREATS", "OA"),
            ("d2", "C1", "CAUSES", "D1"),
            ("d3", "C2", "TREATS", "OB"),
            ("d4", "D1", "PREVENTS", "E1"),
        ],
        source="corpus-fixture",
    )


def stub_sim(table: dict, default: float = 0.0):
    """Similarity source backed by an unordered pair table; identity is 1."""

    def sim(a, b):
        if a == b:
            return 1.0
        return table.get((a, b), table.get((b, a), default))

    return sim


def triple(s: str, r: str, o: str) -> Predication:
    return Predication(s, r, o)
