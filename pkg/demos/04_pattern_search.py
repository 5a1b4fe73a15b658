"""Predication search with wildcard patterns.

A pattern is a triple whose slots may be the wildcard ``?``.  Every
distinct predication in the corpus is scored on the bound slots only
(wildcards impose no constraint), so "?|TREATS|HEADACHE" reads as
"what treats headache, or something close to it?".
"""

from pathlib import Path

from predsim import (
    RetrievalEngine,
    format_predication,
    load_hierarchy_file,
    load_predications_file,
    parse_pattern,
)

DATA = Path(__file__).parent / "data"


def main():
    concepts = load_hierarchy_file(DATA / "concepts.tsv")
    relations = load_hierarchy_file(DATA / "relations.tsv")
    corpus = load_predications_file(DATA / "predications.tsv")
    engine = RetrievalEngine(concepts, relations)

    for literal in ("?|TREATS|HEADACHE", "ASPIRIN|?|?", "ASPIRIN|TREATS|HEADACHE"):
        pattern = parse_pattern(literal)
        print(f"pattern {literal}:")
        for r in engine.related_predications(corpus, pattern, top_k=5):
            docs = ",".join(r.documents)
            print(
                f"  {r.rank}. {format_predication(r.predication):38s} "
                f"{r.score:.6f}   in {docs}"
            )
        print()

    print("ties are broken by the predication literal, ascending;")
    print("a fully bound pattern degenerates to plain triple similarity.")


if __name__ == "__main__":
    main()
