"""Ranked retrieval of documents and predications.

The :class:`RetrievalEngine` binds the concept and relationship
hierarchies to a similarity configuration and exposes the three query
surfaces:

- ``related_documents``: rank every other document against a seed
  document's predication set (the seed never appears in its own results);
- ``query_documents``: rank all documents against an ad-hoc predication
  set treated as a virtual document;
- ``related_predications``: rank every distinct predication in the corpus
  against a (possibly wildcard) pattern.

Scoring is exhaustive.  Concept-pair and relation-pair scores are
memoized per engine when the config enables caching; caching never
changes results.  Candidate scoring may run on multiple worker threads;
candidates are scored independently and reassembled in a fixed order, so
output is byte-identical for any worker count.  Ties are broken by
document id (ascending) or by the predication's pipe-delimited literal
(ascending).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .corpus import Corpus, SimCache
from .docsim import SimConfig, set_similarity
from .errors import EmptySetError, UnknownDocumentError
from .ontology import Hierarchy
from .predication import (
    Predication,
    PredicationPattern,
    PredicationSet,
    format_predication,
    pattern_similarity,
    predication_similarity,
)


@dataclass(frozen=True)
class RankedDocument:
    doc_id: str
    score: float
    rank: int


@dataclass(frozen=True)
class RankedPredication:
    predication: Predication
    score: float
    rank: int
    documents: tuple[str, ...]


class RetrievalEngine:
    """Similarity scoring and ranking over immutable inputs."""

    def __init__(
        self,
        concept_hierarchy: Hierarchy,
        relation_hierarchy: Hierarchy,
        config: SimConfig | None = None,
        workers: int = 1,
    ):
        if workers < 1:
            raise ValueError(f"workers must be >= 1, got {workers}")
        self.concepts = concept_hierarchy
        self.relations = relation_hierarchy
        self.config = config if config is not None else SimConfig()
        self.workers = workers
        self.concept_cache: SimCache | None = None
        self.relation_cache: SimCache | None = None
        if self.config.use_cache:
            self.concept_cache = SimCache()
            self.relation_cache = SimCache()

    # -- similarity sources -------------------------------------------------

    def concept_similarity(self, a: str, b: str) -> float:
        if self.concept_cache is not None:
            return self.concept_cache.lookup_or_compute(a, b, self.concepts.similarity)
        return self.concepts.similarity(a, b)

    def relation_similarity(self, a: str, b: str) -> float:
        if self.relation_cache is not None:
            return self.relation_cache.lookup_or_compute(
                a, b, self.relations.similarity
            )
        return self.relations.similarity(a, b)

    def predication_similarity(self, p1: Predication, p2: Predication) -> float:
        return predication_similarity(
            p1, p2, self.config.weights, self.concept_similarity, self.relation_similarity
        )

    def set_similarity(self, s1: PredicationSet, s2: PredicationSet) -> float:
        return set_similarity(
            s1, s2, self.config, self.concept_similarity, self.relation_similarity
        )

    # -- ranking ------------------------------------------------------------

    def _map(self, fn, items: list):
        if self.workers > 1 and len(items) > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as executor:
                return list(executor.map(fn, items))
        return [fn(item) for item in items]

    def _rank_documents(
        self, corpus: Corpus, candidates: list[str], reference: PredicationSet, top_n: int
    ) -> list[RankedDocument]:
        if top_n < 1:
            raise ValueError(f"top_n must be >= 1, got {top_n}")
        scores = self._map(lambda d: self.set_similarity(corpus[d], reference), candidates)
        ordered = sorted(zip(candidates, scores), key=lambda item: (-item[1], item[0]))
        return [
            RankedDocument(doc_id, score, rank)
            for rank, (doc_id, score) in enumerate(ordered[:top_n], start=1)
        ]

    def related_documents(
        self, corpus: Corpus, seed: str, top_n: int
    ) -> list[RankedDocument]:
        """Rank all other documents against the seed's predication set."""
        if seed not in corpus.docs:
            if seed in corpus.skipped:
                raise EmptySetError(f"seed document {seed!r} has no predications")
            raise UnknownDocumentError(f"unknown seed document {seed!r}")
        candidates = [d for d in corpus.doc_ids() if d != seed]
        return self._rank_documents(corpus, candidates, corpus[seed], top_n)

    def query_documents(
        self, corpus: Corpus, query: PredicationSet, top_n: int
    ) -> list[RankedDocument]:
        """Rank every document against an ad-hoc predication set."""
        if len(query) == 0:
            raise EmptySetError("query predication set is empty")
        return self._rank_documents(corpus, list(corpus.doc_ids()), query, top_n)

    def related_predications(
        self, corpus: Corpus, pattern: PredicationPattern, top_k: int
    ) -> list[RankedPredication]:
        """Rank every distinct corpus predication against the pattern."""
        if top_k < 1:
            raise ValueError(f"top_k must be >= 1, got {top_k}")
        bound_weight = 0.0
        weights = self.config.weights
        if pattern.subject is not None:
            bound_weight += weights.ws
        if pattern.relation is not None:
            bound_weight += weights.wr
        if pattern.object is not None:
            bound_weight += weights.wo
        if bound_weight <= 0:
            raise ValueError(
                "every bound slot of the pattern has zero weight; "
                "similarity is undefined"
            )
        occurrences: dict[Predication, list[str]] = {}
        for doc_id in corpus.doc_ids():
            for pred in corpus[doc_id]:
                occurrences.setdefault(pred, []).append(doc_id)
        candidates = sorted(occurrences, key=format_predication)
        if pattern.is_fully_bound:
            probe = pattern.as_predication()
            score_one = lambda p: self.predication_similarity(probe, p)
        else:
            score_one = lambda p: pattern_similarity(
                pattern, p, weights, self.concept_similarity, self.relation_similarity
            )
        scores = self._map(score_one, candidates)
        ordered = sorted(
            zip(candidates, scores),
            key=lambda item: (-item[1], format_predication(item[0])),
        )
        return [
            RankedPredication(pred, score, rank, tuple(occurrences[pred]))
            for rank, (pred, score) in enumerate(ordered[:top_k], start=1)
        ]
