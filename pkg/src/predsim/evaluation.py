"""Precision / recall / F-measure sweeps against a gold standard.

For each gold seed, the engine retrieves the top max(n_values) documents
once; every cutoff n then scores the length-n prefix of that ranking:

    precision@n = |top-n retrieved & relevant| / |top-n retrieved|
    recall@n    = |top-n retrieved & relevant| / |relevant|
    F@n         = 2 * P * R / (P + R), defined as 0 when P + R = 0

The relevant set for a seed is its gold list restricted to documents
actually present in the corpus; gold entries naming absent documents are
dropped with a warning, and a seed whose relevant set ends up empty is
skipped from the macro average (also with a warning).  Reported
aggregates are macro averages: the arithmetic mean of per-seed values at
each cutoff.
"""

from __future__ import annotations

import math
import warnings
from collections.abc import Collection, Iterable, Mapping, Sequence
from dataclasses import dataclass
from types import MappingProxyType
from typing import NamedTuple

from .corpus import Corpus, GoldStandard
from .errors import UnknownDocumentError
from .retrieval import RetrievalEngine


class Metrics(NamedTuple):
    precision: float
    recall: float
    f_measure: float


def precision_at(retrieved: Sequence[str], relevant: Collection[str], n: int) -> float:
    """Fraction of the top-n retrieved documents that are relevant.

    ``retrieved`` must already be deduplicated.  When fewer than n
    documents were retrieved, the actual count is the denominator; zero
    retrieved documents give 0 with a warning.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    top = retrieved[:n]
    if not top:
        warnings.warn("precision over zero retrieved documents; defined as 0")
        return 0.0
    hits = sum(1 for doc in top if doc in relevant)
    return hits / len(top)


def recall_at(retrieved: Sequence[str], relevant: Collection[str], n: int) -> float:
    """Fraction of the relevant documents found in the top-n retrieved."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not relevant:
        raise ValueError("recall requires a non-empty relevant set")
    top = retrieved[:n]
    hits = sum(1 for doc in top if doc in relevant)
    return hits / len(relevant)


def f_measure(p: float, r: float) -> float:
    """Harmonic mean of precision and recall; 0 when both are 0."""
    if p + r == 0:
        return 0.0
    return 2 * p * r / (p + r)


@dataclass(frozen=True)
class EvalReport:
    """Per-seed and macro-averaged metrics at each evaluated cutoff."""

    n_values: tuple[int, ...]
    per_seed: Mapping[str, Mapping[int, Metrics]]
    macro: Mapping[int, Metrics]
    skipped_seeds: tuple[str, ...]

    def to_csv(self) -> str:
        lines = ["n,precision,recall,f_measure"]
        for n in self.n_values:
            m = self.macro[n]
            lines.append(f"{n},{m.precision:.4f},{m.recall:.4f},{m.f_measure:.4f}")
        return "\n".join(lines) + "\n"

    def per_seed_csv(self) -> str:
        lines = ["seed,n,precision,recall,f_measure"]
        for seed in self.per_seed:
            for n in self.n_values:
                m = self.per_seed[seed][n]
                lines.append(
                    f"{seed},{n},{m.precision:.4f},{m.recall:.4f},{m.f_measure:.4f}"
                )
        return "\n".join(lines) + "\n"


def run_eval(
    engine: RetrievalEngine,
    corpus: Corpus,
    gold: GoldStandard,
    n_values: Iterable[int],
) -> EvalReport:
    """Sweep precision/recall/F over the gold standard at each cutoff."""
    cutoffs = tuple(sorted(set(n_values)))
    if not cutoffs:
        raise ValueError("n_values must contain at least one cutoff")
    for n in cutoffs:
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"cutoffs must be positive integers, got {n!r}")
    seeds = gold.seeds()
    missing = [s for s in seeds if s not in corpus.docs]
    if missing:
        raise UnknownDocumentError(
            f"gold seeds missing from corpus: {', '.join(missing)}"
        )
    top = cutoffs[-1]
    per_seed: dict[str, Mapping[int, Metrics]] = {}
    skipped: list[str] = []
    for seed in seeds:
        gold_list = gold[seed]
        relevant = {d for d in gold_list if d in corpus.docs}
        absent = [d for d in gold_list if d not in corpus.docs]
        if absent:
            warnings.warn(
                f"seed {seed!r}: {len(absent)} gold documents absent from corpus "
                f"({', '.join(absent[:5])}); dropped from the relevant set"
            )
        if not relevant:
            warnings.warn(
                f"seed {seed!r}: no gold documents present in corpus; "
                "skipped from macro average"
            )
            skipped.append(seed)
            continue
        retrieved = [r.doc_id for r in engine.related_documents(corpus, seed, top)]
        by_n = {}
        for n in cutoffs:
            p = precision_at(retrieved, relevant, n)
            r = recall_at(retrieved, relevant, n)
            by_n[n] = Metrics(p, r, f_measure(p, r))
        per_seed[seed] = MappingProxyType(by_n)
    if not per_seed:
        raise ValueError("no evaluable seeds: every seed's relevant set was empty")
    macro = {}
    count = len(per_seed)
    for n in cutoffs:
        macro[n] = Metrics(
            math.fsum(m[n].precision for m in per_seed.values()) / count,
            math.fsum(m[n].recall for m in per_seed.values()) / count,
            math.fsum(m[n].f_measure for m in per_seed.values()) / count,
        )
    return EvalReport(
        n_values=cutoffs,
        per_seed=MappingProxyType(per_seed),
        macro=MappingProxyType(macro),
        skipped_seeds=tuple(skipped),
    )
