"""Per-category TF-IDF scoring, keyword extraction, and trie segmentation.

Each category's training tokens form one bag ("document"):

    tf(t, c)  = count of t in category c / total tokens in category c
    idf(t)    = ln(C / df(t)), with df(t) = number of categories containing t
    score     = tf * idf

Tokens whose best score across categories exceeds the threshold ``k`` become
keywords and are inserted into a trie; ``trie_segment`` then splits glued
words like ``coursecatalog`` by greedy longest-prefix matching.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .dataset import Dataset
from .errors import DatasetError
from .tokenizer import TokenSequence, lemmatize, universal_tokenize
from .trie import Trie

# Single characters make pathological keywords: hash-like names would be
# shredded into letter soup, so the trie only admits longer tokens.
MIN_KEYWORD_LEN = 2


@dataclass(frozen=True)
class TfidfConfig:
    smooth_idf: bool = False  # use ln(1 + C/df) instead of ln(C/df)
    lemmatize: bool = True

    @property
    def formula(self) -> str:
        return "smoothed" if self.smooth_idf else "plain"


def base_tokens(name: str, config: TfidfConfig = TfidfConfig()) -> list[str]:
    """Universal tokenization followed by lemmatization."""
    toks = universal_tokenize(name).tokens
    if config.lemmatize:
        return [lemmatize(t) for t in toks]
    return list(toks)


@dataclass
class TfidfTable:
    categories: tuple[str, ...]
    scores: dict[str, dict[str, float]]  # token -> {category: tf*idf}
    doc_freq: dict[str, int]
    category_token_totals: dict[str, int]
    config: TfidfConfig = field(default_factory=TfidfConfig)

    def score(self, token: str, category: str) -> float:
        return self.scores.get(token, {}).get(category, 0.0)

    def max_score(self, token: str) -> float:
        per_cat = self.scores.get(token)
        return max(per_cat.values()) if per_cat else 0.0

    def tokens(self) -> list[str]:
        return sorted(self.scores)


def compute_tfidf(train: Dataset, config: TfidfConfig = TfidfConfig()) -> TfidfTable:
    """Score every training token against every category.

    ``train`` must contain only in-scope records and every category must
    have at least one record.
    """
    if not train.records:
        raise DatasetError("cannot compute TF-IDF from an empty training set")
    bags: dict[str, Counter] = {c: Counter() for c in train.categories}
    for rec in train.records:
        if rec.label not in bags:
            raise DatasetError(
                f"record {rec.file_name!r} has out-of-scope label {rec.label!r}"
            )
        bags[rec.label].update(base_tokens(rec.file_name, config))
    empty = [c for c, bag in bags.items() if not bag]
    if empty:
        raise DatasetError(f"categories without any tokens: {', '.join(empty)}")

    n_cats = len(train.categories)
    totals = {c: sum(bag.values()) for c, bag in bags.items()}
    doc_freq: Counter = Counter()
    for bag in bags.values():
        doc_freq.update(bag.keys())

    scores: dict[str, dict[str, float]] = {}
    for cat, bag in bags.items():
        total = totals[cat]
        for token, count in bag.items():
            ratio = n_cats / doc_freq[token]
            idf = math.log(1.0 + ratio) if config.smooth_idf else math.log(ratio)
            scores.setdefault(token, {})[cat] = (count / total) * idf
    return TfidfTable(
        categories=train.categories,
        scores=scores,
        doc_freq=dict(doc_freq),
        category_token_totals=totals,
        config=config,
    )


@dataclass
class KeywordIndex:
    keywords: frozenset[str]
    trie: Trie
    k: float
    formula: str = "plain"

    @classmethod
    def from_keywords(cls, keywords, k: float, formula: str = "plain") -> "KeywordIndex":
        kws = frozenset(keywords)
        return cls(keywords=kws, trie=Trie(sorted(kws)), k=k, formula=formula)

    @classmethod
    def empty(cls, k: float = math.inf) -> "KeywordIndex":
        return cls.from_keywords((), k)

    def to_json(self) -> dict:
        return {"k": self.k, "formula": self.formula, "keywords": sorted(self.keywords)}

    @classmethod
    def from_json(cls, blob: dict) -> "KeywordIndex":
        return cls.from_keywords(blob["keywords"], float(blob["k"]), blob.get("formula", "plain"))

    def save(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=1, sort_keys=True) + "\n")

    @classmethod
    def load(cls, path) -> "KeywordIndex":
        return cls.from_json(json.loads(Path(path).read_text()))


def extract_keywords(table: TfidfTable, k: float) -> KeywordIndex:
    """Keep tokens whose best per-category score strictly exceeds ``k``.

    Tokens shorter than MIN_KEYWORD_LEN are never admitted.
    """
    if k < 0:
        raise ValueError(f"keyword threshold must be >= 0, got {k}")
    chosen = (
        t
        for t, per_cat in table.scores.items()
        if len(t) >= MIN_KEYWORD_LEN and max(per_cat.values()) > k
    )
    return KeywordIndex.from_keywords(chosen, k, table.config.formula)


def trie_segment(index: KeywordIndex, token: str) -> list[str]:
    """Greedy longest-match segmentation of one token.

    Characters that start no keyword accumulate into a residue segment,
    flushed when a keyword match begins or at the end, so the concatenation
    of the output always equals the input.
    """
    trie = index.trie
    if len(trie) == 0 or not token:
        return [token] if token else []
    out: list[str] = []
    residue_start = 0
    i = 0
    n = len(token)
    while i < n:
        matched = trie.longest_prefix(token, i)
        if matched:
            if residue_start < i:
                out.append(token[residue_start:i])
            out.append(token[i : i + matched])
            i += matched
            residue_start = i
        else:
            i += 1
    if residue_start < n:
        out.append(token[residue_start:])
    return out


def tokenize_full(index: KeywordIndex, name: str) -> TokenSequence:
    """Universal tokenization, trie segmentation, then lemmatization."""
    pieces: list[str] = []
    for tok in universal_tokenize(name).tokens:
        pieces.extend(trie_segment(index, tok))
    return TokenSequence(tuple(lemmatize(p) for p in pieces), source=name)
