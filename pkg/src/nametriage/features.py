"""Vocabulary construction and sparse bag-of-words encoding."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Vocabulary:
    token_to_index: dict

    @property
    def size(self) -> int:
        return len(self.token_to_index)

    def tokens(self) -> list[str]:
        """Tokens in index order."""
        out = [""] * len(self.token_to_index)
        for tok, idx in self.token_to_index.items():
            out[idx] = tok
        return out


@dataclass(frozen=True)
class FeatureVector:
    counts: dict  # feature index -> count >= 1
    dropped: int = 0  # out-of-vocabulary tokens seen while encoding

    def total(self) -> int:
        return sum(self.counts.values())


def build_vocab(train_tokens: Iterable[Sequence[str]]) -> Vocabulary:
    """Distinct training tokens, indexed in sorted order."""
    distinct = set()
    n_seqs = 0
    for seq in train_tokens:
        n_seqs += 1
        distinct.update(seq)
    if n_seqs == 0:
        raise ValueError("cannot build a vocabulary from an empty training set")
    return Vocabulary(token_to_index={t: i for i, t in enumerate(sorted(distinct))})


def encode(vocab: Vocabulary, seq: Sequence[str], binary: bool = False) -> FeatureVector:
    """Count in-vocabulary tokens; out-of-vocabulary tokens are dropped.

    With ``binary=True`` every present token counts once.
    """
    t2i = vocab.token_to_index
    counts: Counter = Counter()
    dropped = 0
    for tok in seq:
        idx = t2i.get(tok)
        if idx is None:
            dropped += 1
        else:
            counts[idx] += 1
    if binary:
        counts = Counter({idx: 1 for idx in counts})
    return FeatureVector(counts=dict(counts), dropped=dropped)
