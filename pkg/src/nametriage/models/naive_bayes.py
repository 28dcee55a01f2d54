"""Multinomial naive Bayes with Laplace smoothing.

Count accumulation is integer, so the trained model is exactly invariant
to training-set order. Trained models are immutable and safe to share
across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..features import FeatureVector, Vocabulary
from .base import Prediction, make_prediction


@dataclass
class NaiveBayesModel:
    class_log_prior: np.ndarray  # (C,)
    token_log_likelihood: np.ndarray  # (C, V), Laplace-smoothed
    vocab: Vocabulary
    categories: tuple[str, ...]
    alpha: float


def train_nb(train, vocab: Vocabulary, categories, alpha: float = 1.0) -> NaiveBayesModel:
    """Fit priors and smoothed token likelihoods from (FeatureVector, class) pairs."""
    if alpha <= 0:
        raise ValueError(f"alpha must be > 0, got {alpha}")
    if not train:
        raise ValueError("cannot train naive Bayes on an empty training set")
    categories = tuple(categories)
    n_classes = len(categories)
    n_features = vocab.size

    token_counts = np.zeros((n_classes, n_features), dtype=np.int64)
    class_counts = np.zeros(n_classes, dtype=np.int64)
    for fv, cls in train:
        if not 0 <= cls < n_classes:
            raise ValueError(f"class index {cls} outside [0, {n_classes})")
        class_counts[cls] += 1
        for idx, count in fv.counts.items():
            token_counts[cls, idx] += count
    empty = np.flatnonzero(class_counts == 0)
    if empty.size:
        missing = ", ".join(categories[i] for i in empty)
        raise ValueError(f"classes without training samples: {missing}")

    priors = class_counts / class_counts.sum()
    totals = token_counts.sum(axis=1, keepdims=True)
    likelihood = (token_counts + alpha) / (totals + alpha * n_features)
    return NaiveBayesModel(
        class_log_prior=np.log(priors),
        token_log_likelihood=np.log(likelihood),
        vocab=vocab,
        categories=categories,
        alpha=float(alpha),
    )


def predict_nb(model: NaiveBayesModel, fv: FeatureVector) -> Prediction:
    """Posterior class scores, normalized to sum to one.

    An empty vector carries no evidence, so the scores equal the priors.
    """
    joint = model.class_log_prior.copy()
    if fv.counts:
        idxs = np.fromiter(fv.counts.keys(), dtype=np.int64, count=len(fv.counts))
        cnts = np.fromiter(fv.counts.values(), dtype=np.float64, count=len(fv.counts))
        joint += model.token_log_likelihood[:, idxs] @ cnts
    joint -= joint.max()
    scores = np.exp(joint)
    scores /= scores.sum()
    return make_prediction(model.categories, scores)
