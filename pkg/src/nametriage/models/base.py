"""Shared prediction type for all classifiers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Prediction:
    label: str
    confidence: float
    class_scores: tuple[float, ...]


def make_prediction(categories, scores: np.ndarray) -> Prediction:
    """Build a Prediction from per-class scores.

    The label is the argmax; ties resolve to the lowest class index.
    """
    i = int(np.argmax(scores))
    return Prediction(
        label=categories[i],
        confidence=float(scores[i]),
        class_scores=tuple(float(s) for s in scores),
    )
