"""Selective-classification evaluation.

A scored prediction is kept when its confidence strictly exceeds the
threshold, otherwise it is deferred to the downstream heavy model:

    prediction accuracy = correct / (correct + incorrect)
    prediction rate     = (correct + incorrect) / total

The cost model assumes deferred documents are classified correctly by the
heavy model at ``t_heavy`` seconds each:

    overall accuracy = accuracy * rate + (1 - rate)
    time per doc     = t_fast + t_heavy * (1 - rate)
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

Scored = tuple  # (Prediction, true label)


@dataclass(frozen=True)
class ThresholdMetrics:
    threshold: float
    prediction_accuracy: float | None  # None when nothing is predicted
    prediction_rate: float
    n_correct: int
    n_incorrect: int
    n_deferred: int


@dataclass(frozen=True)
class CostCurvePoint:
    threshold: float
    overall_accuracy: float
    time_per_doc: float
    prediction_accuracy: float | None
    prediction_rate: float


@dataclass
class EvalReport:
    per_threshold: list[ThresholdMetrics]
    best: ThresholdMetrics
    accuracy: float  # plain accuracy, no deferral
    auroc_indicative_vs_ambiguous: float | None
    auroc_indicative_vs_oos: float | None
    confusion: dict  # true label -> {"errors": int, "total": int}


def apply_threshold(preds: Sequence[Scored], t: float) -> ThresholdMetrics:
    """Score predictions with confidence > t; defer the rest."""
    if not 0 <= t <= 1:
        raise ValueError(f"threshold must be in [0, 1], got {t}")
    correct = incorrect = deferred = 0
    for pred, truth in preds:
        if pred.confidence > t:
            if pred.label == truth:
                correct += 1
            else:
                incorrect += 1
        else:
            deferred += 1
    predicted = correct + incorrect
    total = predicted + deferred
    return ThresholdMetrics(
        threshold=t,
        prediction_accuracy=(correct / predicted) if predicted else None,
        prediction_rate=(predicted / total) if total else 0.0,
        n_correct=correct,
        n_incorrect=incorrect,
        n_deferred=deferred,
    )


def _descending_thresholds(step: float) -> list[float]:
    if not 0 < step <= 1:
        raise ValueError(f"step must be in (0, 1], got {step}")
    n = math.floor(1 / step + 1e-9)  # largest i with 1 - i*step >= 0
    ts = [round(1 - i * step, 12) for i in range(n + 1)]
    if ts[-1] > 0.0:
        ts.append(0.0)
    return ts


def threshold_sweep(preds: Sequence[Scored], step: float = 0.01) -> list[ThresholdMetrics]:
    """Metrics at t = 1, 1-step, ..., 0."""
    return [apply_threshold(preds, t) for t in _descending_thresholds(step)]


def best_threshold(
    preds: Sequence[Scored], rate_floor: float = 0.9, step: float = 0.01
) -> ThresholdMetrics:
    """Accuracy-maximizing threshold among those with rate >= rate_floor.

    Ties resolve to the lowest threshold (maximum coverage).
    """
    if not 0 <= rate_floor <= 1:
        raise ValueError(f"rate_floor must be in [0, 1], got {rate_floor}")
    best: ThresholdMetrics | None = None
    for tm in threshold_sweep(preds, step):
        if tm.prediction_rate < rate_floor or tm.prediction_accuracy is None:
            continue
        if best is None or tm.prediction_accuracy >= best.prediction_accuracy:
            best = tm
    if best is None:
        raise ValueError(
            f"no threshold reaches prediction rate {rate_floor} with any prediction"
        )
    return best


def auroc(pos_scores, neg_scores) -> float:
    """Rank-based AUROC with average-rank tie handling.

    Probability that a random positive outranks a random negative, counting
    ties as one half.
    """
    pos = np.asarray(pos_scores, dtype=np.float64)
    neg = np.asarray(neg_scores, dtype=np.float64)
    if pos.size == 0 or neg.size == 0:
        raise ValueError("auroc requires non-empty score lists")
    both = np.concatenate([pos, neg])
    order = np.argsort(both, kind="mergesort")
    ranks = np.empty(both.size, dtype=np.float64)
    sorted_vals = both[order]
    i = 0
    while i < both.size:
        j = i
        while j + 1 < both.size and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0  # average of 1-based ranks
        i = j + 1
    rank_sum_pos = ranks[: pos.size].sum()
    u = rank_sum_pos - pos.size * (pos.size + 1) / 2
    return float(u / (pos.size * neg.size))


def cost_curve(
    preds: Sequence[Scored], t_fast: float, t_heavy: float, step: float = 0.001
) -> list[CostCurvePoint]:
    """Overall accuracy and per-document time for thresholds 0..1 (ascending)."""
    if t_fast < 0 or t_heavy < 0:
        raise ValueError("model times must be >= 0")
    points = []
    for tm in reversed(threshold_sweep(preds, step)):
        rate = tm.prediction_rate
        acc = tm.prediction_accuracy if tm.prediction_accuracy is not None else 0.0
        points.append(
            CostCurvePoint(
                threshold=tm.threshold,
                overall_accuracy=acc * rate + (1 - rate),
                time_per_doc=t_fast + t_heavy * (1 - rate),
                prediction_accuracy=tm.prediction_accuracy,
                prediction_rate=rate,
            )
        )
    return points


def k_sweep(train_ds, test_ds, config, k_values) -> list[tuple[float, float]]:
    """Retrain the keyword index and model per k; plain accuracy on the test set."""
    from .pipeline import train_classifier  # deferred: pipeline imports this module's types

    if not k_values:
        raise ValueError("k_values must be non-empty")
    out = []
    for k in k_values:
        clf = train_classifier(train_ds, config.with_k(k))
        preds = clf.predict_names([r.file_name for r in test_ds.records])
        correct = sum(p.label == r.label for p, r in zip(preds, test_ds.records))
        out.append((k, correct / len(test_ds.records)))
    return out


@dataclass(frozen=True)
class LatencyStats:
    mean_s: float
    ln_mean_s: float
    p50_s: float
    p99_s: float
    n_timed: int


def bench_latency(
    predict: Callable[[str], object],
    inputs: Sequence[str],
    warmup: int = 1,
    reps: int = 5,
) -> LatencyStats:
    """Wall-clock per-name latency of ``predict`` over ``inputs``.

    Each name is timed individually (batch size 1) on a monotonic clock,
    after ``warmup`` passes over all inputs.
    """
    if reps < 1:
        raise ValueError(f"reps must be >= 1, got {reps}")
    if not inputs:
        raise ValueError("inputs must be non-empty")
    for _ in range(warmup):
        for name in inputs:
            predict(name)
    samples = np.empty(reps * len(inputs), dtype=np.float64)
    pos = 0
    clock = time.perf_counter
    for _ in range(reps):
        for name in inputs:
            t0 = clock()
            predict(name)
            samples[pos] = clock() - t0
            pos += 1
    mean = float(samples.mean())
    return LatencyStats(
        mean_s=mean,
        ln_mean_s=float(math.log(mean)) if mean > 0 else float("-inf"),
        p50_s=float(np.percentile(samples, 50)),
        p99_s=float(np.percentile(samples, 99)),
        n_timed=len(samples),
    )
