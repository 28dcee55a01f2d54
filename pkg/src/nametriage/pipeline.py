"""End-to-end pipeline: keyword index + vocabulary + classifier.

``train_classifier`` fits everything from a training dataset; the returned
``FileNameClassifier`` predicts straight from raw file names. Keyword
extraction and the vocabulary only ever see training records, so
cross-validation folds stay leak-free.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from .dataset import Dataset, filter_by_ambiguity, split_fold, stratified_kfold
from .errors import DatasetError
from .evaluation import EvalReport, ThresholdMetrics, auroc, best_threshold, threshold_sweep
from .features import FeatureVector, Vocabulary, build_vocab, encode
from .keywords import (
    KeywordIndex,
    TfidfConfig,
    compute_tfidf,
    extract_keywords,
    tokenize_full,
)
from .models import (
    NaiveBayesModel,
    Prediction,
    RandomForestModel,
    load_model,
    make_prediction,
    predict_nb,
    predict_rf_scores,
    save_model,
    train_nb,
    train_rf,
)


@dataclass(frozen=True)
class PipelineConfig:
    model: str = "rf"  # "nb" or "rf"
    k: float = 0.2
    tfidf: TfidfConfig = field(default_factory=TfidfConfig)
    alpha: float = 1.0
    tree_count: int = 100
    seed: int = 0
    binary_counts: bool = False
    backend: str | None = None  # forest kernel; None = auto

    def with_k(self, k: float) -> "PipelineConfig":
        return replace(self, k=k)


@dataclass
class FileNameClassifier:
    index: KeywordIndex
    vocab: Vocabulary
    model: object  # NaiveBayesModel | RandomForestModel
    model_type: str
    binary_counts: bool = False
    best_threshold: float | None = None
    backend: str | None = None

    @property
    def categories(self) -> tuple[str, ...]:
        return self.model.categories

    def tokens(self, name: str) -> tuple[str, ...]:
        return tokenize_full(self.index, name).tokens

    def encode(self, name: str) -> FeatureVector:
        return encode(self.vocab, self.tokens(name), binary=self.binary_counts)

    def predict(self, name: str) -> Prediction:
        fv = self.encode(name)
        if self.model_type == "nb":
            return predict_nb(self.model, fv)
        scores = predict_rf_scores(self.model, [fv], backend=self.backend)[0]
        return make_prediction(self.categories, scores)

    def predict_names(self, names: Sequence[str]) -> list[Prediction]:
        """Batch prediction; RF traverses all trees in one pass."""
        fvs = [self.encode(n) for n in names]
        if self.model_type == "nb":
            return [predict_nb(self.model, fv) for fv in fvs]
        scores = predict_rf_scores(self.model, fvs, backend=self.backend)
        return [make_prediction(self.categories, row) for row in scores]


def train_classifier(train: Dataset, config: PipelineConfig = PipelineConfig()) -> FileNameClassifier:
    """Fit keyword index, vocabulary, and model on indicative training records."""
    if config.model not in ("nb", "rf"):
        raise ValueError(f"unknown model type {config.model!r}")
    train_ind = filter_by_ambiguity(train, {"indicative"})
    if not train_ind.records:
        raise DatasetError("training set has no indicative records")

    table = compute_tfidf(train_ind, config.tfidf)
    index = extract_keywords(table, config.k)

    sequences = [tokenize_full(index, r.file_name).tokens for r in train_ind.records]
    vocab = build_vocab(sequences)
    cat_to_idx = {c: i for i, c in enumerate(train_ind.categories)}
    pairs = [
        (encode(vocab, seq, binary=config.binary_counts), cat_to_idx[r.label])
        for seq, r in zip(sequences, train_ind.records)
    ]
    if config.model == "nb":
        model = train_nb(pairs, vocab, train_ind.categories, alpha=config.alpha)
    else:
        model = train_rf(
            pairs,
            vocab,
            train_ind.categories,
            tree_count=config.tree_count,
            seed=config.seed,
            backend=config.backend,
        )
    return FileNameClassifier(
        index=index,
        vocab=vocab,
        model=model,
        model_type=config.model,
        binary_counts=config.binary_counts,
        backend=config.backend,
    )


def save_classifier(clf: FileNameClassifier, path) -> None:
    save_model(
        clf.model,
        path,
        keyword_index=clf.index.to_json(),
        best_threshold=clf.best_threshold,
        binary_counts=clf.binary_counts,
    )


def load_classifier(path) -> FileNameClassifier:
    loaded = load_model(path)
    blob = loaded.keyword_index
    index = KeywordIndex.from_json(blob) if blob else KeywordIndex.empty()
    return FileNameClassifier(
        index=index,
        vocab=loaded.model.vocab,
        model=loaded.model,
        model_type=loaded.model_type,
        binary_counts=loaded.binary_counts,
        best_threshold=loaded.best_threshold,
    )


@dataclass
class CvResult:
    preds: list[tuple[Prediction, str]]  # one entry per record, in fold order
    accuracy: float
    fold_accuracies: list[float]


def cross_validate(ds: Dataset, config: PipelineConfig, folds: int = 5, seed: int | None = None) -> CvResult:
    """k-fold CV over the indicative records of ``ds``.

    Every record is predicted exactly once, by the model trained on the
    other folds.
    """
    ind = filter_by_ambiguity(ds, {"indicative"})
    cv = stratified_kfold(ind, folds, seed if seed is not None else config.seed)
    preds: list[tuple[Prediction, str]] = []
    fold_accs = []
    for fold in range(folds):
        train_ds, test_ds = split_fold(ind, cv, fold)
        clf = train_classifier(train_ds, config)
        fold_preds = clf.predict_names([r.file_name for r in test_ds.records])
        scored = list(zip(fold_preds, (r.label for r in test_ds.records)))
        preds.extend(scored)
        fold_accs.append(sum(p.label == t for p, t in scored) / len(scored))
    accuracy = sum(p.label == t for p, t in preds) / len(preds)
    return CvResult(preds=preds, accuracy=accuracy, fold_accuracies=fold_accs)


@dataclass
class TransferResult:
    preds: list[tuple[Prediction, str]]  # indicative in-scope test records
    accuracy: float
    conf_indicative: list[float]
    conf_ambiguous: list[float]
    conf_oos: list[float]
    all_preds: list[tuple[Prediction, str]]  # every test record, any ambiguity
    classifier: FileNameClassifier


def transfer_evaluate(train: Dataset, test: Dataset, config: PipelineConfig) -> TransferResult:
    """Train on ``train`` indicative records, evaluate on ``test``.

    Prediction metrics use the indicative in-scope test records; confidence
    populations are collected per ambiguity type for AUROC.
    """
    clf = train_classifier(train, config)
    names = [r.file_name for r in test.records]
    predictions = clf.predict_names(names)

    in_scope = set(clf.categories)
    preds: list[tuple[Prediction, str]] = []
    conf = {"indicative": [], "ambiguous": [], "out_of_scope": []}
    all_preds: list[tuple[Prediction, str]] = []
    for rec, pred in zip(test.records, predictions):
        conf[rec.ambiguity].append(pred.confidence)
        all_preds.append((pred, rec.label))
        if rec.ambiguity == "indicative" and rec.label in in_scope:
            preds.append((pred, rec.label))
    if not preds:
        raise DatasetError("test set has no indicative in-scope records")
    accuracy = sum(p.label == t for p, t in preds) / len(preds)
    return TransferResult(
        preds=preds,
        accuracy=accuracy,
        conf_indicative=conf["indicative"],
        conf_ambiguous=conf["ambiguous"],
        conf_oos=conf["out_of_scope"],
        all_preds=all_preds,
        classifier=clf,
    )


def build_report(
    preds: list[tuple[Prediction, str]],
    rate_floor: float = 0.9,
    step: float = 0.01,
    conf_indicative: list[float] | None = None,
    conf_ambiguous: list[float] | None = None,
    conf_oos: list[float] | None = None,
) -> EvalReport:
    """Assemble the evaluation report for one prediction set."""
    sweep = threshold_sweep(preds, step)
    best = best_threshold(preds, rate_floor, step)
    accuracy = sum(p.label == t for p, t in preds) / len(preds)
    confusion: dict = {}
    for pred, truth in preds:
        slot = confusion.setdefault(truth, {"errors": 0, "total": 0})
        slot["total"] += 1
        if pred.label != truth:
            slot["errors"] += 1
    auroc_amb = (
        auroc(conf_indicative, conf_ambiguous)
        if conf_indicative and conf_ambiguous
        else None
    )
    auroc_oos = (
        auroc(conf_indicative, conf_oos) if conf_indicative and conf_oos else None
    )
    return EvalReport(
        per_threshold=sweep,
        best=best,
        accuracy=accuracy,
        auroc_indicative_vs_ambiguous=auroc_amb,
        auroc_indicative_vs_oos=auroc_oos,
        confusion=confusion,
    )
