"""Random forest of CART trees over bag-of-words counts.

Training follows the usual defaults: bootstrap of n samples per tree, Gini
impurity, floor(sqrt(V)) feature candidates per split, growth until leaves
are pure or smaller than two samples. Per-tree randomness is derived from
(seed, tree index) alone, so training order (serial or parallel) cannot
change the model, and retraining with the same seed is bit-identical.

Two interchangeable kernels grow trees: a compiled Cython one and a pure
NumPy one. Selection happens at import; set NAMETRIAGE_PURE=1 to force the
fallback, or pass ``backend=`` explicitly.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

import numpy as np

from ..features import FeatureVector, Vocabulary
from .base import Prediction, make_prediction
from . import _forest_py
from ._rng import MAX_FEATURES_SUPPORTED, bootstrap_indices, tree_seed

try:
    from . import _forest_core
except ImportError:  # extension not built
    _forest_core = None

# exact integer split comparisons stay within int64 up to this node size
MAX_TRAIN_SAMPLES = 10_000
MAX_COUNT_VALUE = 1024

_KERNELS = {"pure": _forest_py}
if _forest_core is not None:
    _KERNELS["compiled"] = _forest_core


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_KERNELS))


def default_backend() -> str:
    if os.environ.get("NAMETRIAGE_PURE"):
        return "pure"
    return "compiled" if "compiled" in _KERNELS else "pure"


def _kernel(backend: str | None):
    name = backend or default_backend()
    try:
        return name, _KERNELS[name]
    except KeyError:
        raise ValueError(
            f"unknown backend {name!r}; available: {', '.join(available_backends())}"
        ) from None


@dataclass
class DecisionTree:
    feature: np.ndarray  # int32; -1 marks a leaf
    threshold: np.ndarray  # float64; split is count <= threshold
    left: np.ndarray
    right: np.ndarray
    counts: np.ndarray  # int64 (n_nodes, n_classes); class counts per node

    @property
    def n_nodes(self) -> int:
        return len(self.feature)


@dataclass
class RandomForestModel:
    trees: list[DecisionTree]
    tree_count: int
    vocab: Vocabulary
    categories: tuple[str, ...]
    seed: int
    oob_indices: list[np.ndarray] | None = None
    bootstrap_support: list[np.ndarray] | None = None
    _flat: tuple | None = field(default=None, repr=False, compare=False)

    def flattened(self) -> tuple:
        """Concatenated per-tree arrays for batch traversal (cached)."""
        if self._flat is None:
            feats, thrs, lefts, rights, probs, roots = [], [], [], [], [], []
            offset = 0
            for tree in self.trees:
                n = tree.n_nodes
                feats.append(tree.feature)
                thrs.append(tree.threshold)
                shift = np.where(tree.left >= 0, offset, 0).astype(np.int32)
                lefts.append(tree.left + shift)
                rights.append(tree.right + np.where(tree.right >= 0, offset, 0).astype(np.int32))
                leaf_probs = np.zeros((n, len(self.categories)), dtype=np.float64)
                is_leaf = tree.feature < 0
                totals = tree.counts[is_leaf].sum(axis=1, keepdims=True)
                leaf_probs[is_leaf] = tree.counts[is_leaf] / totals
                probs.append(leaf_probs)
                roots.append(offset)
                offset += n
            self._flat = (
                np.concatenate(feats),
                np.concatenate(thrs),
                np.concatenate(lefts),
                np.concatenate(rights),
                np.vstack(probs),
                np.array(roots, dtype=np.int64),
            )
        return self._flat


def _canonical_order(train) -> list[int]:
    """Sort samples by (class, feature content) so input order is irrelevant."""
    def key(i):
        fv, cls = train[i]
        return (cls, tuple(sorted(fv.counts.items())))

    return sorted(range(len(train)), key=key)


def _densify(train, order, n_features) -> tuple[np.ndarray, np.ndarray]:
    X = np.zeros((len(train), n_features), dtype=np.int32)
    y = np.empty(len(train), dtype=np.int32)
    for row, i in enumerate(order):
        fv, cls = train[i]
        y[row] = cls
        for idx, count in fv.counts.items():
            X[row, idx] = count
    return X, y


def train_rf(
    train,
    vocab: Vocabulary,
    categories,
    tree_count: int = 100,
    seed: int = 0,
    backend: str | None = None,
) -> RandomForestModel:
    """Train a forest on (FeatureVector, class index) pairs."""
    if tree_count < 1:
        raise ValueError(f"tree_count must be >= 1, got {tree_count}")
    if not train:
        raise ValueError("cannot train a random forest on an empty training set")
    if len(train) > MAX_TRAIN_SAMPLES:
        raise ValueError(
            f"training set of {len(train)} exceeds the supported "
            f"{MAX_TRAIN_SAMPLES} samples (exact split comparison would overflow)"
        )
    n_features = vocab.size
    if not 1 <= n_features < MAX_FEATURES_SUPPORTED:
        raise ValueError(f"vocabulary size {n_features} outside [1, {MAX_FEATURES_SUPPORTED})")
    categories = tuple(categories)
    n_classes = len(categories)
    for fv, cls in train:
        if not 0 <= cls < n_classes:
            raise ValueError(f"class index {cls} outside [0, {n_classes})")

    order = _canonical_order(train)
    X, y = _densify(train, order, n_features)
    if X.max(initial=0) > MAX_COUNT_VALUE:
        raise ValueError(f"feature counts above {MAX_COUNT_VALUE} are not supported")
    _, kernel = _kernel(backend)

    max_features = max(1, math.isqrt(n_features))
    n = len(train)
    trees: list[DecisionTree] = []
    oob: list[np.ndarray] = []
    support_orig: list[np.ndarray] = []
    order_arr = np.array(order, dtype=np.int64)
    for t in range(tree_count):
        ts = tree_seed(seed, t)
        boot = bootstrap_indices(ts, n)
        arrays = kernel.grow_tree(X, y, n_classes, boot, max_features, ts)
        trees.append(DecisionTree(*arrays))
        support = order_arr[np.unique(boot)]
        support_orig.append(np.sort(support))
        mask = np.ones(n, dtype=bool)
        mask[support] = False
        oob.append(np.flatnonzero(mask))
    return RandomForestModel(
        trees=trees,
        tree_count=tree_count,
        vocab=vocab,
        categories=categories,
        seed=seed,
        oob_indices=oob,
        bootstrap_support=support_orig,
    )


def _densify_vectors(fvs, n_features) -> np.ndarray:
    X = np.zeros((len(fvs), n_features), dtype=np.int32)
    for row, fv in enumerate(fvs):
        for idx, count in fv.counts.items():
            X[row, idx] = min(count, np.iinfo(np.int32).max)
    return X


def predict_rf_scores(
    model: RandomForestModel, fvs, backend: str | None = None
) -> np.ndarray:
    """Per-class probabilities (mean of leaf distributions) for many vectors."""
    X = _densify_vectors(fvs, model.vocab.size)
    name, kernel = _kernel(backend)
    flat = model.flattened()
    if name == "compiled":
        return kernel.predict_counts(*flat, X)
    return _forest_py.predict_counts(flat, X)


def predict_rf(model: RandomForestModel, fv: FeatureVector, backend: str | None = None) -> Prediction:
    scores = predict_rf_scores(model, [fv], backend)[0]
    return make_prediction(model.categories, scores)
