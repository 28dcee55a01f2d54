"""Model persistence: one JSON document with a CRC-32 over its canonical form.

Layout:

    {"format_version": 1, "model_type": "nb" | "rf",
     "categories": [...], "vocab": [token, ...],
     "binary_counts": bool, "keyword_index": {...} | null,
     "best_threshold": float | null,
     "parameters": {...}, "crc32": int}

The checksum is computed over the compact sorted-keys serialization of the
document without the crc32 field, so a retrain with the same seed writes a
byte-identical file.
"""

from __future__ import annotations

import json
import zlib
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..errors import ModelChecksumError, ModelFileError, ModelVersionError
from ..features import Vocabulary
from .forest import DecisionTree, RandomForestModel
from .naive_bayes import NaiveBayesModel

FORMAT_VERSION = 1


def _canonical(doc: dict) -> bytes:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")).encode("utf-8")


def _tree_to_json(tree: DecisionTree) -> dict:
    is_leaf = tree.feature < 0
    return {
        "feature": tree.feature.tolist(),
        "threshold": tree.threshold.tolist(),
        "left": tree.left.tolist(),
        "right": tree.right.tolist(),
        "leaf_counts": tree.counts[is_leaf].tolist(),
    }


def _tree_from_json(blob: dict, n_classes: int) -> DecisionTree:
    feature = np.asarray(blob["feature"], dtype=np.int32)
    counts = np.zeros((len(feature), n_classes), dtype=np.int64)
    leaf_rows = np.flatnonzero(feature < 0)
    leaf_counts = blob["leaf_counts"]
    if len(leaf_rows) != len(leaf_counts):
        raise ModelFileError("tree leaf count table does not match tree shape")
    if len(leaf_counts):
        counts[leaf_rows] = np.asarray(leaf_counts, dtype=np.int64)
    return DecisionTree(
        feature=feature,
        threshold=np.asarray(blob["threshold"], dtype=np.float64),
        left=np.asarray(blob["left"], dtype=np.int32),
        right=np.asarray(blob["right"], dtype=np.int32),
        counts=counts,
    )


def save_model(
    model,
    path,
    keyword_index: dict | None = None,
    best_threshold: float | None = None,
    binary_counts: bool = False,
) -> None:
    """Serialize a trained NB or RF model (plus pipeline extras) to ``path``."""
    if isinstance(model, NaiveBayesModel):
        model_type = "nb"
        parameters = {
            "alpha": model.alpha,
            "class_log_prior": model.class_log_prior.tolist(),
            "token_log_likelihood": model.token_log_likelihood.tolist(),
        }
    elif isinstance(model, RandomForestModel):
        model_type = "rf"
        parameters = {
            "tree_count": model.tree_count,
            "seed": model.seed,
            "trees": [_tree_to_json(t) for t in model.trees],
        }
    else:
        raise TypeError(f"cannot serialize model of type {type(model).__name__}")

    doc = {
        "format_version": FORMAT_VERSION,
        "model_type": model_type,
        "categories": list(model.categories),
        "vocab": model.vocab.tokens(),
        "binary_counts": bool(binary_counts),
        "keyword_index": keyword_index,
        "best_threshold": best_threshold,
        "parameters": parameters,
    }
    doc["crc32"] = zlib.crc32(_canonical(doc))
    Path(path).write_bytes(_canonical(doc))


@dataclass
class LoadedModel:
    model: object  # NaiveBayesModel | RandomForestModel
    model_type: str
    keyword_index: dict | None
    best_threshold: float | None
    binary_counts: bool


def load_model(path) -> LoadedModel:
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(f"model file not found: {p}")
    raw = p.read_bytes()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ModelFileError(f"{p}: truncated or corrupt model file ({exc})") from exc
    if not isinstance(doc, dict):
        raise ModelFileError(f"{p}: model file is not a JSON object")

    version = doc.get("format_version")
    if not isinstance(version, int) or version < 1:
        raise ModelFileError(f"{p}: missing or invalid format_version")
    if version > FORMAT_VERSION:
        raise ModelVersionError(
            f"{p}: format_version {version} is newer than supported ({FORMAT_VERSION})"
        )

    stored_crc = doc.pop("crc32", None)
    if stored_crc is None:
        raise ModelFileError(f"{p}: missing crc32")
    actual = zlib.crc32(_canonical(doc))
    if actual != stored_crc:
        raise ModelChecksumError(
            f"{p}: checksum mismatch (stored {stored_crc}, computed {actual})"
        )

    try:
        categories = tuple(doc["categories"])
        vocab = Vocabulary(token_to_index={t: i for i, t in enumerate(doc["vocab"])})
        params = doc["parameters"]
        model_type = doc["model_type"]
        if model_type == "nb":
            model = NaiveBayesModel(
                class_log_prior=np.asarray(params["class_log_prior"], dtype=np.float64),
                token_log_likelihood=np.asarray(
                    params["token_log_likelihood"], dtype=np.float64
                ),
                vocab=vocab,
                categories=categories,
                alpha=float(params["alpha"]),
            )
        elif model_type == "rf":
            model = RandomForestModel(
                trees=[_tree_from_json(t, len(categories)) for t in params["trees"]],
                tree_count=int(params["tree_count"]),
                vocab=vocab,
                categories=categories,
                seed=int(params["seed"]),
            )
        else:
            raise ModelFileError(f"{p}: unknown model_type {model_type!r}")
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelFileError(f"{p}: malformed model document ({exc})") from exc
    return LoadedModel(
        model=model,
        model_type=model_type,
        keyword_index=doc.get("keyword_index"),
        best_threshold=doc.get("best_threshold"),
        binary_counts=bool(doc.get("binary_counts", False)),
    )
