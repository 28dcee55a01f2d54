"""Classifiers producing per-class confidence scores."""

from .base import Prediction, make_prediction
from .forest import (
    DecisionTree,
    RandomForestModel,
    available_backends,
    default_backend,
    predict_rf,
    predict_rf_scores,
    train_rf,
)
from .naive_bayes import NaiveBayesModel, predict_nb, train_nb
from .serialize import LoadedModel, load_model, save_model

__all__ = [
    "Prediction",
    "make_prediction",
    "DecisionTree",
    "RandomForestModel",
    "NaiveBayesModel",
    "available_backends",
    "default_backend",
    "train_rf",
    "predict_rf",
    "predict_rf_scores",
    "train_nb",
    "predict_nb",
    "LoadedModel",
    "save_model",
    "load_model",
]
