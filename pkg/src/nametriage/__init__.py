"""nametriage: classify documents from file names alone, defer the rest.

Pipeline: percent-escape decoding and rule-based splitting (tokenizer),
TF-IDF keyword extraction with trie segmentation of glued words (keywords),
bag-of-words encoding (features), naive Bayes or random forest classifiers
with confidence scores (models), and selective-classification evaluation
with a fast/heavy cost model (evaluation).
"""

__version__ = "0.1.0"

from .dataset import (
    CvSplit,
    Dataset,
    FileNameRecord,
    filter_by_ambiguity,
    load_dataset,
    save_dataset,
    stratified_kfold,
    synth_fixture,
)
from .errors import (
    DatasetError,
    ModelChecksumError,
    ModelFileError,
    ModelVersionError,
    TriageError,
)
from .keywords import (
    KeywordIndex,
    TfidfConfig,
    TfidfTable,
    compute_tfidf,
    extract_keywords,
    tokenize_full,
    trie_segment,
)
from .pipeline import (
    FileNameClassifier,
    PipelineConfig,
    cross_validate,
    load_classifier,
    save_classifier,
    train_classifier,
    transfer_evaluate,
)
from .tokenizer import TokenSequence, decode_escapes, lemmatize, universal_tokenize

__all__ = [
    "__version__",
    "CvSplit",
    "Dataset",
    "FileNameRecord",
    "filter_by_ambiguity",
    "load_dataset",
    "save_dataset",
    "stratified_kfold",
    "synth_fixture",
    "TriageError",
    "DatasetError",
    "ModelFileError",
    "ModelChecksumError",
    "ModelVersionError",
    "KeywordIndex",
    "TfidfConfig",
    "TfidfTable",
    "compute_tfidf",
    "extract_keywords",
    "tokenize_full",
    "trie_segment",
    "FileNameClassifier",
    "PipelineConfig",
    "cross_validate",
    "train_classifier",
    "transfer_evaluate",
    "save_classifier",
    "load_classifier",
    "TokenSequence",
    "decode_escapes",
    "lemmatize",
    "universal_tokenize",
]
