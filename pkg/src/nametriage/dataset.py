"""Labeled file-name datasets: loading, CV splits, and synthetic fixtures.

On-disk formats are CSV (header ``file_name,label,ambiguity``) and JSONL
with the same keys, UTF-8 only. Out-of-scope records whose source label is
not an in-scope category are re-labeled with the sentinel ``__oos__`` so
the class-index space stays closed.
"""

from __future__ import annotations

import csv
import json
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DatasetError

AMBIGUITY_KINDS = ("indicative", "ambiguous", "out_of_scope")
OOS_LABEL = "__oos__"


@dataclass(frozen=True)
class FileNameRecord:
    file_name: str
    label: str
    ambiguity: str


@dataclass(frozen=True)
class Dataset:
    records: tuple[FileNameRecord, ...]
    categories: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.records)

    @classmethod
    def from_records(cls, records: Iterable[FileNameRecord]) -> "Dataset":
        """Build a dataset whose categories are the sorted in-scope labels."""
        recs = tuple(records)
        cats = sorted({r.label for r in recs if r.ambiguity != "out_of_scope"})
        return cls(records=recs, categories=tuple(cats))

    def subset(self, records: Iterable[FileNameRecord]) -> "Dataset":
        """Same category space, different record list."""
        return Dataset(records=tuple(records), categories=self.categories)


def _make_record(raw: dict, row: int, path: Path) -> FileNameRecord:
    for field in ("file_name", "label", "ambiguity"):
        value = raw.get(field)
        if value is None or value == "":
            if field == "label" and raw.get("ambiguity") == "out_of_scope":
                continue  # out-of-scope rows may leave the label blank
            raise DatasetError(f"{path}: row {row}: missing or empty field {field!r}")
    ambiguity = raw["ambiguity"]
    if ambiguity not in AMBIGUITY_KINDS:
        raise DatasetError(
            f"{path}: row {row}: unknown ambiguity value {ambiguity!r} "
            f"(expected one of {', '.join(AMBIGUITY_KINDS)})"
        )
    label = raw.get("label") or OOS_LABEL
    return FileNameRecord(file_name=raw["file_name"], label=label, ambiguity=ambiguity)


def load_dataset(path, format: str | None = None) -> Dataset:
    """Load a dataset from CSV or JSONL.

    ``format`` defaults to the file suffix. In-scope categories are the
    distinct labels of indicative and ambiguous records, sorted
    lexicographically. An out-of-scope record whose label collides with an
    in-scope category is rejected as an annotation conflict.
    """
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(f"dataset file not found: {p}")
    fmt = format or ("jsonl" if p.suffix in (".jsonl", ".ndjson") else "csv")
    if fmt not in ("csv", "jsonl"):
        raise DatasetError(f"unsupported dataset format {fmt!r}")

    rows: list[tuple[int, dict]] = []
    if fmt == "csv":
        with p.open(newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None:
                raise DatasetError(f"{p}: no records (empty file)")
            missing = {"file_name", "label", "ambiguity"} - set(reader.fieldnames)
            if missing:
                raise DatasetError(f"{p}: header missing columns: {', '.join(sorted(missing))}")
            for i, raw in enumerate(reader, start=2):
                if raw.get("file_name") is None and raw.get("label") is None:
                    continue  # fully blank line
                rows.append((i, raw))
    else:
        with p.open(encoding="utf-8") as fh:
            for i, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    raw = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise DatasetError(f"{p}: row {i}: invalid JSON ({exc})") from exc
                if not isinstance(raw, dict):
                    raise DatasetError(f"{p}: row {i}: expected an object")
                rows.append((i, raw))
    if not rows:
        raise DatasetError(f"{p}: no records")

    records = [_make_record(raw, row, p) for row, raw in rows]
    in_scope = sorted(
        {r.label for r in records if r.ambiguity != "out_of_scope"}
    )
    scoped: list[FileNameRecord] = []
    for (row, _), rec in zip(rows, records):
        if rec.ambiguity == "out_of_scope":
            if rec.label in in_scope:
                raise DatasetError(
                    f"{p}: row {row}: out_of_scope record labeled with "
                    f"in-scope category {rec.label!r}"
                )
            rec = FileNameRecord(rec.file_name, OOS_LABEL, rec.ambiguity)
        scoped.append(rec)
    return Dataset(records=tuple(scoped), categories=tuple(in_scope))


def save_dataset(ds: Dataset, path, format: str | None = None) -> None:
    p = Path(path)
    fmt = format or ("jsonl" if p.suffix in (".jsonl", ".ndjson") else "csv")
    if fmt == "csv":
        with p.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["file_name", "label", "ambiguity"])
            for r in ds.records:
                writer.writerow([r.file_name, r.label, r.ambiguity])
    elif fmt == "jsonl":
        with p.open("w", encoding="utf-8") as fh:
            for r in ds.records:
                fh.write(
                    json.dumps(
                        {"file_name": r.file_name, "label": r.label, "ambiguity": r.ambiguity},
                        ensure_ascii=False,
                    )
                    + "\n"
                )
    else:
        raise DatasetError(f"unsupported dataset format {fmt!r}")


@dataclass(frozen=True)
class CvSplit:
    fold_count: int
    assignments: tuple[int, ...]


def stratified_kfold(ds: Dataset, k: int, seed: int) -> CvSplit:
    """Deterministic stratified fold assignment.

    Records are grouped per category (out-of-scope records form their own
    group), shuffled with ``seed``, and dealt round-robin, so per-category
    fold sizes differ by at most one.
    """
    if k < 2:
        raise ValueError(f"fold count must be >= 2, got {k}")
    for cat in ds.categories:
        n_ind = sum(
            1 for r in ds.records if r.label == cat and r.ambiguity == "indicative"
        )
        if n_ind < k:
            raise DatasetError(
                f"category {cat!r} has only {n_ind} indicative records, need >= {k}"
            )
    groups: dict[str, list[int]] = {}
    for idx, rec in enumerate(ds.records):
        groups.setdefault(rec.label, []).append(idx)

    rng = random.Random(seed)
    assignments = [0] * len(ds.records)
    order = list(ds.categories) + ([OOS_LABEL] if OOS_LABEL in groups else [])
    for cat in order:
        indices = groups.get(cat, [])
        rng.shuffle(indices)
        for pos, idx in enumerate(indices):
            assignments[idx] = pos % k
    return CvSplit(fold_count=k, assignments=tuple(assignments))


def split_fold(ds: Dataset, cv: CvSplit, fold: int) -> tuple[Dataset, Dataset]:
    """(train, test) datasets for one fold index."""
    if not 0 <= fold < cv.fold_count:
        raise ValueError(f"fold {fold} outside [0, {cv.fold_count})")
    train = [r for r, a in zip(ds.records, cv.assignments) if a != fold]
    test = [r for r, a in zip(ds.records, cv.assignments) if a == fold]
    return ds.subset(train), ds.subset(test)


def filter_by_ambiguity(ds: Dataset, kinds) -> Dataset:
    """Keep records whose ambiguity is in ``kinds``; categories unchanged."""
    kinds = set(kinds)
    return ds.subset(r for r in ds.records if r.ambiguity in kinds)


_FIXTURE_NAMES = (
    "smith", "johnson", "garcia", "chen", "patel", "miller", "brown",
    "davis", "wilson", "taylor", "moore", "clark", "lewis", "walker",
)
_FIXTURE_YEARS = tuple(str(y) for y in range(2015, 2025))


def synth_fixture(categories: Sequence[str], per_class: int, seed: int) -> Dataset:
    """Small deterministic dataset of indicative names for tests.

    Each name glues the category's words together with a person name and a
    year in one of the observed styles (snake_case, camelCase, digits glued
    straight onto words).
    """
    if per_class < 1:
        raise ValueError(f"per_class must be >= 1, got {per_class}")
    rng = random.Random(seed)
    records = []
    for cat in categories:
        words = [w for w in cat.split("_") if w]
        for _ in range(per_class):
            person = rng.choice(_FIXTURE_NAMES)
            year = rng.choice(_FIXTURE_YEARS)
            style = rng.choice(("snake", "camel", "glued"))
            if style == "snake":
                stem = "_".join([person, *words, year])
            elif style == "camel":
                stem = person.capitalize() + "".join(w.capitalize() for w in words) + year
            else:
                stem = person + "".join(words) + year
            records.append(
                FileNameRecord(file_name=stem + ".pdf", label=cat, ambiguity="indicative")
            )
    return Dataset.from_records(records)
