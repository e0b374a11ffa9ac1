"""Credit-application records, CSV ingestion, debt-ratio filtering and
stratified splitting.

Records are held column-wise: a ``Dataset`` wraps an ``(n, 10)`` float array
where a missing cell is ``nan``, plus an optional 0/1 outcome vector
(0 = good creditor, 1 = bad creditor).
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, TextIO

import numpy as np

from .errors import LabelError, ParseError, SchemaError, SingleClassError, UnlabeledError

OUTCOME_COLUMN = "Outcome"


class FeatureId(Enum):
    P1 = "RevolvingUtilizationOfUnsecuredLines"
    P2 = "Age"
    P3 = "NumberOfTime30-59DaysPastDueNotWorse"
    P4 = "DebtRatio"
    P5 = "MonthlyIncome"
    P6 = "NumberOfOpenCreditLinesAndLoans"
    P7 = "NumberOfTimes90DaysLate"
    P8 = "NumberRealEstateLoansOrLines"
    P9 = "NumberOfTime60-89DaysPastDueNotWorse"
    P10 = "NumberOfDependents"

    @property
    def key(self) -> str:
        return self.name

    @property
    def column(self) -> str:
        return self.value

    @property
    def index(self) -> int:
        return int(self.name[1:]) - 1

    @classmethod
    def from_key(cls, key: str) -> "FeatureId":
        return cls[key.upper()]


FEATURES = tuple(FeatureId)
N_FEATURES = len(FEATURES)
COUNT_FEATURES = (FeatureId.P3, FeatureId.P6, FeatureId.P7, FeatureId.P8, FeatureId.P9, FeatureId.P10)


def _normalize_header(name: str) -> str:
    return name.strip().lower().replace("-", "").replace(" ", "")


@dataclass(frozen=True)
class CreditRecord:
    """One loan application. ``values`` is indexed by ``FeatureId.index``;
    ``None`` marks a missing attribute."""

    values: tuple
    outcome: Optional[int] = None

    def __post_init__(self):
        if len(self.values) != N_FEATURES:
            raise ValueError(f"expected {N_FEATURES} values, got {len(self.values)}")

    def __getitem__(self, feature: FeatureId):
        return self.values[feature.index]


def check_value(feature: FeatureId, value: float) -> Optional[str]:
    """Return a reason string if ``value`` violates the attribute's domain."""
    if not math.isfinite(value):
        return "value is not finite"
    if feature is FeatureId.P2 and value < 0:
        return "age must be non-negative"
    if feature in COUNT_FEATURES and (value < 0 or value != int(value)):
        return "count must be a non-negative integer"
    return None


class Dataset:
    """Immutable, ordered collection of credit records."""

    def __init__(self, values, outcomes=None):
        values = np.array(values, dtype=float)
        if values.ndim != 2 or values.shape[1] != N_FEATURES:
            if values.size == 0:
                values = values.reshape(0, N_FEATURES)
            else:
                raise ValueError(f"values must have shape (n, {N_FEATURES}), got {values.shape}")
        if outcomes is not None:
            outcomes = np.array(outcomes, dtype=np.int64).reshape(-1)
            if outcomes.shape[0] != values.shape[0]:
                raise ValueError("outcomes length does not match record count")
            if np.any((outcomes != 0) & (outcomes != 1)):
                raise LabelError("outcomes must be 0 or 1")
            outcomes.setflags(write=False)
        values.setflags(write=False)
        self._values = values
        self._outcomes = outcomes

    @classmethod
    def from_records(cls, records: Iterable[CreditRecord]) -> "Dataset":
        records = list(records)
        values = [[np.nan if v is None else float(v) for v in r.values] for r in records]
        outcomes = [r.outcome for r in records]
        if records and all(o is not None for o in outcomes):
            return cls(np.array(values, dtype=float).reshape(len(records), N_FEATURES), outcomes)
        if any(o is not None for o in outcomes):
            raise LabelError("either every record carries an outcome or none does")
        return cls(np.array(values, dtype=float).reshape(len(records), N_FEATURES))

    @property
    def values(self) -> np.ndarray:
        """``(n, 10)`` array, ``nan`` for missing cells (read-only)."""
        return self._values

    @property
    def outcomes(self) -> Optional[np.ndarray]:
        return self._outcomes

    @property
    def labeled(self) -> bool:
        return self._outcomes is not None

    @property
    def records(self) -> tuple:
        out = []
        for i, row in enumerate(self._values):
            vals = tuple(None if math.isnan(v) else float(v) for v in row)
            out.append(CreditRecord(vals, None if self._outcomes is None else int(self._outcomes[i])))
        return tuple(out)

    def __len__(self):
        return self._values.shape[0]

    def __getitem__(self, i) -> CreditRecord:
        row = self._values[i]
        vals = tuple(None if math.isnan(v) else float(v) for v in row)
        return CreditRecord(vals, None if self._outcomes is None else int(self._outcomes[i]))

    def subset(self, index) -> "Dataset":
        index = np.asarray(index)
        outcomes = None if self._outcomes is None else self._outcomes[index]
        return Dataset(self._values[index], outcomes)

    def __eq__(self, other):
        if not isinstance(other, Dataset):
            return NotImplemented
        if self._values.shape != other._values.shape or self.labeled != other.labeled:
            return False
        if not np.array_equal(self._values, other._values, equal_nan=True):
            return False
        return not self.labeled or np.array_equal(self._outcomes, other._outcomes)

    __hash__ = None

    def __repr__(self):
        return f"Dataset(n={len(self)}, labeled={self.labeled})"


def load_dataset(source) -> Dataset:
    """Parse CSV text (a stream, or a string holding the CSV content).

    Header names are matched case-insensitively, ignoring hyphens and spaces.
    Unknown columns are ignored. Empty fields become missing values.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    reader = csv.reader(source)
    try:
        header = next(reader)
    except StopIteration:
        raise SchemaError("empty input: no header row") from None

    normalized = [_normalize_header(h) for h in header]
    columns = {}
    for feature in FEATURES:
        hits = [j for j, h in enumerate(normalized) if h == _normalize_header(feature.column)]
        if not hits:
            raise SchemaError(f"missing required column {feature.column}")
        if len(hits) > 1:
            raise SchemaError(f"duplicated column {feature.column}")
        columns[feature] = hits[0]
    outcome_hits = [j for j, h in enumerate(normalized) if h == _normalize_header(OUTCOME_COLUMN)]
    if len(outcome_hits) > 1:
        raise SchemaError(f"duplicated column {OUTCOME_COLUMN}")
    outcome_col = outcome_hits[0] if outcome_hits else None

    rows = []
    outcomes = []
    for k, fields in enumerate(reader, start=1):
        if not fields or all(not f.strip() for f in fields):
            continue
        if len(fields) < len(header):
            fields = fields + [""] * (len(header) - len(fields))
        row = []
        for feature in FEATURES:
            text = fields[columns[feature]].strip()
            if not text:
                row.append(np.nan)
                continue
            try:
                value = float(text)
            except ValueError:
                raise ParseError(k, feature.column, f"not a number: {text!r}") from None
            reason = check_value(feature, value)
            if reason:
                raise ParseError(k, feature.column, reason)
            row.append(value)
        rows.append(row)
        if outcome_col is not None:
            text = fields[outcome_col].strip()
            if text not in ("0", "1", "0.0", "1.0"):
                raise LabelError(f"row {k}: outcome must be 0 or 1, got {text!r}", row=k)
            outcomes.append(int(float(text)))

    values = np.array(rows, dtype=float).reshape(len(rows), N_FEATURES)
    return Dataset(values, outcomes if outcome_col is not None else None)


def _format_value(v: float) -> str:
    if math.isnan(v):
        return ""
    if v == int(v) and abs(v) < 2**53:
        return str(int(v))
    return repr(float(v))


def save_dataset(d: Dataset, sink: Optional[TextIO] = None) -> str:
    """Write ``d`` as CSV in canonical column order. Returns the text."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = [f.column for f in FEATURES]
    if d.labeled:
        header.append(OUTCOME_COLUMN)
    writer.writerow(header)
    for i, row in enumerate(d.values):
        fields = [_format_value(v) for v in row]
        if d.labeled:
            fields.append(str(int(d.outcomes[i])))
        writer.writerow(fields)
    text = buf.getvalue()
    if sink is not None:
        sink.write(text)
    return text


def filter_debt_ratio(d: Dataset) -> Dataset:
    """Keep records whose debt ratio (P4) is present and within [0, 1]."""
    p4 = d.values[:, FeatureId.P4.index]
    with np.errstate(invalid="ignore"):
        keep = (p4 >= 0.0) & (p4 <= 1.0)
    return d.subset(np.flatnonzero(keep))


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def stratified_split_indices(outcomes: Sequence[int], train_fraction: float, seed: int):
    """Index arrays ``(train, test)``, each sorted ascending."""
    if not 0.0 < train_fraction <= 1.0:
        raise ValueError("train_fraction must lie in (0, 1]")
    y = np.asarray(outcomes)
    rng = np.random.default_rng(seed)
    train = []
    for cls in (0, 1):
        members = np.flatnonzero(y == cls)
        if members.size == 0:
            raise SingleClassError(f"class {cls} has no records")
        n_train = min(members.size, _round_half_up(train_fraction * members.size))
        chosen = rng.permutation(members)[:n_train]
        train.append(chosen)
    train = np.sort(np.concatenate(train))
    mask = np.zeros(y.size, dtype=bool)
    mask[train] = True
    return train, np.flatnonzero(~mask)


def stratified_split(d: Dataset, train_fraction: float, seed: int):
    """Per-class holdout split; returns ``(train, test)`` datasets."""
    if not d.labeled:
        raise UnlabeledError("stratified_split requires a labeled dataset")
    train, test = stratified_split_indices(d.outcomes, train_fraction, seed)
    return d.subset(train), d.subset(test)
