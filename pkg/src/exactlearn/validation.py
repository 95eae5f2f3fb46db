"""Input checks shared by the estimators and the CLI."""

from __future__ import annotations

from typing import Sequence

import numpy as np
from sklearn.utils.validation import check_array

from .table import ConceptTable
from .tree import QueryMode


def check_table(X, elements: Sequence[str] | None = None) -> ConceptTable:
    """Turn a 0/1 matrix (rows are concepts, columns elements) into a table.

    Accepts anything ``check_array`` does, plus an existing ConceptTable.
    DataFrame column names become element labels unless ``elements`` is
    given.  Duplicate rows are collapsed.
    """
    if isinstance(X, ConceptTable):
        return X
    if elements is None and hasattr(X, "columns"):
        elements = [str(c) for c in X.columns]
    arr = check_array(X, dtype=None, ensure_min_samples=1, ensure_min_features=1)
    if not np.isin(arr, (0, 1)).all():
        raise ValueError("concept tables hold only 0/1 entries")
    arr = arr.astype(np.int8)
    rows = {tuple(int(b) for b in row) for row in arr}
    n = arr.shape[1]
    return ConceptTable(n, tuple(elements) if elements is not None else None, tuple(rows))


def check_mode(mode) -> QueryMode:
    try:
        return QueryMode(str(mode).upper())
    except ValueError:
        raise ValueError(f"unknown query mode {mode!r}; expected one of "
                         f"{[m.value for m in QueryMode]}") from None


def check_concepts(X, n: int) -> np.ndarray:
    """Validate a batch of hidden concepts to run through a fitted tree."""
    arr = check_array(X, dtype=None, ensure_min_samples=1)
    if arr.shape[1] != n:
        raise ValueError(f"expected {n} columns, got {arr.shape[1]}")
    if not np.isin(arr, (0, 1)).all():
        raise ValueError("concepts hold only 0/1 entries")
    return arr.astype(np.int8)
