"""Estimator-style wrappers.

``fit`` takes a 0/1 matrix whose rows are the candidate concepts (or a
ConceptTable).  ``predict`` plays the fitted tree against hidden concepts
and returns the tuple each one is identified as.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .families import Caps, indicator_estimate
from .learners import LEARNERS
from .oracle import best_first_query, exact_depth
from .tree import depth, run_tree, verify_solves
from .validation import check_concepts, check_mode, check_table


class QueryTreeLearner(BaseEstimator):
    """Build a solving decision tree with one of the constructive learners.

    Parameters
    ----------
    strategy : str
        Key of ``LEARNERS``, e.g. ``"eq_rank"`` or ``"membership_halving"``.
    """

    def __init__(self, strategy: str = "membership_halving"):
        self.strategy = strategy

    def fit(self, X, y=None, elements=None):
        if self.strategy not in LEARNERS:
            raise ValueError(f"unknown strategy {self.strategy!r}; "
                             f"expected one of {sorted(LEARNERS)}")
        info = LEARNERS[self.strategy]
        t = check_table(X, elements)
        self.table_ = t
        self.tree_ = info.build(t)
        self.depth_ = depth(self.tree_)
        self.mode_ = info.mode
        self.bound_ = float(info.bound(t))
        self.n_features_in_ = t.n
        return self

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self, "tree_")
        arr = check_concepts(X, self.n_features_in_)
        return np.array([run_tree(self.tree_, row)[0] for row in arr], dtype=np.int8)

    def n_queries(self, X) -> np.ndarray:
        """Queries the tree asks for each hidden concept."""
        check_is_fitted(self, "tree_")
        arr = check_concepts(X, self.n_features_in_)
        return np.array([run_tree(self.tree_, row)[1] for row in arr])

    def score(self, X, y=None) -> float:
        """Fraction of hidden concepts identified exactly."""
        arr = check_concepts(X, getattr(self, "n_features_in_", 0) or np.asarray(X).shape[1])
        return float(np.mean(np.all(self.predict(arr) == arr, axis=1)))

    def verify(self) -> bool:
        check_is_fitted(self, "tree_")
        return verify_solves(self.tree_, self.table_)


class ExactDepthSearch(BaseEstimator):
    """Minimum solving depth for one query mode, by exhaustive game search."""

    def __init__(self, mode: str = "M", gate_override: bool = False):
        self.mode = mode
        self.gate_override = gate_override

    def fit(self, X, y=None, elements=None):
        mode = check_mode(self.mode)
        t = check_table(X, elements)
        self.table_ = t
        self.depth_ = exact_depth(t, mode, gate_override=self.gate_override)
        self.first_query_ = (best_first_query(t, mode, gate_override=self.gate_override)
                             if len(t) > 1 else None)
        self.n_features_in_ = t.n
        return self


class StructureProfiler(BaseEstimator):
    """VC-dimension, rank, reduction numbers and the indicator estimate."""

    def __init__(self, cap_reduction: int = 2, cap_vc: int = 2, cap_rank: int = 2,
                 cap_i_reduction: int = 2):
        self.cap_reduction = cap_reduction
        self.cap_vc = cap_vc
        self.cap_rank = cap_rank
        self.cap_i_reduction = cap_i_reduction

    def fit(self, X, y=None, elements=None):
        t = check_table(X, elements)
        caps = Caps(self.cap_reduction, self.cap_vc, self.cap_rank, self.cap_i_reduction)
        self.table_ = t
        self.profile_ = indicator_estimate(t, caps)
        self.n_features_in_ = t.n
        return self
