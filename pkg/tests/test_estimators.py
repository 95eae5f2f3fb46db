import numpy as np
import pandas as pd
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from exactlearn import ExactDepthSearch, QueryTreeLearner, StructureProfiler
from exactlearn.oracle import Query
from exactlearn.validation import check_mode, check_table

CHAIN = np.array([[0, 0, 0], [1, 0, 0], [1, 1, 0], [1, 1, 1]])


def test_check_table_dedups_and_labels():
    df = pd.DataFrame([[0, 1], [0, 1], [1, 0]], columns=["a", "b"])
    t = check_table(df)
    assert t.elements == ("a", "b") and len(t) == 2


@pytest.mark.parametrize("bad", [np.array([[0, 2]]), np.array([[0.5, 1]]), np.zeros((0, 3))])
def test_check_table_rejects(bad):
    with pytest.raises(ValueError):
        check_table(bad)


def test_check_mode():
    assert check_mode("me").value == "ME"
    with pytest.raises(ValueError):
        check_mode("Q")


class TestQueryTreeLearner:
    def test_fit_predict(self):
        est = QueryTreeLearner("eq_rank").fit(CHAIN)
        assert est.n_features_in_ == 3
        assert est.depth_ <= est.bound_
        assert est.mode_.value == "E"
        np.testing.assert_array_equal(est.predict(CHAIN), CHAIN)
        assert est.score(CHAIN) == 1.0
        assert est.verify()
        assert (est.n_queries(CHAIN) <= est.depth_).all()

    def test_params(self):
        est = QueryTreeLearner("proper_halving")
        assert est.get_params() == {"strategy": "proper_halving"}
        assert clone(est).strategy == "proper_halving"

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            QueryTreeLearner("nope").fit(CHAIN)

    def test_not_fitted(self):
        with pytest.raises(NotFittedError):
            QueryTreeLearner().predict(CHAIN)

    def test_predict_width(self):
        est = QueryTreeLearner().fit(CHAIN)
        with pytest.raises(ValueError):
            est.predict(np.zeros((1, 2), dtype=int))


def test_exact_depth_search():
    est = ExactDepthSearch(mode="M").fit(CHAIN)
    assert est.depth_ == 2
    assert est.first_query_ == Query("member", element=1)
    assert ExactDepthSearch(mode="E").fit(CHAIN[:1]).first_query_ is None


def test_structure_profiler():
    est = StructureProfiler(cap_rank=3).fit(CHAIN)
    p = est.profile_
    assert (p.vc, p.rank, p.reduction_number, p.i_reduction_number) == (1, 2, 2, 2)
    assert est.get_params()["cap_rank"] == 3
