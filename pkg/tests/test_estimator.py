import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import Pipeline
from sklearn.preprocessing import FunctionTransformer

from conftest import FIGURE_EIGHT, HOPF, TREFOIL
from fourpage.estimator import FEATURES, FourPagePresenter, check_diagram, check_diagrams
from fourpage.exceptions import SplitDiagram
from fourpage.fixtures import get_fixture

X = [TREFOIL, HOPF, FIGURE_EIGHT]


def test_params_round_trip():
    est = FourPagePresenter(tree="default", epsilon=0.01)
    params = est.get_params()
    assert params["tree"] == "default" and params["epsilon"] == 0.01
    est.set_params(tree="strict")
    assert est.tree == "strict"
    c = clone(est)
    assert c.get_params() == est.get_params()
    assert not hasattr(c, "reports_")


def test_fit_transform_values():
    Z = FourPagePresenter().fit_transform(X)
    assert Z.dtype == np.int64
    assert Z.shape == (3, len(FEATURES))
    arcs = Z[:, FEATURES.index("arcs")]
    assert arcs.tolist() == [6, 4, 8]
    assert (Z[:, FEATURES.index("verified")] == 1).all()
    assert (Z[:, FEATURES.index("rib_bound")] == arcs).all()


def test_predict_nonalternating():
    est = FourPagePresenter().fit([TREFOIL])
    pred = est.predict([get_fixture("8_19"), get_fixture("8_20").diagram])
    assert pred.tolist() == [13, 12]


def test_transform_matches_fit_transform():
    est = FourPagePresenter(tree="default")
    assert (est.fit_transform(X) == est.fit(X).transform(X)).all()


def test_pipeline():
    pipe = Pipeline([
        ("bounds", FourPagePresenter()),
        ("slack", FunctionTransformer(lambda Z: Z[:, [2]] - Z[:, [1]])),
    ])
    assert pipe.fit_transform(X).ravel().tolist() == [0, 0, 0]


def test_feature_names():
    assert list(FourPagePresenter().fit(X).get_feature_names_out()) == list(FEATURES)


@pytest.mark.parametrize(
    "params", [{"tree": "bogus"}, {"epsilon": 0}, {"epsilon": -1.0}, {"seed": "x"}]
)
def test_bad_params(params):
    with pytest.raises(ValueError):
        FourPagePresenter(**params).fit(X)


def test_not_fitted():
    with pytest.raises(NotFittedError):
        FourPagePresenter().transform(X)


def test_input_validation():
    assert check_diagram([[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).crossing_number == 3
    assert check_diagram({"pd": [[4, 2, 3, 1], [2, 4, 1, 3]]}).crossing_number == 2
    with pytest.raises(TypeError):
        check_diagram(3.5)
    with pytest.raises(ValueError):
        check_diagrams(TREFOIL)
    with pytest.raises(ValueError):
        check_diagrams([])


def test_componentwise_param():
    split = TREFOIL + "; X 11 14 12 15; X 13 16 14 11; X 15 12 16 13"
    with pytest.raises(SplitDiagram):
        FourPagePresenter().fit([split])
    Z = FourPagePresenter(componentwise=True).fit_transform([split])
    assert Z[0, FEATURES.index("arcs")] == 12
