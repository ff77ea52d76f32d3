"""scikit-learn style front end.

``FourPagePresenter`` maps a collection of diagrams to a feature matrix of
bounds, so the construction can sit inside a ``Pipeline`` or be scored by
``cross_val_score``-style tooling.  Nothing is learned: ``fit`` validates
parameters and records the reports for the training diagrams.
"""
from __future__ import annotations

import numbers

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .analysis import Report, analyze
from .diagram import Diagram, diagram_from_json, parse_pd
from .fixtures import KnotFixture

FEATURES = ("crossings", "arcs", "two_c", "strict", "rib_bound", "verified")
TREE_CHOICES = ("auto", "default", "strict", "random")


def check_diagram(obj) -> Diagram:
    """Coerce one input sample to a Diagram.

    Accepts a Diagram, a KnotFixture, PD text, a JSON-schema dict or a
    sequence of 4-label crossings.
    """
    if isinstance(obj, Diagram):
        return obj
    if isinstance(obj, KnotFixture):
        return obj.diagram
    if isinstance(obj, str):
        return parse_pd(obj)
    if isinstance(obj, dict):
        return diagram_from_json(obj)
    if isinstance(obj, (list, tuple, np.ndarray)):
        return diagram_from_json({"pd": [[int(v) for v in q] for q in obj]})
    raise TypeError("cannot interpret %r as a diagram" % type(obj).__name__)


def check_diagrams(X) -> list:
    if isinstance(X, (str, Diagram, KnotFixture, dict)):
        raise ValueError("expected a collection of diagrams, got a single sample")
    out = [check_diagram(x) for x in X]
    if not out:
        raise ValueError("found 0 diagrams; at least one is required")
    return out


class FourPagePresenter(TransformerMixin, BaseEstimator):
    """Four-page presentation bounds as a transformer.

    Parameters
    ----------
    tree : {"auto", "default", "strict", "random"}
        Spanning tree choice; ``auto`` searches for a strictness tree on
        non-alternating input.
    seed : int or None
        Seed for ``tree="random"``.
    epsilon : float
        Connection slack of the ribbon realisation; must be positive.
    componentwise : bool
        Treat split diagrams piece by piece instead of rejecting them.
    unshaded_face : int or None
        Face forced to be unshaded in the checkerboard colouring.
    """

    def __init__(self, tree="auto", seed=None, epsilon=1e-3, componentwise=False,
                 unshaded_face=None):
        self.tree = tree
        self.seed = seed
        self.epsilon = epsilon
        self.componentwise = componentwise
        self.unshaded_face = unshaded_face

    def _validate_params(self):
        if self.tree not in TREE_CHOICES:
            raise ValueError("tree must be one of %s, got %r" % (TREE_CHOICES, self.tree))
        if not isinstance(self.epsilon, numbers.Real) or self.epsilon <= 0:
            raise ValueError("epsilon must be a positive real, got %r" % (self.epsilon,))
        if self.seed is not None and not isinstance(self.seed, numbers.Integral):
            raise ValueError("seed must be an int or None")

    def _report(self, d: Diagram) -> Report:
        return analyze(
            d,
            tree=self.tree,
            seed=self.seed,
            epsilon=self.epsilon,
            componentwise=self.componentwise,
            unshaded_face=self.unshaded_face,
        )

    def fit(self, X, y=None):
        self._validate_params()
        diagrams = check_diagrams(X)
        self.reports_ = [self._report(d) for d in diagrams]
        self.n_features_out_ = len(FEATURES)
        return self

    def _rows(self, reports):
        return np.array(
            [
                [r.crossings, r.arcs, 2 * r.crossings, int(r.strict), r.rib_bound, int(r.verified)]
                for r in reports
            ],
            dtype=np.int64,
        )

    def transform(self, X):
        check_is_fitted(self, "reports_")
        return self._rows([self._report(d) for d in check_diagrams(X)])

    def fit_transform(self, X, y=None, **fit_params):
        return self._rows(self.fit(X).reports_)

    def predict(self, X):
        """Arc count of the constructed presentation (an upper bound on the four-page index)."""
        return self.transform(X)[:, FEATURES.index("arcs")]

    def get_feature_names_out(self, input_features=None):
        return np.asarray(FEATURES, dtype=object)
