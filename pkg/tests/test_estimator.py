import numpy as np
import pytest
from sklearn.base import clone
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import FunctionTransformer

from eucode.codecs import CodecParams
from eucode.errors import OutOfRange, UnsupportedScheme
from eucode.estimator import UnaryCodeEncoder


def test_get_params_and_clone():
    enc = UnaryCodeEncoder(scheme="eu-ik", n=5, k=None)
    assert enc.get_params() == {"scheme": "eu-ik", "n": 5, "k": None}
    assert clone(enc).get_params() == enc.get_params()
    enc.set_params(n=6)
    assert enc.n == 6


def test_fit_selects_smallest_n():
    enc = UnaryCodeEncoder(scheme="eu-fk", k=2).fit([[43], [99]])
    assert enc.params_ == CodecParams.of("eu-fk", 12, 2)
    assert enc.capacity_ == 99
    assert enc.n_features_in_ == 1


def test_transform_matches_codewords():
    enc = UnaryCodeEncoder(scheme="eu-fk", n=11, k=2).fit([[0]])
    bits = enc.transform([[43], [80]])
    assert bits.dtype == np.uint8
    assert ["".join(map(str, row)) for row in bits] == ["00100001100", "11010000000"]


def test_round_trip_multi_feature():
    rng = np.random.default_rng(0)
    X = rng.integers(0, 36, size=(50, 3))
    enc = UnaryCodeEncoder(scheme="eu-ik").fit(X)
    out = enc.transform(X)
    assert out.shape == (50, 3 * enc.params_.n)
    np.testing.assert_array_equal(enc.inverse_transform(out), X)


def test_feature_names():
    enc = UnaryCodeEncoder(scheme="spatial", n=3).fit([[1, 2]])
    assert list(enc.get_feature_names_out(["a", "b"])) == \
        ["a_b2", "a_b1", "a_b0", "b_b2", "b_b1", "b_b0"]


def test_pipeline():
    pipe = make_pipeline(FunctionTransformer(lambda X: X * 2), UnaryCodeEncoder("su", n=None, k=2))
    out = pipe.fit_transform(np.array([[1], [3]]))
    assert ["".join(map(str, r)) for r in out] == ["0000110", "1100000"]  # values 2 and 6


def test_errors():
    with pytest.raises(UnsupportedScheme):
        UnaryCodeEncoder(scheme="unary").fit([[1]])
    with pytest.raises(OutOfRange):
        UnaryCodeEncoder(scheme="eu-fk", n=7, k=3).fit([[16]])
    with pytest.raises(OutOfRange):
        UnaryCodeEncoder().fit([[-1]])
    with pytest.raises(ValueError):
        UnaryCodeEncoder().fit([[1.5]])
    enc = UnaryCodeEncoder(scheme="eu-fk", n=7, k=3).fit([[1]])
    with pytest.raises(ValueError):
        enc.inverse_transform(np.zeros((1, 6)))
    from eucode.errors import InvalidCodeword
    with pytest.raises(InvalidCodeword):
        enc.inverse_transform(np.ones((1, 7)))


def test_not_fitted():
    from sklearn.exceptions import NotFittedError
    with pytest.raises(NotFittedError):
        UnaryCodeEncoder().transform([[1]])
