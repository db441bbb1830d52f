"""scikit-learn transformer that expands integer features into codeword bits."""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .analysis import ParamQuery, select_params
from .codecs import CodecParams, Codeword, Scheme, capacity, decode, encode, validate
from .errors import OutOfRange, UnsupportedScheme

__all__ = ["UnaryCodeEncoder"]


class UnaryCodeEncoder(TransformerMixin, BaseEstimator):
    """Encode each nonnegative integer column as an ``n``-bit fixed-length codeword.

    Parameters
    ----------
    scheme : {"spatial", "su", "eu-ik", "eu-fk"}, default="eu-fk"
    n : int or None, default=None
        Word length.  ``None`` picks the smallest length whose capacity covers
        the largest value seen in ``fit``.
    k : int or None, default=2
        Spread; ignored for ``spatial`` and ``eu-ik``.

    Attributes
    ----------
    params_ : CodecParams
    capacity_ : int
    n_features_in_ : int

    Output columns are grouped per input feature, highest bit position first,
    so each block of ``n`` columns reads like the rendered codeword.
    """

    def __init__(self, scheme="eu-fk", n=None, k=2):
        self.scheme = scheme
        self.n = n
        self.k = k

    def _k_for(self, scheme):
        if scheme is Scheme.SPATIAL_UNARY:
            return 1
        if scheme is Scheme.EXTENDED_INCREASING_K:
            return 0
        return self.k

    def fit(self, X, y=None):
        scheme = Scheme.parse(self.scheme)
        if not scheme.fixed_length:
            raise UnsupportedScheme("classic unary is variable length and cannot fill columns")
        X = _as_int_array(X)
        self.n_features_in_ = X.shape[1]
        k = self._k_for(scheme)
        if self.n is None:
            target = max(int(X.max()) if X.size else 1, 1)
            params = select_params(ParamQuery(scheme, target, k))
        else:
            params = CodecParams(scheme, self.n, k)
            validate(params)
        self.params_ = params
        self.capacity_ = capacity(params)
        if X.size and X.max() > self.capacity_:
            raise OutOfRange(f"value {X.max()} exceeds capacity {self.capacity_} for {params}")
        return self

    def transform(self, X):
        check_is_fitted(self, "params_")
        X = _as_int_array(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        n = self.params_.n
        shifts = np.arange(n - 1, -1, -1, dtype=object)
        out = np.zeros((X.shape[0], X.shape[1] * n), dtype=np.uint8)
        for col in range(X.shape[1]):
            words = np.array([encode(self.params_, int(v)).word for v in X[:, col]], dtype=object)
            out[:, col * n:(col + 1) * n] = ((words[:, None] >> shifts) & 1).astype(np.uint8)
        return out

    def inverse_transform(self, X):
        check_is_fitted(self, "params_")
        X = check_array(X, dtype=None)
        n = self.params_.n
        if X.shape[1] != self.n_features_in_ * n:
            raise ValueError(f"X has {X.shape[1]} columns, expected {self.n_features_in_ * n}")
        bits = X.astype(np.int64)
        if ((bits != 0) & (bits != 1)).any():
            raise ValueError("inverse_transform expects a 0/1 matrix")
        out = np.zeros((X.shape[0], self.n_features_in_), dtype=np.int64)
        for row in range(X.shape[0]):
            for col in range(self.n_features_in_):
                word = 0
                for b in bits[row, col * n:(col + 1) * n]:
                    word = (word << 1) | int(b)
                out[row, col] = decode(self.params_, Codeword(word, n))
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "params_")
        if input_features is None:
            input_features = [f"x{i}" for i in range(self.n_features_in_)]
        n = self.params_.n
        return np.array([f"{name}_b{p}" for name in input_features for p in range(n - 1, -1, -1)],
                        dtype=object)


def _as_int_array(X):
    X = check_array(X, dtype=None)
    if not np.issubdtype(X.dtype, np.integer):
        if not np.issubdtype(X.dtype, np.floating) or not np.all(np.mod(X, 1) == 0):
            raise ValueError("UnaryCodeEncoder expects integer-valued input")
        X = X.astype(np.int64)
    if X.size and X.min() < 0:
        raise OutOfRange("UnaryCodeEncoder expects nonnegative integers")
    return X
