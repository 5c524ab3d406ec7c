from typing import Optional, List, Sequence

import numpy as np
import pandas as pd


class LabeledMatrix:
    """
    A LabeledMatrix stores a dense learners x columns table of reals (grades, grade variations or membership
    degrees) together with the learner ids of its rows and the names of its columns. NaN marks a missing cell.

    :param name: descriptive name for the matrix
    :param matrix: 2-d numpy array (copied and made read-only)
    :param ids: learner ids, one per row
    :param columns: column names, one per column

    :ivar name: name of the matrix
    :ivar ids: ids corresponding to rows
    :ivar columns: names corresponding to columns
    :ivar ids_to_idx: a mapping from id to the row index
    :ivar cols_to_idx: a mapping from column name to the column index
    """

    def __init__(self, name: str, matrix, ids: Sequence[str], columns: Sequence[str]):
        self.name = name
        self._matrix = np.array(matrix, dtype=float)
        if self._matrix.ndim == 1 and self._matrix.size == 0:
            self._matrix = self._matrix.reshape(len(ids), len(columns))
        self._matrix.setflags(write=False)
        self.ids = list(ids)
        self.columns = list(columns)
        self.ids_to_idx = {id_: idx for idx, id_ in enumerate(self.ids)}
        self.cols_to_idx = {col: idx for idx, col in enumerate(self.columns)}
        self._initialization_checks()

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def shape(self):
        return self._matrix.shape

    def _initialization_checks(self):
        if self._matrix.ndim != 2:
            raise ValueError("Input matrix for {} must be 2-dimensional.".format(self.name))
        if len(self.ids) != self._matrix.shape[0] or len(self.columns) != self._matrix.shape[1]:
            raise ValueError("Input matrix dimensions {} do not match "
                             "length of ids and/or columns".format(self._matrix.shape))

    def value(self, id_: str, column: str) -> float:
        return float(self._matrix[self.ids_to_idx[id_], self.cols_to_idx[column]])

    def get_vectors(self, ids: Optional[List[str]] = None, columns: Optional[List[str]] = None,
                    as_dataframe: bool = False):
        """

        :param ids: optional list of row ids to get vectors for; all by default
        :param columns: optional list of named columns of the vector to include; all by default
        :param as_dataframe: whether to return the vector as a dataframe (True) or in its raw array form (False). False
            by default.
        :return: a numpy array or a pandas dataframe
        """
        ids = self.ids if ids is None else ids
        cols = self.columns if columns is None else columns
        id_indices = [self.ids_to_idx[id_] for id_ in ids]
        col_indices = [self.cols_to_idx[col] for col in cols]
        sub = self._matrix[np.ix_(id_indices, col_indices)]
        if not as_dataframe:
            return sub
        return pd.DataFrame(sub, index=ids, columns=cols)

    def to_dataframe(self) -> pd.DataFrame:
        """
        Converts the matrix into a pandas DataFrame indexed by row id.

        :return: a pandas DataFrame
        """
        return pd.DataFrame(self._matrix.copy(), index=list(self.ids), columns=list(self.columns))

    def __eq__(self, other):
        return isinstance(other, LabeledMatrix) and self.ids == other.ids and self.columns == other.columns \
            and np.array_equal(self._matrix, other._matrix, equal_nan=True)

    def __repr__(self):
        return "{}('name': {}, 'matrix': {})".format(type(self).__name__, self.name, repr(self._matrix))

    def __str__(self):
        return repr(self)
