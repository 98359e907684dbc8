"""Exact max-plus scalars and square matrices.

Finite scalars are ``int`` or ``fractions.Fraction``; the bottom element is
the singleton :data:`NEG_INF`.  Nothing here touches floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce, total_ordering
from typing import Iterable, Mapping, Sequence, Union


@total_ordering
class _NegInf:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INF"

    def __str__(self):
        return "-inf"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("tropid-neg-inf")

    def __reduce__(self):
        return (_NegInf, ())


NEG_INF = _NegInf()

Scalar = Union[int, Fraction, _NegInf]


class DimensionError(ValueError):
    """Raised when matrices of different sizes are combined."""


def is_finite(a: Scalar) -> bool:
    return a is not NEG_INF


def as_scalar(value) -> Scalar:
    if value is NEG_INF:
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not tropical scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot use {value!r} as an exact tropical scalar")


def t_add(a: Scalar, b: Scalar) -> Scalar:
    """Tropical sum: the maximum, with bottom as least element."""
    if a is NEG_INF:
        return b
    if b is NEG_INF:
        return a
    return a if a >= b else b


def t_mul(a: Scalar, b: Scalar) -> Scalar:
    """Tropical product: ordinary sum, bottom absorbing."""
    if a is NEG_INF or b is NEG_INF:
        return NEG_INF
    return a + b


def scalar_ops(a: Scalar, b: Scalar) -> tuple[Scalar, Scalar]:
    return t_add(a, b), t_mul(a, b)


def t_sum(values: Iterable[Scalar]) -> Scalar:
    return reduce(t_add, values, NEG_INF)


_SCALAR_RE = re.compile(r"^\s*(-inf|[+-]?\d+(?:/\d+)?)\s*$")


def parse_scalar(text: str) -> Scalar:
    m = _SCALAR_RE.match(text)
    if not m:
        raise ValueError(f"bad tropical scalar {text!r}")
    tok = m.group(1)
    if tok == "-inf":
        return NEG_INF
    value = Fraction(tok)
    if value.denominator == 1:
        return value.numerator
    return value


def format_scalar(a: Scalar) -> str:
    if a is NEG_INF:
        return "-inf"
    if isinstance(a, Fraction) and a.denominator != 1:
        return f"{a.numerator}/{a.denominator}"
    return str(int(a))


class TropMatrix:
    """Immutable n x n matrix over the max-plus semiring.

    ``A @ B`` is the tropical product, ``A + B`` the entrywise maximum.
    """

    __slots__ = ("_rows", "_n")

    def __init__(self, rows: Sequence[Sequence]):
        n = len(rows)
        if n == 0:
            raise DimensionError("matrix must have positive dimension")
        conv = tuple(tuple(as_scalar(v) for v in row) for row in rows)
        if any(len(row) != n for row in conv):
            raise DimensionError("matrix must be square")
        self._rows = conv
        self._n = n

    @classmethod
    def _trusted(cls, rows: tuple) -> "TropMatrix":
        # rows already validated: tuple of tuples of exact scalars
        obj = object.__new__(cls)
        obj._rows = rows
        obj._n = len(rows)
        return obj

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, TropMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"TropMatrix({format_matrix(self)})"

    def _check(self, other: "TropMatrix"):
        if not isinstance(other, TropMatrix):
            raise TypeError(f"expected TropMatrix, got {type(other).__name__}")
        if other._n != self._n:
            raise DimensionError(f"dimension mismatch: {self._n} vs {other._n}")

    def __matmul__(self, other: "TropMatrix") -> "TropMatrix":
        return mat_mul(self, other)

    def __add__(self, other: "TropMatrix") -> "TropMatrix":
        self._check(other)
        return TropMatrix(
            [[t_add(a, b) for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)]
        )

    def diagonal(self) -> tuple[Scalar, ...]:
        return tuple(self._rows[i][i] for i in range(self._n))

    def is_upper_triangular(self) -> bool:
        return all(
            self._rows[i][j] is NEG_INF for i in range(self._n) for j in range(i)
        )

    def power(self, k: int) -> "TropMatrix":
        if k < 0:
            raise ValueError("negative power")
        result = identity_matrix(self._n)
        for _ in range(k):
            result = result @ self
        return result

    def entries(self) -> Iterable[Scalar]:
        for row in self._rows:
            yield from row


def _dot2(x, y, u, v):
    # max(x + y, u + v) with bottom absorbing under + and neutral under max
    s = NEG_INF if x is NEG_INF or y is NEG_INF else x + y
    if u is NEG_INF or v is NEG_INF:
        return s
    t = u + v
    return t if s is NEG_INF or t > s else s


def mat_mul(A: TropMatrix, B: TropMatrix) -> TropMatrix:
    A._check(B)
    if A._n == 2:
        (a, b), (c, d) = A._rows
        (e, f), (g, h) = B._rows
        return TropMatrix._trusted((
            (_dot2(a, e, b, g), _dot2(a, f, b, h)),
            (_dot2(c, e, d, g), _dot2(c, f, d, h)),
        ))
    cols = tuple(zip(*B.rows))
    rows = []
    for ai in A.rows:
        row = []
        for col in cols:
            best = NEG_INF
            for x, y in zip(ai, col):
                if x is NEG_INF or y is NEG_INF:
                    continue
                v = x + y
                if best is NEG_INF or v > best:
                    best = v
            row.append(best)
        rows.append(tuple(row))
    return TropMatrix._trusted(tuple(rows))


def identity_matrix(n: int) -> TropMatrix:
    return TropMatrix([[0 if i == j else NEG_INF for j in range(n)] for i in range(n)])


def zero_matrix(n: int) -> TropMatrix:
    return TropMatrix([[NEG_INF] * n for _ in range(n)])


def diag_equiv(A: TropMatrix, B: TropMatrix) -> bool:
    A._check(B)
    return A.diagonal() == B.diagonal()


def eval_word_matrix(word: Sequence[str], assignment: Mapping[str, TropMatrix]) -> TropMatrix:
    """Left-to-right tropical product of the letter images of ``word``."""
    if not word:
        raise ValueError("cannot evaluate the empty word in a semigroup")
    dims = {m.n for m in assignment.values()}
    if len(dims) > 1:
        raise DimensionError(f"assignment mixes dimensions {sorted(dims)}")
    try:
        images = [assignment[x] for x in word]
    except KeyError as exc:
        raise KeyError(f"variable {exc.args[0]!r} has no image") from None
    return reduce(mat_mul, images)


_MATRIX_RE = re.compile(r"^\s*\[(.*)\]\s*$", re.S)


def parse_matrix(text: str) -> TropMatrix:
    """Parse ``[-1,1;-inf,1]`` style literals."""
    m = _MATRIX_RE.match(text)
    if not m:
        raise ValueError(f"matrix literal must be bracketed: {text!r}")
    rows = [[parse_scalar(tok) for tok in row.split(",")] for row in m.group(1).split(";")]
    return TropMatrix(rows)


def format_matrix(M: TropMatrix) -> str:
    return "[" + ";".join(",".join(format_scalar(v) for v in row) for row in M.rows) + "]"
