"""Dense matrices over a small finite field GF(q).

Entries are canonical element encodings (see :mod:`tracecodes.galois`) held
in an integer numpy array; arithmetic goes through per-field operation
tables so the same code path serves prime and non-prime q.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import DivisionByZero, LinearDependence, ParseError, SpecMismatch
from .galois import FieldElement, FieldSpec, parse_element

__all__ = [
    "FieldTables",
    "field_tables",
    "GFMatrix",
    "rref",
    "rank",
    "inverse",
    "reduce_vector",
    "parse_matrix",
]

_TABLE_LIMIT = 1 << 10


@dataclass(frozen=True, eq=False)
class FieldTables:
    add: np.ndarray
    sub: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray  # inv[0] is 0 by convention, never read


@lru_cache(maxsize=None)
def field_tables(spec: FieldSpec) -> FieldTables:
    q = spec.order
    if q > _TABLE_LIMIT:
        raise ValueError(f"GF({q}) is too large for operation tables")
    els = list(spec.elements())
    add = np.array([[(a + b).value for b in els] for a in els], dtype=np.int64)
    mul = np.array([[(a * b).value for b in els] for a in els], dtype=np.int64)
    neg = np.array([(-a).value for a in els], dtype=np.int64)
    inv = np.array([0] + [a.inverse().value for a in els[1:]], dtype=np.int64)
    sub = add[:, neg]
    for arr in (add, sub, mul, neg, inv):
        arr.setflags(write=False)
    return FieldTables(add, sub, mul, neg, inv)


@dataclass(frozen=True, eq=False)
class GFMatrix:
    """A k x n matrix over GF(q) = ``q_spec``; immutable."""

    q_spec: FieldSpec
    entries: np.ndarray

    def __post_init__(self):
        arr = np.array(self.entries, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ValueError("GFMatrix entries must be two-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= self.q_spec.order):
            raise ValueError(f"entries must be element encodings of GF({self.q_spec.order})")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @classmethod
    def zeros(cls, q_spec: FieldSpec, k: int, n: int) -> GFMatrix:
        return cls(q_spec, np.zeros((k, n), dtype=np.int64))

    @classmethod
    def from_elements(cls, q_spec: FieldSpec, rows: Sequence[Sequence[FieldElement]], n: int | None = None) -> GFMatrix:
        if not rows:
            return cls.zeros(q_spec, 0, n or 0)
        for row in rows:
            for e in row:
                if e.spec != q_spec:
                    raise SpecMismatch(f"entry from {e.spec} in matrix over {q_spec}")
        return cls(q_spec, [[e.value for e in row] for row in rows])

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def element(self, i: int, j: int) -> FieldElement:
        return self.q_spec(int(self.entries[i, j]))

    def __eq__(self, other):
        if not isinstance(other, GFMatrix):
            return NotImplemented
        return (
            self.q_spec == other.q_spec
            and self.shape == other.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.q_spec, self.shape, self.entries.tobytes()))

    def to_text(self) -> str:
        """One row per line, entries separated by spaces."""
        if self.q_spec.d == 1:
            fmt = str
        else:
            fmt = lambda v: self.q_spec(int(v)).to_coeff_str()  # noqa: E731
        return "\n".join(" ".join(fmt(v) for v in row) for row in self.entries)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"GFMatrix({self.rows}x{self.cols} over GF({self.q_spec.order}))"


def _rref_array(a: np.ndarray, t: FieldTables) -> tuple[np.ndarray, list[int]]:
    a = a.copy()
    k, n = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == k:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = t.mul[t.inv[a[r, c]], a[r]]
        for i in range(k):
            if i != r and a[i, c]:
                a[i] = t.sub[a[i], t.mul[a[i, c], a[r]]]
        pivots.append(c)
        r += 1
    return a, pivots


def rref(m: GFMatrix, drop_zero_rows: bool = False) -> GFMatrix:
    """Reduced row-echelon form; pivots are the leftmost nonzero column,
    taking the topmost candidate row."""
    t = field_tables(m.q_spec)
    a, pivots = _rref_array(m.entries, t)
    if drop_zero_rows:
        a = a[: len(pivots)]
    return GFMatrix(m.q_spec, a)


def rref_pivots(m: GFMatrix) -> list[int]:
    return _rref_array(m.entries, field_tables(m.q_spec))[1]


def rank(m: GFMatrix) -> int:
    return len(rref_pivots(m))


def inverse(m: GFMatrix) -> GFMatrix:
    k, n = m.shape
    if k != n:
        raise ValueError("only square matrices are invertible")
    t = field_tables(m.q_spec)
    aug = np.concatenate([m.entries, np.eye(k, dtype=np.int64)], axis=1)
    red, pivots = _rref_array(aug, t)
    if pivots[:k] != list(range(k)):
        raise DivisionByZero("matrix is singular")
    return GFMatrix(m.q_spec, red[:, k:])


def matmul(a: GFMatrix, b: GFMatrix) -> GFMatrix:
    if a.q_spec != b.q_spec:
        raise SpecMismatch("matrices over different fields")
    if a.cols != b.rows:
        raise ValueError("shape mismatch")
    t = field_tables(a.q_spec)
    out = np.zeros((a.rows, b.cols), dtype=np.int64)
    for j in range(a.cols):
        prod = t.mul[a.entries[:, j][:, None], b.entries[j][None, :]]
        out = t.add[out, prod]
    return GFMatrix(a.q_spec, out)


def reduce_vector(reduced: GFMatrix, pivots: Sequence[int], v: np.ndarray) -> np.ndarray:
    """Residue of ``v`` after eliminating against an RREF matrix; zero iff
    ``v`` lies in its row space."""
    t = field_tables(reduced.q_spec)
    v = np.array(v, dtype=np.int64)
    for r, c in enumerate(pivots):
        if v[c]:
            v = t.sub[v, t.mul[v[c], reduced.entries[r]]]
    return v


def solve_independent(rows: GFMatrix) -> None:
    """Raise LinearDependence unless the rows are linearly independent."""
    if rank(rows) != rows.rows:
        raise LinearDependence("rows are linearly dependent")


def parse_matrix(text: str, q_spec: FieldSpec) -> GFMatrix:
    """Inverse of :meth:`GFMatrix.to_text`; blank lines and ``#`` comments are skipped.

    Integers are read as element encodings; ``[c0,c1,...]`` and ``g^k`` are
    accepted as well.
    """
    rows: list[list[int]] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        row = []
        for tok in line.split():
            if tok.isdigit():
                v = int(tok)
                if v >= q_spec.order:
                    raise ParseError(f"entry {v} out of range for GF({q_spec.order})")
                row.append(v)
            else:
                row.append(parse_element(tok, q_spec).value)
        rows.append(row)
    if not rows:
        raise ParseError("empty matrix")
    if len({len(r) for r in rows}) != 1:
        raise ParseError("ragged matrix rows")
    return GFMatrix(q_spec, rows)


def vectors_to_matrix(q_spec: FieldSpec, vectors: Iterable[np.ndarray], n: int) -> GFMatrix:
    vs = [np.asarray(v, dtype=np.int64) for v in vectors]
    if not vs:
        return GFMatrix.zeros(q_spec, 0, n)
    return GFMatrix(q_spec, np.stack(vs))
