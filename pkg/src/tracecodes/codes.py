"""Linear and cyclic codes over GF(q).

A :class:`LinearCode` stores the unique reduced row-echelon basis of its row
space, so two codes are equal exactly when their stored matrices are.
Codewords are numpy vectors of element encodings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Sequence

import numpy as np

from .errors import LengthMismatch, NotDivisor, SpecMismatch, TooLarge, ZeroCode
from .galois import FieldSpec, GFPolynomial
from .linalg import GFMatrix, field_tables, reduce_vector, rref, rref_pivots

__all__ = [
    "LinearCode",
    "WeightDistribution",
    "CyclicSpec",
    "code_from_matrix",
    "code_equal",
    "weight_distribution",
    "min_distance",
    "poly_gcd",
    "poly_divmod",
    "reciprocal",
    "x_n_minus_1",
    "cyclic_code",
    "generator_polynomial",
    "cyclotomic_cosets",
    "check_polynomial",
    "multiplicative_order_mod",
    "rref",
]

ENUMERATION_CAP = 1 << 20


@dataclass(frozen=True, eq=False)
class LinearCode:
    """Row space of ``generator`` (RREF, no zero rows) in GF(q)^n."""

    q_spec: FieldSpec
    n: int
    generator: GFMatrix

    @property
    def k(self) -> int:
        return self.generator.rows

    dimension = k

    @property
    def q(self) -> int:
        return self.q_spec.order

    @cached_property
    def _pivots(self) -> list[int]:
        return rref_pivots(self.generator)

    def __contains__(self, word) -> bool:
        w = np.asarray(word, dtype=np.int64)
        if w.shape != (self.n,):
            raise LengthMismatch(f"word of length {w.shape} vs code length {self.n}")
        return not reduce_vector(self.generator, self._pivots, w).any()

    def codewords(self) -> np.ndarray:
        """All q^k codewords as rows of a ``(q^k, n)`` array."""
        return _enumerate(self)

    def encode(self, message: Sequence[int]) -> np.ndarray:
        t = field_tables(self.q_spec)
        out = np.zeros(self.n, dtype=np.int64)
        for c, row in zip(message, self.generator.entries):
            out = t.add[out, t.mul[int(c), row]]
        return out

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.q_spec == other.q_spec and self.n == other.n and self.generator == other.generator

    def __hash__(self):
        return hash((self.q_spec, self.n, self.generator))

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over GF({self.q}))"


def code_from_matrix(m: GFMatrix) -> LinearCode:
    return LinearCode(m.q_spec, m.cols, rref(m, drop_zero_rows=True))


def code_equal(c1: LinearCode, c2: LinearCode) -> bool:
    if c1.q_spec != c2.q_spec:
        raise SpecMismatch("codes over different fields")
    if c1.n != c2.n:
        raise LengthMismatch(f"codes of length {c1.n} and {c2.n}")
    return c1.generator == c2.generator


def _enumerate(code: LinearCode) -> np.ndarray:
    q, k, n = code.q, code.k, code.n
    if q**k > ENUMERATION_CAP:
        raise TooLarge(f"{q}^{k} codewords exceed the enumeration cap of 2^20")
    t = field_tables(code.q_spec)
    words = np.zeros((1, n), dtype=np.int64)
    for row in code.generator.entries:
        scaled = t.mul[:, row]  # (q, n): every multiple of this row
        words = t.add[words[:, None, :], scaled[None, :, :]].reshape(-1, n)
    return words


@dataclass(frozen=True)
class WeightDistribution:
    """Codeword counts ``(A_0, ..., A_n)`` by Hamming weight."""

    counts: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, i):
        return self.counts[i]

    def __iter__(self):
        return iter(self.counts)

    def __len__(self):
        return len(self.counts)

    def enumerator(self) -> str:
        """Weight enumerator such as ``1 + 7z^3 + 7z^4 + z^7``."""
        terms = []
        for i, a in enumerate(self.counts):
            if not a:
                continue
            if i == 0:
                terms.append(str(a))
                continue
            z = "z" if i == 1 else f"z^{i}"
            terms.append(z if a == 1 else f"{a}{z}")
        return " + ".join(terms)

    def __str__(self):
        return self.enumerator()


def weight_distribution(code: LinearCode) -> WeightDistribution:
    words = _enumerate(code)
    weights = np.count_nonzero(words, axis=1)
    counts = np.bincount(weights, minlength=code.n + 1)
    return WeightDistribution(tuple(int(c) for c in counts))


def min_distance(code: LinearCode, wd: WeightDistribution | None = None) -> int:
    if code.k == 0:
        raise ZeroCode("minimum distance of the zero code is undefined")
    wd = wd or weight_distribution(code)
    return next(i for i, a in enumerate(wd.counts) if i and a)


# ---------------------------------------------------------------------------
# Polynomial helpers
# ---------------------------------------------------------------------------

def poly_divmod(f: GFPolynomial, g: GFPolynomial) -> tuple[GFPolynomial, GFPolynomial]:
    return divmod(f, g)


def poly_gcd(f: GFPolynomial, g: GFPolynomial) -> GFPolynomial:
    """Monic gcd; gcd(0, 0) is 0."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def reciprocal(h: GFPolynomial) -> GFPolynomial:
    """``x^deg(h) * h(1/x)``, scaled monic."""
    return GFPolynomial(h.spec, reversed(h.coeffs)).monic()


def x_n_minus_1(q_spec: FieldSpec, n: int) -> GFPolynomial:
    return GFPolynomial.x_n_minus_1(q_spec, n)


def generator_polynomial(f: GFPolynomial, n: int) -> GFPolynomial:
    """gcd(f, x^n - 1): the generator polynomial of the cyclic code f spans."""
    return poly_gcd(f, x_n_minus_1(f.spec, n))


def check_polynomial(g: GFPolynomial, n: int) -> GFPolynomial:
    quo, rem = divmod(x_n_minus_1(g.spec, n), g)
    if not rem.is_zero():
        raise NotDivisor(f"{g.pretty()} does not divide x^{n} - 1")
    return quo


def _reduce_mod_xn(f: GFPolynomial, n: int) -> np.ndarray:
    """Coefficient vector of f mod (x^n - 1)."""
    t = field_tables(f.spec)
    v = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(f.coeffs):
        v[i % n] = t.add[v[i % n], c.value]
    return v


def cyclic_code(f: GFPolynomial, n: int) -> LinearCode:
    """Code spanned by the n cyclic shifts of f (reduced mod x^n - 1)."""
    v = _reduce_mod_xn(f, n)
    rows = np.stack([np.roll(v, i) for i in range(n)])
    return code_from_matrix(GFMatrix(f.spec, rows))


def is_cyclic(code: LinearCode) -> bool:
    return all(np.roll(row, 1) in code for row in code.generator.entries)


@dataclass(frozen=True)
class CyclicSpec:
    """A length-n cyclic code over GF(q) described by any polynomial f that generates it."""

    q_spec: FieldSpec
    n: int
    f: GFPolynomial

    def __post_init__(self):
        if self.f.spec != self.q_spec:
            raise SpecMismatch("f is not a polynomial over q_spec")
        if self.n < 1:
            raise ValueError("length must be positive")
        if self.f.is_zero():
            raise ValueError("f must be nonzero")
        if self.f.degree >= self.n:
            raise ValueError(f"deg f = {self.f.degree} must be below n = {self.n}")

    @property
    def generator_polynomial(self) -> GFPolynomial:
        return generator_polynomial(self.f, self.n)

    def code(self) -> LinearCode:
        return cyclic_code(self.f, self.n)


def multiplicative_order_mod(q: int, n: int) -> int:
    """ord_n(q): least m >= 1 with q^m = 1 mod n."""
    if gcd(q, n) != 1:
        raise ValueError(f"gcd({q}, {n}) != 1")
    if n == 1:
        return 1
    m, v = 1, q % n
    while v != 1:
        v = v * q % n
        m += 1
    return m


def cyclotomic_cosets(n: int, q: int) -> list[list[int]]:
    """q-cyclotomic cosets mod n, each in orbit order from its least member."""
    seen: set[int] = set()
    cosets = []
    for j in range(n):
        if j in seen:
            continue
        orbit = [j]
        seen.add(j)
        x = j * q % n
        while x != j:
            if x in seen:  # only when gcd(n, q) != 1: orbit enters a cycle
                break
            orbit.append(x)
            seen.add(x)
            x = x * q % n
        cosets.append(orbit)
    return cosets

