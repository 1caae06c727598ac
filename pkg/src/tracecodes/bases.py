"""Bases of GF(q^m) over GF(q), q = p^s: coordinates, dual bases, normal elements."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .errors import LinearDependence, ParseError, SpecMismatch
from .galois import (
    FieldElement,
    FieldSpec,
    _check_divides,
    embed,
    find_generator,
    make_field,
    parse_element,
    project,
    rel_trace,
)
from .linalg import GFMatrix, inverse, rank

__all__ = [
    "FieldBasis",
    "polynomial_basis",
    "conjugate_basis",
    "coordinates",
    "from_coordinates",
    "dual_basis",
    "is_normal",
    "find_normal_element",
    "parse_basis",
]


def _gfp_rows(elements: Sequence[FieldElement], s: int) -> np.ndarray:
    """GF(p)-coordinate rows of ``lam_t * a`` for every element a and every
    lam_t in the GF(p)-basis {1, r, ..., r^(s-1)} of the embedded GF(p^s).

    The elements are independent over GF(p^s) iff these rows are
    independent over GF(p).
    """
    big = elements[0].spec
    small = make_field(big.p, s)
    lams = [embed(small.root**t, big) for t in range(s)]
    return np.array([(lam * a).coeffs for a in elements for lam in lams], dtype=np.int64)


def _independent(elements: Sequence[FieldElement], s: int) -> bool:
    if not elements:
        return True
    rows = _gfp_rows(elements, s)
    return rank(GFMatrix(make_field(elements[0].spec.p, 1), rows)) == len(rows)


@dataclass(frozen=True)
class FieldBasis:
    """An ordered basis (alpha_1, ..., alpha_m) of ``spec`` over its subfield GF(p^s)."""

    spec: FieldSpec
    s: int
    elements: tuple[FieldElement, ...]

    def __post_init__(self):
        m = _check_divides(self.spec, self.s)
        els = tuple(self.elements)
        object.__setattr__(self, "elements", els)
        if any(e.spec != self.spec for e in els):
            raise SpecMismatch("basis elements from a different field")
        if len(els) != m:
            raise LinearDependence(f"a basis over GF(p^{self.s}) needs {m} elements, got {len(els)}")
        if not _independent(els, self.s):
            raise LinearDependence("basis elements are linearly dependent over the ground field")

    @property
    def m(self) -> int:
        return len(self.elements)

    @property
    def ground(self) -> FieldSpec:
        return make_field(self.spec.p, self.s)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    @cached_property
    def _coord_inverse(self) -> np.ndarray:
        gfp = make_field(self.spec.p, 1)
        return inverse(GFMatrix(gfp, _gfp_rows(self.elements, self.s))).entries

    def __str__(self):
        return ", ".join(e.to_power_str() for e in self.elements)


def polynomial_basis(spec: FieldSpec, s: int = 1, root: FieldElement | None = None) -> FieldBasis:
    """{1, g, ..., g^(m-1)} for the modulus root g (or a supplied ``root``)."""
    m = _check_divides(spec, s)
    g = spec.root if root is None else root
    return FieldBasis(spec, s, tuple(g**i for i in range(m)))


def conjugate_basis(alpha: FieldElement, s: int = 1) -> FieldBasis:
    """The normal basis {alpha, alpha^q, ..., alpha^(q^(m-1))}."""
    m = _check_divides(alpha.spec, s)
    q = alpha.spec.p**s
    return FieldBasis(alpha.spec, s, tuple(alpha ** (q**i) for i in range(m)))


def coordinates(a: FieldElement, basis: FieldBasis) -> tuple[FieldElement, ...]:
    """Coefficients c_j in GF(p^s) (standalone field) with a = sum c_j alpha_j."""
    if a.spec != basis.spec:
        raise SpecMismatch("element and basis live in different fields")
    p, s = a.spec.p, basis.s
    sol = (np.array(a.coeffs, dtype=np.int64) @ basis._coord_inverse) % p
    small = basis.ground
    return tuple(small.from_coeffs(sol[j * s:(j + 1) * s]) for j in range(basis.m))


def from_coordinates(coords: Sequence[FieldElement], basis: FieldBasis) -> FieldElement:
    acc = basis.spec.zero
    for c, alpha in zip(coords, basis.elements):
        acc = acc + embed(c, basis.spec) * alpha
    return acc


def trace_gram(basis: FieldBasis) -> GFMatrix:
    """Matrix Tr(alpha_i alpha_j) over the standalone GF(p^s)."""
    s = basis.s
    small = basis.ground
    els = basis.elements
    rows = [[project(rel_trace(a * b, s), s, small) for b in els] for a in els]
    return GFMatrix.from_elements(small, rows)


def dual_basis(basis: FieldBasis) -> FieldBasis:
    """The basis (beta_j) with Tr(alpha_i beta_j) = [i == j]."""
    tinv = inverse(trace_gram(basis))
    big = basis.spec
    duals = []
    for j in range(basis.m):
        acc = big.zero
        for k, alpha in enumerate(basis.elements):
            acc = acc + embed(tinv.element(j, k), big) * alpha
        duals.append(acc)
    return FieldBasis(big, basis.s, tuple(duals))


def is_normal(alpha: FieldElement, s: int = 1) -> bool:
    """True iff the conjugates of alpha over GF(p^s) are linearly independent."""
    m = _check_divides(alpha.spec, s)
    q = alpha.spec.p**s
    if not alpha:
        return False
    return _independent([alpha ** (q**i) for i in range(m)], s)


@lru_cache(maxsize=None)
def find_normal_element(spec: FieldSpec, s: int = 1) -> FieldElement:
    """First normal element in the order g^0, g^1, g^2, ... of the canonical generator."""
    _check_divides(spec, s)
    g = find_generator(spec)
    a = spec.one
    for _ in range(spec.order - 1):
        if is_normal(a, s):
            return a
        a = a * g
    raise AssertionError("unreachable: normal elements exist in every extension")


def parse_basis(text: str, spec: FieldSpec, s: int = 1) -> FieldBasis:
    """Comma-separated elements in power or coefficient notation."""
    toks = _split_elements(text)
    if not toks:
        raise ParseError("empty basis")
    return FieldBasis(spec, s, tuple(parse_element(t, spec) for t in toks))


def _split_elements(text: str) -> list[str]:
    """Split on commas that are not inside ``[...]``."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if "".join(cur).strip():
        out.append("".join(cur).strip())
    return [t for t in out if t]
