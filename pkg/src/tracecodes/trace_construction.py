"""Defining-set codes C_D = {(Tr(x d_1), ..., Tr(x d_n)) : x in GF(q^m)}.

Also the generator matrix read off from basis coordinates of D, and the exact
character-sum route to codeword weights. Character sums are kept in Z[zeta_p]
as count vectors over the exponents 0..p-1 so every identity is checked
without floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .bases import FieldBasis, _split_elements, coordinates
from .codes import LinearCode, WeightDistribution, code_from_matrix
from .errors import NonIntegerSum, ParseError, SpecMismatch, TooLarge
from .galois import (
    FieldElement,
    FieldSpec,
    _check_divides,
    abs_trace,
    embed,
    make_field,
    parse_element,
    parse_field_spec,
    project,
    rel_trace,
)
from .linalg import GFMatrix

__all__ = [
    "DefiningSet",
    "CharacterSum",
    "trace_code",
    "trace_codewords",
    "generator_matrix_from_D",
    "codeword",
    "n_x_zero",
    "char_sum",
    "weight_via_character_sum",
    "weight_distribution_via_character_sums",
    "character_sum_over_ground",
    "parse_defining_set",
]


@dataclass(frozen=True)
class DefiningSet:
    """Ordered multiset (d_1, ..., d_n) in GF(p^(s*m)) over ground field GF(p^s)."""

    big_spec: FieldSpec
    s: int
    elements: tuple[FieldElement, ...]

    def __post_init__(self):
        _check_divides(self.big_spec, self.s)
        els = tuple(self.elements)
        if not els:
            raise ValueError("a defining set needs at least one element")
        if any(e.spec != self.big_spec for e in els):
            raise SpecMismatch("defining-set element from a different field")
        object.__setattr__(self, "elements", els)

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def m(self) -> int:
        return self.big_spec.d // self.s

    @property
    def ground(self) -> FieldSpec:
        return make_field(self.big_spec.p, self.s)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def power_notation(self) -> str:
        return ", ".join(e.to_power_str() for e in self.elements)

    def coeff_notation(self) -> str:
        return ", ".join(e.to_coeff_str() for e in self.elements)

    def to_text(self) -> str:
        """Field-spec header line followed by the elements."""
        return f"{self.big_spec}\n{self.power_notation()}\n"

    def permuted(self, perm: Sequence[int]) -> DefiningSet:
        return DefiningSet(self.big_spec, self.s, tuple(self.elements[i] for i in perm))


def _ground_trace(a: FieldElement, s: int, ground: FieldSpec) -> int:
    return project(rel_trace(a, s), s, ground).value


def codeword(x: FieldElement, D: DefiningSet) -> np.ndarray:
    """c_x = (Tr(x d_1), ..., Tr(x d_n)) as ground-field encodings."""
    if x.spec != D.big_spec:
        raise SpecMismatch("x is not in the defining set's field")
    ground = D.ground
    return np.array([_ground_trace(x * d, D.s, ground) for d in D.elements], dtype=np.int64)


def n_x_zero(x: FieldElement, D: DefiningSet) -> int:
    """Number of positions i with Tr(x d_i) = 0."""
    return int(np.count_nonzero(codeword(x, D) == 0))


def trace_code(D: DefiningSet) -> LinearCode:
    """The linear code C_D.

    x -> c_x is GF(p)-linear, so the images of the GF(p)-basis
    1, x, ..., x^(sm-1) of the big field already span every c_x.
    """
    big = D.big_spec
    rows = [codeword(big.root**i if big.d > 1 else big.one, D) for i in range(big.d)]
    return code_from_matrix(GFMatrix(D.ground, np.stack(rows)))


def trace_codewords(D: DefiningSet, cap: int = 1 << 16) -> set[tuple[int, ...]]:
    """Every c_x by direct enumeration of x; an oracle for :func:`trace_code`."""
    if D.big_spec.order > cap:
        raise TooLarge(f"{D.big_spec.order} elements exceed the enumeration cap {cap}")
    return {tuple(int(v) for v in codeword(x, D)) for x in D.big_spec.elements()}


def generator_matrix_from_D(D: DefiningSet, basis: FieldBasis) -> GFMatrix:
    """m x n matrix whose i-th column holds the coordinates of d_i in ``basis``."""
    if basis.spec != D.big_spec or basis.s != D.s:
        raise SpecMismatch("basis does not match the defining set's field")
    cols = [coordinates(d, basis) for d in D.elements]
    return GFMatrix(D.ground, [[cols[i][j].value for i in range(D.n)] for j in range(basis.m)])


@dataclass(frozen=True)
class CharacterSum:
    """An element sum_t counts[t] * zeta_p^t of Z[zeta_p].

    Stored canonically: the minimum count is subtracted from every entry,
    which is harmless because 1 + zeta_p + ... + zeta_p^(p-1) = 0.
    """

    counts: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(v) for v in self.counts)
        low = min(c)
        object.__setattr__(self, "counts", tuple(v - low for v in c))

    @property
    def p(self) -> int:
        return len(self.counts)

    def is_integer(self) -> bool:
        return len(set(self.counts[1:])) <= 1

    def to_int(self) -> int:
        if not self.is_integer():
            raise NonIntegerSum(f"character sum {self.counts} is not a rational integer")
        return self.counts[0] - (self.counts[1] if self.p > 1 else 0)

    def __add__(self, other: CharacterSum) -> CharacterSum:
        if self.p != other.p:
            raise SpecMismatch("character sums over different characteristics")
        return CharacterSum(tuple(a + b for a, b in zip(self.counts, other.counts)))


def char_sum(elements: Iterable[FieldElement]) -> CharacterSum:
    """sum over the multiset of chi_1(a) = zeta_p^(absolute trace of a)."""
    els = list(elements)
    if not els:
        raise ValueError("empty multiset has no field to read p from")
    p = els[0].spec.p
    counts = [0] * p
    for a in els:
        counts[abs_trace(a)] += 1
    return CharacterSum(tuple(counts))


def character_sum_over_ground(x: FieldElement, D: DefiningSet) -> CharacterSum:
    """sum_{y in GF(q)^*} chi_1(y x D) as an element of Z[zeta_p]."""
    if x.spec != D.big_spec:
        raise SpecMismatch("x is not in the defining set's field")
    big = D.big_spec
    ys = [embed(y, big) for y in D.ground.elements() if y]
    return char_sum(y * x * d for y in ys for d in D.elements)


def weight_via_character_sum(x: FieldElement, D: DefiningSet) -> int:
    """wt(c_x) = ((q-1) n - sum_{y in GF(q)^*} chi_1(y x D)) / q, exactly."""
    q = D.ground.order
    total = character_sum_over_ground(x, D).to_int()
    num = (q - 1) * D.n - total
    if num % q:
        raise NonIntegerSum(f"(q-1)n - S = {num} is not divisible by q = {q}")
    return num // q


def parse_defining_set(text: str, s: int = 1, big_spec: FieldSpec | None = None) -> DefiningSet:
    """Parse a field-spec header line plus a comma-separated element line.

    The header may be omitted when ``big_spec`` is given.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if big_spec is None:
        if not lines:
            raise ParseError("missing field-spec header line")
        big_spec = parse_field_spec(lines[0])
        lines = lines[1:]
    toks = _split_elements(",".join(lines))
    if not toks:
        raise ParseError("defining set has no elements")
    return DefiningSet(big_spec, s, tuple(parse_element(t, big_spec) for t in toks))


def weight_distribution_via_character_sums(D: DefiningSet, k: int | None = None) -> WeightDistribution:
    """Weight distribution of C_D from the character-sum weight of every c_x.

    Each codeword arises from exactly q^(m-k) values of x, so the histogram
    over x is divided by that multiplicity.
    """
    if D.big_spec.order > 1 << 16:
        raise TooLarge(f"{D.big_spec.order} elements exceed the enumeration cap 2^16")
    if k is None:
        k = trace_code(D).k
    hist = [0] * (D.n + 1)
    for x in D.big_spec.elements():
        hist[weight_via_character_sum(x, D)] += 1
    mult = D.ground.order ** (D.m - k)
    if any(h % mult for h in hist):
        raise NonIntegerSum("histogram over x is not a multiple of the kernel size")
    return WeightDistribution(tuple(h // mult for h in hist))
