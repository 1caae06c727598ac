"""Converters from matrix and polynomial descriptions of codes to defining sets.

* :func:`defining_set_from_matrix` turns any generator matrix into D with
  C_D equal to the row space.
* :func:`cyclic_defining_set` represents a cyclic code by the Frobenius orbit
  of one element built on a normal basis of GF(q^n).
* :func:`wolfmann_spec_from_check` / :func:`wolfmann_code` give the classical
  representation through minimal polynomials when gcd(n, q) = 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

import numpy as np

from .bases import find_normal_element, is_normal
from .codes import (
    CyclicSpec,
    LinearCode,
    code_from_matrix,
    cyclotomic_cosets,
    generator_polynomial,
    multiplicative_order_mod,
    reciprocal,
    x_n_minus_1,
)
from .errors import FactorMismatch, GcdNotOne, NotDivisor, NotNormal, SpecMismatch, TooLarge
from .galois import (
    FieldElement,
    FieldSpec,
    GFPolynomial,
    embed,
    find_generator,
    make_field,
    min_poly,
    mult_order,
    project,
    rel_trace,
)
from .linalg import GFMatrix
from .trace_construction import DefiningSet

__all__ = [
    "defining_set_size",
    "defining_set_from_matrix",
    "cyclic_defining_set",
    "orbit_seed_element",
    "generates",
    "WolfmannSpec",
    "wolfmann_spec_from_check",
    "wolfmann_code",
]


def _ceil_log(q: int, n: int) -> int:
    m, v = 0, 1
    while v < n:
        v *= q
        m += 1
    return m


def defining_set_size(q: int, k: int, n: int) -> int:
    """Extension degree m = max{k, ceil(log_q n)} (at least 1)."""
    return max(k, _ceil_log(q, n), 1)


def defining_set_from_matrix(G: GFMatrix) -> DefiningSet:
    """Defining set D' with C_{D'} equal to the row space of G.

    Every row is used as given. Column i becomes sum_j G[j][i] * g^(j-1) in
    GF(q^m) with g the modulus root of the default field.
    """
    q_spec = G.q_spec
    p, s = q_spec.p, q_spec.d
    k, n = G.shape
    m = defining_set_size(q_spec.order, k, n)
    big = make_field(p, s * m)
    alphas = [big.root**j if big.d > 1 else big.one for j in range(m)]
    emb = [embed(c, big) for c in q_spec.elements()]
    ds = []
    for i in range(n):
        acc = big.zero
        for j in range(k):
            v = int(G.entries[j, i])
            if v:
                acc = acc + emb[v] * alphas[j]
        ds.append(acc)
    return DefiningSet(big, s, tuple(ds))


def generates(f: GFPolynomial, g: GFPolynomial, n: int) -> bool:
    """Does f generate the cyclic code whose generator polynomial is g?"""
    return generator_polynomial(f, n) == g.monic()


def _cyclic_big_field(spec: CyclicSpec) -> FieldSpec:
    return make_field(spec.q_spec.p, spec.q_spec.d * spec.n)


def orbit_seed_element(spec: CyclicSpec, alpha: FieldElement) -> FieldElement:
    """d = sum_{j=1}^{n} f_{n-j} alpha^(q^j), with alpha^(q^n) = alpha."""
    big = alpha.spec
    q, n = spec.q_spec.order, spec.n
    acc = big.zero
    for j in range(1, n + 1):
        c = spec.f.coeff((n - j) % n)
        if c:
            acc = acc + embed(c, big) * alpha ** (q ** (j % n))
    return acc


def cyclic_defining_set(spec: CyclicSpec, alpha: FieldElement | None = None) -> DefiningSet:
    """Frobenius orbit (d, d^q, ..., d^(q^(n-1))) representing the cyclic code.

    ``alpha`` must be normal in GF(q^n) over GF(q); by default the first
    normal element of :func:`find_normal_element` is used.
    """
    big = _cyclic_big_field(spec)
    s = spec.q_spec.d
    if alpha is None:
        alpha = find_normal_element(big, s)
    else:
        if alpha.spec != big:
            raise SpecMismatch(f"alpha must lie in {big}")
        if not is_normal(alpha, s):
            raise NotNormal(f"{alpha.to_power_str()} is not a normal element over GF({spec.q_spec.order})")
    d = orbit_seed_element(spec, alpha)
    q = spec.q_spec.order
    orbit = [d]
    for _ in range(spec.n - 1):
        orbit.append(orbit[-1] ** q)
    return DefiningSet(big, s, tuple(orbit))


@dataclass(frozen=True)
class WolfmannSpec:
    q_spec: FieldSpec
    n: int
    m: int
    beta: FieldElement
    J: tuple[int, ...]

    def __post_init__(self):
        if gcd(self.n, self.q_spec.order) != 1:
            raise GcdNotOne(f"gcd({self.n}, {self.q_spec.order}) != 1")
        if mult_order(self.beta) != self.n:
            raise ValueError(f"beta has order {mult_order(self.beta)}, expected {self.n}")
        reps = {min(c): set(c) for c in cyclotomic_cosets(self.n, self.q_spec.order)}
        hit = [next(r for r, c in reps.items() if j % self.n in c) for j in self.J]
        if len(hit) != len(set(hit)):
            raise ValueError("J holds two members of one cyclotomic coset")

    @property
    def big_spec(self) -> FieldSpec:
        return self.beta.spec


def wolfmann_spec_from_check(h: GFPolynomial, n: int) -> WolfmannSpec:
    """Split the reciprocal of the check polynomial h into minimal polynomials
    m_{beta^j}, j ranging over coset representatives."""
    q_spec = h.spec
    q = q_spec.order
    if gcd(n, q) != 1:
        raise GcdNotOne(f"gcd({n}, {q}) != 1")
    if h.is_zero() or not (x_n_minus_1(q_spec, n) % h).is_zero():
        raise NotDivisor(f"{h.pretty()} does not divide x^{n} - 1")
    m = multiplicative_order_mod(q, n)
    big = make_field(q_spec.p, q_spec.d * m)
    beta = find_generator(big) ** ((q**m - 1) // n)
    rest = reciprocal(h)
    J = []
    for coset in cyclotomic_cosets(n, q):
        j = coset[0]
        mp = min_poly(beta**j, q_spec.d, q_spec)
        quo, rem = divmod(rest, mp)
        if rem.is_zero():
            J.append(j)
            rest = quo
    if rest.degree != 0:
        raise FactorMismatch(f"leftover factor {rest.pretty()} of the reciprocal check polynomial")
    return WolfmannSpec(q_spec, n, m, beta, tuple(J))


def _wolfmann_word(W: WolfmannSpec, a: dict[int, FieldElement]) -> np.ndarray:
    s = W.q_spec.d
    out = np.zeros(W.n, dtype=np.int64)
    for i in range(W.n):
        acc = W.big_spec.zero
        for j, aj in a.items():
            if aj:
                acc = acc + aj * W.beta ** (i * j)
        out[i] = project(rel_trace(acc, s), s, W.q_spec).value
    return out


def wolfmann_code(W: WolfmannSpec, exhaustive: bool = False) -> LinearCode:
    """The code {(Tr(f_a(beta^i)))_i : a_j in GF(q^m)}, f_a = sum_{j in J} a_j x^j.

    a -> c_a is GF(p)-linear, so by default only the images of a GF(p)-basis
    of the coefficient space are formed. ``exhaustive=True`` walks all
    q^(m|J|) coefficient tuples instead (capped at 2^20).
    """
    big = W.big_spec
    if not W.J:
        return code_from_matrix(GFMatrix.zeros(W.q_spec, 0, W.n))
    if exhaustive:
        if big.order ** len(W.J) > 1 << 20:
            raise TooLarge(f"q^(m|J|) = {big.order}^{len(W.J)} exceeds 2^20")
        rows = [
            _wolfmann_word(W, dict(zip(W.J, combo)))
            for combo in itertools.product(list(big.elements()), repeat=len(W.J))
        ]
    else:
        unit_basis = [big.root**t if big.d > 1 else big.one for t in range(big.d)]
        rows = [_wolfmann_word(W, {j: e}) for j in W.J for e in unit_basis]
    return code_from_matrix(GFMatrix(W.q_spec, np.stack(rows)))

