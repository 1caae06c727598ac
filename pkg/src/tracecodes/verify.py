"""Seeded property suites behind ``tracecodes verify``.

Each suite draws random instances from a numpy Generator and reports how
many satisfied the property. The same seed always gives the same report.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .bases import FieldBasis, dual_basis
from .codes import (
    CyclicSpec,
    code_equal,
    code_from_matrix,
    cyclic_code,
    generator_polynomial,
    weight_distribution,
    x_n_minus_1,
)
from .galois import GFPolynomial, make_field, rel_trace
from .linalg import GFMatrix, rank
from .representations import (
    cyclic_defining_set,
    defining_set_from_matrix,
    wolfmann_code,
    wolfmann_spec_from_check,
)
from .trace_construction import (
    DefiningSet,
    character_sum_over_ground,
    codeword,
    n_x_zero,
    trace_code,
    weight_via_character_sum,
)

DEFAULT_SEED = 20240607

# (p, s) pairs for GF(q), q in {2, 3, 4}
GROUND_FIELDS = ((2, 1), (3, 1), (2, 2))


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: int
    total: int

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def line(self) -> str:
        return f"{self.name}: {self.passed}/{self.total} {'PASS' if self.ok else 'FAIL'}"


def random_matrix(rng: np.random.Generator, max_k: int = 4, max_n: int = 16) -> GFMatrix:
    p, s = GROUND_FIELDS[rng.integers(len(GROUND_FIELDS))]
    q_spec = make_field(p, s)
    k = int(rng.integers(1, max_k + 1))
    n = int(rng.integers(1, max_n + 1))
    return GFMatrix(q_spec, rng.integers(0, q_spec.order, size=(k, n)))


def check_roundtrip(G: GFMatrix) -> bool:
    return code_equal(trace_code(defining_set_from_matrix(G)), code_from_matrix(G))


def random_defining_set(rng: np.random.Generator, max_order: int = 1 << 10, max_n: int = 12) -> DefiningSet:
    while True:
        p, s = GROUND_FIELDS[rng.integers(len(GROUND_FIELDS))]
        m = int(rng.integers(1, 6))
        if p ** (s * m) <= max_order:
            break
    big = make_field(p, s * m)
    n = int(rng.integers(1, max_n + 1))
    return DefiningSet(big, s, tuple(big(int(v)) for v in rng.integers(0, big.order, size=n)))


def check_character_sums(D: DefiningSet) -> bool:
    q = D.ground.order
    for x in D.big_spec.elements():
        direct = int(np.count_nonzero(codeword(x, D)))
        if weight_via_character_sum(x, D) != direct:
            return False
        if q * n_x_zero(x, D) - D.n != character_sum_over_ground(x, D).to_int():
            return False
    return True


def random_cyclic_spec(rng: np.random.Generator, choices=((2, 7), (2, 8), (3, 8))) -> CyclicSpec:
    q, n = choices[rng.integers(len(choices))]
    q_spec = make_field(q, 1)
    while True:
        coeffs = rng.integers(0, q, size=n)
        if coeffs.any():
            break
    return CyclicSpec(q_spec, n, GFPolynomial(q_spec, [int(c) for c in coeffs]))


def check_cyclic_orbit(spec: CyclicSpec) -> bool:
    g = generator_polynomial(spec.f, spec.n)
    return code_equal(trace_code(cyclic_defining_set(spec)), cyclic_code(g, spec.n))


def random_basis(rng: np.random.Generator, p: int, s: int, m: int) -> FieldBasis:
    big = make_field(p, s * m)
    while True:
        els = tuple(big(int(v)) for v in rng.integers(1, big.order, size=m))
        try:
            return FieldBasis(big, s, els)
        except ValueError:
            continue


def check_dual_pairing(basis: FieldBasis) -> bool:
    dual = dual_basis(basis)
    big, s = basis.spec, basis.s
    for i, a in enumerate(basis):
        for j, b in enumerate(dual):
            expect = big.one if i == j else big.zero
            if rel_trace(a * b, s) != expect:
                return False
    return True


def check_wolfmann(h: GFPolynomial, n: int) -> bool:
    g = x_n_minus_1(h.spec, n) // h
    return code_equal(wolfmann_code(wolfmann_spec_from_check(h, n)), cyclic_code(g, n))


def _wolfmann_samples(rng: np.random.Generator, rounds: int):
    """Divisors h of x^7 - 1 over GF(2) built as products of its three factors."""
    F2 = make_field(2)
    factors = [GFPolynomial(F2, c) for c in ([1, 1], [1, 1, 0, 1], [1, 0, 1, 1])]
    for _ in range(rounds):
        pick = rng.integers(0, 2, size=3)
        h = GFPolynomial(F2, [1])
        for f, take in zip(factors, pick):
            if take:
                h = h * f
        yield h, 7


def run_suites(seed: int = DEFAULT_SEED, rounds: int = 20) -> list[SuiteResult]:
    rng = np.random.default_rng(seed)
    results = []

    def tally(name: str, items, check: Callable) -> None:
        items = list(items)
        results.append(SuiteResult(name, sum(bool(check(*it)) for it in items), len(items)))

    tally("matrix-roundtrip", ((random_matrix(rng),) for _ in range(rounds)), check_roundtrip)
    tally("character-sums", ((random_defining_set(rng, 1 << 8),) for _ in range(rounds)), check_character_sums)
    tally("cyclic-normal-basis", ((random_cyclic_spec(rng),) for _ in range(rounds)), check_cyclic_orbit)
    tally(
        "dual-basis",
        ((random_basis(rng, *GROUND_FIELDS[rng.integers(3)], int(rng.integers(1, 4))),) for _ in range(rounds)),
        check_dual_pairing,
    )
    tally("wolfmann", _wolfmann_samples(rng, rounds), check_wolfmann)
    tally(
        "weight-sum-rule",
        ((random_matrix(rng),) for _ in range(rounds)),
        lambda G: weight_distribution(code_from_matrix(G)).total == G.q_spec.order ** rank(G),
    )
    return results


__all__ = [
    "DEFAULT_SEED",
    "SuiteResult",
    "run_suites",
    "random_matrix",
    "random_defining_set",
    "random_cyclic_spec",
    "random_basis",
    "check_roundtrip",
    "check_character_sums",
    "check_cyclic_orbit",
    "check_dual_pairing",
    "check_wolfmann",
]
