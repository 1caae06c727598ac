"""Shared fixtures and brute-force oracles.

The oracles here deliberately avoid the package's arithmetic: GF(p^d)
products go through sympy polynomial remainders, codes are compared as
explicit codeword sets, and so on.
"""

import itertools

import numpy as np
import pytest
from sympy import GF as SymGF
from sympy import Poly, factor_list, symbols

from tracecodes.galois import make_field
from tracecodes.linalg import GFMatrix

X = symbols("x")

EXAMPLE1_G = [
    [1, 0, 0, 1, 1, 0, 0],
    [0, 1, 0, 0, 1, 1, 0],
    [0, 0, 1, 0, 0, 1, 1],
]
EXAMPLE2_G = [
    [1, 0, 0, 0, 1, 1, 0],
    [0, 1, 0, 0, 0, 1, 1],
    [0, 0, 1, 0, 1, 0, 1],
    [0, 0, 0, 1, 0, 1, 1],
]


@pytest.fixture(scope="session")
def gf2():
    return make_field(2)


@pytest.fixture(scope="session")
def gf8():
    return make_field(2, 3, [1, 1, 0, 1])


@pytest.fixture(scope="session")
def gf16():
    return make_field(2, 4, [1, 1, 0, 0, 1])


@pytest.fixture(scope="session")
def gf128():
    return make_field(2, 7, [1, 1, 0, 0, 0, 0, 0, 1])


@pytest.fixture
def example1_matrix(gf2):
    return GFMatrix(gf2, EXAMPLE1_G)


@pytest.fixture
def example2_matrix(gf2):
    return GFMatrix(gf2, EXAMPLE2_G)


# --- oracles ---------------------------------------------------------------

def oracle_mul(spec, a_coeffs, b_coeffs):
    """Product in GF(p)[x]/(modulus) through sympy."""
    dom = SymGF(spec.p)
    pa = Poly(list(reversed(a_coeffs)) or [0], X, domain=dom)
    pb = Poly(list(reversed(b_coeffs)) or [0], X, domain=dom)
    pm = Poly(list(reversed(spec.modulus)), X, domain=dom)
    r = (pa * pb).rem(pm)
    cs = [int(c) % spec.p for c in reversed(r.all_coeffs())]
    return tuple((cs + [0] * spec.d)[: spec.d])


def oracle_is_irreducible(coeffs, p):
    """Trial division by every monic polynomial of degree 1..d//2."""
    d = len(coeffs) - 1
    dom = SymGF(p)
    f = Poly(list(reversed(coeffs)), X, domain=dom)
    for k in range(1, d // 2 + 1):
        for low in itertools.product(range(p), repeat=k):
            g = Poly(list(reversed(list(low) + [1])), X, domain=dom)
            if f.rem(g).is_zero:
                return False
    return True


def oracle_span(rows, p):
    """All GF(p)-combinations of integer rows (prime p only)."""
    rows = [np.asarray(r, dtype=np.int64) % p for r in rows]
    n = len(rows[0]) if rows else 0
    out = set()
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        v = np.zeros(n, dtype=np.int64)
        for c, r in zip(coeffs, rows):
            v = (v + c * r) % p
        out.add(tuple(int(x) for x in v))
    return out


def oracle_weight_distribution(rows, p, n):
    counts = [0] * (n + 1)
    for w in oracle_span(rows, p) if rows else {tuple([0] * n)}:
        counts[sum(1 for x in w if x)] += 1
    return counts


def sympy_divisors(n, p):
    """Monic divisors of x^n - 1 over GF(p), as coefficient lists (ascending)."""
    _, facs = factor_list(Poly(X**n - 1, X, domain=SymGF(p)))
    out = [Poly(1, X, domain=SymGF(p))]
    for f, e in facs:
        out = [d * f**i for d in out for i in range(e + 1)]
    return [[int(c) % p for c in reversed(d.monic().all_coeffs())] for d in out]


def code_words(code):
    return {tuple(int(x) for x in w) for w in code.codewords()}


# --- acceptance reporting --------------------------------------------------

_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, dur in _ACCEPTANCE:
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}  ({dur:.2f}s)")
