"""Exact arithmetic in prime fields GF(p) and extension fields GF(p^d).

An element of GF(p^d) is stored as the integer ``c0 + c1*p + ... + c_{d-1}*p^(d-1)``
where ``(c0, ..., c_{d-1})`` are its coordinates in the polynomial basis
``1, x, ..., x^(d-1)`` modulo the field's irreducible modulus. That integer is
also the *canonical order* used whenever a deterministic choice among field
elements or polynomials is needed (default moduli, generators, embeddings).

A subfield GF(p^s) of GF(p^d) (``s | d``) is never modelled as a separate
tower level: it is the set of elements fixed by ``a -> a^(p^s)``. The
standalone field ``make_field(p, s)`` is linked to it by :func:`embed` and
:func:`project`.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from sympy import factorint, isprime

from .errors import (
    DegreeNotDivisible,
    DivisionByZero,
    NoDefaultModulus,
    NotInSubfield,
    NotPrime,
    ParseError,
    ReducibleModulus,
    SpecMismatch,
    ZeroElement,
)

__all__ = [
    "FieldSpec",
    "FieldElement",
    "GFPolynomial",
    "make_field",
    "default_modulus",
    "frobenius",
    "rel_trace",
    "abs_trace",
    "embed",
    "project",
    "in_subfield",
    "mult_order",
    "find_generator",
    "min_poly",
    "frobenius_orbit",
    "parse_field_spec",
    "parse_element",
]

DEFAULT_TABLE_PRIMES = (2, 3, 5, 7)
DEFAULT_TABLE_MAX_DEGREE = 16

# log/antilog tables speed up multiplication in fields up to this size
_MUL_TABLE_LIMIT = 1 << 16
# discrete logs (power notation) are offered up to this size
_DLOG_LIMIT = 1 << 20


# ---------------------------------------------------------------------------
# Polynomials over GF(p) as plain integer lists (ascending). Used to bootstrap
# irreducibility tests before any FieldSpec exists.
# ---------------------------------------------------------------------------

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _ptrim(list(a))
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _ptrim(a)
    return a


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _pow_x_mod(f: list[int], p: int, times: int) -> list[int]:
    """Return x^(p^times) mod f."""
    r = _pmod([0, 1], f, p)
    for _ in range(times):
        acc = [1]
        base, e = r, p
        while e:
            if e & 1:
                acc = _pmod(_pmul(acc, base, p), f, p)
            base = _pmod(_pmul(base, base, p), f, p)
            e >>= 1
        r = acc
    return r


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    f = list(f)
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    if _ptrim([(a - b) % p for a, b in itertools.zip_longest(_pow_x_mod(f, p, d), x, fillvalue=0)]):
        return False
    for r in factorint(d):
        h = _pow_x_mod(f, p, d // r)
        diff = _ptrim([(a - b) % p for a, b in itertools.zip_longest(h, x, fillvalue=0)])
        if len(_pgcd(f, diff, p)) != 1:
            return False
    return True


def _digits(v: int, p: int, d: int) -> list[int]:
    out = []
    for _ in range(d):
        v, r = divmod(v, p)
        out.append(r)
    return out


def _undigits(ds: Iterable[int], p: int) -> int:
    v = 0
    for c in reversed(list(ds)):
        v = v * p + c
    return v


@lru_cache(maxsize=None)
def default_modulus(p: int, d: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``d`` over GF(p) in canonical order.

    Canonical order compares the integer ``c0 + c1*p + ... + cd*p^d``; for
    (2,3), (2,4) and (2,7) this gives x^3+x+1, x^4+x+1 and x^7+x+1.
    """
    if p not in DEFAULT_TABLE_PRIMES or not 1 <= d <= DEFAULT_TABLE_MAX_DEGREE:
        raise NoDefaultModulus(f"no default modulus shipped for p={p}, d={d}")
    for v in range(p**d):
        cand = _digits(v, p, d) + [1]
        if cand[0] == 0 and d > 1:
            continue
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("unreachable: irreducibles exist in every degree")


@lru_cache(maxsize=None)
def _validate(p: int, d: int, modulus: tuple[int, ...]) -> None:
    if not isinstance(p, int) or not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"extension degree must be a positive integer, got {d}")
    if len(modulus) != d + 1 or modulus[-1] != 1:
        raise ReducibleModulus(f"modulus {list(modulus)} is not monic of degree {d}")
    if any(not 0 <= c < p for c in modulus):
        raise ValueError(f"modulus coefficients must lie in [0, {p})")
    if not _is_irreducible(modulus, p):
        raise ReducibleModulus(f"modulus {list(modulus)} is reducible over GF({p})")


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^d) presented as GF(p)[x] / (modulus)."""

    p: int
    d: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))
        _validate(self.p, self.d, self.modulus)

    @property
    def order(self) -> int:
        return self.p**self.d

    def __str__(self) -> str:
        return f"p={self.p},d={self.d},modulus={','.join(map(str, self.modulus))}"

    def __repr__(self) -> str:
        return f"FieldSpec({self})"

    def __call__(self, value) -> FieldElement:
        """Coerce an int (canonical encoding) or coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise SpecMismatch(f"element of {value.spec} used in {self}")
            return value
        if isinstance(value, (int,)) or hasattr(value, "__index__"):
            v = int(value)
            if not 0 <= v < self.order:
                raise ValueError(f"{v} is not an element encoding of GF({self.order})")
            return FieldElement(self, v)
        return self.from_coeffs(value)

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElement:
        coeffs = list(coeffs)
        if len(coeffs) > self.d:
            raise ValueError(f"expected at most {self.d} coefficients, got {len(coeffs)}")
        return FieldElement(self, _undigits((int(c) % self.p for c in coeffs), self.p))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def root(self) -> FieldElement:
        """The class of x, i.e. a root of the modulus."""
        if self.d == 1:
            return FieldElement(self, (-self.modulus[0]) % self.p)
        return FieldElement(self, self.p)

    def elements(self) -> Iterator[FieldElement]:
        """All elements in canonical order."""
        for v in range(self.order):
            yield FieldElement(self, v)

    def scalar(self, c: int) -> FieldElement:
        """The prime-field element ``c mod p``."""
        return FieldElement(self, int(c) % self.p)


def make_field(p: int, d: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    if not isinstance(p, int) or not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if modulus is None:
        modulus = default_modulus(p, d)
    return FieldSpec(p, d, tuple(modulus))


# ---------------------------------------------------------------------------
# Raw arithmetic on canonical encodings.
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _mod_int(spec: FieldSpec) -> int:
    return _undigits(spec.modulus, spec.p)


def _add(spec: FieldSpec, a: int, b: int) -> int:
    p = spec.p
    if p == 2:
        return a ^ b
    out, place = 0, 1
    while a or b:
        a, ra = divmod(a, p)
        b, rb = divmod(b, p)
        out += ((ra + rb) % p) * place
        place *= p
    return out


def _neg(spec: FieldSpec, a: int) -> int:
    p = spec.p
    if p == 2:
        return a
    out, place = 0, 1
    while a:
        a, r = divmod(a, p)
        out += ((-r) % p) * place
        place *= p
    return out


def _mul_slow(spec: FieldSpec, a: int, b: int) -> int:
    p, d = spec.p, spec.d
    if p == 2:
        m = _mod_int(spec)
        top = 1 << d
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= m
        return r
    prod = _pmul(_digits(a, p, d), _digits(b, p, d), p)
    return _undigits(_pmod(prod, list(spec.modulus), p), p)


def _pow_slow(spec: FieldSpec, a: int, e: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = _mul_slow(spec, r, a)
        a = _mul_slow(spec, a, a)
        e >>= 1
    return r


@lru_cache(maxsize=None)
def _group_factors(spec: FieldSpec) -> tuple[int, ...]:
    return tuple(sorted(factorint(spec.order - 1)))


def _is_primitive_slow(spec: FieldSpec, v: int) -> bool:
    n = spec.order - 1
    if v == 0:
        return False
    return all(_pow_slow(spec, v, n // r) != 1 for r in _group_factors(spec))


@lru_cache(maxsize=None)
def _generator_value(spec: FieldSpec) -> int:
    for v in range(1, spec.order):
        if _is_primitive_slow(spec, v):
            return v
    raise AssertionError("unreachable: multiplicative group is cyclic")


@lru_cache(maxsize=None)
def _log_tables(spec: FieldSpec) -> tuple[list[int], list[int]] | None:
    """(exp, log) lists relative to ``find_generator(spec)``; None if too big."""
    if spec.order > _DLOG_LIMIT:
        return None
    g = _generator_value(spec)
    n = spec.order - 1
    exp = [0] * n
    log = [-1] * spec.order
    v = 1
    for i in range(n):
        exp[i] = v
        log[v] = i
        v = _mul_slow(spec, v, g)
    return exp, log


def _fast_tables(spec: FieldSpec):
    if spec.order > _MUL_TABLE_LIMIT:
        return None
    return _log_tables(spec)


def _mul(spec: FieldSpec, a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    t = _fast_tables(spec)
    if t is None:
        return _mul_slow(spec, a, b)
    exp, log = t
    return exp[(log[a] + log[b]) % (spec.order - 1)]


def _pow(spec: FieldSpec, a: int, e: int) -> int:
    if a == 0:
        if e > 0:
            return 0
        if e == 0:
            return 1
        raise DivisionByZero("zero raised to a negative power")
    n = spec.order - 1
    t = _fast_tables(spec)
    if t is not None:
        exp, log = t
        return exp[(log[a] * e) % n]
    return _pow_slow(spec, a, e % n)


def _inv(spec: FieldSpec, a: int) -> int:
    if a == 0:
        raise DivisionByZero("zero has no multiplicative inverse")
    return _pow(spec, a, -1)


class FieldElement:
    """Immutable element of the field described by ``spec``."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: int):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(_digits(self.value, self.spec.p, self.spec.d))

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatch(f"cannot combine elements of {self.spec} and {other.spec}")
            return other.value
        if isinstance(other, int):
            return other % self.spec.p
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, _add(self.spec, self.value, b))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.spec, _neg(self.spec, self.value))

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, _add(self.spec, self.value, _neg(self.spec, b)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, _mul(self.spec, self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, _mul(self.spec, self.value, _inv(self.spec, b)))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        return FieldElement(self.spec, _pow(self.spec, self.value, int(e)))

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, _inv(self.spec, self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.spec.p and self.value < self.spec.p
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def log(self) -> int | None:
        """Exponent k with ``self == find_generator(spec)**k``, or None if the
        field is too large for a discrete-log table."""
        if self.value == 0:
            raise ZeroElement("zero has no discrete logarithm")
        t = _log_tables(self.spec)
        if t is None:
            return None
        return t[1][self.value]

    def to_coeff_str(self) -> str:
        return "[" + ",".join(map(str, self.coeffs)) + "]"

    def to_power_str(self) -> str:
        if self.value == 0:
            return "0"
        k = self.log()
        if k is None:
            return self.to_coeff_str()
        if k == 0:
            return "1"
        if k == 1:
            return "g"
        return f"g^{k}"

    def __str__(self):
        return self.to_power_str()

    def __repr__(self):
        return f"FieldElement({self.to_coeff_str()}, GF({self.spec.p}^{self.spec.d}))"


def _check_divides(spec: FieldSpec, s: int) -> int:
    if s < 1 or spec.d % s:
        raise DegreeNotDivisible(f"subfield degree {s} does not divide {spec.d}")
    return spec.d // s


def frobenius(a: FieldElement, s: int = 1, e: int = 1) -> FieldElement:
    """``a ** (p ** (s*e))``, the e-th iterate of the q-power map, q = p^s."""
    _check_divides(a.spec, s)
    k = (s * e) % a.spec.d
    return a ** (a.spec.p**k)


def rel_trace(a: FieldElement, s: int = 1) -> FieldElement:
    """Trace from GF(p^d) down to its subfield GF(p^s); stays in the big field."""
    m = _check_divides(a.spec, s)
    q = a.spec.p**s
    acc = a.spec.zero
    c = a
    for _ in range(m):
        acc = acc + c
        c = c**q
    return acc


def abs_trace(a: FieldElement) -> int:
    """Absolute trace to GF(p) as an integer in ``range(p)``."""
    return rel_trace(a, 1).value


def in_subfield(a: FieldElement, s: int) -> bool:
    _check_divides(a.spec, s)
    return a ** (a.spec.p**s) == a


@lru_cache(maxsize=None)
def _embedding(small: FieldSpec, big: FieldSpec) -> tuple[int, dict[int, int], dict[int, int]]:
    """Image of ``small.root`` plus forward/backward lookup tables."""
    if small.p != big.p:
        raise SpecMismatch("fields of different characteristic")
    s = small.d
    _check_divides(big, s)
    n = big.order - 1
    g = find_generator(big)
    w = g ** (n // (small.order - 1))
    sub = [big.zero] + [w**k for k in range(small.order - 1)]

    def ev(x):
        acc = big.zero
        for c in reversed(small.modulus):
            acc = acc * x + c
        return acc

    roots = sorted(x.value for x in sub if not ev(x))
    rho = FieldElement(big, roots[0])
    powers = [big.one]
    for _ in range(1, s):
        powers.append(powers[-1] * rho)
    fwd: dict[int, int] = {}
    for v in range(small.order):
        acc = big.zero
        for c, pw in zip(_digits(v, small.p, s), powers):
            if c:
                acc = acc + pw * c
        fwd[v] = acc.value
    back = {b: v for v, b in fwd.items()}
    return rho.value, fwd, back


def embed(a: FieldElement, big: FieldSpec) -> FieldElement:
    """Image of ``a`` under the canonical embedding GF(p^s) -> ``big``.

    The small field's root is sent to the smallest root (canonical order) of
    the small modulus inside ``big``.
    """
    _, fwd, _ = _embedding(a.spec, big)
    return FieldElement(big, fwd[a.value])


def project(a: FieldElement, s: int, small: FieldSpec | None = None) -> FieldElement:
    """Inverse of :func:`embed` on the embedded copy of GF(p^s)."""
    if small is None:
        small = make_field(a.spec.p, s)
    elif small.d != s or small.p != a.spec.p:
        raise SpecMismatch(f"{small} is not GF({a.spec.p}^{s})")
    _, _, back = _embedding(small, a.spec)
    try:
        return FieldElement(small, back[a.value])
    except KeyError:
        raise NotInSubfield(f"{a!r} is not in the subfield GF({a.spec.p}^{s})") from None


def mult_order(a: FieldElement) -> int:
    if a.value == 0:
        raise ZeroElement("zero has no multiplicative order")
    n = a.spec.order - 1
    t = n
    for r, e in factorint(n).items():
        for _ in range(e):
            if (a ** (t // r)).value == 1:
                t //= r
            else:
                break
    return t


def find_generator(spec: FieldSpec) -> FieldElement:
    """First element of full multiplicative order in canonical order."""
    return FieldElement(spec, _generator_value(spec))


def frobenius_orbit(a: FieldElement, s: int = 1) -> list[FieldElement]:
    """Distinct conjugates ``a, a^q, a^(q^2), ...`` in order."""
    _check_divides(a.spec, s)
    q = a.spec.p**s
    orbit = [a]
    c = a**q
    while c != a:
        orbit.append(c)
        c = c**q
    return orbit


def min_poly(a: FieldElement, s: int = 1, small: FieldSpec | None = None) -> GFPolynomial:
    """Minimal polynomial of ``a`` over GF(p^s), as a polynomial over the
    standalone field ``make_field(p, s)``."""
    big = a.spec
    prod = GFPolynomial(big, [1])
    for c in frobenius_orbit(a, s):
        prod = prod * GFPolynomial(big, [-c, big.one])
    if small is None:
        small = make_field(big.p, s)
    return GFPolynomial(small, [project(c, s, small) for c in prod.coeffs])


class GFPolynomial:
    """Polynomial with coefficients in a field, ascending order, no trailing zeros."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: Iterable = ()):
        cs = [spec(c) if not isinstance(c, FieldElement) else c for c in coeffs]
        for c in cs:
            if c.spec != spec:
                raise SpecMismatch(f"coefficient from {c.spec} in polynomial over {spec}")
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("GFPolynomial is immutable")

    @classmethod
    def monomial(cls, spec: FieldSpec, k: int, c=1) -> GFPolynomial:
        return cls(spec, [0] * k + [spec(c) if not isinstance(c, int) else spec.scalar(c)])

    @classmethod
    def x_n_minus_1(cls, spec: FieldSpec, n: int) -> GFPolynomial:
        return cls(spec, [spec.scalar(-1)] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        """Degree, with -1 standing in for minus infinity on the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.spec.zero

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.spec.zero

    def _check(self, other: GFPolynomial):
        if not isinstance(other, GFPolynomial):
            return NotImplemented
        if other.spec != self.spec:
            raise SpecMismatch("polynomials over different fields")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return GFPolynomial(self.spec, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self):
        return GFPolynomial(self.spec, [-c for c in self.coeffs])

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return GFPolynomial(self.spec, [c * other for c in self.coeffs])
        if self._check(other) is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return GFPolynomial(self.spec)
        out = [self.spec.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return GFPolynomial(self.spec, out)

    def __divmod__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs) + 1
        quo = [self.spec.zero] * max(dq, 0)
        inv_lead = other.lead.inverse()
        db = other.degree
        for k in range(dq - 1, -1, -1):
            c = rem[k + db] * inv_lead
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return GFPolynomial(self.spec, quo), GFPolynomial(self.spec, rem[:db] if db >= 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> GFPolynomial:
        if self.is_zero():
            return self
        return self * self.lead.inverse()

    def __call__(self, x: FieldElement) -> FieldElement:
        """Evaluate at ``x``; ``x`` may live in an extension of the coefficient
        field, in which case coefficients are embedded first."""
        cs = self.coeffs
        if x.spec != self.spec:
            cs = [embed(c, x.spec) for c in cs]
        acc = x.spec.zero
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, GFPolynomial):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def to_ints(self) -> list[int]:
        return [c.value for c in self.coeffs]

    def __str__(self):
        return ",".join(_ground_str(c) for c in self.coeffs) if self.coeffs else "0"

    def pretty(self) -> str:
        """Human form such as ``1 + x + x^3``."""
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = _ground_str(c)
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mon:
                terms.append(cs)
            elif c.value == 1:
                terms.append(mon)
            else:
                terms.append(f"{cs}*{mon}")
        return " + ".join(terms)

    def __repr__(self):
        return f"GFPolynomial({self.pretty()} over GF({self.spec.order}))"


def _ground_str(c: FieldElement) -> str:
    """Digits for prime fields, coefficient brackets otherwise."""
    return str(c.value) if c.spec.d == 1 else c.to_coeff_str()


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

_SPEC_RE = re.compile(r"^\s*p\s*=\s*(\d+)\s*,\s*d\s*=\s*(\d+)\s*(?:,\s*modulus\s*=\s*([\d,\s]+))?\s*$")


def parse_field_spec(text: str) -> FieldSpec:
    """Parse ``p=<int>,d=<int>[,modulus=<c0,...,cd>]`` or the short ``p,d[,c0,...,cd]``."""
    m = _SPEC_RE.match(text)
    try:
        if m:
            p, d = int(m.group(1)), int(m.group(2))
            mod = [int(c) for c in m.group(3).split(",") if c.strip()] if m.group(3) else None
        else:
            parts = [int(c) for c in text.replace(" ", "").split(",") if c]
            if len(parts) < 2:
                raise ParseError(f"cannot parse field spec {text!r}")
            p, d = parts[0], parts[1]
            mod = parts[2:] or None
    except ValueError as exc:
        raise ParseError(f"cannot parse field spec {text!r}") from exc
    return make_field(p, d, mod)


_POW_RE = re.compile(r"^g(?:\^(-?\d+))?$")


def parse_element(text: str, spec: FieldSpec) -> FieldElement:
    """Parse ``0``, ``1``, ``g``, ``g^k`` or ``[c0,c1,...]``.

    ``g`` is :func:`find_generator` of ``spec``, matching how elements print.
    """
    t = text.strip().replace(" ", "")
    if not t:
        raise ParseError("empty element")
    if t.startswith("[") and t.endswith("]"):
        try:
            cs = [int(c) for c in t[1:-1].split(",") if c]
        except ValueError as exc:
            raise ParseError(f"bad coefficient list {text!r}") from exc
        if len(cs) > spec.d or any(not 0 <= c < spec.p for c in cs):
            raise ParseError(f"bad coefficient list {text!r} for {spec}")
        return spec.from_coeffs(cs)
    if t == "0":
        return spec.zero
    if t == "1":
        return spec.one
    m = _POW_RE.match(t)
    if m:
        k = int(m.group(1)) if m.group(1) else 1
        return find_generator(spec) ** k
    raise ParseError(f"cannot parse field element {text!r}")
