"""
Exact arithmetic in number fields presented as Q[x]/(f).

A field is described by a monic polynomial f with rational coefficients,
represented densely as a tuple starting with the constant term (so x^2 - 5
is ``(-5, 0, 1)``). Elements are coefficient vectors of length deg(f).
Irreducibility of f is an input contract, not checked: the package only
ever builds Q(zeta_m) from cyclotomic polynomials and Q(sqrt 5) from
x^2 - 5.
"""
from __future__ import annotations

import functools
from fractions import Fraction
from typing import Sequence

Rational = Fraction  # arbitrary-precision, gcd-reduced, denominator > 0


def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """
    Coefficients of the m-th cyclotomic polynomial, constant term first.

    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    >>> cyclotomic_polynomial(5)
    (1, 1, 1, 1, 1)
    """
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    return _cyclotomic(m)


@functools.lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    # x^m - 1 divided by the cyclotomic polynomials of the proper divisors.
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _polydiv_exact(poly, list(_cyclotomic(d)))
    return tuple(poly)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    quot = [0] * (len(num) - len(den) + 1)
    for k in range(len(quot) - 1, -1, -1):
        c, rem = divmod(num[k + len(den) - 1], den[-1])
        assert rem == 0
        quot[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
    assert all(c == 0 for c in num)
    return quot


class NumberField:
    """Q[x]/(f) for a monic rational polynomial f, with cached reductions."""

    def __init__(self, modulus: Sequence, name: str = "x"):
        mod = tuple(Fraction(c) for c in modulus)
        if len(mod) < 2 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.modulus = mod
        self.degree = len(mod) - 1
        self.name = name
        # Reductions of x^degree .. x^(2*degree - 2) modulo f, used by mul.
        self._powers: list[tuple[Fraction, ...]] = []
        self._powers.append(tuple(-c for c in mod[:-1]))
        for _ in range(self.degree - 2):
            shifted = [Fraction(0)] + list(self._powers[-1])
            lead = shifted.pop()
            if lead:
                shifted = [a + lead * b for a, b in zip(shifted, self._powers[0])]
            self._powers.append(tuple(shifted))
        self.zero = NFElem(self, (Fraction(0),) * self.degree)
        self.one = NFElem(self, (Fraction(1),) + (Fraction(0),) * (self.degree - 1))

    def gen(self) -> NFElem:
        """The class of x, e.g. zeta_m in a cyclotomic field."""
        coeffs = [Fraction(0)] * self.degree
        if self.degree == 1:
            return NFElem(self, (-self.modulus[0],))
        coeffs[1] = Fraction(1)
        return NFElem(self, tuple(coeffs))

    def from_rational(self, q) -> NFElem:
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(q)
        return NFElem(self, tuple(coeffs))

    def element(self, coeffs: Sequence) -> NFElem:
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) != self.degree:
            raise ValueError("coefficient vector has wrong length")
        return NFElem(self, cs)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"NumberField({self.name}: {self.modulus})"


@functools.lru_cache(maxsize=None)
def cyclotomic_field(m: int) -> NumberField:
    return NumberField(cyclotomic_polynomial(m), name=f"zeta{m}")


@functools.lru_cache(maxsize=None)
def sqrt_field(n: int) -> NumberField:
    return NumberField((-n, 0, 1), name=f"sqrt{n}")


class NFElem:
    """An element of a NumberField; immutable and hashable."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: NumberField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, NFElem):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == self.field.from_rational(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.modulus, self.coeffs))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, NFElem):
            if other.field != self.field:
                raise ValueError("number field mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElem(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return NFElem(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElem(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    prod[i + j] += a * b
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                red = self.field._powers[k - d]
                out = [x + c * r for x, r in zip(out, red)]
        return NFElem(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> NFElem:
        """Extended Euclid in Q[x] against the field modulus."""
        if not self:
            raise ZeroDivisionError("inversion of zero in number field")
        # r0 = modulus, r1 = self (as polynomial lists, constant first)
        r0 = list(self.field.modulus)
        r1 = list(self.coeffs)
        t0: list[Fraction] = [Fraction(0)]
        t1: list[Fraction] = [Fraction(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                inv = 1 / r1[0]
                d = self.field.degree
                coeffs = [c * inv for c in t1] + [Fraction(0)] * d
                return NFElem(self.field, tuple(coeffs[:d]))
            q, r = _polydivmod(r0, r1)
            t2 = _polysub(t0, _polymul(q, t1))
            r0, r1, t0, t1 = r1, r, t1, t2
            if not any(r1):
                raise ZeroDivisionError("element is a zero divisor; modulus not irreducible?")

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        acc, base = self.field.one, self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def conjugate_sqrt(self) -> NFElem:
        """Galois conjugate in a degree-2 field x^2 - n (sends sqrt(n) to -sqrt(n))."""
        if self.field.degree != 2:
            raise ValueError("conjugate_sqrt needs a quadratic field")
        return NFElem(self.field, (self.coeffs[0], -self.coeffs[1]))

    def rational_part(self) -> Fraction:
        """The element as a rational number; raises if it is not one."""
        if any(self.coeffs[1:]):
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = self.field.name if i == 1 else f"{self.field.name}^{i}"
                terms.append(var if c == 1 else f"{c}*{var}")
        return " + ".join(terms) if terms else "0"


def _polydivmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    while den and not den[-1]:
        den.pop()
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [Fraction(0)], num
    quot = [Fraction(0)] * (len(num) - dd)
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + dd] / den[-1]
        quot[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    return quot, num[:dd] if dd else [Fraction(0)]


def _polymul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _polysub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def nf_arith(a: NFElem, b: NFElem | None, op: str) -> NFElem:
    """Spec-surface wrapper: op in {'add', 'mul', 'inv'}."""
    if op == "inv":
        return a.inverse()
    if b is None or a.field != b.field:
        raise ValueError("number field mismatch")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")
