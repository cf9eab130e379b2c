"""
Sparse multivariate polynomials in the named parameters of a coefficient set.

A ParamPoly is a map from exponent vectors to exact coefficients over a fixed,
ordered variable list. Coefficients are rationals (``fractions.Fraction``) or
number-field elements (:class:`~brauerlab.exact.numberfield.NFElem`); the two
are coerced by lifting rationals into the field. Zero coefficients are never
stored, so equality of term maps is equality of polynomials.

>>> t = ParamPoly.variable("tau", ("tau",))
>>> ((t - 1) * (t + 4)).eval({"tau": 1})
Fraction(0, 1)
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .numberfield import NFElem


class VariableMismatch(ValueError):
    """Raised when combining polynomials over different variable lists."""


def _unify(a, b):
    """Coerce a pair of coefficients into a common domain."""
    if isinstance(a, NFElem) and not isinstance(b, NFElem):
        return a, a.field.from_rational(b)
    if isinstance(b, NFElem) and not isinstance(a, NFElem):
        return b.field.from_rational(a), b
    if isinstance(a, NFElem) and isinstance(b, NFElem) and a.field != b.field:
        raise ValueError("cannot mix elements of different number fields")
    return a, b


class ParamPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: Mapping[tuple[int, ...], object]):
        self.vars = vars
        self.terms = {e: c for e, c in terms.items() if c}

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value, vars: tuple[str, ...] = ()) -> ParamPoly:
        if not isinstance(value, (Fraction, NFElem)):
            value = Fraction(value)
        zero = (0,) * len(vars)
        return cls(vars, {zero: value} if value else {})

    @classmethod
    def variable(cls, name: str, vars: tuple[str, ...]) -> ParamPoly:
        exp = tuple(1 if v == name else 0 for v in vars)
        if name not in vars:
            raise VariableMismatch(f"{name!r} not among {vars}")
        return cls(vars, {exp: Fraction(1)})

    # -- ring structure ----------------------------------------------------

    def _coerce(self, other) -> ParamPoly | None:
        if isinstance(other, ParamPoly):
            if other.vars != self.vars:
                raise VariableMismatch(f"variable lists differ: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction, NFElem)):
            return ParamPoly.constant(other, self.vars)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            if e in terms:
                a, b = _unify(terms[e], c)
                terms[e] = a + b
            else:
                terms[e] = c
        return ParamPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms: dict[tuple[int, ...], object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                a, b = _unify(c1, c2)
                prod = a * b
                if e in terms:
                    x, y = _unify(terms[e], prod)
                    terms[e] = x + y
                else:
                    terms[e] = prod
        return ParamPoly(self.vars, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by an invertible constant (scalar or constant polynomial)."""
        if isinstance(other, ParamPoly):
            other = other.constant_value()
        if isinstance(other, NFElem):
            inv = other.inverse()
        else:
            inv = 1 / Fraction(other)
        return self * inv

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        acc = ParamPoly.constant(1, self.vars)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    # -- predicates & access ------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, NFElem)):
            other = ParamPoly.constant(other, self.vars)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        if self.vars != other.vars:
            return False
        if set(self.terms) != set(other.terms):
            return False
        for e, c in self.terms.items():
            a, b = _unify(c, other.terms[e])
            if a != b:
                return False
        return True

    __hash__ = None  # mutable-dict backed; compare, don't hash

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        zero = (0,) * len(self.vars)
        extra = [e for e in self.terms if e != zero]
        if extra:
            raise ValueError(f"{self} is not constant")
        return self.terms.get(zero, Fraction(0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def eval(self, assignment: Mapping[str, object]):
        """Exact evaluation; every variable of the polynomial must be assigned."""
        missing = [v for i, v in enumerate(self.vars) if v not in assignment and any(e[i] for e in self.terms)]
        if missing:
            raise KeyError(f"missing assignment for {missing}")
        total = None
        for e, c in self.terms.items():
            val = c
            for i, k in enumerate(e):
                if k:
                    base = assignment[self.vars[i]]
                    if not isinstance(base, (Fraction, NFElem)):
                        base = Fraction(base)
                    val = val * base ** k
            total = val if total is None else _add(total, val)
        return total if total is not None else Fraction(0)

    def substitute(self, assignment: Mapping[str, "ParamPoly"]) -> "ParamPoly":
        """Substitute polynomials for variables (all over one shared variable list)."""
        out = None
        vars_out = next(iter(assignment.values())).vars
        for e, c in self.terms.items():
            term = ParamPoly.constant(c, vars_out)
            for i, k in enumerate(e):
                if k:
                    term = term * assignment[self.vars[i]] ** k
            out = term if out is None else out + term
        return out if out is not None else ParamPoly.constant(0, vars_out)

    def with_vars(self, vars: tuple[str, ...]) -> "ParamPoly":
        """Re-embed into a larger variable list (old vars must all be present)."""
        pos = [vars.index(v) for v in self.vars]
        terms = {}
        for e, c in self.terms.items():
            e2 = [0] * len(vars)
            for p, k in zip(pos, e):
                e2[p] = k
            terms[tuple(e2)] = c
        return ParamPoly(vars, terms)

    # -- univariate helpers (determinant criteria etc.) ----------------------

    def univariate_coeffs(self, var: str) -> list:
        """Dense coefficient list in ``var`` (constant first); other vars must not occur."""
        i = self.vars.index(var)
        for e in self.terms:
            if any(e[j] for j in range(len(e)) if j != i):
                raise ValueError("polynomial is not univariate in " + var)
        deg = max((e[i] for e in self.terms), default=0)
        out = [Fraction(0)] * (deg + 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v
                for v, k in zip(self.vars, e)
                if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def _add(a, b):
    a, b = _unify(a, b)
    return a + b


def poly_arith(p: ParamPoly, q: ParamPoly, op: str) -> ParamPoly:
    """Spec-surface wrapper: op in {'add', 'mul'}; variable lists must agree."""
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def poly_eval(p: ParamPoly, assignment: Mapping[str, object]):
    return p.eval(assignment)


def poly_divmod_univariate(num: ParamPoly, den: ParamPoly, var: str) -> tuple[ParamPoly, ParamPoly]:
    """Polynomial division in Q[var]; both arguments must be univariate in var."""
    n = num.univariate_coeffs(var)
    d = den.univariate_coeffs(var)
    while d and not d[-1]:
        d.pop()
    if not d:
        raise ZeroDivisionError("division by zero polynomial")
    n = list(n)
    dd = len(d) - 1
    quot = [Fraction(0)] * max(len(n) - dd, 0)
    for k in range(len(quot) - 1, -1, -1):
        c = n[k + dd] / d[-1]
        quot[k] = c
        if c:
            for i, dc in enumerate(d):
                n[k + i] -= c * dc
    def build(coeffs: Iterable) -> ParamPoly:
        i = num.vars.index(var)
        terms = {}
        for k, c in enumerate(coeffs):
            if c:
                e = [0] * len(num.vars)
                e[i] = k
                terms[tuple(e)] = c
        return ParamPoly(num.vars, terms)
    return build(quot), build(n[:dd] if dd else [Fraction(0)])
