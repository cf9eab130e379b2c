"""
Exact and modular linear algebra over rationals and number fields.

Matrices are plain lists of row lists. The exact routines only assume field
arithmetic on the entries (+, -, *, /, truthiness), so they work for Fraction
and NFElem alike. The modular routines map rational matrices into GF(p) and
eliminate with numpy; a prime dividing any denominator raises
:class:`DenominatorDivisibleError` so the caller can retry with another prime.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .numberfield import NFElem


class DenominatorDivisibleError(ArithmeticError):
    """A denominator in the matrix is divisible by the chosen prime."""


def rank(rows: Sequence[Sequence]) -> int:
    """Rank by Gaussian elimination with exact division."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f = m[i][c] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def row_echelon(rows: Sequence[Sequence]):
    """Reduced row echelon form; returns (rref rows, pivot column list)."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [a / pv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence], one=Fraction(1)) -> list[list]:
    """Basis of the right kernel (vectors v with A v = 0)."""
    if not rows:
        return []
    ncols = len(rows[0])
    rref, pivots = row_echelon(rows)
    zero = one - one
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][fc]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> list | None:
    """One solution of A x = b, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    rref, pivots = row_echelon(aug)
    for r in rref:
        if not any(r[:ncols]) and r[ncols]:
            return None
    sample = rhs[0] if rhs else Fraction(0)
    zero = sample - sample
    x = [zero] * ncols
    for r, pc in enumerate(pivots):
        if pc < ncols:
            x[pc] = rref[r][ncols]
    return x


def det(rows: Sequence[Sequence]):
    """Determinant by fraction-producing elimination (entries form a field)."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    acc = None
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c]), None)
        if pivot is None:
            z = m[0][0] - m[0][0]
            return z
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        pv = m[c][c]
        acc = pv if acc is None else acc * pv
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return acc if sign > 0 else -acc


def invert(rows: Sequence[Sequence], one=Fraction(1)) -> list[list]:
    n = len(rows)
    zero = one - one
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    rref, pivots = row_echelon(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [r[n:] for r in rref]


# -- modular ---------------------------------------------------------------


def _to_int_mod(x, p: int) -> int:
    if isinstance(x, Fraction):
        if x.denominator % p == 0:
            raise DenominatorDivisibleError(f"denominator {x.denominator} divisible by {p}")
        return x.numerator * pow(x.denominator, -1, p) % p
    return int(x) % p


def mod_p_matrix(rows: Sequence[Sequence], p: int) -> np.ndarray:
    return np.array([[_to_int_mod(x, p) for x in r] for r in rows], dtype=np.int64)


def rank_mod_p(rows, p: int) -> int:
    """Rank over GF(p) via vectorized elimination. Accepts Fractions/ints or ndarray."""
    if isinstance(rows, np.ndarray):
        a = rows.astype(np.int64) % p
    else:
        a = mod_p_matrix(rows, p)
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        rows_below = a[r + 1:, c] != 0
        if rows_below.any():
            idx = np.nonzero(rows_below)[0] + r + 1
            a[idx] = (a[idx] - np.outer(a[idx, c], a[r])) % p
        r += 1
    return r


def matrix_rank(rows: Sequence[Sequence], mode="exact") -> int:
    """
    Rank of a rectangular matrix.

    mode is "exact" (works for Fraction and NFElem entries) or ("mod_p", p)
    for rational/integer entries; mod-p rank never exceeds the exact rank.
    """
    if mode == "exact":
        return rank(rows)
    if isinstance(mode, tuple) and mode[0] == "mod_p":
        return rank_mod_p(rows, mode[1])
    raise ValueError(f"unknown mode {mode!r}")


def rank_two_primes(rank_at: Callable[[int], int], primes: Sequence[int]) -> int:
    """
    Evaluate ``rank_at`` over the given primes until two agree.

    The caller supplies primes > 10**6; a DenominatorDivisibleError from one
    prime moves on to the next. Raises if fewer than two primes agree.
    """
    seen: list[int] = []
    for p in primes:
        try:
            r = rank_at(p)
        except DenominatorDivisibleError:
            continue
        if r in seen:
            return r
        seen.append(r)
    raise ArithmeticError(f"no two primes agreed on the rank (saw {seen})")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 64-bit inputs."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_above(start: int, count: int, condition: Callable[[int], bool] | None = None) -> list[int]:
    out = []
    n = max(start, 2)
    while len(out) < count:
        n += 1
        if is_prime(n) and (condition is None or condition(n)):
            out.append(n)
    return out


def sqrt_mod(a: int, p: int) -> int:
    """A square root of a modulo an odd prime p (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a quadratic residue mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def nf_to_mod(x, p: int, root: int) -> int:
    """Map an NFElem (or rational) into GF(p) with the field generator sent to root."""
    if isinstance(x, NFElem):
        acc = 0
        pw = 1
        for c in x.coeffs:
            acc = (acc + _to_int_mod(c, p) * pw) % p
            pw = pw * root % p
        return acc
    return _to_int_mod(x, p)
