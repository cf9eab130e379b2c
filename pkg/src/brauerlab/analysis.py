"""
Dimension and semisimplicity analysis: trace-form radicals over two large
primes, the generic-parameter determinant criterion, and Wedderburn
accounting at evaluated parameters.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .core.table import AlgebraTable
from .exact import ParamPoly, linalg
from .groups import DihedralGroup, H3Group
from .reps import det_interpolated, h3_induced_rep, h3_rho4, lk_rep, m_matrix


def dimension_report(T) -> dict:
    """Dimension, basis counts by e-length, and the known closed-form value."""
    G = getattr(T, "group", None)
    counts = T.e_length_counts() if hasattr(T, "e_length_counts") else {}
    expected = None
    if isinstance(G, DihedralGroup):
        m = G.m
        expected = 2 * m + (m * m if m % 2 else m * m // 2)
    elif isinstance(G, H3Group):
        expected = 1045
    return {
        "dim": T.dim,
        "by_e_length": {str(k): v for k, v in sorted(counts.items())},
        "expected": expected,
        "match": (expected is None or expected == T.dim),
    }


def _modp_table_engine(T: AlgebraTable, assignment: dict, p: int):
    """Specialized product a*b -> {c: int} over GF(p) for an algebra table."""
    G = T.group

    def coeff_mod(poly) -> int:
        v = poly.eval(assignment) if isinstance(poly, ParamPoly) else Fraction(poly)
        v = Fraction(v)
        if v.denominator % p == 0:
            raise linalg.DenominatorDivisibleError(str(v))
        return v.numerator * pow(v.denominator, -1, p) % p

    e_cols = []
    for i in range(G.n_hyperplanes):
        col = []
        for lst in T.e_action[i]:
            acc: dict[int, int] = {}
            for k, c in lst:
                acc[k] = (acc.get(k, 0) + coeff_mod(c)) % p
            col.append([(k, v) for k, v in acc.items() if v])
        e_cols.append(col)

    basis = T.basis
    nw_of = T._nw
    mul = G.mul

    def product(a: int, b: int) -> dict[int, int]:
        nwa = basis[a]
        vec = {b: 1}
        for t in reversed(nwa.tail):
            col = e_cols[t]
            out: dict[int, int] = {}
            for bb, c in vec.items():
                for k, cv in col[bb]:
                    out[k] = (out.get(k, 0) + c * cv) % p
            vec = {k: v for k, v in out.items() if v}
            if not vec:
                return vec
        if nwa.w:
            w = nwa.w
            out = {}
            for bb, c in vec.items():
                nb = basis[bb]
                k = nw_of(mul(w, nb.w), nb.tail)
                out[k] = (out.get(k, 0) + c) % p
            vec = {k: v for k, v in out.items() if v}
        return vec

    return product


def _modp_generic_engine(T, assignment: dict, p: int):
    """Fallback product engine for diagram tables (ParamPoly coefficients)."""
    def coeff_mod(poly) -> int:
        v = Fraction(poly.eval(assignment) if isinstance(poly, ParamPoly) else poly)
        if v.denominator % p == 0:
            raise linalg.DenominatorDivisibleError(str(v))
        return v.numerator * pow(v.denominator, -1, p) % p

    def product(a: int, b: int) -> dict[int, int]:
        return {k: coeff_mod(c) for k, c in T.product(a, b).items()}

    return product


def trace_gram_rank(T, assignment: dict, p: int) -> int:
    """
    Rank over GF(p) of the Gram matrix G_{ab} = trace(L_a L_b) of the regular
    trace form, at the given parameter assignment.
    """
    n = T.dim
    product = (_modp_table_engine if isinstance(T, AlgebraTable) else _modp_generic_engine)(T, assignment, p)
    idx_a, idx_b, idx_c, vals = [], [], [], []
    trace = np.zeros(n, dtype=np.int64)
    for a in range(n):
        for b in range(n):
            for c, v in product(a, b).items():
                idx_a.append(a)
                idx_b.append(b)
                idx_c.append(c)
                vals.append(v)
                if c == b:
                    trace[a] = (trace[a] + v) % p
    gram = np.zeros((n, n), dtype=np.int64)
    a_arr = np.array(idx_a)
    b_arr = np.array(idx_b)
    contrib = (np.array(vals) * trace[np.array(idx_c)]) % p
    np.add.at(gram, (a_arr, b_arr), contrib)
    return linalg.rank_mod_p(gram % p, p)


def radical_rank(T, assignment: dict, primes: list[int] | None = None) -> dict:
    """
    Radical dimension dim - rank(Gram) with the two-prime agreement protocol
    (primes > 10^6 by default; a prime dividing a denominator is skipped).
    """
    if T.dim > 1100:
        raise ValueError("radical_rank bounded at dim <= 1100")
    if primes is None:
        primes = linalg.primes_above(10 ** 6, 4)
    ranks: list[tuple[int, int]] = []
    agreed = None
    for p in primes:
        try:
            r = trace_gram_rank(T, assignment, p)
        except linalg.DenominatorDivisibleError:
            continue
        ranks.append((p, r))
        if any(r == r0 for _, r0 in ranks[:-1]):
            agreed = r
            break
    if agreed is None:
        raise ArithmeticError(f"no two primes agreed: {ranks}")
    return {
        "dim": T.dim,
        "rank": agreed,
        "radical": T.dim - agreed,
        "primes_used": [p for p, _ in ranks],
        "assignment": {k: str(v) for k, v in assignment.items()},
    }


def rational_roots(poly: ParamPoly, var: str) -> list[Fraction]:
    """All rational roots of a univariate polynomial, by the rational root test."""
    coeffs = poly.univariate_coeffs(var)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if not coeffs:
        return []
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    k = 0
    while ints[k] == 0:
        k += 1
    ints = ints[k:]
    roots = {Fraction(0)} if k else set()
    a0, an = abs(ints[0]), abs(ints[-1])
    for pnum in _divisors(a0):
        for qden in _divisors(an):
            for cand in (Fraction(pnum, qden), Fraction(-pnum, qden)):
                if poly.eval({var: cand}) == 0:
                    roots.add(cand)
    return sorted(roots)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def generic_criterion(G) -> dict:
    """
    The sufficient determinant criterion: the product of det M over the module
    representations (H3: the four 15x15 induced matrices and the 5x5 class
    matrix; dihedral: the LK orbit-block matrices at mu = 1). Sufficiency
    only; a zero value yields no verdict.
    """
    factors: list[ParamPoly] = []
    roots: set[Fraction] = set()
    if isinstance(G, H3Group):
        for alpha in range(4):
            _, d = m_matrix(h3_induced_rep(G, alpha))
            factors.append(d)
            roots.update(rational_roots(d, "tau"))
        _, d4 = m_matrix(h3_rho4(G))
        factors.append(d4)
        roots.update(rational_roots(d4, "tau"))
    elif isinstance(G, DihedralGroup):
        from .core.params import standard_params

        U = standard_params(G)
        rep = lk_rep(G, U)
        mu_one = {v: Fraction(1) for v in U.vars if v.startswith("mu")}
        for orbit in G.orbits:
            tau_var = next(v for e, coeff in U.tau(orbit[0]).terms.items()
                           for v, k in zip(U.vars, e) if k)
            block = [[_eval_partial(rep.e_mats[i].entry(i, j), mu_one, U.vars)
                      for j in orbit] for i in orbit]
            d = det_interpolated(block, tau_var)
            factors.append(d)
            roots.update(rational_roots(d, tau_var))
    else:
        raise ValueError(f"generic criterion only for dihedral and H3, not {G.name}")
    product = factors[0]
    for f in factors[1:]:
        product = product * f
    return {"polynomial": product, "factors": factors, "rational_roots": sorted(roots)}


def _eval_partial(entry, assignment: dict, vars: tuple) -> ParamPoly:
    if entry is None:
        return ParamPoly.constant(0, vars)
    sub = {}
    for v in vars:
        sub[v] = (ParamPoly.constant(assignment[v], vars) if v in assignment
                  else ParamPoly.variable(v, vars))
    return entry.substitute(sub)


def wedderburn_account(T, rep_dims: list[int], radical: int) -> dict:
    """
    Check |G| + sum of squared module dimensions against dim(T); valid as a
    Wedderburn decomposition only when the radical vanishes and the group
    algebra splits (the caveat is recorded in the report).
    """
    G = T.group
    total = G.order + sum(d * d for d in rep_dims)
    return {
        "group_part": G.order,
        "module_squares": [d * d for d in rep_dims],
        "total": total,
        "dim": T.dim,
        "match": total == T.dim,
        "radical": radical,
        "valid": radical == 0 and total == T.dim,
        "caveat": "group part counts |G|, exact over a splitting field of CG",
    }
