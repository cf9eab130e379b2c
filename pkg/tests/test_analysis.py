"""Dimension reports, trace-form radicals, determinant criteria, accounting."""
import random
from fractions import Fraction

import pytest

from brauerlab.analysis import (
    dimension_report,
    generic_criterion,
    radical_rank,
    rational_roots,
    trace_gram_rank,
    wedderburn_account,
)
from brauerlab.diagrams import BrauerTable
from brauerlab.exact import ParamPoly, poly_divmod_univariate
from brauerlab.groups import DihedralGroup


def test_dimension_reports(dihedral_tables, h3_table):
    r = dimension_report(dihedral_tables[7])
    assert r["dim"] == 63 and r["match"] and r["by_e_length"] == {"0": 14, "1": 49}
    r = dimension_report(dihedral_tables[8])
    assert r["dim"] == 48 and r["by_e_length"] == {"0": 16, "1": 32}
    r = dimension_report(h3_table)
    assert r["dim"] == 1045 and r["by_e_length"] == {"0": 120, "1": 900, "2": 25}


def test_brauer_wenzl_spot_checks():
    B3 = BrauerTable(3)
    assert radical_rank(B3, {"tau": Fraction(1, 2)})["radical"] == 0
    assert radical_rank(B3, {"tau": Fraction(7, 2)})["radical"] == 0
    # spec example: Gram rank of B_3(1/2) mod 10007 is full
    assert trace_gram_rank(B3, {"tau": Fraction(1, 2)}, 10007) == 15
    # integer tau outcomes are observational only
    observed = {t: radical_rank(B3, {"tau": Fraction(t)})["radical"] for t in (1, 2, 3)}
    assert observed[1] > 0  # tau = 1 is genuinely non-semisimple
    assert set(observed) == {1, 2, 3}


def test_dihedral_radicals(dihedral_tables):
    T = dihedral_tables[5]
    assert radical_rank(T, {"tau": Fraction(7)})["radical"] == 0
    assert radical_rank(T, {"tau": Fraction(-4)})["radical"] > 0
    res = radical_rank(T, {"tau": Fraction(7)})
    assert len(res["primes_used"]) >= 2 and all(p > 10 ** 6 for p in res["primes_used"])


def test_radical_two_prime_protocol_skips_bad_primes(dihedral_tables):
    T = dihedral_tables[5]
    from brauerlab.exact.linalg import primes_above

    ps = primes_above(10 ** 6, 3)
    res = radical_rank(T, {"tau": Fraction(1, ps[0])}, primes=ps)
    assert ps[0] not in res["primes_used"]
    assert res["radical"] == 0


def test_generic_semisimplicity_random_taus(dihedral_tables):
    rng = random.Random(42)
    for m in (5, 6, 7, 8):
        T = dihedral_tables[m]
        U = T.params_set
        crit = generic_criterion(T.group)
        roots = set(crit["rational_roots"])
        picked = 0
        while picked < 5:
            tau = Fraction(rng.randint(2, 60), rng.randint(1, 3))
            if tau in roots:
                continue
            picked += 1
            assignment = U.assignment(tau_values=tau, mu_values=1)
            assert radical_rank(T, assignment)["radical"] == 0, (m, tau)


def test_criterion_i25():
    crit = generic_criterion(DihedralGroup(5))
    tau = ParamPoly.variable("tau", ("tau",))
    assert crit["polynomial"] == (tau - 1) ** 4 * (tau + 4)
    assert crit["rational_roots"] == [Fraction(-4), Fraction(1)]


def test_criterion_h3(h3):
    crit = generic_criterion(h3)
    tau = ParamPoly.variable("tau", ("tau",))
    quo, rem = poly_divmod_univariate(crit["polynomial"], (tau - 1) ** 4 * (tau + 4), "tau")
    assert not rem  # divisible by det M^4
    assert crit["polynomial"].eval({"tau": 7}) != 0
    assert crit["polynomial"].eval({"tau": 1}) == 0  # zero value yields no verdict


def test_rational_roots():
    t = ParamPoly.variable("tau", ("tau",))
    p = (2 * t - 1) * (t + 3) * t
    assert rational_roots(p, "tau") == [Fraction(-3), Fraction(0), Fraction(1, 2)]


def test_wedderburn_accounts(dihedral_tables):
    T5 = dihedral_tables[5]
    r = radical_rank(T5, {"tau": Fraction(7)})
    acc = wedderburn_account(T5, [5], r["radical"])
    assert acc["valid"] and acc["total"] == 35 and acc["group_part"] == 10
    T6 = dihedral_tables[6]
    assignment = T6.params_set.assignment(tau_values=7, mu_values=1)
    r6 = radical_rank(T6, assignment)
    acc6 = wedderburn_account(T6, [3, 3], r6["radical"])
    assert acc6["valid"] and acc6["total"] == 30
    bad = wedderburn_account(T6, [3], 0)
    assert not bad["match"]


def test_h3_generic_semisimplicity_random_taus(h3, h3_table):
    rng = random.Random(9)
    roots = set(generic_criterion(h3)["rational_roots"])
    picked = 0
    while picked < 5:
        tau = Fraction(rng.randint(2, 40), rng.randint(1, 3))
        if tau in roots:
            continue
        picked += 1
        assert radical_rank(h3_table, {"tau": tau})["radical"] == 0, tau
