"""
Handlers shared by the FastAPI endpoints and the CLI: every operation takes a
request model and returns a plain dict matching the response model schema.
Polynomials serialize as [[exponent-vector, numerator, denominator], ...]
over the declared parameter list.
"""
from __future__ import annotations

from fractions import Fraction

from .. import analysis
from ..cellular import build_cell_datum, verify_cellular
from ..connections import assemble, check_flat, check_invariant, group_regular_rep, table_regular_rep
from ..core.labels import equivariant_labels, g_m1n_label_identities
from ..core.params import standard_params
from ..core.presentations import presentation
from ..core.relations import TableModel, check_relations, defining_relations
from ..core.table import NormalWord, validate_star
from ..cyclocompare import f_elements, phi_images, psi_images
from ..exact import ParamPoly
from ..groups import CyclotomicGroup, DihedralGroup, H3Group, SymmetricGroup, relation1prime_pairs
from ..reps import h3_induced_rep, h3_rho4, lk_blocks, lk_rep, m_matrix
from . import models, registry


def encode_poly(p) -> list:
    if not isinstance(p, ParamPoly):
        p = Fraction(p)
        return [[[], p.numerator, p.denominator]]
    out = []
    for e, c in sorted(p.terms.items()):
        c = Fraction(c) if not isinstance(c, Fraction) else c
        out.append([list(e), c.numerator, c.denominator])
    return out


def encode_vec(vec: dict) -> list:
    return [[k, encode_poly(v)] for k, v in sorted(vec.items())]


def encode_matrix(m) -> list:
    return [[r, c, encode_poly(v)] for r, c, v in sorted(m.entries())]


def group_info(req: models.GroupRequest) -> dict:
    G = registry.get_group(req.group)
    er = G.edge_report()
    crossing = [[i, j] for i in range(G.n_hyperplanes) for j in range(i + 1, G.n_hyperplanes)
                if er.is_crossing(i, j)]
    r_sets = {}
    for i in range(G.n_hyperplanes):
        for j in range(G.n_hyperplanes):
            if i != j:
                rs = G.r_set(i, j)
                if rs:
                    r_sets[f"{i},{j}"] = rs
    return {
        "group": G.name,
        "order": G.order,
        "reflections": list(G.reflections),
        "hyperplanes": G.n_hyperplanes,
        "orbits": [list(o) for o in G.orbits],
        "refl_classes": [list(c) for c in G.refl_classes],
        "crossing_pairs": crossing,
        "r_sets": r_sets,
        "relation1prime_pairs": [[w, i] for w, i in relation1prime_pairs(G)],
    }


def algebra(req: models.AlgebraRequest) -> dict:
    T = registry.get_table(req.group)
    with_products = req.products if req.products is not None else T.dim <= 150
    basis = [{"w": nw.w, "tail": list(nw.tail)} for nw in T.basis]
    gens = {}
    for tok, vec in T.gens_map().items():
        (idx,) = vec
        gens[f"{tok[0]}{tok[1]}"] = idx
    out = {
        "group": T.group.name,
        "dim": T.dim,
        "params": list(T.params),
        "basis": basis,
        "gens": gens,
        "star": T.star_permutation(),
        "e_length_counts": {str(k): v for k, v in T.e_length_counts().items()},
        "dimension_report": analysis.dimension_report(T),
        "products": None,
        "generator_columns": None,
    }
    if with_products:
        prods = []
        for a in range(T.dim):
            for b in range(T.dim):
                prods.append([a, b, encode_vec(T.product(a, b))])
        out["products"] = prods
    else:
        cols = {}
        for i in range(T.group.n_hyperplanes):
            cols[f"e{i}"] = [encode_vec(dict(col)) for col in
                             ([{k: v for k, v in _accum(T.e_action[i][b])} for b in range(T.dim)])]
        out["generator_columns"] = cols
    return out


def _accum(pairs):
    out = {}
    for k, v in pairs:
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}.items()


def relations(req: models.RelationsRequest) -> dict:
    if req.kind:
        kw = {}
        if req.m is not None:
            kw["m"] = req.m
        if req.n is not None:
            kw["n"] = req.n
        if req.kind == "coxeter":
            from ..groups import COXETER_MATRICES
            kw["matrix"] = COXETER_MATRICES[req.group.upper() if req.group else "A2"]
        if req.kind == "simply_laced":
            nodes = req.n or 2
            kw = {"edges": {frozenset((i, i + 1)) for i in range(nodes - 1)}, "nodes": nodes}
        rels = presentation(req.kind, **kw)
    else:
        G = registry.get_group(req.group)
        rels = defining_relations(G, standard_params(G))
    return {
        "count": len(rels),
        "vars": list(rels.vars),
        "relations": [
            {"name": r.name,
             "lhs": [[encode_poly(c), [list(t) for t in w]] for c, w in r.lhs],
             "rhs": [[encode_poly(c), [list(t) for t in w]] for c, w in r.rhs]}
            for r in rels.relations
        ],
    }


def lk_rep_info(req: models.RepRequest) -> dict:
    G = registry.get_group(req.group)
    U = standard_params(G)
    rep = lk_rep(G, U)
    blocks = lk_blocks(rep, G)
    det = None
    det_string = None
    if len(G.orbits) == 1:
        _, d = m_matrix(rep)
        det, det_string = encode_poly(d), repr(d)
    return {
        "group": G.name,
        "dim": rep.dim,
        "params": list(U.vars),
        "generators": {f"g{g}": encode_matrix(rep.matrix(("g", g))) for g in G.generators},
        "e_matrices": {str(i): encode_matrix(m) for i, m in rep.e_mats.items()},
        "blocks": blocks,
        "det": det,
        "det_string": det_string,
    }


def h3_rep_info(req: models.RepRequest) -> dict:
    G = registry.get_group(req.group)
    if not isinstance(G, H3Group):
        raise ValueError("h3-rep needs --group h3")
    alpha = req.alpha if req.alpha is not None else 0
    rep = h3_rho4(G) if alpha == 4 else h3_induced_rep(G, alpha)
    _, d = m_matrix(rep)
    return {
        "group": G.name,
        "dim": rep.dim,
        "params": list(rep.params),
        "generators": {f"g{g}": encode_matrix(rep.matrix(("g", g))) for g in G.generators},
        "e_matrices": {str(i): encode_matrix(m) for i, m in rep.e_mats.items()},
        "blocks": None,
        "det": encode_poly(d),
        "det_string": repr(d),
    }


def _build_rep(G, U, which: str):
    if which == "lk":
        return lk_rep(G, U)
    if which == "regular-group":
        return group_regular_rep(G, U)
    if which == "regular-table":
        T = registry.get_table(G.name.lower() if False else _spec_of(G))
        return table_regular_rep(T)
    raise ValueError(f"unknown rep {which!r}")


def _spec_of(G) -> str:
    if isinstance(G, DihedralGroup):
        return f"dihedral:{G.m}"
    if isinstance(G, H3Group):
        return "h3"
    if isinstance(G, SymmetricGroup):
        return f"a:{G.rank}"
    if isinstance(G, CyclotomicGroup):
        return f"g:{G.m},1,{G.n}"
    raise ValueError(G.name)


def flatness(req: models.FlatnessRequest) -> dict:
    G = registry.get_group(req.group)
    U = standard_params(G)
    rep = _build_rep(G, U, req.rep)
    if req.rep == "regular-table":
        U = registry.get_table(_spec_of(G)).params_set
    C = assemble(req.kind, G, U, rep)
    if req.perturb:
        j = next(j for j in range(1, G.n_hyperplanes))
        C = C.perturbed(0, 0, j)
    flat = check_flat(C, jobs=req.jobs)
    inv = check_invariant(C, rep)
    return {
        "group": G.name,
        "kind": req.kind,
        "rep": req.rep,
        "edges_checked": flat.edges_checked,
        "flat": flat.flat,
        "invariant": not inv.violations,
        "violations": flat.violations[:50],
        "invariance_violations": inv.violations[:50],
    }


def cellular(req: models.CellularRequest) -> dict:
    T = registry.get_table(req.group)
    D = build_cell_datum(T)
    if req.corrupted:
        D = D.corrupted()
    rep = verify_cellular(D)
    return {
        "group": T.group.name,
        "cells": {k: len(v) for k, v in D.m_sets.items()},
        "report": rep.to_dict(),
    }


def semisimple(req: models.SemisimpleRequest) -> dict:
    T = registry.get_table(req.group)
    U = T.params_set
    tau = [Fraction(t) for t in req.tau] if req.tau else [Fraction(7)]
    mu = [Fraction(x) for x in req.mu] if req.mu else None
    if len(tau) == 1:
        tau = tau * len(U.tau_by_orbit)
    assignment = U.assignment(tau_values=tau, mu_values=mu if mu else 1)
    primes = [req.prime] if req.prime else None
    if primes:
        primes = primes + analysis.linalg.primes_above(max(primes), 3)
    res = analysis.radical_rank(T, assignment, primes)
    wed = None
    crit_nonzero = None
    G = T.group
    if isinstance(G, (DihedralGroup, H3Group)):
        crit = analysis.generic_criterion(G)
        crit_assign = {v: assignment.get(v, Fraction(1)) for v in crit["polynomial"].vars}
        crit_nonzero = crit["polynomial"].eval(crit_assign) != 0
        if isinstance(G, H3Group):
            wed = [G.order, 225, 225, 225, 225, 25]
        else:
            wed = [G.order] + [len(o) ** 2 for o in G.orbits]
    return {
        "group": T.group.name,
        "dim": res["dim"],
        "radical": res["radical"],
        "rank": res["rank"],
        "primes_used": res["primes_used"],
        "wedderburn": wed,
        "criterion_nonzero": crit_nonzero,
    }


def cyclo_compare(req: models.CycloCompareRequest) -> dict:
    G = CyclotomicGroup(req.m, req.n)
    labels = equivariant_labels(G, "g_m1n")
    return {
        "m": req.m,
        "n": req.n,
        "phi": phi_images(req.m, req.n),
        "psi": psi_images(req.m, req.n),
        "labels_bijective": labels.bijective and labels.equivariant,
        "lemma_identities": g_m1n_label_identities(G),
    }


def verify_all(req: models.VerifyAllRequest) -> dict:
    G = registry.get_group(req.group)
    U = standard_params(G)
    checks: dict[str, dict] = {}

    rep = lk_rep(G, U)
    rels = defining_relations(G, U)
    from ..core.relations import MatrixModel

    r = check_relations(MatrixModel(rep.dim, lambda t: rep.matrix(t)), rels, rep.one())
    checks["lk_relations"] = {"ok": r.ok, "checked": r.total, "failures": len(r.failures)}
    checks["lk_blocks"] = {"ok": True, "dims": [b["dim"] for b in lk_blocks(rep, G)]}

    Cg = assemble("bmr", G, U, group_regular_rep(G, U))
    f = check_flat(Cg, jobs=req.jobs)
    checks["flat_bmr_regular"] = {"ok": f.flat, "edges": f.edges_checked}
    Cl = assemble("bgu", G, U, rep)
    f = check_flat(Cl, jobs=req.jobs)
    inv = check_invariant(Cl, rep)
    checks["flat_bgu_lk"] = {"ok": f.flat and not inv.violations, "edges": f.edges_checked}

    if registry.table_supported(G):
        T = registry.get_table(req.group)
        checks["dimension"] = analysis.dimension_report(T)
        checks["dimension"]["ok"] = checks["dimension"]["match"]

        def assign(tok):
            if tok[0] == "g":
                return T.nw_index[NormalWord(tok[1], ())]
            return T._nw(0, (tok[1],))

        r = check_relations(TableModel(T, assign), defining_relations(G, T.params_set))
        checks["relation_soundness"] = {"ok": r.ok, "checked": r.total, "failures": len(r.failures)}
        star = validate_star(T, full_pairs=T.dim <= 150)
        checks["star"] = {"ok": all(star.values()), **star}
        Ct = assemble("bgu", G, T.params_set, table_regular_rep(T))
        f = check_flat(Ct, jobs=req.jobs)
        checks["flat_bgu_regular"] = {"ok": f.flat, "edges": f.edges_checked}
        if isinstance(G, (DihedralGroup, H3Group)):
            D = build_cell_datum(T)
            rep_c = verify_cellular(D)
            checks["cellular"] = {"ok": rep_c.ok, **rep_c.to_dict()}
            assignment = T.params_set.assignment(tau_values=7, mu_values=1)
            res = analysis.radical_rank(T, assignment)
            checks["semisimple_tau7"] = {"ok": res["radical"] == 0, **{k: v for k, v in res.items() if k != "assignment"}}

    if isinstance(G, CyclotomicGroup):
        cc = cyclo_compare(models.CycloCompareRequest(m=G.m, n=G.n))
        checks["cyclo_compare"] = {"ok": cc["phi"]["ok"] and cc["psi"]["ok"] and cc["labels_bijective"]}
        labels = equivariant_labels(G, "g_m1n")
        checks["labels"] = {"ok": labels.bijective and labels.equivariant}
    else:
        labels = equivariant_labels(G, "coxeter")
        checks["labels"] = {"ok": labels.bijective and labels.equivariant}

    passed = all(c.get("ok", False) for c in checks.values())
    return {"group": G.name, "checks": checks, "passed": passed}
