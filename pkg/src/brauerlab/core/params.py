"""
Parameter sets for the Brauer-type algebra of a reflection group: one scalar
mu per reflection conjugacy class and one scalar tau per hyperplane orbit,
as polynomials in named parameters (or rational constants).
"""
from __future__ import annotations

from fractions import Fraction

from ..exact import ParamPoly
from ..groups import CyclotomicGroup, DihedralGroup, ReflectionGroup


class ParamSet:
    """Class-constant mu and orbit-constant tau values over a shared variable list."""

    def __init__(self, group: ReflectionGroup, vars: tuple[str, ...],
                 mu_by_class: list[ParamPoly], tau_by_orbit: list[ParamPoly]):
        if len(mu_by_class) != len(group.refl_classes):
            raise ValueError("need one mu per reflection conjugacy class")
        if len(tau_by_orbit) != len(group.orbits):
            raise ValueError("need one tau per hyperplane orbit")
        self.group = group
        self.vars = vars
        self.mu_by_class = mu_by_class
        self.tau_by_orbit = tau_by_orbit

    def mu(self, s: int) -> ParamPoly:
        """mu of a reflection, given by its element index."""
        return self.mu_by_class[self.group.class_of_refl[s]]

    def tau(self, i: int) -> ParamPoly:
        """tau of a hyperplane index."""
        return self.tau_by_orbit[self.group.orbit_of[i]]

    def const(self, value) -> ParamPoly:
        return ParamPoly.constant(value, self.vars)

    def one(self) -> ParamPoly:
        return self.const(1)

    def rescaled(self, lam) -> "ParamSet":
        """The parameter set {lam*mu, lam*tau} of the rescaling isomorphism."""
        lam = Fraction(lam)
        if lam == 0:
            raise ValueError("rescaling requires lam != 0")
        c = self.const(lam)
        return ParamSet(self.group, self.vars,
                        [c * m for m in self.mu_by_class],
                        [c * t for t in self.tau_by_orbit])

    def mu_symmetric(self) -> bool:
        """Whether mu_s = mu_{s^-1} for all reflections (needed for the star anti-involution)."""
        G = self.group
        return all(self.mu(s) == self.mu(G.inv(s)) for s in G.reflections)

    def assignment(self, tau_values=None, mu_values=None) -> dict[str, Fraction]:
        """
        Build an evaluation map for the named variables: tau_values per orbit
        (scalar or list), mu_values per class. Variables already bound to
        constants are ignored.
        """
        out: dict[str, Fraction] = {}

        def put(polys, values, what):
            if values is None:
                return
            if not isinstance(values, (list, tuple)):
                values = [values] * len(polys)
            if len(values) != len(polys):
                raise ValueError(f"expected {len(polys)} {what} values")
            for poly, v in zip(polys, values):
                for e in poly.terms:
                    for k, name in zip(e, self.vars):
                        if k:
                            out[name] = Fraction(v)
        put(self.tau_by_orbit, tau_values, "tau")
        put(self.mu_by_class, mu_values, "mu")
        return out


def standard_params(G: ReflectionGroup) -> ParamSet:
    """
    The standard symbolic parameter set.

    One reflection class: mu is normalized to 1 by the rescaling isomorphism and tau stays
    symbolic. Even dihedral: tau0/tau1 per orbit and mu0/mu1 per class,
    indexed by the class of s_0 resp. s_1. G(m,1,n): mu for the reflection
    class {s_{i,j;a}}, mu_k for the class of the order-m pseudo-reflection
    powers, tau0 on the coordinate-hyperplane orbit and tau1 on the rest.
    """
    n_cls = len(G.refl_classes)
    n_orb = len(G.orbits)

    if isinstance(G, CyclotomicGroup):
        mu_names = [None] * n_cls
        for ci, cls in enumerate(G.refl_classes):
            s = cls[0]
            label = G.hyperplane_label[G.i_of_s[s]]
            if label[0] == "pair":
                mu_names[ci] = "mu"
            else:
                # identify the power k of the class via s_1^k
                for k in range(1, G.m):
                    exps = [0] * G.n
                    exps[0] = k
                    if G.element(list(range(G.n)), exps) in cls:
                        mu_names[ci] = f"mu{k}"
                        break
        tau_names = []
        for orb in G.orbits:
            kind = G.hyperplane_label[orb[0]][0]
            tau_names.append("tau0" if kind == "coord" else "tau1")
        vars = tuple(sorted(set(mu_names), key=_mu_key) + sorted(set(tau_names)))
        mu_polys = [ParamPoly.variable(nm, vars) for nm in mu_names]
        tau_polys = [ParamPoly.variable(nm, vars) for nm in tau_names]
        return ParamSet(G, vars, mu_polys, tau_polys)

    if n_cls == 1 and n_orb == 1:
        vars = ("tau",)
        return ParamSet(G, vars, [ParamPoly.constant(1, vars)], [ParamPoly.variable("tau", vars)])

    if isinstance(G, DihedralGroup) and n_cls == 2:
        vars = ("mu0", "mu1", "tau0", "tau1")
        mu_polys = [None] * n_cls
        tau_polys = [None] * n_orb
        for parity in (0, 1):
            s = G.element("s", parity)
            mu_polys[G.class_of_refl[s]] = ParamPoly.variable(f"mu{parity}", vars)
            tau_polys[G.orbit_of[G.i_of_s[s]]] = ParamPoly.variable(f"tau{parity}", vars)
        return ParamSet(G, vars, mu_polys, tau_polys)

    # fallback: fully symbolic generic naming
    vars = tuple(f"mu{c}" for c in range(n_cls)) + tuple(f"tau{o}" for o in range(n_orb))
    return ParamSet(
        G, vars,
        [ParamPoly.variable(f"mu{c}", vars) for c in range(n_cls)],
        [ParamPoly.variable(f"tau{o}", vars) for o in range(n_orb)],
    )


def _mu_key(name: str):
    return (len(name), name)
