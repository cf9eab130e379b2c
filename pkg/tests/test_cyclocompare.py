"""The canonical-presentation vs diagram-algebra comparison layer."""
import pytest

from brauerlab.cyclocompare import f_elements, lk_delta_identification, phi_images, psi_images, _mu_one_params
from brauerlab.groups import CyclotomicGroup


@pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (2, 3)])
def test_phi_relation_suite(m, n):
    r = phi_images(m, n)
    assert r["ok"] and r["relations_checked"] > 20
    assert r["identification"]["delta_0"] == "tau_1"


@pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (2, 3)])
def test_psi_both_models(m, n):
    r = psi_images(m, n)
    assert r["phi_psi_identity_on_generators"]
    assert r["model_diagram"]["failures"] == []
    assert r["model_lk"]["failures"] == []
    assert r["e0_nonzero_in_lk"]
    assert r["ok"]


def test_lk_delta_identification_values():
    G = CyclotomicGroup(2, 2)
    ident = lk_delta_identification(G, _mu_one_params(G))
    assert repr(ident["delta1"]) == "2*mu1"
    assert repr(ident["delta0"]) == "tau1"
    G = CyclotomicGroup(3, 2)
    ident = lk_delta_identification(G, _mu_one_params(G))
    assert repr(ident["delta1"]) == "mu1 + mu2 + 1"
    assert repr(ident["delta2"]) == "mu1 + mu2 + 1"


@pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (2, 3)])
def test_f_elements(m, n):
    G = CyclotomicGroup(m, n)
    f = f_elements(m, n)
    assert len(f) == G.n_hyperplanes
    # F(H_1) = E_0 with the identity transporter
    assert f[G.hyperplane("coord", 0)] == {"base": 0, "word": 0, "label": ("coord", 0)}
    # w = S_1 carries E_0 to F(H_2)
    s1 = G.generators[1]
    h2 = G.hyperplane("coord", 1)
    assert G.hyp_action[s1][G.hyperplane("coord", 0)] == h2
