import math

import pytest

from zerosum.groups import Element, mk_cyclic, mk_metacyclic
from zerosum.sequences import Sequence, canonical_key
from zerosum.constants import (
    InfeasibleSize,
    TEMPLATE_CYCLIC,
    TEMPLATE_D6,
    TEMPLATE_METACYCLIC,
    apply_automorphism,
    automorphisms,
    check_template,
    classify_extremal,
    davenport_constant,
    enumerate_free,
    gao_constant,
    orbit_sequences,
    template_instances,
)
from zerosum.products import has_product_one

D6 = mk_metacyclic(3, 2)


def test_gao_small_cyclic():
    assert gao_constant(mk_cyclic(2)).value == 3
    assert gao_constant(mk_cyclic(3)).value == 5
    assert gao_constant(mk_cyclic(4)).value == 7


def test_gao_d6():
    rep = gao_constant(D6)
    assert rep.value == 9
    # every certificate is verified free and has length 8
    for cert in rep.certificates:
        assert cert.length == 8
        assert has_product_one(cert, 6) is None


def test_davenport_values():
    for n in range(2, 6):
        rep = davenport_constant(mk_cyclic(n))
        assert rep.value == n - 1
        assert any(cert.length == n - 1 for cert in rep.certificates)
    assert davenport_constant(mk_cyclic(1)).value == 0
    assert davenport_constant(D6).value == 3


def test_identity_e_equals_d_plus_order():
    for g in [mk_cyclic(n) for n in range(2, 6)] + [D6]:
        assert gao_constant(g).value == davenport_constant(g).value + g.order


def test_automorphism_group_sizes():
    assert len(automorphisms(D6)) == 6  # |Aut(D6)| = 3 * phi(3)
    assert len(automorphisms(mk_cyclic(6))) == 2
    assert len(automorphisms(mk_cyclic(5))) == 4
    # the maps really are automorphisms
    for g in (D6, mk_metacyclic(15, 11), mk_cyclic(8)):
        els = g.elements()
        for perm in automorphisms(g):
            assert sorted(perm) == list(range(g.order))
            for u in els:
                for v in els:
                    lhs = perm[g.element_index(g.mul(u, v))]
                    rhs = g.element_index(
                        g.mul(g.element_at(perm[g.element_index(u)]),
                              g.element_at(perm[g.element_index(v)]))
                    )
                    assert lhs == rhs


def test_orbit_pruning_soundness():
    # pruned-and-expanded equals the unpruned enumeration for D6 at length 8
    pruned = enumerate_free(D6, 8, 6, prune=True)
    full = enumerate_free(D6, 8, 6, prune=False)
    expanded = set()
    for rep in pruned:
        expanded |= {canonical_key(s) for s in orbit_sequences(rep)}
    assert expanded == {canonical_key(s) for s in full}


def test_classify_d6():
    fams = classify_extremal(D6, 8, 6)
    names = {f.template for f in fams}
    assert names == {TEMPLATE_D6, TEMPLATE_METACYCLIC}
    by_name = {f.template: f for f in fams}
    assert len(by_name[TEMPLATE_D6].representatives) == 1
    # every representative is free and matches its family's template
    for fam in fams:
        for rep in fam.representatives:
            assert has_product_one(rep, 6) is None
            assert check_template(rep).name == fam.template


def test_classify_cyclic():
    fams = classify_extremal(mk_cyclic(5), 13, 10)
    assert [f.template for f in fams] == [TEMPLATE_CYCLIC]
    fams3 = classify_extremal(mk_cyclic(3), 7, 6)
    assert [f.template for f in fams3] == [TEMPLATE_CYCLIC]


def test_check_template_examples():
    g = mk_metacyclic(15, 11)
    good = Sequence.from_counts(g, {Element(0, 1): 29, Element(0, 2): 14, Element(1, 7): 1})
    m = check_template(good)
    assert m is not None and m.name == TEMPLATE_METACYCLIC
    t1, t2, _ = m.params
    assert math.gcd(t1 - t2, 15) == 1
    # gcd(t1 - t2, 3 n2) = 3 must not match
    bad = Sequence.from_counts(g, {Element(0, 1): 29, Element(0, 4): 14, Element(1, 7): 1})
    assert check_template(bad) is None
    special = Sequence.from_counts(
        D6, {Element(0, 0): 5, Element(1, 0): 1, Element(1, 1): 1, Element(1, 2): 1}
    )
    assert check_template(special).name == TEMPLATE_D6
    # wrong multiplicity pattern
    assert check_template(Sequence.from_counts(g, {Element(0, 1): 30, Element(0, 2): 13, Element(1, 0): 1})) is None


def test_template_instances_are_free():
    for s in template_instances(mk_cyclic(4), TEMPLATE_CYCLIC):
        assert has_product_one(s, 8) is None
    count = sum(1 for _ in template_instances(D6, TEMPLATE_METACYCLIC))
    assert count == 18  # 3 choices of (t1,t2) with gcd(t1-t2,3)=1 ... times 3 positions
    # template instances of foreign kinds are empty
    assert list(template_instances(D6, TEMPLATE_CYCLIC)) == []


def test_infeasible_guard():
    with pytest.raises(InfeasibleSize):
        enumerate_free(mk_metacyclic(15, 11), 44, 30, ceiling=1000)
    with pytest.raises(InfeasibleSize):
        gao_constant(mk_metacyclic(15, 11), ceiling=1000)


def test_apply_automorphism_preserves_freeness():
    rep = gao_constant(D6).certificates[0]
    for perm in automorphisms(D6):
        img = apply_automorphism(rep, perm)
        assert img.length == rep.length
        assert has_product_one(img, 6) is None
