import json

import pytest
from hypothesis import given, settings, strategies as st

from kleinmackey.mackey import (CATALOG_ATOMS, catalog, catalog_c2,
                                check_axioms, direct_sum, dual, expr_to_mackey,
                                fingerprint, format_name_expr, hom_space,
                                identify, inflate, is_isomorphic,
                                mackey_from_json, parse_name_expr, restrict_to,
                                zero_mackey)


def test_catalog_diagrams():
    F = catalog("F")
    assert F.dims == (1, 1, 1, 1, 1)
    assert all(F.res_edge(u, lo).to_lists() == [[1]] for u, lo in F.gd.edges)
    assert all(F.tr_edge(u, lo).is_zero() for u, lo in F.gd.edges)
    g = catalog("g")
    assert g.dims == (1, 0, 0, 0, 0)
    mg = catalog("mg")
    assert mg.dims == (2, 1, 1, 1, 0)
    assert mg.res_edge("K", "L").to_lists() == [[1, 0]]
    assert mg.res_edge("K", "D").to_lists() == [[1, 1]]
    assert mg.res_edge("K", "R").to_lists() == [[0, 1]]
    Wd = catalog("W*")
    assert Wd.dims == (3, 1, 1, 1, 1)
    assert Wd.res_edge("K", "L").to_lists() == [[1, 0, 0]]
    assert Wd.tr_edge("L", "e").to_lists() == [[1]]


def test_unknown_name():
    with pytest.raises(ValueError):
        catalog("nope")


def test_axioms_all_catalog():
    for name in CATALOG_ATOMS:
        assert check_axioms(catalog(name)) == [], name
    assert check_axioms(zero_mackey()) == []


def test_axioms_detect_corruption():
    # give F a transfer up from R while keeping the identity restriction
    doc = catalog("F").to_json_dict()
    doc["tr"]["R>K"] = [[1]]
    bad = mackey_from_json(doc)
    failures = check_axioms(bad)
    assert any("res K>R . tr R>K" in f for f in failures)


def test_dual_matches_pairing():
    for a, b in (("F", "F*"), ("m", "m*"), ("w", "w*"), ("mg", "mg*"),
                 ("W", "W*")):
        assert dual(catalog(a)) == catalog(b)
        assert dual(catalog(b)) == catalog(a)
    assert dual(catalog("g")) == catalog("g")
    assert dual(catalog("f")) == catalog("f")
    for name in CATALOG_ATOMS:
        assert dual(dual(catalog(name))) == catalog(name)


def test_inflate_examples():
    assert inflate("K", 1) == catalog("g")
    m = inflate("R", catalog_c2("F"))
    assert m.dims == (1, 0, 0, 1, 0)
    assert m.res_edge("K", "R").to_lists() == [[1]]
    assert m.tr_edge("K", "R").is_zero()
    assert inflate("L", zero_mackey("C2")).is_zero()


def test_restrict_to_examples():
    assert restrict_to(catalog("F"), "L") == catalog_c2("F")
    assert restrict_to(catalog("g"), "R").is_zero()
    assert restrict_to(catalog("mg"), "R") == catalog_c2("g")
    # inflation along one subgroup dies on the others
    for h in ("L", "D", "R"):
        infl = inflate(h, catalog_c2("F"))
        for other in ("L", "D", "R"):
            if other != h:
                assert restrict_to(infl, other).is_zero()


def test_direct_sum_examples():
    trip = catalog("phiLDR(f)")
    assert trip.dims == (0, 1, 1, 1, 0)
    assert all(m.is_zero() for m in trip.res) and all(m.is_zero() for m in trip.tr)
    gg = direct_sum([catalog("g"), catalog("g")])
    assert gg.dims == (2, 0, 0, 0, 0)
    assert direct_sum([catalog("m"), zero_mackey()]) == catalog("m")


def test_fingerprint_examples():
    assert fingerprint(catalog("F")) != fingerprint(catalog("F*"))
    assert fingerprint(direct_sum([catalog("g"), catalog("f")])) == \
        fingerprint(direct_sum([catalog("f"), catalog("g")]))
    # the two-dimensional quotient is not the split sum: the three
    # restriction kernels differ, which the joint restriction rank sees
    assert fingerprint(catalog("mg")) != fingerprint(catalog("m + g"))
    assert not is_isomorphic(catalog("mg"), catalog("m + g"))


def test_fingerprint_dual_swaps_parts():
    for name in CATALOG_ATOMS:
        m = catalog(name)
        dims, res_part, tr_part, _ = fingerprint(m)
        ddims, dres, dtr, _ = fingerprint(dual(m))
        assert dims == ddims
        assert dres == tr_part and dtr == res_part


def test_identify_examples():
    assert identify(catalog("phiLDR(F*)")) == parse_name_expr("phiLDR(F*)")
    assert format_name_expr(identify(catalog("phiLDR(F*) + g^2"))) == \
        "phiLDR(F*) + g^2"
    assert identify(catalog("g")) == (("g", 1),)
    assert identify(zero_mackey()) == ()
    assert format_name_expr(()) == "0"


def test_identify_round_trip_all_atoms():
    for name in CATALOG_ATOMS:
        assert identify(catalog(name)) == ((name, 1),), name


def test_hom_space_and_iso():
    # endomorphisms of the inflation triple are the three independent scalars
    trip = catalog("phiLDR(F)")
    assert len(hom_space(trip, trip)) == 3
    assert is_isomorphic(trip, trip)
    assert not is_isomorphic(catalog("F"), catalog("F*"))
    # no nonzero maps from the geometric functor into the triple
    assert len(hom_space(catalog("g"), trip)) == 0


def test_json_round_trip():
    for name in ("F", "mg", "W*", "phiL(f)"):
        m = catalog(name)
        assert mackey_from_json(json.loads(json.dumps(m.to_json_dict()))) == m


def test_pretty_has_diagram():
    text = catalog("mg").pretty()
    assert "2" in text and "res K>L" in text


atom_lists = st.lists(st.sampled_from(CATALOG_ATOMS), min_size=1, max_size=4)


@given(atom_lists)
@settings(max_examples=300, deadline=None)
def test_random_sums_pass_axioms(atoms):
    assert check_axioms(direct_sum([catalog(a) for a in atoms])) == []


@given(atom_lists)
@settings(max_examples=150, deadline=None)
def test_identify_recovers_random_sums(atoms):
    m = direct_sum([catalog(a) for a in atoms])
    expr = identify(m)
    assert expr is not None
    assert expr_to_mackey(expr).dims == m.dims
    counts = {}
    for a in atoms:
        counts[a] = counts.get(a, 0) + 1
    assert expr == tuple(sorted(counts.items()))


@given(atom_lists, atom_lists)
@settings(max_examples=100, deadline=None)
def test_fingerprint_additive_over_sums(atoms1, atoms2):
    from kleinmackey.mackey import _flatten
    m1 = direct_sum([catalog(a) for a in atoms1])
    m2 = direct_sum([catalog(a) for a in atoms2])
    both = direct_sum([m1, m2])
    lhs = _flatten(fingerprint(both))
    rhs = [x + y for x, y in zip(_flatten(fingerprint(m1)),
                                 _flatten(fingerprint(m2)))]
    assert lhs == rhs
