import pytest

from kleinmackey import bredon
from kleinmackey import slices as sl
from kleinmackey.mackey import catalog, format_name_expr, identify
from kleinmackey.reps import RepK


def cell_str(cell):
    return cell.pretty()


def hom_names(table):
    return {d: format_name_expr(e) for d, e in table.items()}


def test_bounds():
    assert sl.slice_bounds_K(8) == (8, 20)
    assert sl.slice_bounds_K(3) == (3, 3)
    assert sl.slice_bounds_K(0) == (0, 0)
    with pytest.raises(ValueError):
        sl.slice_bounds_K(-1)


def test_slice_K_examples():
    assert cell_str(sl.slice_K(5, 8)) == "Σ^2 Hg"
    assert cell_str(sl.slice_K(8, 12)) == "Σ^{3ρ} H(φ*_{LDR}F* ⊕ g^2)"
    assert cell_str(sl.slice_K(9, 16)) == "Σ^4 Hg^5"
    for n in (4, 8, 12, 20):
        cell = sl.slice_K(n, n)
        assert cell.susp == RepK(n // 4, n // 4, n // 4, n // 4)
        assert format_name_expr(cell.coeff) == "F*"
    assert cell_str(sl.slice_K(13, 14)) == "Σ^{3ρ+1} Hφ*_{LDR}f"
    assert sl.slice_K(20, 41).trivial
    assert cell_str(sl.slice_K(11, 12)) == "Σ^{3ρ} Hmg*"
    assert cell_str(sl.slice_K(5, 5)) == "Σ^{ρ+1} Hf"
    assert cell_str(sl.slice_K(7, 8)) == "Σ^{2ρ} Hmg*"
    assert cell_str(sl.slice_K(0, 0)) == "Σ^0 HF"


def test_slice_C2_examples():
    assert cell_str(sl.slice_C2(6, 6)) == "Σ^{3ρ} HF*"
    assert cell_str(sl.slice_C2(5, 6)) == "Σ^3 Hg"
    assert cell_str(sl.slice_C2(2, 2)) == "Σ^ρ Hf"
    assert sl.slice_C2(5, 7).trivial


def test_slice_C2_f_examples():
    assert cell_str(sl.slice_C2_f(2, 2)) == "Σ^2 Hf"
    assert cell_str(sl.slice_C2_f(4, 6)) == "Σ^3 Hg"
    assert sl.slice_C2_f(4, 7).trivial
    assert cell_str(sl.slice_C2_f(3, 4)) == "Σ^2 Hg"
    assert cell_str(sl.slice_C2_f(3, 3)) == "Σ^{ρ+1} Hf"


def test_trivial_outside_congruences():
    for n in range(0, 25):
        lo, hi = sl.slice_bounds_K(n)
        for i in range(0, 4 * n + 4):
            cell = sl.slice_K(n, i)
            if cell.trivial:
                continue
            assert lo <= i <= hi
            if i > n:
                assert i % 2 == 0
            if n >= 4 and i > 2 * n - 4:
                assert i % 4 == 0


def test_recursion_coherence():
    for n in range(7, 25):
        for i in range(n, 2 * n - 6):
            cur = sl.slice_K(n, i)
            prev = sl.slice_K(n - 4, i - 4)
            assert cur.trivial == prev.trivial, (n, i)
            if cur.trivial:
                continue
            assert cur.susp == prev.susp + RepK(1, 1, 1, 1), (n, i)
            assert cur.coeff == prev.coeff, (n, i)


def test_level_e_sanity():
    # only the bottom slice carries underlying homotopy, one dimension at n
    from kleinmackey.mackey import expr_dims
    for n in range(0, 18):
        lo, hi = sl.slice_bounds_K(n)
        for i in range(lo, hi + 1):
            cell = sl.slice_K(n, i)
            if cell.trivial:
                continue
            table = sl.homotopy_of_slice(cell)
            e_part = {d: expr_dims(e, "K")[4] for d, e in table.items()
                      if expr_dims(e, "K")[4]}
            if i == n:
                assert e_part == {n: 1}, (n, i)
            else:
                assert e_part == {}, (n, i)


def test_effective_slice_dims():
    for n in range(0, 20):
        lo, hi = sl.slice_bounds_K(n)
        for i in range(lo, hi + 1):
            cell = sl.slice_K(n, i)
            if not cell.trivial:
                assert sl.effective_slice_dim(cell) == i, (n, i)
    for n in range(0, 16):
        for i in range(n, 2 * n):
            cell = sl.slice_C2(n, i)
            if not cell.trivial:
                assert sl.effective_slice_dim(cell) == i, (n, i)


def test_homotopy_of_slice_examples():
    table = hom_names(sl.graded_homotopy_K(0, 2, sl._expr("F")))
    assert table == {8: "F", 7: "mg", 6: "phiLDR(F)", 5: "phiLDR(F) + g",
                     4: "phiLDR(F) + g^2", 3: "g^3", 2: "g"}
    table = hom_names(sl.graded_homotopy_K(1, 2, sl._expr("phiLDR(f)")))
    assert table == {5: "phiLDR(F)", 4: "g^3"}
    cell = sl.slice_K(5, 8)
    assert hom_names(sl.homotopy_of_slice(cell)) == {2: "g"}
    with pytest.raises(ValueError):
        sl.graded_homotopy_K(0, 1, sl._expr("w*"))


def test_bottom_slice_matches_oracle():
    for n in range(0, 13):
        cell = sl.slice_K(n, n)
        formula = sl.homotopy_of_slice(cell)
        oracle = {}
        for d, m in bredon.homotopy(cell.susp, format_name_expr(cell.coeff)).items():
            expr = identify(m)
            assert expr is not None, (n, d)
            oracle[d] = expr
        assert formula == oracle, n


def test_towers_low():
    assert [node.pretty() for node in sl.tower_K(0)] == ["Σ^0 HF"]
    assert [node.pretty() for node in sl.tower_K(4)] == ["Σ^ρ HF*"]
    forms5 = [(node.kind, node.pretty()) for node in sl.tower_K(5)]
    assert forms5 == [
        ("slice", "Σ^2 Hg"),
        ("total", "Σ^{ρ+1} HF*"),
        ("slice", "Σ^{ρ+1} Hφ*_{LDR}f"),
        ("section", "Σ^{ρ+1} Hw*"),
        ("slice", "Σ^{ρ+1} Hf"),
    ]


def test_tower_8_has_cofiber_section():
    nodes = sl.tower_K(8)
    slices = [node for node in nodes if node.kind == "slice"]
    assert [node.i for node in slices] == [20, 16, 12, 10, 8]
    assert slices[-1].pretty() == "Σ^{ρ+4} HF"
    c_nodes = [node for node in nodes if node.coeff == "C"]
    assert len(c_nodes) == 1
    assert c_nodes[0].pretty() == "Σ^{ρ+3} C"
    assert dict(c_nodes[0].homotopy)[8] == sl._expr("F")
    assert dict(c_nodes[0].homotopy)[7] == sl._expr("mg")
    assert dict(c_nodes[0].homotopy)[4] == sl._expr("g^2")
    # the cofiber spectrum itself has the advertised two homotopy functors
    assert sl.cofiber_node_homotopy(-1) == \
        {4: sl._expr("F"), 3: sl._expr("mg"), 0: sl._expr("g^2")}


def test_tower_9_10_summands():
    parts9 = sl.tower_slice_parts(9)
    assert sorted(parts9) == [9, 10, 12, 14, 16, 20, 24]
    assert len(parts9[16]) == 2 and len(parts9[12]) == 2
    parts10 = sl.tower_slice_parts(10)
    assert len(parts10[20]) == 2 and len(parts10[16]) == 3
    labels = [n.label for n in sl.tower_K(10) if n.kind == "summand"]
    assert labels == ["A", "C", "B", "D", "E"]


def test_tower_slices_match_formulas():
    # tower presentation and theorem-normal form have equal graded homotopy
    for n in range(0, 11):
        parts = sl.tower_slice_parts(n)
        lo, hi = sl.slice_bounds_K(n)
        for i in range(lo, hi + 1):
            cell = sl.slice_K(n, i)
            if cell.trivial:
                assert i not in parts, (n, i)
                continue
            agg = {}
            for susp, coeff in parts[i]:
                a, k = sl._rho_decompose(susp)
                for d, names in sl.graded_homotopy_K(a, k, coeff).items():
                    sl._merge(agg, d, names)
            assert agg == sl.homotopy_of_slice(cell), (n, i)


def test_tower_above_10_lists_slices():
    nodes = sl.tower_K(11)
    assert all(node.kind == "slice" for node in nodes)
    assert all("not asserted" in node.note for node in nodes)
    assert [node.i for node in nodes] == [
        i for i in range(32, 10, -1) if not sl.slice_K(11, i).trivial]


def test_restriction_consistency():
    for n in range(0, 21):
        assert sl.restriction_consistency(n) == [], n


def test_slice_predicates():
    assert sl.slice_predicates(catalog("F"))["is_one_slice_EM"]
    assert not sl.slice_predicates(catalog("F"))["is_minus_one_slice_EM"]
    assert sl.slice_predicates(catalog("F*"))["is_minus_one_slice_EM"]
    preds_g = sl.slice_predicates(catalog("g"))
    assert not preds_g["is_one_slice_EM"]
    assert not preds_g["is_minus_one_slice_EM"]
    assert preds_g["is_zero_slice_EM"]
    # the kernel functor of the quotient map has injective restrictions
    assert sl.slice_predicates(catalog("w"))["is_one_slice_EM"]
    assert sl.slice_predicates(catalog("w*"))["is_minus_one_slice_EM"]
    # the three-dimensional duals fail: their lower maps vanish
    assert not sl.slice_predicates(catalog("W*"))["is_one_slice_EM"]
    from kleinmackey.mackey import catalog_c2
    assert sl.slice_predicates(catalog_c2("F"))["is_one_slice_EM"]
    assert sl.slice_predicates(catalog_c2("F*"))["is_minus_one_slice_EM"]


def test_mstar_and_mgstar_twisted_tables_match_oracle():
    # the dual-family reductions behind the twisted tables
    for coeff in ("m*", "mg*"):
        for k in (1, 2):
            v = RepK(k, k, k, k)
            formula = sl.graded_homotopy_K(0, k, sl._expr(coeff))
            oracle = {}
            for d, m in bredon.homotopy(v, coeff).items():
                expr = identify(m)
                assert expr is not None, (coeff, k, d)
                oracle[d] = expr
            assert formula == oracle, (coeff, k)
