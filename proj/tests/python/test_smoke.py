import pytest

import bcrystal as bc


def components(result):
    return dict(result["components"])


def test_structure_maps():
    assert bc.weight("V(3):b1") == 1
    assert bc.weight("T(2):b0") == -4
    assert bc.epsilon("T(5):b2") == 2
    assert bc.phi("T(3):b1") == -6
    assert bc.psi("M(-3):b0") == 2
    assert bc.e_step("T(2):b0") == "T(2):b(2)"
    assert bc.e_step("V(3):b0") is None
    assert bc.f_step("Msigma(2):b(2)") is None
    assert bc.head_of("T(2):b3") == "T(2):b0"


def test_branch_points():
    assert bc.is_branch_point("T(2):b0")
    assert not bc.is_branch_point("V(3):b1")
    assert bc.above_branch_point("T(2):b(1)")
    assert not bc.above_branch_point("T(2):b(3)")


def test_decompose_micro_examples():
    assert components(bc.decompose("V(1) (x) V(1)")) == {"V(2)": 1, "V(0)": 1}
    assert components(bc.decompose("M(0) (x) V(1)")) == {"M(1)": 1, "M(-1)": 1}
    got = components(bc.decompose("M(2) (x) M(0)", window=30, safe_margin=10))
    assert got["M(2)"] == 1 and got["T(0)"] == 1 and got["M(-4)"] == 1
    assert "M(-2)" not in got


def test_oracle_agrees_with_engine():
    engine = components(bc.decompose("T(1) (x) V(2)"))
    table = components(bc.oracle_decompose("T(1)", "V(2)"))
    assert engine == table
    assert engine["M(-1)"] == 2


def test_module_side():
    assert dict(bc.module_tensor("V(1)", "V(1)")) == {"V(2)": 1, "V(0)": 1}
    assert bc.character("T(0)", -2) == 2
    assert bc.character("M(2) (+) T(0)", -2) == 3
    assert bc.dual("Msigma(1)") == "M(1)"
    assert bc.dual("M(-2)") == "M(-2)"


def test_rules():
    info = bc.rules("V(1):b0 (x) V(1):b1")
    assert info["f_rule"] == "F2"
    assert info["e_rule"] == "E1"
    assert info["f"] is None and info["e"] is None


def test_axioms_and_graph():
    assert bc.check_axioms("T(1) (x) Msigma(1)", min_weight=-16) == []
    dot = bc.graph_dot("T(1)", window=8)
    assert "digraph" in dot and "style=dashed" in dot


def test_nested_associativity():
    a = components(bc.decompose("(V(1) (x) T(1)) (x) M(0)", window=30, safe_margin=16))
    b = components(bc.decompose("V(1) (x) (T(1) (x) M(0))", window=30, safe_margin=16))
    assert a == b


def test_errors():
    with pytest.raises(ValueError):
        bc.decompose("V(1) (x")
    with pytest.raises(RuntimeError):
        bc.decompose("V(20) (x) V(20)", window=30)


def test_verify_suite():
    out = bc.verify("axioms", 0, 1)
    assert out["passed"] and out["checks"] > 0
