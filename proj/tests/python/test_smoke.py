import json

import pytest

import emcg


def test_arf_and_symplectic_counts():
    assert emcg.arf([0, 0]) == 0
    assert emcg.arf([1, 1]) == 1
    assert emcg.arf([1, 1, 1, 1]) == 0
    assert emcg.sp_order(2) == 720
    assert len(emcg.stabilizer([0, 0])) == 2
    assert len(emcg.stabilizer([0, 0, 0, 0])) == 72
    assert len(emcg.orbit([0, 0, 0, 0])) == 10


def test_sl2z():
    assert emcg.is_member([[2, -1], [1, 0]])
    assert not emcg.is_member([[1, 1], [0, 1]])
    assert emcg.reduce_mod2([[0, -1], [1, 0]]) == "VClass"
    assert emcg.eval_word("V V V V") == [(1, 0), (0, 1)]
    assert emcg.decompose([[2, -1], [1, 0]]) == "T V"
    assert emcg.normal_form("V V V") == "-V"


def test_big_integers_cross_the_boundary():
    m = emcg.eval_word("T^5000000000000000000 T^5000000000000000000")
    assert m[0][1] == 20000000000000000000
    # Entries beyond 64 bits, exponent within 64 bits.
    assert emcg.decompose([[1, 10000000000000000000], [0, 1]]) == "T^5000000000000000000"
    with pytest.raises(emcg.Error):
        emcg.decompose([[1, 40000000000000000000], [0, 1]])


def test_errors_carry_a_kind():
    with pytest.raises(emcg.Error) as info:
        emcg.decompose([[1, 1], [0, 1]])
    assert info.value.kind == "not-member"
    with pytest.raises(ValueError):
        emcg.is_member([[2, 0], [0, 1]])
    with pytest.raises(emcg.Error) as info:
        emcg.coset_count("gens: V,T; rels: V^4, V^2 T V^-2 T^-1", max_cosets=1000)
    assert info.value.kind == "capacity"


def test_groups():
    d8 = emcg.group_table("gens: a,b,u; rels: a^2, b^2, u^2, [a,b], a u b^-1 u^-1")
    assert len(d8) == 8
    c8 = emcg.group_table("gens: a; rels: a^8")
    assert not emcg.is_isomorphic(d8, c8)
    assert emcg.is_isomorphic(d8, d8)


def test_classify():
    even = emcg.classify("equal-product", p=4)
    assert even["total"] == "D8xZ2"
    assert even["kernel"] == "Z2xZ2"
    odd = emcg.classify("equal-product", p=5)
    assert odd["total"] == "GammaV2"
    assert emcg.classify("unequal-product", p=2, q=3)["total"] is None
    assert emcg.classify("unknot", n=7)["total"] == "Trivial"


def test_cli_and_acceptance():
    code, out, _ = emcg.run_cli(["--json", "classify", "--family", "adjacent-product", "--p", "14"])
    assert code == 0
    assert json.loads(out)["total"] == "Z2xZ2"
    code, _, err = emcg.run_cli(["frobnicate"])
    assert code == 2 and "Usage" in err
    results = emcg.verify_all()
    assert [r["id"] for r in results] == list(range(1, 9))
    assert all(r["passed"] for r in results)
