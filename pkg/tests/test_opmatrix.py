import json
from fractions import Fraction


from dessins import operators as ops
from dessins import opmatrix as om
from dessins import partition as pt
from dessins.series import Poly


def test_pair_of_pants_blocks_match_operator_structure_constants():
    # dictionary: coefficient of t^mu+ d_mu- equals
    # (n-!/mu-!) * entry / mu+!, compared against the P+/P- formulas
    b = om.kernel_block(0, 2, 1, 6)
    assert b.value((1, 1), (0,)) * Fraction(1, 2) == Fraction(1, 2)  # t1^2 d0
    assert b.value((1, 2), (1,)) == 2  # t1 t2 d1: (i+1)(j+1), {i,j} = {0,1}
    assert b.value((2, 2), (2,)) * Fraction(1, 2) == 2  # t2^2 d2: (1/2)(2)(2)
    b2 = om.kernel_block(0, 1, 2, 6)
    assert b2.value((2,), (0, 0)) * Fraction(2, 2) == 1  # t2 d0^2
    assert b2.value((3,), (0, 1)) * Fraction(2, 1) == 3  # t3 d0 d1: (i+j+2)
    assert b2.value((4,), (1, 1)) * Fraction(2, 2) == 2  # t4 d1^2: (1/2)(4)


def test_block_offset_homogeneity():
    b = om.kernel_block(0, 2, 1, 6)
    for (ap, amn), v in b.entries.items():
        assert sum(ap) == sum(amn) + 2
        assert v != 0
    assert b.value((1, 1), (2,)) == 0  # degree mismatch


def test_block_symmetry_under_entry_access():
    b = om.kernel_block(1, 1, 1, 8)
    assert b.value((6,), (1, )) == b.entries.get(((6,), (1,)), 0)
    b2 = om.kernel_block(0, 2, 2, 8)
    assert b2.value((3, 1), (0, 2)) == b2.value((1, 3), (2, 0))


def test_cap_below_minimal_degree_warns_and_gives_empty_block():
    import warnings

    om.kernel_block.cache_clear()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        b = om.kernel_block(0, 2, 1, 1)
    assert b.entries == {}
    assert any("minimal degree" in str(w.message) for w in caught)


def test_cutjoin_matrix_check_passes():
    assert om.cutjoin_matrix_check(2, 8) == []


def test_vacuum_consistency():
    assert om.vacuum_consistency_check(2, 8) == []


def test_degree_one_operator_equals_w1_on_window():
    k1 = om.assembled_operator(1, 8)
    w1 = ops.w1()
    for m in ops.basis_monomials(4, 4, t0_cap=2):
        p = Poly.term(m, 1)
        assert ops.apply(k1, p) == ops.apply(w1, p)


def test_adjointness_pair_and_self():
    assert om.adjoint_check(0, 2, 1, 6) == []
    assert om.adjoint_check(0, 1, 2, 6) == []
    assert om.adjoint_check(0, 2, 2, 6) == []


def test_adjoint_vacuous_below_degree():
    assert om.adjoint_check(0, 2, 1, 1) == []


def test_json_export_roundtrip():
    b = om.kernel_block(0, 1, 2, 4)
    payload = b.to_json_dict()
    text = json.dumps(payload, sort_keys=True)
    back = json.loads(text)
    assert back["g"] == 0 and back["n_plus"] == 1 and back["n_minus"] == 2
    entries = {
        (tuple(e["alpha_plus"]), tuple(e["alpha_minus"])): e["value"] for e in back["entries"]
    }
    assert entries[((2,), (0, 0))] == "1"
