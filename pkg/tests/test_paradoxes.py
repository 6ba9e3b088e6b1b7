import pytest

from codeword_paradoxes.paradoxes import (OperatorArray, ParityInstance,
                                          build_canonical_array,
                                          canonical_pentagon_instance,
                                          check_array,
                                          check_parity_contradiction,
                                          compatible_pairs,
                                          find_determinations,
                                          mermin_peres_square,
                                          parity_instance_from_group,
                                          pentagon_description,
                                          search_parity_contradictions)
from codeword_paradoxes.pauli import identity, parse

# The eight ways of learning sigma_1x from the other qubits, written as
# witnesses on sites 2..5.
KNOWN_WITNESSES_1X = {
    "IZXII",   # sigma_2z sigma_3x
    "IIIXZ",   # sigma_4x sigma_5z
    "IIXYY",   # sigma_3x sigma_4y sigma_5y
    "IXYZY",   # sigma_2x sigma_3y sigma_4z sigma_5y
    "IXZIZ",   # sigma_2x sigma_3z sigma_5z
    "IYYXI",   # sigma_2y sigma_3y sigma_4x
    "IYZYX",   # sigma_2y sigma_3z sigma_4y sigma_5x
    "IZIZX",   # sigma_2z sigma_4z sigma_5x
}

KNOWN_PAIRS_1X = {
    frozenset({"IZXII", "IIIXZ"}),   # the simultaneously testable example
    frozenset({"IZXII", "IZIZX"}),
    frozenset({"IZXII", "IIXYY"}),
    frozenset({"IIIXZ", "IXZIZ"}),
    frozenset({"IIIXZ", "IYYXI"}),
}


def test_determinations_match_known_list(five_group):
    ds = find_determinations(five_group, 1, "X")
    assert {str(d.witness) for d in ds} == KNOWN_WITNESSES_1X
    # sigma_1x sigma_2z sigma_3x |0_L> = -|0_L>, so that witness predicts -1
    by_witness = {str(d.witness): d.predicted_product for d in ds}
    assert by_witness["IZXII"] == -1
    assert by_witness["IIIXZ"] == -1
    assert sum(1 for v in by_witness.values() if v == -1) == 2


def test_z_target_includes_all_z_witness(five_group):
    ds = find_determinations(five_group, 1, "Z")
    assert "IZZZZ" in {str(d.witness) for d in ds}   # read off the all-Z element


def test_determination_soundness(five, five_group):
    """predicted_product times the witness eigen-factor reproduces the
    group element's eigensign on the codeword."""
    from codeword_paradoxes.pauli import single_site
    from codeword_paradoxes.statevector import eigensign
    for d in find_determinations(five_group, 1, "X"):
        element = single_site(5, 1, "X") * d.witness
        assert eigensign(element, five.codeword0) == d.predicted_product


def test_compatible_pairs_match_known_count(five_group):
    ds = find_determinations(five_group, 1, "X")
    pairs = compatible_pairs(ds)
    assert len(pairs) == 5
    got = {frozenset({str(a.witness), str(b.witness)}) for a, b in pairs}
    assert got == KNOWN_PAIRS_1X


def test_incompatible_example(five_group):
    ds = {str(d.witness): d for d in find_determinations(five_group, 1, "X")}
    pairs = compatible_pairs([ds["IZXII"], ds["IXYZY"]])
    assert pairs == []   # site 2 letters Z vs X differ


def test_empty_determinations():
    from codeword_paradoxes.stabilizer import StabilizerElement, close
    trivial = close([StabilizerElement(identity(1), +1, +1)])
    assert find_determinations(trivial, 1, "X") == []


def test_pentagon_contradiction_both_codewords(five):
    for ws in (0, 1):
        report = check_parity_contradiction(canonical_pentagon_instance(five, ws))
        assert report.all_even
        assert report.eigenvalue_product == -1
        assert report.matrix_product == "-IIIII"
        assert report.matrix_product_is_minus_identity
        assert report.contradiction
        # every symbol that appears does so exactly twice
        assert set(report.multiplicities.values()) == {2}


def test_pentagon_symbol_count(five):
    report = check_parity_contradiction(canonical_pentagon_instance(five, 0))
    assert len(report.multiplicities) == 10   # five z symbols, five x symbols


def test_pentagon_description(five):
    desc = pentagon_description(five)
    assert len(desc["sides"]) == 5
    assert desc["sides"][0]["measurements"] == ["sigma_1x", "sigma_2z", "sigma_3x"]
    assert desc["sides"][0]["value_on_codeword0"] == -1
    assert desc["closing_relation"]["value_on_codeword0"] == +1


def test_parity_instance_rejects_wrong_sign(five):
    inst = ParityInstance("bad", five.codeword0,
                          ((parse("ZZZZZ"), -1),))   # actual eigensign is +1
    with pytest.raises(ValueError):
        check_parity_contradiction(inst)


def test_mermin_ghz_instance(mermin):
    group = mermin.group()
    ops = [parse(s) for s in ("XXX", "XYY", "YXY", "YYX")]
    inst = parity_instance_from_group(group, mermin.codeword0, "|+>", ops, 0)
    report = check_parity_contradiction(inst)
    assert report.contradiction
    assert report.eigenvalue_product == -1
    assert set(report.multiplicities.values()) == {2}


def test_canonical_array_layout():
    arr = build_canonical_array()
    assert arr.shape == (6, 13)
    assert str(arr.cell(2, 13)) == "ZXIIX"    # sigma_5x sigma_1z sigma_2x
    assert str(arr.cell(6, 13)) == "XIIXZ"    # sigma_4x sigma_5z sigma_1x
    assert str(arr.cell(1, 7)) == "IIIII"
    assert str(arr.cell(3, 2)) == "IZIII"
    assert str(arr.cell(3, 6)) == "XIIII"
    assert str(arr.cell(3, 8)) == "IIXII"
    assert str(arr.cell(3, 13)) == "XZXII"
    assert str(arr.cell(1, 13)) == "ZZZZZ"


def test_canonical_array_verdict():
    report = check_array(build_canonical_array())
    assert all(report.row_commuting)
    assert all(report.col_commuting)
    assert report.row_signs == [+1] * 6
    assert report.col_signs == [+1] * 12 + [-1]
    assert report.row_signs_match and report.col_signs_match
    assert report.impossibility
    assert report.rowwise_total == "IIIII"
    assert report.colwise_total == "-IIIII"


def test_array_last_column_is_the_pentagon_instance(five):
    """The multiplicative and parity arguments share their operators: the
    array's final column is exactly the six-operator instance."""
    arr = build_canonical_array()
    column_ops = {str(op) for op in arr.column(13)}
    instance_ops = {str(op) for op, _sign in
                    canonical_pentagon_instance(five, 0).members}
    assert column_ops == instance_ops


def test_mermin_peres_square():
    report = check_array(mermin_peres_square())
    assert report.row_signs == [+1, +1, +1]
    assert report.col_signs == [+1, +1, -1]
    assert all(report.row_commuting) and all(report.col_commuting)
    assert report.impossibility


def test_trivial_array_has_no_contradiction():
    arr = OperatorArray(rows=((identity(1),),),
                        declared_row_signs=(+1,),
                        declared_col_signs=(+1,))
    report = check_array(arr)
    assert not report.impossibility
    assert report.row_signs == [+1] and report.col_signs == [+1]


def test_array_rejects_non_hermitian_cells():
    with pytest.raises(Exception):
        OperatorArray(rows=((parse("iZ"),),),
                      declared_row_signs=(+1,),
                      declared_col_signs=(+1,))


def test_search_five_qubit(five, five_group):
    res = search_parity_contradictions(five_group, 0, 6, five.codeword0)
    assert res.complete_to_size == 6
    hist = {s: res.subset_sizes.count(s) for s in sorted(set(res.subset_sizes))}
    assert hist == {4: 60, 5: 180, 6: 572}
    canon = set(canonical_pentagon_instance(five, 0).members)
    assert any(set(inst.members) == canon for inst in res.instances)
    # results are ordered smallest first
    assert res.subset_sizes == sorted(res.subset_sizes)


def test_search_is_deterministic(five, five_group):
    a = search_parity_contradictions(five_group, 0, 5, five.codeword0)
    b = search_parity_contradictions(five_group, 0, 5, five.codeword0)
    assert [i.operator_texts() for i in a.instances] == \
        [i.operator_texts() for i in b.instances]


def test_search_mermin_finds_ghz(mermin):
    res = search_parity_contradictions(mermin.group(), 0, 4, mermin.codeword0)
    assert len(res.instances) == 1
    assert res.instances[0].operator_texts() == \
        ["+1 XXX", "-1 XYY", "-1 YXY", "-1 YYX"]


def test_search_tiny_bounds(five, five_group, steane):
    # no contradiction can use fewer than two elements
    empty = search_parity_contradictions(five_group, 0, 2, five.codeword0)
    assert empty.instances == [] and empty.complete_to_size == 2
    tiny = search_parity_contradictions(steane.group(), 0, 1, steane.codeword0)
    assert tiny.instances == [] and tiny.complete_to_size == 1


def test_check_rejects_empty_instance(five):
    with pytest.raises(ValueError):
        check_parity_contradiction(ParityInstance("empty", five.codeword0, ()))


def test_search_steane_finds_small_subsets(steane):
    group = steane.group()
    for ws in (0, 1):
        res = search_parity_contradictions(group, ws, 10, steane.codeword(ws))
        assert res.found
        assert min(res.subset_sizes) == 4
        assert res.subset_sizes.count(4) == 2016
        assert res.complete_to_size >= 4
