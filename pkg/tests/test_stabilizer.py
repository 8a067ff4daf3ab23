import numpy as np
import pytest
from hypothesis import given, strategies as st

import table_data
from stabforge import stabilizer
from stabforge.pauli import PauliOperator, identity, multiply, parse, single
from stabforge.stabilizer import (
    DependentGeneratorsWarning,
    MinusIdentityError,
    NotAbelianError,
    SquaresToMinusOneError,
    Syndrome,
    check_correctability,
    enumerate_elements,
    iter_errors,
    syndrome,
    validate,
    weight_one_syndromes,
)


def random_op(rng, n):
    return PauliOperator(
        n, int(rng.integers(0, 1 << n)), int(rng.integers(0, 1 << n)), int(rng.choice([1, -1]))
    )


def test_validate_family(code8, group8):
    assert group8.a == 5
    assert group8.generators == code8.generators


def test_validate_not_abelian():
    with pytest.raises(NotAbelianError) as exc:
        validate(2, [parse("XX"), parse("ZX")])
    assert (exc.value.r, exc.value.s) == (1, 2)


def test_validate_squares_to_minus_one():
    with pytest.raises(SquaresToMinusOneError):
        validate(1, [parse("Y")])


def test_validate_minus_identity():
    with pytest.raises(MinusIdentityError):
        validate(2, [parse("+ZZ"), parse("-ZZ")])


def test_validate_drops_redundant_with_warning():
    with pytest.warns(DependentGeneratorsWarning):
        group = validate(2, [parse("+ZZ"), parse("+ZZ")])
    assert group.a == 1


def test_validate_rejects_wrong_n():
    with pytest.raises(ValueError):
        validate(3, [parse("ZZ")])


def test_syndrome_single_qubit_golden(group8):
    for i in range(8):
        assert str(syndrome(group8, single(8, i + 1, "X"))) == table_data.FX[i]
        assert str(syndrome(group8, single(8, i + 1, "Z"))) == table_data.FZ[i]
        assert str(syndrome(group8, single(8, i + 1, "Y"))) == table_data.FY[i]


def test_syndrome_identity_and_xor(group8):
    assert str(syndrome(group8, identity(8))) == "00000"
    e = multiply(single(8, 1, "X"), single(8, 2, "Z"))
    assert str(syndrome(group8, e)) == "11000"
    assert syndrome(group8, e) == syndrome(group8, single(8, 1, "X")) ^ syndrome(
        group8, single(8, 2, "Z")
    )


def test_syndrome_homomorphism_bulk(group8, rng):
    for _ in range(10_000):
        e, f = random_op(rng, 8), random_op(rng, 8)
        assert syndrome(group8, multiply(e, f)) == syndrome(group8, e) ^ syndrome(group8, f)


@given(
    st.integers(0, 255), st.integers(0, 255),
    st.integers(0, 255), st.integers(0, 255),
)
def test_syndrome_homomorphism_property(group8, ex, ez, fx, fz):
    e = PauliOperator(8, ex, ez, 1)
    f = PauliOperator(8, fx, fz, 1)
    assert syndrome(group8, multiply(e, f)) == syndrome(group8, e) ^ syndrome(group8, f)


def test_syndrome_string_round_trip():
    s = Syndrome.from_string("01001")
    assert str(s) == "01001"
    assert str(Syndrome(0, 0)) == ""


def test_enumerate_small():
    group = validate(2, [parse("ZZ")])
    elems = {str(e) for e in enumerate_elements(group)}
    assert elems == {"+II", "+ZZ"}
    assert [str(e) for e in enumerate_elements(validate(2, []))] == ["+II"]


def test_enumerate_family(group8):
    elems = enumerate_elements(group8)
    assert len(elems) == 32
    assert len({(e.x_bits, e.z_bits, e.sign) for e in elems}) == 32
    # membership: every element has the zero syndrome
    assert all(syndrome(group8, e).value == 0 for e in elems)


def test_enumerate_guard():
    group = stabilizer.StabilizerGroup(30, tuple(single(30, i, "Z") for i in range(1, 26)))
    with pytest.raises(stabilizer.GroupTooLargeError):
        enumerate_elements(group)


def test_correctability_t1_passes(group8):
    report = check_correctability(group8, 1)
    assert report.ok
    assert report.total_errors == 25
    assert report.distinct_syndromes == 25


def test_correctability_t2_fails_with_witness(group8):
    report = check_correctability(group8, 2)
    assert not report.ok
    first, second = report.collision
    assert syndrome(group8, first) == syndrome(group8, second)
    assert first != second


def test_correctability_pigeonhole():
    group = validate(2, [parse("ZZ")])
    report = check_correctability(group, 1)
    assert not report.ok


def test_correctability_counting(group8):
    # a pass implies 2^a is at least the number of errors enumerated
    report = check_correctability(group8, 1)
    assert report.ok
    assert 2**group8.a >= report.total_errors


def test_iter_errors_order_and_count():
    errs = list(iter_errors(3, 1))
    assert [str(e) for e in errs[:4]] == ["+III", "+XII", "+YII", "+ZII"]
    assert len(errs) == 10
    assert len(list(iter_errors(3, 2))) == 1 + 9 + 27


def test_weight_one_fast_path_matches_syndrome(group8):
    sx, sy, sz = weight_one_syndromes(group8)
    for i in range(1, 9):
        assert int(sx[i - 1]) == syndrome(group8, single(8, i, "X")).value
        assert int(sy[i - 1]) == syndrome(group8, single(8, i, "Y")).value
        assert int(sz[i - 1]) == syndrome(group8, single(8, i, "Z")).value


def test_weight_one_fast_path_matches_syndrome_j4():
    from stabforge import family

    code = family.build_code(4)
    group = code.group()
    sx, sy, sz = weight_one_syndromes(group)
    rng = np.random.default_rng(7)
    for i in map(int, rng.integers(1, 17, size=12)):
        assert int(sx[i - 1]) == syndrome(group, single(16, i, "X")).value
        assert int(sy[i - 1]) == syndrome(group, single(16, i, "Y")).value
        assert int(sz[i - 1]) == syndrome(group, single(16, i, "Z")).value
