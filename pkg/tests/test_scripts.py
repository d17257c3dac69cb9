import pytest

from swapinsert import (
    Delete,
    EqualSymbolSwap,
    Insert,
    InvalidPosition,
    Script,
    Swap,
    apply_script,
    verify_script,
)


def test_single_swap():
    assert apply_script("ba", Script((Swap(1),))) == "ab"


def test_inserts_build_from_empty():
    script = Script((Insert(1, "a"), Insert(2, "b")))
    assert apply_script("", script) == "ab"


def test_swap_then_insert():
    script = Script((Swap(1), Insert(1, "a")))
    assert apply_script("ba", script) == "aab"


def test_delete_op():
    assert apply_script("aab", Script((Delete(1),))) == "ab"


def test_bytes_round_trip():
    script = Script((Swap(1),))
    assert apply_script(b"ba", script) == b"ab"


def test_insert_position_bounds():
    with pytest.raises(InvalidPosition) as err:
        apply_script("ab", Script((Insert(4, "x"),)))
    assert err.value.op_index == 0


def test_swap_position_bounds():
    with pytest.raises(InvalidPosition):
        apply_script("ab", Script((Swap(2),)))
    with pytest.raises(InvalidPosition):
        apply_script("ab", Script((Swap(0),)))


def test_delete_position_bounds():
    with pytest.raises(InvalidPosition):
        apply_script("ab", Script((Delete(3),)))


def test_equal_symbol_swap_rejected():
    with pytest.raises(EqualSymbolSwap) as err:
        apply_script("aa", Script((Swap(1),)))
    assert err.value.position == 1


def test_error_carries_failing_op_index():
    script = Script((Insert(1, "a"), Swap(5)))
    with pytest.raises(InvalidPosition) as err:
        apply_script("ab", script)
    assert err.value.op_index == 1


def test_script_counters():
    script = Script((Insert(1, "a"), Swap(1), Insert(1, "b"), Delete(2)))
    assert script.total_cost == len(script) == 4
    assert script.insert_count == 2
    assert script.swap_count == 1
    assert script.delete_count == 1


# -- verification -----------------------------------------------------------

def test_verify_valid_swap():
    verdict = verify_script("ba", "ab", Script((Swap(1),)))
    assert verdict.valid
    assert verdict.cost == 1
    assert verdict.swap_count == 1
    assert verdict.insert_count == 0


def test_verify_empty_script_wrong_target():
    verdict = verify_script("ba", "ab", Script(()))
    assert not verdict.valid
    assert verdict.reason == "result does not match target"


def test_verify_non_minimal_but_valid():
    # reaches the target with two redundant swaps; validity is not minimality
    verdict = verify_script("ab", "ab", Script((Swap(1), Swap(1))))
    assert verdict.valid
    assert verdict.cost == 2


def test_verify_flags_equal_symbol_swap():
    verdict = verify_script("aa", "aa", Script((Swap(1),)))
    assert not verdict.valid
    assert "equal symbols" in verdict.reason


def test_verify_flags_bad_position():
    verdict = verify_script("ab", "ab", Script((Swap(9),)))
    assert not verdict.valid
    assert "op 0" in verdict.reason
