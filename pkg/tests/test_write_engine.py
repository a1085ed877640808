"""SLOAD/SSTORE charge classes and warm/cold accounting."""

import pytest

from gasledger.schedule import Fork
from gasledger.write_engine import (
    AccessSet,
    SlotState,
    SlotWrite,
    charge_sload,
    charge_sstore,
)

PRE, BER = Fork.PRE_BERLIN, Fork.BERLIN


def test_access_set_reports_first_touch_only():
    access = AccessSet()
    assert access.touch(5)
    assert not access.touch(5)
    assert access.touch(6)
    assert 5 in access and 6 in access and 7 not in access
    assert len(access) == 2


def test_flat_read_price_before_the_fork():
    access = AccessSet()
    assert charge_sload(1, access, PRE) == 800
    assert charge_sload(1, access, PRE) == 800


def test_cold_then_warm_read_price_after_the_fork():
    access = AccessSet()
    assert charge_sload(1, access, BER) == 2100
    assert charge_sload(1, access, BER) == 100
    assert charge_sload(2, access, BER) == 2100


def test_write_classes_before_the_fork():
    cases = [
        (SlotWrite.initialize(1), 20_000, 0),
        (SlotWrite.update(2), 5_000, 0),
        (SlotWrite.clear(3), 5_000, 15_000),
        (SlotWrite.noop(4), 800, 0),
        (SlotWrite.noop(5, SlotState.ZERO), 800, 0),
    ]
    for write, gas, refund in cases:
        receipt = charge_sstore(write, AccessSet(), PRE)
        assert (receipt.gas_charged, receipt.refund_accrued) == (gas, refund), write


def test_cold_write_classes_after_the_fork():
    cases = [
        (SlotWrite.initialize(1), 22_100, 0),
        (SlotWrite.update(2), 5_000, 0),
        (SlotWrite.clear(3), 5_000, 15_000),
        (SlotWrite.noop(4), 2_200, 0),
    ]
    for write, gas, refund in cases:
        receipt = charge_sstore(write, AccessSet(), BER)
        assert (receipt.gas_charged, receipt.refund_accrued) == (gas, refund), write


def test_warm_write_classes_after_the_fork():
    cases = [
        (SlotWrite.initialize(1), 20_000, 0),
        (SlotWrite.update(2), 2_900, 0),
        (SlotWrite.clear(3), 2_900, 15_000),
        (SlotWrite.noop(4), 100, 0),
    ]
    for write, gas, refund in cases:
        access = AccessSet()
        access.touch(write.slot)
        receipt = charge_sstore(write, access, BER)
        assert (receipt.gas_charged, receipt.refund_accrued) == (gas, refund), write


def test_write_marks_the_slot_warm():
    access = AccessSet()
    charge_sstore(SlotWrite.initialize(9), access, BER)
    assert charge_sload(9, access, BER) == 100


def test_clear_refund_is_accrued_not_netted():
    receipt = charge_sstore(SlotWrite.clear(1), AccessSet(), PRE)
    assert receipt.gas_charged == 5_000
    assert receipt.refund_accrued == 15_000


def test_same_value_write_cannot_change_state():
    with pytest.raises(ValueError):
        SlotWrite(1, SlotState.ZERO, SlotState.NONZERO, same_value=True)


def test_zero_to_zero_must_be_flagged_as_same_value():
    with pytest.raises(ValueError):
        SlotWrite(1, SlotState.ZERO, SlotState.ZERO, same_value=False)
    SlotWrite(1, SlotState.ZERO, SlotState.ZERO, same_value=True)


def test_constructor_shorthands_match_explicit_writes():
    assert SlotWrite.initialize(7) == SlotWrite(7, SlotState.ZERO, SlotState.NONZERO)
    assert SlotWrite.update(7) == SlotWrite(7, SlotState.NONZERO, SlotState.NONZERO)
    assert SlotWrite.clear(7) == SlotWrite(7, SlotState.NONZERO, SlotState.ZERO)
    assert SlotWrite.noop(7).same_value
