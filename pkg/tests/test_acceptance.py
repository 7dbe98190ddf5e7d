"""The nine acceptance criteria, one test (and one printed PASS/FAIL line)
per criterion.  Uses the desk profile: full sample counts, ~1 minute total.
"""

import pytest

from chevlab import acceptance

CFG = acceptance.PROFILES["desk"]


def _check(index, fn):
    try:
        res = fn(CFG)
    except Exception as exc:
        print("criterion {} [{}]: FAIL ({!r})".format(
            index, fn.__name__.replace("criterion_", ""), exc))
        raise
    line = "criterion {} [{}]: {}".format(
        index, res["name"], "PASS" if res["passed"] else "FAIL")
    print(line)
    assert res["passed"], res["detail"]


def test_criterion_1_order_oracle():
    _check(1, acceptance.criterion_order_oracle)


def test_criterion_2_degree_oracle():
    _check(2, acceptance.criterion_degree_oracle)


def test_criterion_3_classification_oracle():
    _check(3, acceptance.criterion_classification_oracle)


def test_criterion_4_growth_suite():
    _check(4, acceptance.criterion_growth_suite)


def test_criterion_5_escape_envelope():
    _check(5, acceptance.criterion_escape_envelope)


def test_criterion_6_torus_certificates():
    _check(6, acceptance.criterion_torus_certificates)


def test_criterion_7_constants_suite():
    _check(7, acceptance.criterion_constants_suite)


def test_criterion_8_saturation_counting():
    _check(8, acceptance.criterion_saturation_counting)


def test_criterion_9_determinism():
    _check(9, acceptance.criterion_determinism)
