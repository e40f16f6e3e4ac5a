import pytest

from functions.config import ENV_THREADS
from functions.partition_core import Partition, EMPTY
from functions.sweeps import (blocks_up_to, parity_suite, triangular_suite, identity_suite, weyl_suite,
                              mullineux_checks, mullineux_suite, adjoint_suite, monomials3_suite, pair_suite)


def test_blocks_up_to():
    blocks = blocks_up_to(2, 3)
    assert blocks[0] == (EMPTY, 0)
    assert (EMPTY, 1) in blocks
    assert (Partition((2, 1)), 0) in blocks
    assert (Partition((1,)), 1) in blocks
    assert len(blocks) == 5


def test_parity_suite_small():
    report = parity_suite([2, 3], 6)
    assert report.passed, report.violations
    assert report.checked > 0
    assert report.to_json()['bounds'] == {'maxN': 6}


def test_parity_suite_with_threads(monkeypatch):
    monkeypatch.setenv(ENV_THREADS, '2')
    assert parity_suite([3], 6).passed


def test_other_suites_small():
    assert triangular_suite([2, 3], 6).passed
    assert identity_suite([2, 3, 5], 5).passed
    assert weyl_suite([2, 3], 5).passed
    assert mullineux_suite([2, 3], 6).passed
    report = adjoint_suite([2, 3, 4], samples=30, seed=1)
    assert report.passed
    assert report.checked == 30


def test_mullineux_checks_report():
    report = mullineux_checks(Partition((2,)), 3)
    assert report.image == [1, 1]
    assert report.passed
    assert set(report.checks) == {'involution', 'regular', 'weight', 'core', 'sign', 'decomposition'}


@pytest.mark.slow
def test_parity_acceptance():
    assert parity_suite([2, 3, 4, 5], 12).passed


@pytest.mark.slow
def test_identity_and_weyl_acceptance():
    assert identity_suite([2, 3, 5], 10).passed
    assert weyl_suite([2, 3, 5], 10).passed


@pytest.mark.slow
def test_adjoint_acceptance():
    report = adjoint_suite([2, 3, 4, 5], seed=0)
    assert report.passed, report.violations[:3]
    assert report.checked == 1000
    assert report.to_json()['bounds']['samples'] == 1000


@pytest.mark.slow
def test_monomials3_and_pair_acceptance():
    assert monomials3_suite(5, [EMPTY, Partition((1,)), Partition((2,))]).passed
    report, pairs = pair_suite(5, Partition((5, 1)))
    assert report.passed
    assert report.checked == len(pairs) == 1
    report, pairs = pair_suite(5, Partition((6, 2)))
    assert report.passed
    assert report.checked == len(pairs) == 1
    assert pairs[0].pair['residue'] == 0
