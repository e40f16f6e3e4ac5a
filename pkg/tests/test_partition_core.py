import pytest

from functions.errors import DomainError, PartitionSyntaxError, SizeMismatchError
from functions.partition_core import (Partition, EMPTY, beta_numbers, partition_from_beta, abacus_display,
                                      core_weight_sign, is_e_core, conjugate, is_e_regular, is_e_restricted,
                                      dominance_leq, dominance_order, removable_e_hooks, addable_nodes,
                                      removable_nodes, residue_content, partitions_of, partitions_up_to,
                                      partitions_with_core, e_quotient_runners, core_from_runner_counts,
                                      mullineux, mullineux_symbol, partition_from_symbol, DOMINANCE_LEQ,
                                      DOMINANCE_INCOMPARABLE, DOMINANCE_GREATER)


def P(*parts):
    return Partition(parts)


def test_partition_text():
    assert Partition.from_text('4,2,1') == P(4, 2, 1)
    assert Partition.from_text('-') == EMPTY
    assert str(P(4, 2, 1)) == '4,2,1'
    assert str(EMPTY) == '-'
    assert P(3, 1, 0, 0) == P(3, 1)
    with pytest.raises(PartitionSyntaxError):
        Partition.from_text('a,b')
    with pytest.raises(PartitionSyntaxError):
        Partition.from_text('1,2')
    with pytest.raises(DomainError):
        P(2, -1)


def test_beta_numbers():
    assert beta_numbers(P(3, 1), 3).betas == (5, 2, 0)
    assert beta_numbers(EMPTY, 2).betas == (1, 0)
    assert beta_numbers(P(2), 1).betas == (2,)
    assert partition_from_beta((5, 2, 0)) == P(3, 1)
    assert partition_from_beta((1, 0)) == EMPTY
    assert partition_from_beta((2,)) == P(2)
    with pytest.raises(DomainError):
        beta_numbers(P(2, 1), 1)
    with pytest.raises(DomainError):
        partition_from_beta((0, 2))


@pytest.mark.parametrize('lam, e, core, weight, sign', [
    (P(2), 2, EMPTY, 1, 1),
    (P(3), 3, EMPTY, 1, 1),
    (P(5), 5, EMPTY, 1, 1),
    (P(1, 1), 2, EMPTY, 1, -1),
    (P(2, 1), 2, P(2, 1), 0, 1),
    (P(2, 2), 2, EMPTY, 2, 1),
    (EMPTY, 2, EMPTY, 0, 1),
])
def test_core_weight_sign(lam, e, core, weight, sign):
    data = core_weight_sign(lam, e)
    assert (data.core, data.weight, data.sign) == (core, weight, sign)


def test_core_weight_sign_ignores_bead_count():
    for lam in partitions_up_to(7):
        for e in (2, 3, 4):
            expected = core_weight_sign(lam, e)
            for t in range(lam.length, lam.length + 2 * e + 1):
                assert core_weight_sign(lam, e, t) == expected


def test_size_is_core_plus_hooks():
    for lam in partitions_up_to(8):
        for e in (2, 3, 5):
            data = core_weight_sign(lam, e)
            assert lam.size == data.core.size + e * data.weight
            assert is_e_core(data.core, e)


def test_modulus_must_be_at_least_two():
    with pytest.raises(DomainError):
        core_weight_sign(P(1), 1)
    with pytest.raises(DomainError):
        abacus_display(P(1), 0)


def test_conjugate():
    assert conjugate(P(3, 1)) == P(2, 1, 1)
    assert conjugate(EMPTY) == EMPTY
    assert conjugate(P(2, 2)) == P(2, 2)
    for lam in partitions_up_to(7):
        assert conjugate(conjugate(lam)) == lam


def test_regular_and_restricted():
    assert not is_e_regular(P(1, 1), 2)
    assert is_e_regular(P(2, 1), 2)
    assert not is_e_regular(P(3, 3, 3), 3)
    assert is_e_regular(P(3, 3), 3)
    assert is_e_restricted(P(1, 1), 2)
    assert not is_e_restricted(P(2), 2)


def test_dominance():
    assert dominance_leq(P(1, 1), P(2)) == DOMINANCE_LEQ
    assert dominance_leq(P(2), P(2)) == DOMINANCE_LEQ
    assert dominance_leq(P(2), P(1, 1)) == DOMINANCE_GREATER
    assert dominance_leq(P(3, 1, 1, 1), P(2, 2, 2)) == DOMINANCE_INCOMPARABLE
    with pytest.raises(SizeMismatchError):
        dominance_leq(P(2), P(1))


def test_dominance_order_refines_dominance():
    for refinement in ('lex', 'conjugate'):
        ordered = dominance_order(partitions_of(7), refinement=refinement)
        for i, lam in enumerate(ordered):
            for mu in ordered[i + 1:]:
                assert dominance_leq(lam, mu) != DOMINANCE_LEQ


def test_removable_hooks():
    assert [(h.result, h.leg_length) for h in removable_e_hooks(P(2), 2)] == [(EMPTY, 0)]
    assert removable_e_hooks(P(2, 1), 2) == []
    assert [(h.result, h.leg_length) for h in removable_e_hooks(P(2, 2), 2)] == [(P(1, 1), 1), (P(2), 0)]


def test_residues():
    assert addable_nodes(P(1), 1, 2) == [(1, 2), (2, 1)]
    assert addable_nodes(P(1), 0, 2) == []
    assert removable_nodes(P(2, 1), 1, 2) == [(1, 2), (2, 1)]
    assert residue_content(P(2, 1), 2) == (1, 2)


def test_partition_generation():
    assert partitions_of(4) == [P(4), P(3, 1), P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)]
    assert partitions_of(0) == [EMPTY]
    assert len(partitions_of(10)) == 42
    assert len(partitions_up_to(3)) == 1 + 1 + 2 + 3


def test_quotient_runners():
    assert e_quotient_runners(P(2), 2, 2) == [[0], [1]]


def test_block_generation():
    assert partitions_with_core(2, EMPTY, 1) == [P(2), P(1, 1)]
    assert partitions_with_core(3, P(2), 0) == [P(2)]
    with pytest.raises(DomainError):
        partitions_with_core(2, P(2), 1)


@pytest.mark.parametrize('e, core, weight', [
    (2, EMPTY, 3),
    (2, P(2, 1), 2),
    (3, P(1), 2),
    (3, P(2, 1, 1), 1),
    (4, EMPTY, 2),
])
def test_block_generation_matches_filter(e, core, weight):
    n = core.size + e * weight
    expected = [lam for lam in partitions_of(n) if core_weight_sign(lam, e).core == core]
    assert partitions_with_core(e, core, weight) == expected


def test_weight_three_block_size():
    assert len(partitions_with_core(5, EMPTY, 3)) == 65


def test_core_from_runner_counts():
    assert core_from_runner_counts(5, (0, 2, 0, 0, 0)) == P(5, 1)
    assert core_from_runner_counts(5, (0, 0, 2, 0, 0)) == P(6, 2)
    assert core_from_runner_counts(3, (1, 1, 1)) == EMPTY
    with pytest.raises(DomainError):
        core_from_runner_counts(3, (1, 1))


@pytest.mark.parametrize('lam, e, image', [
    (P(2), 3, P(1, 1)),
    (P(3), 3, P(2, 1)),
    (P(3, 1), 2, P(3, 1)),
    (P(3), 5, P(1, 1, 1)),
    (EMPTY, 4, EMPTY),
])
def test_mullineux_examples(lam, e, image):
    assert mullineux(lam, e) == image


@pytest.mark.parametrize('e', [2, 3, 4, 5])
def test_mullineux_is_an_involution(e):
    for lam in partitions_up_to(14):
        if is_e_regular(lam, e):
            image = mullineux(lam, e)
            assert image.size == lam.size
            assert is_e_regular(image, e)
            assert mullineux(image, e) == lam


def test_mullineux_is_conjugation_for_large_e():
    for lam in partitions_up_to(6):
        assert mullineux(lam, 7) == conjugate(lam)


def test_mullineux_symbol_rebuilds_partition():
    lam = P(5, 3, 3, 1)
    assert partition_from_symbol(mullineux_symbol(lam, 3), 3) == lam


def test_mullineux_rejects_singular():
    with pytest.raises(DomainError):
        mullineux(P(1, 1), 2)


def hook_chain_ends(lam, e, memo):
    """Every (core, sign) reached by some maximal chain of e-hook removals."""
    if lam not in memo:
        hooks = removable_e_hooks(lam, e)
        if not hooks:
            memo[lam] = {(lam, 1)}
        else:
            memo[lam] = {(core, sign * (-1) ** hook.leg_length)
                         for hook in hooks for core, sign in hook_chain_ends(hook.result, e, memo)}
    return memo[lam]


@pytest.mark.parametrize('e', [2, 3, 4, 5])
def test_sign_is_independent_of_the_removal_chain(e):
    memo = {}
    for lam in partitions_up_to(16):
        data = core_weight_sign(lam, e)
        assert hook_chain_ends(lam, e, memo) == {(data.core, data.sign)}


@pytest.mark.parametrize('e', [2, 3, 4, 5])
def test_conjugation_and_core_data(e):
    for lam in partitions_up_to(16):
        data = core_weight_sign(lam, e)
        other = core_weight_sign(conjugate(lam), e)
        assert other.core == conjugate(data.core)
        assert other.weight == data.weight
        assert other.sign == (-1) ** ((e - 1) * data.weight) * data.sign


@pytest.mark.parametrize('e', [2, 3, 4, 5])
def test_beta_numbers_round_trip(e):
    for lam in partitions_up_to(16):
        for s in range(lam.length, lam.length + 2 * e + 1):
            beta = beta_numbers(lam, s)
            assert len(beta.betas) == s
            assert partition_from_beta(beta) == lam


@pytest.mark.parametrize('e', [2, 3, 4, 5])
def test_regularity_matches_repeated_parts(e):
    for lam in partitions_up_to(14):
        repeated = any(lam.parts.count(p) >= e for p in set(lam.parts))
        assert is_e_regular(lam, e) == (not repeated)
        assert is_e_restricted(lam, e) == all(lam.part(i) - lam.part(i + 1) < e for i in range(1, lam.length + 1))
