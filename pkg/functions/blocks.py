from functions.IMPORT import dataclass, logger, itertools
from functions.config import E2_TABLE, CASE_II_ROWS, CASE_IV_ROWS, EXCEPTIONAL_NAMES
from functions.errors import DomainError
from functions.laurent import LaurentPolynomial, V
from functions.fock import FockVector, e_divided, f_action, f_divided
from functions.partition_core import (Partition, abacus_display, display_congruent, partition_from_beta,
                                      partitions_with_core, core_weight_sign, is_e_core, is_e_regular,
                                      is_e_restricted, conjugate, mullineux, relative_sign,
                                      core_from_runner_counts)
from functions.canonical import canonical_basis_block, canonical_vector, expand_in_canonical
from functions.reports import PairReport, CaseCheck, E2TableReport, CaseTableReport


@dataclass(frozen=True)
class BlockId:
    e: int
    core: Partition
    weight: int

    def __post_init__(self):
        if self.weight < 0:
            raise DomainError(f"weight must be non-negative, got {self.weight}")
        if not is_e_core(self.core, self.e):
            raise DomainError(f"{self.core} is not a {self.e}-core")

    @property
    def size(self):
        return self.core.size + self.e * self.weight

    def key(self):
        return (self.e, self.core.parts, self.weight)

    def contains(self, lam):
        data = core_weight_sign(lam, self.e)
        return data.core == self.core and data.weight == self.weight

    def to_json(self):
        return {'e': self.e, 'core': self.core.to_json(), 'weight': self.weight}


@dataclass(frozen=True)
class PairDescriptor:
    """blockB's t-bead display has k more beads on runner i than on runner i-1; blockC swaps them."""
    block_b: BlockId
    block_c: BlockId
    runner: int
    bead_count: int
    k: int

    @property
    def e(self):
        return self.block_b.e

    @property
    def weight(self):
        return self.block_b.weight

    @property
    def residue(self):
        return (self.runner - self.bead_count) % self.e

    def to_json(self):
        return {'blockB': self.block_b.to_json(), 'blockC': self.block_c.to_json(), 'runner': self.runner,
                'beadCount': self.bead_count, 'k': self.k, 'residue': self.residue}


@dataclass(frozen=True)
class ExceptionalQuadruple:
    alpha: Partition
    beta: Partition
    gamma: Partition
    delta: Partition
    alpha_check: Partition | None = None

    def members(self):
        return (self.alpha, self.beta, self.gamma, self.delta)

    def named(self):
        return dict(zip(EXCEPTIONAL_NAMES, self.members()))


def enumerate_block(b):
    return partitions_with_core(b.e, b.core, b.weight)


def _swap_runners(occupied, e, i):
    out = set()
    for p in occupied:
        if p % e == i:
            out.add(p - 1)
        elif p % e == i - 1:
            out.add(p + 1)
        else:
            out.add(p)
    return out


def runner_swap(lam, e, t, i):
    """Interchange runners i-1 and i of lam's display with a bead count congruent to t."""
    display = display_congruent(lam, e, t)
    return partition_from_beta(sorted(_swap_runners(display.occupied, e, i), reverse=True))


def detect_pairs(b):
    """Every [w:k]-pair with b upstairs, one per residue, from displays with t0..t0+e-1 beads."""
    t0 = b.core.length + b.e
    found = {}
    for t in range(t0, t0 + b.e):
        counts = abacus_display(b.core, b.e, t).runner_counts()
        for i in range(1, b.e):
            k = counts[i] - counts[i - 1]
            if k <= 0:
                continue
            pair = PairDescriptor(b, BlockId(b.e, runner_swap(b.core, b.e, t, i), b.weight), i, t, k)
            found.setdefault(pair.residue, pair)
    pairs = [found[r] for r in sorted(found)]
    logger.debug("block {} has {} pairs", b.key(), len(pairs))
    return pairs


def is_scopes_pair(pair):
    return pair.k >= pair.weight


def is_rouquier(b):
    """Runner i left of runner j: j has at least w - 1 more beads than i, or i at least w more than j."""
    counts = abacus_display(b.core, b.e, b.core.length + b.e).runner_counts()
    w = b.weight
    return all(counts[j] - counts[i] >= w - 1 or counts[i] - counts[j] >= w
               for i, j in itertools.combinations(range(b.e), 2))


def pair_from_runner_counts(e, counts, runner, weight):
    """The pair at `runner` for the block whose core has the given bead counts per runner."""
    core = core_from_runner_counts(e, counts)
    block = BlockId(e, core, weight)
    residue = (runner - sum(counts)) % e
    for pair in detect_pairs(block):
        if pair.residue == residue:
            return pair
    raise DomainError(f"runner {runner} of {counts} does not give a pair")


def _window(pair):
    """(bead count, h) with h = beads on runner i-1 of the core display, shifted so h >= 1."""
    e, i, t = pair.e, pair.runner, pair.bead_count
    h = abacus_display(pair.block_b.core, e, t).runner_counts()[i - 1]
    if h < 1:
        t += e
        h += 1
    return t, h


def _pattern(pair, left_rows, right_rows, levels_full):
    """Core display off runners i-1, i; those two full below row 1 and filled at the given rows 1..4."""
    e, i = pair.e, pair.runner
    t, h = _window(pair)
    occupied = {p for p in abacus_display(pair.block_b.core, e, t).occupied if p % e not in (i - 1, i)}
    base = h - 2
    for level in range(levels_full):
        occupied.add(level * e + i - 1)
        occupied.add(level * e + i)
    for row in left_rows:
        occupied.add((base + row) * e + i - 1)
    for row in right_rows:
        occupied.add((base + row) * e + i)
    return partition_from_beta(sorted(occupied, reverse=True))


def exceptional_quadruple(pair):
    """Upstairs and downstairs exceptional partitions; the downstairs one carries alpha-check."""
    if pair.weight != 3 or pair.k != 2:
        raise DomainError(f"exceptional partitions need a [3:2]-pair, got [{pair.weight}:{pair.k}]")
    _, h = _window(pair)
    rows = (1, 2, 3, 4)
    upstairs = [_pattern(pair, (row,), tuple(x for x in rows if x != row), h - 1) for row in rows]
    downstairs = [_pattern(pair, tuple(x for x in rows if x != row), (row,), h - 1) for row in (4, 3, 2, 1)]
    alpha_check = _pattern(pair, rows, (), h - 1)
    return ExceptionalQuadruple(*upstairs), ExceptionalQuadruple(*downstairs, alpha_check=alpha_check)


def scopes_phi(lam, pair):
    if not pair.block_b.contains(lam):
        raise DomainError(f"{lam} is not in the block {pair.block_b.key()}")
    if pair.weight == 3 and pair.k == 2:
        up, down = exceptional_quadruple(pair)
        table = {up.alpha: down.alpha, up.beta: down.delta, up.gamma: down.gamma, up.delta: down.beta}
        if lam in table:
            if not is_e_regular(lam, pair.e):
                raise DomainError(f"the exceptional partition {lam} is not {pair.e}-regular")
            return table[lam]
    return runner_swap(lam, pair.e, pair.bead_count, pair.runner)


def movable_left(lam, pair):
    """Beads on runner i with a vacant position directly to their left on runner i-1."""
    e, i = pair.e, pair.runner
    display = display_congruent(lam, e, pair.bead_count)
    return sum(1 for p in display.occupied if p % e == i and (p - 1) not in display.occupied)


def conjugate_pair(pair):
    """The pair formed by the conjugate blocks."""
    upstairs = BlockId(pair.e, conjugate(pair.block_b.core), pair.weight)
    target = conjugate(pair.block_c.core)
    for candidate in detect_pairs(upstairs):
        if candidate.block_c.core == target:
            return candidate
    raise DomainError(f"no conjugate pair found for {pair.to_json()}")


def exceptional_parity_chain(pair):
    """sigma(alpha) = sigma(gamma) != sigma(beta) = sigma(delta), upstairs and downstairs."""
    out = True
    for quad in exceptional_quadruple(pair):
        a, b, c, d = (relative_sign(lam, pair.e) for lam in quad.members())
        out = out and a == c and b == d and a != b
    return out


def _e2_matrix(pair):
    up, down = exceptional_quadruple(pair)
    out = []
    for rho in up.members():
        image = e_divided(pair.residue, 2, FockVector.basis(rho), pair.e)
        out.append([image.coefficient(sigma) for sigma in down.members()])
    return out


def verify_e2_table(pair):
    """<e^(2) s(rho), s(sigma~)> over the two quadruples, against the printed table."""
    computed = _e2_matrix(pair)
    mismatches = []
    for a, name in enumerate(EXCEPTIONAL_NAMES):
        for b, tilde in enumerate(EXCEPTIONAL_NAMES):
            expected = LaurentPolynomial(E2_TABLE[a][b])
            if computed[a][b] != expected:
                mismatches.append(f"({name}, {tilde}~): computed {computed[a][b]}, expected {expected}")
    return E2TableReport(pair=pair.to_json(), table=[[str(c) for c in row] for row in computed],
                      mismatches=mismatches, passed=not mismatches)


def _alpha_column_vector(quad):
    return FockVector({lam: V.shift(k - 1) for k, lam in enumerate(quad.members())})


def verify_alpha_columns(pair):
    """G(alpha) and G(alpha~) are s(alpha) + v s(beta) + v^2 s(gamma) + v^3 s(delta)."""
    up, down = exceptional_quadruple(pair)
    return {
        'G(alpha)': canonical_vector(up.alpha, pair.e) == _alpha_column_vector(up),
        'G(alpha~)': canonical_vector(down.alpha, pair.e) == _alpha_column_vector(down),
    }


def verify_alpha_check(pair):
    """alpha-check has weight 0, and f G(alpha-check) is exactly G(alpha~)."""
    _, down = exceptional_quadruple(pair)
    check = down.alpha_check
    weight_zero = core_weight_sign(check, pair.e).weight == 0
    induced = f_action(pair.residue, canonical_vector(check, pair.e), pair.e)
    return {
        'alphaCheckWeight': weight_zero,
        'fG(alphaCheck)': expand_in_canonical(induced, pair.e) == {down.alpha: LaurentPolynomial.monomial(0)},
    }


def _exponents(values):
    return tuple(None if v.is_zero() else (v.min_degree() if v.is_monomial() and v.coefficient(v.min_degree()) == 1
                                           else 'x') for v in values)


def _case_tuple(lam, lam_tilde, up, down, matrix_b, matrix_c):
    return ([matrix_b.entry(mu, lam) for mu in up.members()] +
            [matrix_c.entry(mu, lam_tilde) for mu in down.members()])


def verify_case_tables(pair):
    """Two-zero and no-zero downstairs tuples against the admissible rows, with the f^(2) identity."""
    if pair.weight != 3 or pair.k != 2:
        raise DomainError(f"case tables need a [3:2]-pair, got [{pair.weight}:{pair.k}]")
    e = pair.e
    up, down = exceptional_quadruple(pair)
    matrix_b = canonical_basis_block(e, pair.block_b.core, 3)
    matrix_c = canonical_basis_block(e, pair.block_c.core, 3)
    checks = []
    for lam in matrix_b.cols:
        if lam in up.members():
            continue
        lam_tilde = scopes_phi(lam, pair)
        if lam_tilde not in matrix_c.cols:
            checks.append(CaseCheck(lambda_=lam.to_json(), tilde=lam_tilde.to_json(), case='unmatched',
                                    tuple_=[], passed=False))
            continue
        values = _case_tuple(lam, lam_tilde, up, down, matrix_b, matrix_c)
        zeros = sum(1 for v in values[4:] if v.is_zero())
        if zeros == 2:
            case, rows = 'II', CASE_II_ROWS
        elif zeros == 0:
            case, rows = 'IV', CASE_IV_ROWS
        else:
            continue
        exponents = _exponents(values)
        matched = next((idx + 1 for idx, row in enumerate(rows) if row == exponents), None)
        induction = None
        if case == 'II':
            induced = f_divided(pair.residue, 2, canonical_vector(lam_tilde, e), e)
            one = LaurentPolynomial.monomial(0)
            induction = expand_in_canonical(induced, e) == {lam: one, up.alpha: one}
        checks.append(CaseCheck(lambda_=lam.to_json(), tilde=lam_tilde.to_json(), case=case,
                                tuple_=[str(v) for v in values], matched_row=matched,
                                induction_holds=induction, passed=matched is not None and induction is not False))
    failed = [c for c in checks if not c.passed]
    for check in failed:
        logger.warning("case check failed for {}: {}", check.lambda_, check.tuple_)
    return CaseTableReport(pair=pair.to_json(), case_checks=checks, passed=not failed)


def verify_pair(pair):
    """All checks on one [3:2]-pair merged into one report."""
    e = pair.e
    up, down = exceptional_quadruple(pair)
    table = verify_e2_table(pair)
    cases = verify_case_tables(pair)
    checks = {}
    checks.update(verify_alpha_columns(pair))
    checks.update(verify_alpha_check(pair))
    checks['parityChain'] = exceptional_parity_chain(pair)
    checks['alphaRegular'] = is_e_regular(up.alpha, e) and is_e_regular(down.alpha, e)
    checks['deltaRestricted'] = is_e_restricted(up.delta, e) and is_e_restricted(down.delta, e)
    checks['alpha=m(delta\')'] = _mullineux_relation(up, e)
    checks['alpha~=m(delta~\')'] = _mullineux_relation(down, e)
    members = set(up.members())
    checks['twoMovableBeads'] = all(movable_left(lam, pair) == 2 for lam in enumerate_block(pair.block_b)
                                    if lam not in members)
    checks['conjugateQuadruple'] = _conjugate_relation(pair, up)
    passed = table.passed and cases.passed and all(checks.values())
    return PairReport(pair=pair.to_json(), table=table.table, mismatches=table.mismatches,
                      case_checks=cases.case_checks, checks=checks, passed=passed)


def _conjugate_relation(pair, up):
    other, _ = exceptional_quadruple(conjugate_pair(pair))
    return (other.alpha == conjugate(up.delta) and other.beta == conjugate(up.gamma)
            and other.gamma == conjugate(up.beta) and other.delta == conjugate(up.alpha))


def _mullineux_relation(quad, e):
    """alpha = m(delta'), which needs delta to be e-restricted."""
    if not is_e_restricted(quad.delta, e):
        return False
    return mullineux(conjugate(quad.delta), e) == quad.alpha
