from functions.IMPORT import dataclass, threading, logger
from functions.config import MATRIX_FORMAT
from functions.errors import DomainError, CanonicalBasisError, NotInSpanError
from functions.laurent import (LaurentPolynomial, ZERO, ONE, symmetric_defect, exponent_parity, bar,
                               has_only_positive_exponents, has_nonnegative_coefficients, from_string,
                               PARITY_EVEN, PARITY_ODD)
from functions.fock import FockVector, f_divided, vacuum
from functions.partition_core import (Partition, is_e_regular, core_weight_sign, partitions_with_core,
                                      dominance_order, dominated_by, conjugate, mullineux, REFINEMENTS)
from functions.reports import ParityBlockReport, Violation
from functions.settings import get_setting


@dataclass(frozen=True)
class LadderSequence:
    steps: tuple

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)


@dataclass
class DecompositionMatrix:
    """d_{lambda mu}(v) for one block; rows are all partitions, columns the e-regular ones."""
    e: int
    core: Partition
    weight: int
    rows: list
    cols: list
    entries: dict

    def entry(self, lam, mu):
        return self.entries.get((lam, mu), ZERO)

    def column(self, mu):
        """G(mu) as a Fock space vector."""
        if mu not in self.cols:
            raise DomainError(f"{mu} is not a column of the e={self.e} block of {self.core}, weight {self.weight}")
        return FockVector({lam: c for (lam, col), c in self.entries.items() if col == mu})

    def nonzero_entries(self):
        """((lam, mu), d) in (row index, column index) order."""
        row_index = {lam: i for i, lam in enumerate(self.rows)}
        col_index = {mu: j for j, mu in enumerate(self.cols)}
        return sorted(self.entries.items(), key=lambda item: (row_index[item[0][0]], col_index[item[0][1]]))

    def to_json(self):
        row_index = {lam: i for i, lam in enumerate(self.rows)}
        col_index = {mu: j for j, mu in enumerate(self.cols)}
        return {
            'format': MATRIX_FORMAT,
            'e': self.e,
            'core': self.core.to_json(),
            'weight': self.weight,
            'rows': [lam.to_json() for lam in self.rows],
            'cols': [mu.to_json() for mu in self.cols],
            'entries': [[row_index[lam], col_index[mu], str(d)] for (lam, mu), d in self.nonzero_entries()],
        }

    @classmethod
    def from_json(cls, payload):
        rows = [Partition(tuple(parts)) for parts in payload['rows']]
        cols = [Partition(tuple(parts)) for parts in payload['cols']]
        entries = {(rows[i], cols[j]): from_string(text) for i, j, text in payload['entries']}
        return cls(payload['e'], Partition(tuple(payload['core'])), payload['weight'], rows, cols, entries)


def ladders(mu, e):
    """Nodes grouped by ladder i + (e-1)(j-1), ascending, with their common residue and count."""
    if not is_e_regular(mu, e):
        raise DomainError(f"{mu} is not {e}-regular")
    counts = {}
    for i, j in mu.nodes():
        ladder = i + (e - 1) * (j - 1)
        counts[ladder] = counts.get(ladder, 0) + 1
    steps = []
    for ladder in sorted(counts):
        # (j - i) mod e is constant along a ladder
        steps.append(((1 - ladder) % e, counts[ladder]))
    return LadderSequence(tuple(steps))


def ladder_vector(mu, e):
    """A(mu): the divided powers of the ladders applied to the vacuum, in ladder order."""
    x = vacuum()
    for r, m in ladders(mu, e):
        x = f_divided(r, m, x, e)
    if x.coefficient(mu) != ONE:
        raise CanonicalBasisError(f"A({mu}) has leading coefficient {x.coefficient(mu)} for e={e}")
    stray = [lam for lam in x.terms if lam != mu and not dominated_by(lam, mu)]
    if stray:
        raise CanonicalBasisError(f"A({mu}) for e={e} has terms not dominated by it: {stray[:3]}")
    return x


def _eliminate(mu, e, columns, order_key, max_iterations):
    x = ladder_vector(mu, e)
    for _ in range(max_iterations):
        offenders = [lam for lam, c in x.terms.items() if lam != mu and c.min_degree() <= 0]
        if not offenders:
            return x
        nu = max(offenders, key=order_key)
        if nu not in columns:
            raise CanonicalBasisError(
                f"coefficient {x.coefficient(nu)} of s({nu}) in G({mu}) needs a correction but {nu} "
                f"is not {e}-regular")
        correction = symmetric_defect(x.coefficient(nu))
        logger.debug("G({}) e={}: subtract ({}) G({})", mu, e, correction, nu)
        x = x - columns[nu].scale(correction)
    raise CanonicalBasisError(f"elimination for G({mu}), e={e} did not finish in {max_iterations} steps")


_BLOCK_CACHE = {}
_CACHE_LOCK = threading.Lock()


def compute_block(e, core, weight, refinement='lex'):
    rows = partitions_with_core(e, core, weight)
    cols = [mu for mu in rows if is_e_regular(mu, e)]
    order_key = REFINEMENTS[refinement]
    max_iterations = int(get_setting('max_iterations'))
    columns = {}
    for mu in dominance_order(cols, descending=False, refinement=refinement):
        columns[mu] = _eliminate(mu, e, columns, order_key, max_iterations)
    entries = {(lam, mu): c for mu, g in columns.items() for lam, c in g.terms.items()}
    logger.debug("computed block e={} core={} weight={}: {} rows, {} columns, {} entries",
                 e, core, weight, len(rows), len(cols), len(entries))
    return DecompositionMatrix(e, core, weight, rows, cols, entries)


def canonical_basis_block(e, core, weight, refinement='lex'):
    """Decomposition matrix of the block; the default refinement is memoized per (e, core, weight)."""
    if refinement != 'lex':
        return compute_block(e, core, weight, refinement)
    key = (e, core.parts, weight)
    with _CACHE_LOCK:
        cached = _BLOCK_CACHE.get(key)
    if cached is not None:
        return cached
    matrix = compute_block(e, core, weight)
    with _CACHE_LOCK:
        return _BLOCK_CACHE.setdefault(key, matrix)


def remember_block(matrix):
    with _CACHE_LOCK:
        return _BLOCK_CACHE.setdefault((matrix.e, matrix.core.parts, matrix.weight), matrix)


def clear_block_cache():
    with _CACHE_LOCK:
        _BLOCK_CACHE.clear()


def block_of(lam, e):
    data = core_weight_sign(lam, e)
    return canonical_basis_block(e, data.core, data.weight)


def canonical_vector(mu, e):
    """G(mu)."""
    if not is_e_regular(mu, e):
        raise DomainError(f"{mu} is not {e}-regular")
    return block_of(mu, e).column(mu)


def decomposition_entry(lam, mu, e):
    if not is_e_regular(mu, e):
        raise DomainError(f"{mu} is not {e}-regular")
    if lam.size != mu.size:
        return ZERO
    lam_data, mu_data = core_weight_sign(lam, e), core_weight_sign(mu, e)
    if lam_data.core != mu_data.core:
        return ZERO
    return canonical_basis_block(e, mu_data.core, mu_data.weight).entry(lam, mu)


def _peel_key(lam):
    return (lam.size, lam.parts)


def expand_in_canonical(x, e, max_iterations=None):
    """Coefficients a_rho with x = sum a_rho G(rho), peeling the largest support partition each time."""
    max_iterations = max_iterations or int(get_setting('max_iterations'))
    out = {}
    for _ in range(max_iterations):
        if x.is_zero():
            return {rho: out[rho] for rho in dominance_order(out) if not out[rho].is_zero()}
        rho = max(x.terms, key=_peel_key)
        if not is_e_regular(rho, e):
            raise NotInSpanError(f"leading partition {rho} of the vector is not {e}-regular")
        a = x.coefficient(rho)
        out[rho] = out.get(rho, ZERO) + a
        x = x - canonical_vector(rho, e).scale(a)
    raise NotInSpanError(f"expansion did not finish in {max_iterations} steps")


def induced_expansion(lam, r, k, e):
    """Expand f_r^(k) G(lam); returns (coefficients, partitions whose coefficient is not bar-invariant and positive)."""
    expansion = expand_in_canonical(f_divided(r, k, canonical_vector(lam, e), e), e)
    bad = [rho for rho, a in expansion.items() if bar(a) != a or not has_nonnegative_coefficients(a)]
    return expansion, bad


# --- verification -----------------------------------------------------------------------

def _violation(kind, detail, lam=None, mu=None, value=None):
    return Violation(kind=kind, detail=detail, row=lam.to_json() if lam is not None else None,
                     col=mu.to_json() if mu is not None else None,
                     value=str(value) if value is not None else None)


def verify_parity_block(e, core, weight):
    matrix = canonical_basis_block(e, core, weight)
    violations = []
    for (lam, mu), d in matrix.nonzero_entries():
        same = core_weight_sign(lam, e).sign == core_weight_sign(mu, e).sign
        expected = PARITY_EVEN if same else PARITY_ODD
        if exponent_parity(d) != expected:
            violations.append(_violation('parity', f"expected {expected} exponents", lam, mu, d))
    for item in violations:
        logger.warning("parity violation e={} core={}: {}", e, core, item.detail)
    return ParityBlockReport(e=e, core=core.to_json(), weight=weight, entries=len(matrix.entries),
                             violations=violations, passed=not violations)


def verify_triangularity(matrix):
    violations = []
    for mu in matrix.cols:
        if matrix.entry(mu, mu) != ONE:
            violations.append(_violation('diagonal', 'd_mu_mu is not 1', mu, mu, matrix.entry(mu, mu)))
    for (lam, mu), d in matrix.nonzero_entries():
        if lam == mu:
            continue
        if not dominated_by(lam, mu):
            violations.append(_violation('dominance', 'nonzero entry outside the dominance order', lam, mu, d))
        if not has_only_positive_exponents(d) or not has_nonnegative_coefficients(d):
            violations.append(_violation('positivity', 'off-diagonal entry not in vN[v]', lam, mu, d))
    return violations


def verify_refinement_independence(e, core, weight):
    first = canonical_basis_block(e, core, weight)
    second = canonical_basis_block(e, core, weight, refinement='conjugate')
    return first.entries == second.entries


def verify_mullineux_identity(mu, e):
    """The coefficient of s(m(mu)') in G(mu) is v^w."""
    target = conjugate(mullineux(mu, e))
    weight = core_weight_sign(mu, e).weight
    return decomposition_entry(target, mu, e) == LaurentPolynomial.monomial(weight)


def expected_weight3_entry(lam, mu, e):
    """The single monomial a nonzero weight-3 entry must be."""
    if lam == mu:
        return ONE
    if lam == conjugate(mullineux(mu, e)):
        return LaurentPolynomial.monomial(3)
    same = core_weight_sign(lam, e).sign == core_weight_sign(mu, e).sign
    return LaurentPolynomial.monomial(2 if same else 1)


def verify_monomials3(e, core):
    matrix = canonical_basis_block(e, core, 3)
    violations = []
    for (lam, mu), d in matrix.nonzero_entries():
        expected = expected_weight3_entry(lam, mu, e)
        if d != expected:
            violations.append(_violation('monomial', f"expected {expected}", lam, mu, d))
    return ParityBlockReport(e=e, core=core.to_json(), weight=3, entries=len(matrix.entries),
                             violations=violations, passed=not violations)
