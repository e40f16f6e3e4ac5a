from functions.IMPORT import dataclass, lru_cache, random
from functions.errors import DomainError
from functions.laurent import LaurentPolynomial, ZERO, ONE, exact_divide, quantum_factorial
from functions.laurent import from_json as laurent_from_json
from functions.partition_core import (Partition, EMPTY, beta_numbers, partition_from_beta, partitions_of,
                                      dominance_order)


class FockVector:
    """Finite combination of basis vectors s(lambda) with Laurent polynomial coefficients."""
    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        self._terms = {lam: c for lam, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def basis(cls, lam, coeff=ONE):
        return cls({lam: coeff})

    @classmethod
    def zero(cls):
        return cls()

    @property
    def terms(self):
        return dict(self._terms)

    def coefficient(self, lam):
        return self._terms.get(lam, ZERO)

    def support(self):
        return dominance_order(self._terms)

    def items(self):
        """Terms in the deterministic descending order."""
        return [(lam, self._terms[lam]) for lam in self.support()]

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other):
        out = dict(self._terms)
        for lam, c in other._terms.items():
            out[lam] = out.get(lam, ZERO) + c
        return FockVector(out)

    def __neg__(self):
        return FockVector({lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, poly):
        if isinstance(poly, int):
            poly = LaurentPolynomial.monomial(0, poly)
        return FockVector({lam: c * poly for lam, c in self._terms.items()})

    def max_length(self):
        return max((lam.length for lam in self._terms), default=0)

    def to_json(self):
        return [{'partition': lam.to_json(), 'coeff': c.to_json()} for lam, c in self.items()]

    @classmethod
    def from_json(cls, payload):
        return cls({Partition(tuple(item["partition"])): laurent_from_json(item["coeff"]) for item in payload})

    def __str__(self):
        if not self._terms:
            return '0'
        pieces = []
        for lam, c in self.items():
            pieces.append(f"s({lam})" if c == ONE else f"({c}) s({lam})")
        return ' + '.join(pieces)

    def __repr__(self):
        return f"FockVector({self})"


@dataclass(frozen=True)
class ResidueContext:
    e: int
    r: int
    t: int
    i: int


def residue_context(e, r, max_length, t=None):
    """Smallest legal bead count t >= max_length + 1 with e not dividing r + t, unless one is given."""
    if e < 2:
        raise DomainError(f"e must be at least 2, got {e}")
    if not 0 <= r < e:
        raise DomainError(f"residue {r} is outside 0..{e - 1}")
    if t is None:
        t = max_length + 1
        while (r + t) % e == 0:
            t += 1
    elif t <= max_length or (r + t) % e == 0:
        raise DomainError(f"bead count {t} is not a legal display for residue {r} mod {e}")
    return ResidueContext(e, r, t, (r + t) % e)


def _count_beyond(occupied, position, runner, e):
    return sum(1 for q in occupied if q > position and q % e == runner)


@lru_cache(maxsize=None)
def _f_moves(parts, e, r, t):
    """(mu, exponent of v) for each residue-r node that can be added to the partition."""
    ctx = residue_context(e, r, len(parts), t)
    occupied = frozenset(beta_numbers(Partition(parts), t).betas)
    out = []
    for p in sorted(occupied, reverse=True):
        if p % e != ctx.i - 1 or (p + 1) in occupied:
            continue
        exponent = _count_beyond(occupied, p, ctx.i - 1, e) - _count_beyond(occupied, p + 1, ctx.i, e)
        moved = (occupied - {p}) | {p + 1}
        out.append((partition_from_beta(sorted(moved, reverse=True)), exponent))
    return tuple(out)


@lru_cache(maxsize=None)
def _e_moves(parts, e, r, t):
    """(lambda, exponent of v) for each residue-r node that can be removed from the partition."""
    ctx = residue_context(e, r, len(parts), t)
    occupied = frozenset(beta_numbers(Partition(parts), t).betas)
    out = []
    for p in sorted(occupied, reverse=True):
        if p % e != ctx.i or (p - 1) in occupied:
            continue
        n_less = _count_beyond(occupied, p, ctx.i, e) - _count_beyond(occupied, p - 1, ctx.i - 1, e)
        moved = (occupied - {p}) | {p - 1}
        out.append((partition_from_beta(sorted(moved, reverse=True)), -n_less))
    return tuple(out)


def _act(moves, r, x, e, t):
    ctx = residue_context(e, r, x.max_length(), t)
    out = {}
    for lam, c in x.terms.items():
        for mu, exponent in moves(lam.parts, e, r, ctx.t):
            out[mu] = out.get(mu, ZERO) + c.shift(exponent)
    return FockVector(out)


def f_action(r, x, e, t=None):
    """Add a residue-r node in every possible way, weighted by v^N with N counted on the t-bead display."""
    return _act(_f_moves, r, x, e, t)


def e_action(r, x, e, t=None):
    """Remove a residue-r node in every possible way; adjoint to f_action under inner_product."""
    return _act(_e_moves, r, x, e, t)


def _divide(x, k):
    if k <= 1:
        return x
    denominator = quantum_factorial(k)
    return FockVector({lam: exact_divide(c, denominator) for lam, c in x.terms.items()})


def f_divided(r, k, x, e):
    if k < 0:
        raise DomainError(f"divided power needs k >= 0, got {k}")
    for _ in range(k):
        x = f_action(r, x, e)
    return _divide(x, k)


def e_divided(r, k, x, e):
    if k < 0:
        raise DomainError(f"divided power needs k >= 0, got {k}")
    for _ in range(k):
        x = e_action(r, x, e)
    return _divide(x, k)


def inner_product(x, y):
    out = ZERO
    small, large = (x, y) if len(x) <= len(y) else (y, x)
    for lam, c in small.terms.items():
        other = large.coefficient(lam)
        if other:
            out = out + c * other
    return out


def vacuum():
    return FockVector.basis(EMPTY)


def random_vector(rng, n, terms=3, span=2, coeff=3):
    """Sparse random vector supported on partitions of n."""
    pool = partitions_of(n)
    chosen = rng.sample(pool, min(terms, len(pool)))
    out = {}
    for lam in chosen:
        poly = LaurentPolynomial({rng.randint(-span, span): rng.randint(-coeff, coeff)
                                  for _ in range(rng.randint(1, 2))})
        out[lam] = poly if poly else ONE
    return FockVector(out)


def make_rng(seed):
    return random.Random(seed)
