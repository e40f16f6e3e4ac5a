from functions.IMPORT import re, lru_cache
from functions.errors import DomainError, DivisibilityError

PARITY_ZERO = 'zero'
PARITY_EVEN = 'even'
PARITY_ODD = 'odd'
PARITY_MIXED = 'mixed'

_TERM = re.compile(r'^(-?)(\d*)(v(?:\^(-?\d+))?)?$')


class LaurentPolynomial:
    """
    Integer Laurent polynomial in v, stored as {exponent: coefficient} with no zero coefficients.
    Values are immutable; every operation returns a new polynomial.
    """
    __slots__ = ('_coeffs', '_hash')

    def __init__(self, coeffs=None):
        clean = {}
        for exp, c in (coeffs or {}).items():
            c = int(c)
            if c:
                clean[int(exp)] = c
        self._coeffs = clean
        self._hash = None

    @classmethod
    def monomial(cls, exp=0, coeff=1):
        return cls({exp: coeff})

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def terms(self):
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._coeffs.items())

    def coefficient(self, exp):
        return self._coeffs.get(exp, 0)

    def is_zero(self):
        return not self._coeffs

    def min_degree(self):
        return min(self._coeffs) if self._coeffs else None

    def max_degree(self):
        return max(self._coeffs) if self._coeffs else None

    def is_monomial(self):
        return len(self._coeffs) == 1

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.monomial(0, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._coeffs)
        for exp, c in other._coeffs.items():
            out[exp] = out.get(exp, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({exp: -c for exp, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by v^k."""
        return LaurentPolynomial({exp + k: c for exp, c in self._coeffs.items()})

    def __repr__(self):
        return f"LaurentPolynomial('{self}')"

    def __str__(self):
        return to_string(self)

    def to_json(self):
        return [[exp, c] for exp, c in self.terms()]


def _coerce(value):
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, int):
        return LaurentPolynomial.monomial(0, value)
    raise TypeError(f"cannot combine LaurentPolynomial with {type(value).__name__}")


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial.monomial(0)
V = LaurentPolynomial.monomial(1)


def add(p, q):
    return p + q


def mul(p, q):
    return p * q


def negate(p):
    return -p


def bar(p):
    return LaurentPolynomial({-exp: c for exp, c in p.coeffs.items()})


def is_bar_invariant(p):
    return bar(p) == p


@lru_cache(maxsize=None)
def quantum_integer(k):
    if k < 0:
        raise DomainError(f"quantum integer needs k >= 0, got {k}")
    return LaurentPolynomial({k - 1 - 2 * j: 1 for j in range(k)})


@lru_cache(maxsize=None)
def quantum_factorial(k):
    if k < 0:
        raise DomainError(f"quantum factorial needs k >= 0, got {k}")
    out = ONE
    for j in range(2, k + 1):
        out = out * quantum_integer(j)
    return out


def exact_divide(p, q):
    """Long division from the top exponent down; any remainder is a DivisibilityError."""
    if q.is_zero():
        raise DivisibilityError("division by the zero polynomial")
    q_top, q_low = q.max_degree(), q.min_degree()
    lead = q.coefficient(q_top)
    rem = p.coeffs
    quotient = {}
    while rem:
        top, low = max(rem), min(rem)
        if top - low < q_top - q_low:
            raise DivisibilityError(f"{p} is not divisible by {q}")
        c = rem[top]
        if c % lead:
            raise DivisibilityError(f"{p} is not divisible by {q}: coefficient {c} at v^{top}")
        step = c // lead
        shift = top - q_top
        quotient[shift] = quotient.get(shift, 0) + step
        for exp, qc in q.coeffs.items():
            key = exp + shift
            value = rem.get(key, 0) - step * qc
            if value:
                rem[key] = value
            else:
                rem.pop(key, None)
    return LaurentPolynomial(quotient)


def symmetric_defect(p):
    """The bar-invariant part to subtract so that only strictly positive exponents remain."""
    out = {0: p.coefficient(0)}
    for exp, c in p.coeffs.items():
        if exp < 0:
            out[exp] = out.get(exp, 0) + c
            out[-exp] = out.get(-exp, 0) + c
    return LaurentPolynomial(out)


def eval_at_one(p):
    return sum(p.coeffs.values())


def exponent_parity(p):
    if p.is_zero():
        return PARITY_ZERO
    parities = {exp % 2 for exp in p.coeffs}
    if parities == {0}:
        return PARITY_EVEN
    if parities == {1}:
        return PARITY_ODD
    return PARITY_MIXED


def has_only_positive_exponents(p):
    return all(exp > 0 for exp in p.coeffs)


def has_nonnegative_coefficients(p):
    return all(c >= 0 for c in p.coeffs.values())


def _term_string(exp, c):
    if exp == 0:
        return str(c)
    var = 'v' if exp == 1 else f'v^{exp}'
    return var if c == 1 else f'{c}{var}'


def to_string(p):
    """Canonical text form, e.g. 'v^-2 + 2 + v^2', '1 - v', '0'."""
    terms = p.terms()
    if not terms:
        return '0'
    out = ''
    for idx, (exp, c) in enumerate(terms):
        if idx == 0:
            out = ('-' if c < 0 else '') + _term_string(exp, abs(c))
        else:
            out += (' - ' if c < 0 else ' + ') + _term_string(exp, abs(c))
    return out


def from_string(text):
    text = text.strip()
    if text == '0':
        return ZERO
    coeffs = {}
    for raw in text.replace(' - ', ' + -').split(' + '):
        match = _TERM.match(raw.strip())
        if not match or not (match.group(2) or match.group(3)):
            raise DomainError(f"malformed Laurent term '{raw}' in '{text}'")
        sign, digits, var, exp = match.groups()
        c = int(digits) if digits else 1
        c = -c if sign else c
        k = 0 if not var else (int(exp) if exp is not None else 1)
        coeffs[k] = coeffs.get(k, 0) + c
    return LaurentPolynomial(coeffs)


def from_json(pairs):
    return LaurentPolynomial({exp: c for exp, c in pairs})
