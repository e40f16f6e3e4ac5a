from functions.IMPORT import dataclass, itertools
from functions.errors import DomainError, NoRemovableHookError
from functions.partition_core import beta_numbers, core_weight_sign
from functions.reports import ParityIdentityReport, HookMoveReport

# Vectors and permutations are 1-based in the formulas below; tuples store them 0-based.


@dataclass(frozen=True)
class ExtendedAffineElement:
    """T sigma in S_n x| Z^n; sigma[i - 1] is the image of i."""
    translation: tuple
    sigma: tuple

    def __post_init__(self):
        n = len(self.translation)
        if sorted(self.sigma) != list(range(1, n + 1)):
            raise DomainError(f"{self.sigma} is not a permutation of 1..{n}")

    @property
    def n(self):
        return len(self.translation)


@dataclass(frozen=True)
class PointDecomposition:
    a: tuple
    t: tuple
    c: tuple
    sigma_c: tuple


@dataclass(frozen=True)
class HookMove:
    a: tuple
    a_prime: tuple
    r: int
    s: int
    u: int


def inverse(sigma):
    out = [0] * len(sigma)
    for i, image in enumerate(sigma, start=1):
        out[image - 1] = i
    return tuple(out)


def inversions(seq):
    return sum(1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] > seq[j])


def brute_force_inversions(sigma):
    """Pairs i < j with sigma(i) > sigma(j)."""
    return inversions(sigma)


def length(elem):
    T = elem.translation
    sigma_inv = inverse(elem.sigma)
    total = 0
    for i, j in itertools.combinations(range(elem.n), 2):
        if sigma_inv[i] < sigma_inv[j]:
            total += abs(T[i] - T[j])
        else:
            total += abs(T[i] - T[j] - 1)
    return total


def hat(lam, n):
    if n < lam.length:
        raise DomainError(f"n = {n} is smaller than the length of {lam}")
    return tuple(reversed(beta_numbers(lam, n).betas))


def decompose_point(a, e):
    t = tuple(-((-x) // e) for x in a)
    c = tuple(x - e * ti for x, ti in zip(a, t))
    # sigma_c^{-1}(i) is the stable ascending rank of c_i
    order = sorted(range(len(c)), key=lambda i: (c[i], i))
    sigma_inv = [0] * len(c)
    for rank, i in enumerate(order, start=1):
        sigma_inv[i] = rank
    return PointDecomposition(tuple(a), t, c, inverse(tuple(sigma_inv)))


def minimal_representative(a, e):
    """(decomposition, length of w_a) for weakly increasing a."""
    a = tuple(a)
    if any(a[i] > a[i + 1] for i in range(len(a) - 1)):
        raise DomainError(f"{a} is not weakly increasing")
    point = decompose_point(a, e)
    t = point.t
    total = sum(t[j] - t[i] for i, j in itertools.combinations(range(len(a)), 2))
    return point, total + inversions(point.c)


def length_from_decomposition(point):
    """Length of t sigma_c by the general formula; agrees with minimal_representative."""
    return length(ExtendedAffineElement(point.t, point.sigma_c))


def hook_move(a, r, e):
    a = tuple(a)
    n = len(a)
    if any(a[i] >= a[i + 1] for i in range(n - 1)):
        raise DomainError(f"{a} is not strictly increasing")
    if not 1 <= r <= n:
        raise DomainError(f"index {r} is outside 1..{n}")
    x = a[r - 1] - e
    if x < 0 or x in a:
        raise NoRemovableHookError(f"no removable {e}-hook at bead {r} of {a}")
    s = 1 + sum(1 for y in a if y < x)
    a_prime = a[:s - 1] + (x,) + a[s - 1:r - 1] + a[r:]
    t = decompose_point(a, e).t
    u = 1 + next(k for k in range(n) if t[k] == t[r - 1])
    return HookMove(a, a_prime, r, s, u)


def removable_hook_moves(a, e):
    out = []
    for r in range(1, len(a) + 1):
        x = a[r - 1] - e
        if x >= 0 and x not in a:
            out.append(hook_move(a, r, e))
    return out


def hook_move_checks(move, e):
    """The length identity and its three ingredients, each as a boolean."""
    n, r, s, u = len(move.a), move.r, move.s, move.u
    before, length_a = minimal_representative(move.a, e)
    after, length_a_prime = minimal_representative(move.a_prime, e)
    t, c = before.t, before.c
    t_chain = all(t[k - 1] == t[r - 1] for k in range(u, r + 1))
    c_chain = all(c[k - 1] < c[k] for k in range(u, r))
    if s < u:
        t_chain = t_chain and all(t[k - 1] == t[r - 1] - 1 for k in range(s, u))
        c_chain = c_chain and c[r - 1] < c[s - 1] and all(c[k - 1] < c[k] for k in range(s, u - 1))
    expected_t = tuple(tk - (1 if k == u else 0) for k, tk in enumerate(t, start=1))
    return {
        'length': length_a == length_a_prime + 4 * u - n - 1 - r - s,
        'chain': t_chain and c_chain,
        'translation': after.t == expected_t,
        'inversions': inversions(c) - inversions(after.c) == 2 * u - (r + s),
    }, length_a, length_a_prime


def verify_hook_move_identity(lam, e, n):
    reports = []
    for move in removable_hook_moves(hat(lam, n), e):
        checks, length_a, length_a_prime = hook_move_checks(move, e)
        reports.append(HookMoveReport(lambda_=lam.to_json(), e=e, n=n, a=list(move.a), a_prime=list(move.a_prime),
                                      r=move.r, s=move.s, u=move.u, length=length_a,
                                      length_prime=length_a_prime, checks=checks, passed=all(checks.values())))
    return reports


def verify_parity_identity(lam, e, n):
    """(-1)^l(w_hat(lam)) against (-1)^(W(n-1) + l(w_hat(core))) sigma_e(lam)."""
    data = core_weight_sign(lam, e)
    _, length_lam = minimal_representative(hat(lam, n), e)
    _, length_core = minimal_representative(hat(data.core, n), e)
    lhs = -1 if length_lam % 2 else 1
    rhs = (-1 if (data.weight * (n - 1) + length_core) % 2 else 1) * data.sign
    return ParityIdentityReport(lambda_=lam.to_json(), e=e, n=n, lhs_parity=lhs, rhs_parity=rhs,
                                weight=data.weight, core_length=length_core, sign=data.sign, passed=lhs == rhs)
