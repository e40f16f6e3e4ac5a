from functions.IMPORT import dataclass, lru_cache, logger, itertools
from functions.errors import DomainError, PartitionSyntaxError, SizeMismatchError, MullineuxError

DOMINANCE_LEQ = 'less-or-equal'
DOMINANCE_GREATER = 'greater'
DOMINANCE_INCOMPARABLE = 'incomparable'


@dataclass(frozen=True, order=True)
class Partition:
    """
    A weakly decreasing tuple of positive integers. Trailing zeros are dropped on construction.
    The dataclass order is lexicographic on parts, which is a linear extension of dominance.
    """
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise DomainError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def from_text(cls, text):
        """Parse '4,2,1'; '-' (or an empty string) is the empty partition."""
        text = (text or '').strip()
        if text in ('', '-', '[]'):
            return cls(())
        try:
            parts = tuple(int(piece) for piece in text.strip('[]').split(','))
        except ValueError:
            raise PartitionSyntaxError(f"cannot read a partition from '{text}'")
        try:
            return cls(parts)
        except DomainError as exc:
            raise PartitionSyntaxError(str(exc))

    @property
    def size(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def part(self, i):
        """1-based part access, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def nodes(self):
        return [(i + 1, j + 1) for i, row in enumerate(self.parts) for j in range(row)]

    def contains_node(self, i, j):
        return i >= 1 and j >= 1 and self.part(i) >= j

    def to_json(self):
        return list(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return ','.join(str(p) for p in self.parts) if self.parts else '-'

    def __repr__(self):
        return f"Partition({self.parts!r})"


EMPTY = Partition(())


@dataclass(frozen=True)
class BetaSequence:
    betas: tuple
    bead_count: int


@dataclass(frozen=True)
class AbacusDisplay:
    e: int
    bead_count: int
    occupied: frozenset

    def runner(self, position):
        return position % self.e

    def runner_levels(self, runner):
        return sorted(p // self.e for p in self.occupied if p % self.e == runner)

    def runner_counts(self):
        counts = [0] * self.e
        for p in self.occupied:
            counts[p % self.e] += 1
        return counts

    def partition(self):
        return partition_from_beta(sorted(self.occupied, reverse=True))

    def shifted(self):
        """The same partition displayed with e more beads."""
        return AbacusDisplay(self.e, self.bead_count + self.e,
                             frozenset({p + self.e for p in self.occupied} | set(range(self.e))))


@dataclass(frozen=True)
class CoreData:
    core: Partition
    weight: int
    sign: int


@dataclass(frozen=True)
class HookRemoval:
    result: Partition
    leg_length: int


def _check_modulus(e):
    if int(e) < 2:
        raise DomainError(f"e must be at least 2, got {e}")


def beta_numbers(lam, s):
    if s < lam.length:
        raise DomainError(f"bead count {s} is smaller than the length {lam.length} of {lam}")
    return BetaSequence(tuple(lam.part(i) + s - i for i in range(1, s + 1)), s)


def partition_from_beta(beta):
    betas = tuple(beta.betas if isinstance(beta, BetaSequence) else beta)
    if any(b < 0 for b in betas):
        raise DomainError(f"beta numbers must be non-negative: {betas}")
    if any(betas[i] <= betas[i + 1] for i in range(len(betas) - 1)):
        raise DomainError(f"beta numbers must be strictly decreasing: {betas}")
    s = len(betas)
    return Partition(tuple(b - s + i for i, b in enumerate(betas, start=1)))


def abacus_display(lam, e, t=None):
    _check_modulus(e)
    t = lam.length if t is None else t
    return AbacusDisplay(e, t, frozenset(beta_numbers(lam, t).betas))


def display_congruent(lam, e, t):
    """Display lam with the least bead count >= l(lam) congruent to t mod e."""
    while t < lam.length:
        t += e
    return abacus_display(lam, e, t)


def _slide_up(occupied, e):
    """Slide beads up their runners one step at a time; returns (core, steps, beads jumped)."""
    occupied = set(occupied)
    weight = 0
    jumped = 0
    for p in sorted(occupied):
        while p - e >= 0 and (p - e) not in occupied:
            jumped += sum(1 for q in range(p - e + 1, p) if q in occupied)
            occupied.discard(p)
            occupied.add(p - e)
            p -= e
            weight += 1
    return partition_from_beta(sorted(occupied, reverse=True)), weight, jumped


@lru_cache(maxsize=None)
def _core_weight_sign(parts, e, t):
    core, weight, jumped = _slide_up(beta_numbers(Partition(parts), t).betas, e)
    return CoreData(core, weight, -1 if jumped % 2 else 1)


def core_weight_sign(lam, e, t=None):
    """e-core, e-weight and relative sign; the bead count t of the display does not matter."""
    _check_modulus(e)
    return _core_weight_sign(lam.parts, e, lam.length if t is None else t)


def relative_sign(lam, e):
    return core_weight_sign(lam, e).sign


def is_e_core(lam, e):
    return core_weight_sign(lam, e).weight == 0


def conjugate(lam):
    if not lam.parts:
        return EMPTY
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


def is_e_regular(lam, e):
    _check_modulus(e)
    parts = lam.parts
    return not any(parts[i] == parts[i + e - 1] for i in range(len(parts) - e + 1))


def is_e_restricted(lam, e):
    return is_e_regular(conjugate(lam), e)


def _prefix_sums(lam, length):
    out, total = [], 0
    for i in range(1, length + 1):
        total += lam.part(i)
        out.append(total)
    return out


def dominance_leq(lam, mu):
    if lam.size != mu.size:
        raise SizeMismatchError(f"cannot compare {lam} and {mu}: sizes {lam.size} and {mu.size}")
    length = max(lam.length, mu.length)
    pairs = list(zip(_prefix_sums(lam, length), _prefix_sums(mu, length)))
    if all(a <= b for a, b in pairs):
        return DOMINANCE_LEQ
    if all(a >= b for a, b in pairs):
        return DOMINANCE_GREATER
    return DOMINANCE_INCOMPARABLE


def dominated_by(lam, mu):
    """lam is dominated by mu (partitions of different size never are)."""
    return lam.size == mu.size and dominance_leq(lam, mu) == DOMINANCE_LEQ


def lex_key(lam):
    return lam.parts


def conjugate_lex_key(lam):
    """A second linear extension of dominance: reverse lexicographic order on conjugates."""
    return tuple(-p for p in conjugate(lam).parts)


REFINEMENTS = {
    'lex': lex_key,
    'conjugate': conjugate_lex_key,
}


def dominance_order(partitions, descending=True, refinement='lex'):
    """Sort along a deterministic linear extension of dominance."""
    return sorted(partitions, key=REFINEMENTS[refinement], reverse=descending)


def removable_e_hooks(lam, e):
    """One entry per bead whose position minus e is vacant, beads taken from the first row down."""
    _check_modulus(e)
    display = abacus_display(lam, e)
    occupied = display.occupied
    out = []
    for p in sorted(occupied, reverse=True):
        target = p - e
        if target < 0 or target in occupied:
            continue
        leg = sum(1 for q in range(target + 1, p) if q in occupied)
        moved = (occupied - {p}) | {target}
        out.append(HookRemoval(partition_from_beta(sorted(moved, reverse=True)), leg))
    return out


def residue(i, j, e):
    return (j - i) % e


def addable_nodes(lam, r, e):
    out = []
    for i in range(1, lam.length + 2):
        j = lam.part(i) + 1
        if (i == 1 or lam.part(i - 1) >= j) and residue(i, j, e) == r:
            out.append((i, j))
    return out


def removable_nodes(lam, r, e):
    out = []
    for i in range(1, lam.length + 1):
        j = lam.part(i)
        if lam.part(i + 1) < j and residue(i, j, e) == r:
            out.append((i, j))
    return out


def residue_content(lam, e):
    content = [0] * e
    for i, j in lam.nodes():
        content[residue(i, j, e)] += 1
    return tuple(content)


# --- partition generation ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _partitions(n, max_part):
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(max_part, n), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition((first,) + rest.parts))
    return tuple(out)


def partitions_of(n, max_part=None):
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        return []
    return list(_partitions(n, n if max_part is None else max_part))


def partitions_up_to(max_n):
    return [lam for n in range(max_n + 1) for lam in partitions_of(n)]


def e_quotient_runners(lam, e, t):
    """Bead levels per runner of the t-bead display."""
    display = abacus_display(lam, e, t)
    return [display.runner_levels(k) for k in range(e)]


def partitions_with_core(e, core, weight):
    """
    Every partition with the given e-core and e-weight, generated from the core's display by
    pushing the top beads of each runner down by the parts of a partition on that runner.
    """
    _check_modulus(e)
    if weight < 0:
        raise DomainError(f"weight must be non-negative, got {weight}")
    if not is_e_core(core, e):
        raise DomainError(f"{core} is not a {e}-core")
    t = core.length + e * weight
    runners = e_quotient_runners(core, e, t)
    found = set()
    for split in itertools.product(range(weight + 1), repeat=e):
        if sum(split) != weight:
            continue
        for quotient in itertools.product(*(partitions_of(w_k) for w_k in split)):
            occupied = []
            for k, q in enumerate(quotient):
                levels = sorted(runners[k], reverse=True)
                for j, level in enumerate(levels):
                    occupied.append((level + q.part(j + 1)) * e + k)
            found.add(partition_from_beta(sorted(occupied, reverse=True)))
    out = dominance_order(found)
    logger.debug("block e={} core={} weight={} has {} partitions", e, core, weight, len(out))
    return out


def core_from_runner_counts(e, counts):
    """The e-core whose display has counts[k] beads on runner k."""
    _check_modulus(e)
    if len(counts) != e or any(c < 0 for c in counts):
        raise DomainError(f"need {e} non-negative runner counts, got {counts}")
    occupied = [level * e + k for k, c in enumerate(counts) for level in range(c)]
    return partition_from_beta(sorted(occupied, reverse=True))


# --- Mullineux map ----------------------------------------------------------------------

def rim_path(lam):
    """Rim nodes from the end of the first row to the start of the last row."""
    if not lam.parts:
        return []
    i, j = 1, lam.parts[0]
    path = [(i, j)]
    while (i, j) != (lam.length, 1):
        if lam.contains_node(i + 1, j):
            i += 1
        else:
            j -= 1
        path.append((i, j))
    return path


def e_rim(lam, e):
    """Take e rim nodes, then restart in the row below the last node taken, until the last row."""
    path = rim_path(lam)
    rim = []
    start = 0
    while start < len(path):
        segment = path[start:start + e]
        rim.extend(segment)
        next_row = segment[-1][0] + 1
        if next_row > lam.length:
            break
        start = next((idx for idx in range(start + len(segment), len(path))
                      if path[idx][0] == next_row), len(path))
    return rim


def strip_e_rim(lam, e):
    rim = set(e_rim(lam, e))
    parts = [sum(1 for j in range(1, lam.part(i) + 1) if (i, j) not in rim)
             for i in range(1, lam.length + 1)]
    return Partition(tuple(parts)), len(rim)


def mullineux_symbol(lam, e):
    """Columns (rim size, rows) from repeatedly stripping the e-rim."""
    columns = []
    current = lam
    while current.parts:
        rows = current.length
        current, size = strip_e_rim(current, e)
        columns.append((size, rows))
    return columns


def _candidates(mu, rows, size, e):
    """Partitions with exactly `rows` rows containing mu, with `size` extra nodes, row gains at most e."""
    out = []

    def extend(i, prefix, budget):
        if i > rows:
            if budget == 0:
                out.append(Partition(tuple(prefix)))
            return
        low = max(mu.part(i), 1)
        high = mu.part(i) + e
        if i > 1:
            high = min(high, prefix[-1], mu.part(i - 1) + 1)
        for value in range(low, high + 1):
            gain = value - mu.part(i)
            if gain > budget:
                break
            extend(i + 1, prefix + [value], budget - gain)

    extend(1, [], size)
    return out


def partition_from_symbol(columns, e):
    """Rebuild the e-regular partition with the given symbol, innermost column first."""
    mu = EMPTY
    for size, rows in reversed(columns):
        matches = []
        for lam in _candidates(mu, rows, size, e):
            if not is_e_regular(lam, e):
                continue
            stripped, removed = strip_e_rim(lam, e)
            if stripped == mu and removed == size:
                matches.append(lam)
        if len(matches) != 1:
            raise MullineuxError(
                f"symbol column ({size}, {rows}) over {mu} matched {len(matches)} partitions for e={e}")
        mu = matches[0]
    return mu


@lru_cache(maxsize=None)
def _mullineux(parts, e):
    lam = Partition(parts)
    image = []
    for size, rows in mullineux_symbol(lam, e):
        image.append((size, size - rows + (1 if size % e else 0)))
    return partition_from_symbol(image, e)


def mullineux(lam, e):
    _check_modulus(e)
    if not is_e_regular(lam, e):
        raise DomainError(f"{lam} is not {e}-regular")
    return _mullineux(lam.parts, e)
