from functions.IMPORT import Parallel, delayed, tqdm, logger
from functions.config import ADJOINT_SAMPLES
from functions.partition_core import partitions_up_to, core_weight_sign, is_e_regular, mullineux, conjugate
from functions.fock import f_action, e_action, inner_product, random_vector, make_rng
from functions.canonical import (canonical_basis_block, verify_parity_block, verify_triangularity,
                                 verify_refinement_independence, verify_mullineux_identity, verify_monomials3)
from functions.weyl import verify_parity_identity, verify_hook_move_identity
from functions.blocks import BlockId, detect_pairs, verify_pair
from functions.reports import SweepReport, MullineuxReport
from functions.settings import get_threads, get_setting


def blocks_up_to(e, max_n):
    """Every (core, weight) of e whose partitions have size at most max_n, sorted by key."""
    found = set()
    for lam in partitions_up_to(max_n):
        data = core_weight_sign(lam, e)
        found.add((data.core, data.weight))
    return sorted(found, key=lambda item: (item[0].size + e * item[1], item[0].parts, item[1]))


def _fan_out(func, jobs, label, progress=None):
    """Run func over jobs on the worker pool; results keep the order of jobs."""
    threads = get_threads()
    iterable = tqdm(jobs, desc=label, disable=not _progress(progress), leave=False)
    if threads <= 1:
        return [func(*job) for job in iterable]
    return Parallel(n_jobs=threads, prefer='threads')(delayed(func)(*job) for job in iterable)


def _report(suite, es, bounds, checked, violations):
    if violations:
        logger.warning("{}: {} violations", suite, len(violations))
    else:
        logger.info("{}: {} checks passed", suite, checked)
    return SweepReport(suite=suite, e=list(es), bounds=bounds, checked=checked, violations=violations,
                       passed=not violations)


def _parity_job(e, core, weight):
    report = verify_parity_block(e, core, weight)
    matrix = canonical_basis_block(e, core, weight)
    out = [dict(v.to_json(), e=e, core=core.to_json(), weight=weight) for v in report.violations]
    out += [dict(v.to_json(), e=e, core=core.to_json(), weight=weight) for v in verify_triangularity(matrix)]
    return len(matrix.entries), out


def parity_suite(es, max_n, progress=None):
    """The parity theorem and triangularity over every block with partitions of size <= max_n."""
    jobs = [(e, core, weight) for e in es for core, weight in blocks_up_to(e, max_n)]
    results = _fan_out(_parity_job, jobs, 'parity', progress)
    checked = sum(count for count, _ in results)
    violations = [v for _, found in results for v in found]
    return _report('parity', es, {'maxN': max_n}, checked, violations)


def _refinement_job(e, core, weight):
    if verify_refinement_independence(e, core, weight):
        return []
    return [{'kind': 'refinement', 'e': e, 'core': core.to_json(), 'weight': weight}]


def triangular_suite(es, max_n, progress=None):
    """Triangularity plus identical matrices under two linear extensions of dominance."""
    jobs = [(e, core, weight) for e in es for core, weight in blocks_up_to(e, max_n)]
    violations = []
    for e, core, weight in jobs:
        violations += [dict(v.to_json(), e=e, core=core.to_json(), weight=weight)
                       for v in verify_triangularity(canonical_basis_block(e, core, weight))]
    for found in _fan_out(_refinement_job, jobs, 'refinement', progress):
        violations += found
    return _report('triangular', es, {'maxN': max_n}, len(jobs), violations)


def identity_suite(es, max_n, progress=None):
    """The length parity identity for n in {l, l+1, l+e}."""
    checked = 0
    violations = []
    for e in es:
        for lam in tqdm(partitions_up_to(max_n), desc=f'identity e={e}', disable=not _progress(progress),
                        leave=False):
            for n in sorted({lam.length, lam.length + 1, lam.length + e}):
                report = verify_parity_identity(lam, e, n)
                checked += 1
                if not report.passed:
                    violations.append(report.to_json())
    return _report('identity', es, {'maxN': max_n}, checked, violations)


def weyl_suite(es, max_n, progress=None):
    """The hook-move length identity with its sub-checks, over every removable hook."""
    checked = 0
    violations = []
    for e in es:
        for lam in tqdm(partitions_up_to(max_n), desc=f'weyl e={e}', disable=not _progress(progress), leave=False):
            for n in sorted({lam.length, lam.length + 1}):
                for report in verify_hook_move_identity(lam, e, n):
                    checked += 1
                    if not report.passed:
                        violations.append(report.to_json())
    return _report('weyl', es, {'maxN': max_n}, checked, violations)


def mullineux_checks(lam, e):
    image = mullineux(lam, e)
    data = core_weight_sign(lam, e)
    image_data = core_weight_sign(image, e)
    sign_factor = -1 if (e * data.weight) % 2 else 1
    checks = {
        'involution': mullineux(image, e) == lam,
        'regular': is_e_regular(image, e),
        'weight': image_data.weight == data.weight,
        'core': image_data.core == conjugate(data.core),
        'sign': image_data.sign == sign_factor * data.sign,
        'decomposition': verify_mullineux_identity(lam, e),
    }
    return MullineuxReport(lambda_=lam.to_json(), e=e, image=image.to_json(), weight=data.weight, checks=checks,
                           passed=all(checks.values()))


def mullineux_suite(es, max_n, progress=None):
    checked = 0
    violations = []
    for e in es:
        for lam in tqdm(partitions_up_to(max_n), desc=f'mullineux e={e}', disable=not _progress(progress),
                        leave=False):
            if not is_e_regular(lam, e):
                continue
            report = mullineux_checks(lam, e)
            checked += 1
            if not report.passed:
                violations.append(report.to_json())
    return _report('mullineux', es, {'maxN': max_n}, checked, violations)


def adjoint_suite(es, samples=ADJOINT_SAMPLES, seed=0, max_n=6):
    """Adjointness of e_r and f_r and invariance under t -> t + e on random sparse vectors."""
    rng = make_rng(seed)
    violations = []
    for index in range(samples):
        e = es[index % len(es)]
        r = rng.randrange(e)
        n = rng.randint(0, max_n)
        x = random_vector(rng, n)
        y = random_vector(rng, n + 1)
        if inner_product(f_action(r, x, e), y) != inner_product(x, e_action(r, y, e)):
            violations.append({'kind': 'adjoint', 'e': e, 'r': r, 'x': x.to_json(), 'y': y.to_json()})
        t = max_n + 2
        while (r + t) % e == 0:
            t += 1
        if f_action(r, x, e, t) != f_action(r, x, e, t + e) or e_action(r, y, e, t) != e_action(r, y, e, t + e):
            violations.append({'kind': 'display', 'e': e, 'r': r, 't': t})
    return _report('adjoint', es, {'samples': samples, 'seed': seed, 'maxN': max_n}, samples, violations)


def monomials3_suite(e, cores):
    checked = 0
    violations = []
    for core in cores:
        report = verify_monomials3(e, core)
        checked += report.entries
        violations += [dict(v.to_json(), core=core.to_json()) for v in report.violations]
    return _report('monomials3', [e], {'cores': [c.to_json() for c in cores]}, checked, violations)


def pair_suite(e, core, weight=3, k=2):
    """verify_pair on every [weight:k]-pair with the block of `core` upstairs."""
    block = BlockId(e, core, weight)
    pairs = [pair for pair in detect_pairs(block) if pair.k == k]
    reports = [verify_pair(pair) for pair in pairs]
    violations = [report.to_json() for report in reports if not report.passed]
    return _report('pair', [e], {'core': core.to_json(), 'w': weight, 'k': k}, len(reports), violations), reports


def _progress(progress):
    return get_setting('progress') if progress is None else progress

