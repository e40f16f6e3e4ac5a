from functions.IMPORT import (os, json, time, wraps, Annotated, Optional, List, typer, Console, Table, logger,
                              load_dotenv)
from functions.config import OUTPUT_FORMATS, CONSOLE_WIDTH, EXIT_FAILED, EXIT_USAGE, ADJOINT_SAMPLES
from functions.errors import FockCalcError, DomainError, CacheFormatError
from functions.partition_core import Partition, core_weight_sign, conjugate
from functions.canonical import decomposition_entry, induced_expansion
from functions.blocks import BlockId, enumerate_block, detect_pairs, is_scopes_pair, is_rouquier
from functions.matrix_store import cached_block, matrix_text, list_matrices, clear_matrices
from functions.reports import CoreReport, DecompositionEntryReport, CommandReport
from functions.settings import load_settings, update_setting, get_setting
from functions.log import configure_logging
from functions import sweeps

app = typer.Typer(add_completion=False, no_args_is_help=True,
                  help="Fock space canonical bases, v-decomposition numbers and [w:k]-pairs.")
verify_app = typer.Typer(no_args_is_help=True, help="Run a verification suite.")
cache_app = typer.Typer(no_args_is_help=True, help="Inspect the decomposition matrix cache.")
settings_app = typer.Typer(no_args_is_help=True, help="Show or change persistent settings.")
app.add_typer(verify_app, name='verify')
app.add_typer(cache_app, name='cache')
app.add_typer(settings_app, name='settings')

LambdaOpt = Annotated[str, typer.Option('--lambda', help="Partition such as 4,2,1; '-' is empty.")]
EOpt = Annotated[int, typer.Option('--e', help="The modulus e >= 2.")]
ListOpt = Annotated[str, typer.Option('--e', help="Comma separated values of e.")]
MaxNOpt = Annotated[int, typer.Option('--max-n', help="Largest partition size swept.")]
CoreOpt = Annotated[str, typer.Option('--core', help="An e-core such as 2,1; '-' is empty.")]
WeightOpt = Annotated[int, typer.Option('--weight', help="Block weight.")]
FormatOpt = Annotated[Optional[str], typer.Option('--format', help="json or text; defaults to the setting.")]
TimingOpt = Annotated[bool, typer.Option('--timing', help="Add elapsedMs to the report.")]


@app.callback()
def main(log_level: Annotated[Optional[str], typer.Option('--log-level', help="loguru level for stderr.")] = None):
    load_dotenv()
    configure_logging(log_level)


def handle_errors(func):
    """Domain and cache errors exit 2, other library errors exit 1, each with a message on stderr."""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (DomainError, CacheFormatError) as exc:
            typer.echo(f"error: {exc}", err=True)
            raise typer.Exit(EXIT_USAGE)
        except FockCalcError as exc:
            logger.error("{}: {}", type(exc).__name__, exc)
            typer.echo(f"error: {exc}", err=True)
            raise typer.Exit(EXIT_FAILED)
    return wrapper


def _format(fmt):
    fmt = (fmt or get_setting('format') or 'text').lower()
    if fmt not in OUTPUT_FORMATS:
        raise DomainError(f"unknown format '{fmt}', expected one of {', '.join(OUTPUT_FORMATS)}")
    return fmt


def _partition(text):
    return Partition.from_text(text)


def _int_list(text):
    try:
        values = [int(piece) for piece in text.split(',') if piece.strip()]
    except ValueError:
        raise DomainError(f"cannot read a list of integers from '{text}'")
    if not values:
        raise DomainError("the list of e is empty")
    return values


def _console():
    return Console(width=CONSOLE_WIDTH, highlight=False, soft_wrap=False)


def _scalar_lines(mapping):
    console = _console()
    for key, value in mapping.items():
        console.print(f"{key}: {value}", markup=False)


def _violation_table(violations, limit=20):
    table = Table(title="violations", show_lines=False)
    table.add_column("#", justify="right")
    table.add_column("detail")
    for index, item in enumerate(violations[:limit], start=1):
        table.add_row(str(index), json.dumps(item, sort_keys=True))
    return table


def emit(command, inputs, result, fmt, started=None, passed=None, render=None):
    """Print a CommandReport as JSON, or the text rendering of its result; exit 1 when passed is False."""
    elapsed = round((time.perf_counter() - started) * 1000, 3) if started is not None else None
    if fmt == 'json':
        report = CommandReport(command=command, inputs=inputs, result=result, passed=passed, elapsed_ms=elapsed)
        typer.echo(json.dumps(report.to_json(), indent=2))
    else:
        if render is not None:
            render()
        elif isinstance(result, dict):
            _scalar_lines(result)
        else:
            _console().print(str(result), markup=False)
        if elapsed is not None:
            _console().print(f"elapsed: {elapsed} ms", markup=False)
    if passed is False:
        raise typer.Exit(EXIT_FAILED)


def _start(timing):
    return time.perf_counter() if timing else None


def _progress_for(fmt):
    return False if fmt == 'json' else None


# --- partition commands ------------------------------------------------------------------

@app.command()
@handle_errors
def core(lam: LambdaOpt, e: EOpt, fmt: FormatOpt = None, timing: TimingOpt = False):
    """e-core, e-weight and relative sign of a partition."""
    fmt, started = _format(fmt), _start(timing)
    lam = _partition(lam)
    data = core_weight_sign(lam, e)
    report = CoreReport(lambda_=lam.to_json(), e=e, core=data.core.to_json(), weight=data.weight, sign=data.sign)
    result = report.to_json() if fmt == 'json' else {'core': str(data.core), 'weight': data.weight, 'sign': data.sign}
    emit('core', {'lambda': lam.to_json(), 'e': e}, result, fmt, started)


@app.command()
@handle_errors
def sign(lam: LambdaOpt, e: EOpt, fmt: FormatOpt = None, timing: TimingOpt = False):
    """The relative sign sigma_e(lambda)."""
    fmt, started = _format(fmt), _start(timing)
    lam = _partition(lam)
    emit('sign', {'lambda': lam.to_json(), 'e': e}, core_weight_sign(lam, e).sign, fmt, started)


@app.command('mullineux')
@handle_errors
def mullineux_command(lam: LambdaOpt, e: EOpt, fmt: FormatOpt = None, timing: TimingOpt = False):
    """The Mullineux image of an e-regular partition."""
    fmt, started = _format(fmt), _start(timing)
    lam = _partition(lam)
    report = sweeps.mullineux_checks(lam, e)
    if fmt == 'json':
        emit('mullineux', {'lambda': lam.to_json(), 'e': e}, report.to_json(), fmt, started, report.passed)
    else:
        emit('mullineux', {}, {'image': str(Partition(tuple(report.image))), 'weight': report.weight,
                               'checks': ', '.join(k for k, ok in report.checks.items() if ok)},
             fmt, started, report.passed)


@app.command('conjugate')
@handle_errors
def conjugate_command(lam: LambdaOpt, fmt: FormatOpt = None, timing: TimingOpt = False):
    fmt, started = _format(fmt), _start(timing)
    lam = _partition(lam)
    image = conjugate(lam)
    emit('conjugate', {'lambda': lam.to_json()}, image.to_json() if fmt == 'json' else str(image), fmt, started)


# --- matrices ------------------------------------------------------------------------------

def _matrix_table(matrix):
    table = Table(title=f"e={matrix.e} core={matrix.core} weight={matrix.weight}")
    table.add_column("lambda \\ mu")
    for mu in matrix.cols:
        table.add_column(str(mu), justify="center")
    for lam in matrix.rows:
        cells = [str(matrix.entry(lam, mu)) if not matrix.entry(lam, mu).is_zero() else '.' for mu in matrix.cols]
        table.add_row(str(lam), *cells)
    return table


@app.command()
@handle_errors
def decomp(e: EOpt, core: CoreOpt, weight: WeightOpt,
           out: Annotated[Optional[str], typer.Option('--out', help="Write the v1 matrix file here.")] = None,
           no_cache: Annotated[bool, typer.Option('--no-cache', help="Skip the on-disk cache.")] = False,
           fmt: FormatOpt = None, timing: TimingOpt = False):
    """The v-decomposition matrix of one block."""
    fmt, started = _format(fmt), _start(timing)
    block = BlockId(e, _partition(core), weight)
    matrix = cached_block(block.e, block.core, block.weight, use_cache=not no_cache)
    if out:
        os.makedirs(os.path.dirname(os.path.abspath(out)), exist_ok=True)
        with open(out, 'w') as f:
            f.write(matrix_text(matrix))
        logger.info("wrote {}", out)
    if fmt == 'json':
        typer.echo(matrix_text(matrix), nl=False)
        return
    _console().print(_matrix_table(matrix))
    if started is not None:
        _console().print(f"elapsed: {round((time.perf_counter() - started) * 1000, 3)} ms", markup=False)


@app.command()
@handle_errors
def entry(e: EOpt, lam: LambdaOpt,
          mu: Annotated[str, typer.Option('--mu', help="An e-regular partition.")],
          fmt: FormatOpt = None, timing: TimingOpt = False):
    """A single d_{lambda mu}(v)."""
    fmt, started = _format(fmt), _start(timing)
    lam, mu = _partition(lam), _partition(mu)
    value = decomposition_entry(lam, mu, e)
    report = DecompositionEntryReport(lambda_=lam.to_json(), mu=mu.to_json(), e=e, value=str(value))
    emit('entry', {'lambda': lam.to_json(), 'mu': mu.to_json(), 'e': e},
         report.to_json() if fmt == 'json' else report.value, fmt, started)


@app.command()
@handle_errors
def expand(e: EOpt, lam: LambdaOpt,
           r: Annotated[int, typer.Option('--r', help="Residue of the induced nodes.")],
           k: Annotated[int, typer.Option('--k', help="Divided power.")] = 1,
           fmt: FormatOpt = None, timing: TimingOpt = False):
    """Expand f_r^(k) G(lambda) in the canonical basis."""
    fmt, started = _format(fmt), _start(timing)
    lam = _partition(lam)
    expansion, bad = induced_expansion(lam, r, k, e)
    result = {'terms': [[rho.to_json(), str(a)] for rho, a in expansion.items()],
              'notBarInvariant': [rho.to_json() for rho in bad]}

    def render():
        table = Table(title=f"f_{r}^({k}) G({lam}), e={e}")
        table.add_column("rho")
        table.add_column("coefficient", justify="right")
        for rho, a in expansion.items():
            table.add_row(str(rho), str(a))
        _console().print(table)

    emit('expand', {'lambda': lam.to_json(), 'e': e, 'r': r, 'k': k}, result, fmt, started, not bad, render)


@app.command()
@handle_errors
def block(e: EOpt, core: CoreOpt, weight: WeightOpt, fmt: FormatOpt = None, timing: TimingOpt = False):
    """List a block's partitions and the pairs it heads."""
    fmt, started = _format(fmt), _start(timing)
    b = BlockId(e, _partition(core), weight)
    members = enumerate_block(b)
    pairs = detect_pairs(b)
    result = {'block': b.to_json(), 'size': b.size, 'rouquier': is_rouquier(b),
              'partitions': [lam.to_json() for lam in members],
              'pairs': [dict(pair.to_json(), scopes=is_scopes_pair(pair)) for pair in pairs]}

    def render():
        console = _console()
        console.print(f"e={e} core={b.core} weight={weight}: {len(members)} partitions, "
                      f"rouquier={result['rouquier']}", markup=False)
        console.print(' '.join(str(lam) for lam in members), markup=False)
        table = Table(title="pairs")
        for name in ("residue", "runner", "beads", "k", "blockC core", "scopes"):
            table.add_column(name)
        for pair in pairs:
            table.add_row(str(pair.residue), str(pair.runner), str(pair.bead_count), str(pair.k),
                          str(pair.block_c.core), str(is_scopes_pair(pair)))
        console.print(table)

    emit('block', b.to_json(), result, fmt, started, render=render)


# --- verification ------------------------------------------------------------------------

def _emit_sweep(report, fmt, started, extra=None):
    def render():
        console = _console()
        status = 'pass' if report.passed else 'FAIL'
        console.print(f"{report.suite}: {status}, {report.checked} checked, {len(report.violations)} violations",
                      markup=False)
        if extra is not None:
            extra(console)
        if report.violations:
            console.print(_violation_table(report.violations))

    emit(f"verify {report.suite}", {'e': report.e, **report.bounds}, report.to_json(), fmt, started,
         report.passed, render)


@verify_app.command('parity')
@handle_errors
def verify_parity(e: ListOpt = '2,3,4,5', max_n: MaxNOpt = 12, fmt: FormatOpt = None, timing: TimingOpt = False):
    """Parity of every v-decomposition number against the relative signs."""
    fmt, started = _format(fmt), _start(timing)
    _emit_sweep(sweeps.parity_suite(_int_list(e), max_n, _progress_for(fmt)), fmt, started)


@verify_app.command('identity')
@handle_errors
def verify_identity(e: ListOpt = '2,3,4,5', max_n: MaxNOpt = 10, fmt: FormatOpt = None, timing: TimingOpt = False):
    """Length parity of minimal coset representatives against the relative sign."""
    fmt, started = _format(fmt), _start(timing)
    _emit_sweep(sweeps.identity_suite(_int_list(e), max_n, _progress_for(fmt)), fmt, started)


@verify_app.command('weyl')
@handle_errors
def verify_weyl(e: ListOpt = '2,3,4,5', max_n: MaxNOpt = 10, fmt: FormatOpt = None, timing: TimingOpt = False):
    """The hook-move length identity."""
    fmt, started = _format(fmt), _start(timing)
    _emit_sweep(sweeps.weyl_suite(_int_list(e), max_n, _progress_for(fmt)), fmt, started)


@verify_app.command('mullineux')
@handle_errors
def verify_mullineux(e: ListOpt = '2,3,5', max_n: MaxNOpt = 12, fmt: FormatOpt = None, timing: TimingOpt = False):
    fmt, started = _format(fmt), _start(timing)
    _emit_sweep(sweeps.mullineux_suite(_int_list(e), max_n, _progress_for(fmt)), fmt, started)


@verify_app.command('adjoint')
@handle_errors
def verify_adjoint(e: ListOpt = '2,3,4,5',
                   samples: Annotated[int, typer.Option('--samples', help="Random vector pairs.")] = ADJOINT_SAMPLES,
                   seed: Annotated[int, typer.Option('--seed')] = 0,
                   fmt: FormatOpt = None, timing: TimingOpt = False):
    """Adjointness of e_r and f_r on random vectors."""
    fmt, started = _format(fmt), _start(timing)
    _emit_sweep(sweeps.adjoint_suite(_int_list(e), samples, seed), fmt, started)


@verify_app.command('triangular')
@handle_errors
def verify_triangular(e: ListOpt = '2,3,4,5', max_n: MaxNOpt = 10, fmt: FormatOpt = None,
                      timing: TimingOpt = False):
    fmt, started = _format(fmt), _start(timing)
    _emit_sweep(sweeps.triangular_suite(_int_list(e), max_n, _progress_for(fmt)), fmt, started)


@verify_app.command('monomials3')
@handle_errors
def verify_monomials3(e: EOpt = 5,
                      cores: Annotated[Optional[List[str]], typer.Option('--core', help="Repeatable.")] = None,
                      fmt: FormatOpt = None, timing: TimingOpt = False):
    """Every weight-3 entry is 1, v, v^2 or v^3 as the signs and the Mullineux map predict."""
    fmt, started = _format(fmt), _start(timing)
    parsed = [_partition(text) for text in (cores or ['-'])]
    for c in parsed:
        BlockId(e, c, 3)
    _emit_sweep(sweeps.monomials3_suite(e, parsed), fmt, started)


@verify_app.command('pair')
@handle_errors
def verify_pair_command(e: EOpt = 5, core: CoreOpt = '-',
                        w: Annotated[int, typer.Option('--w', help="Block weight.")] = 3,
                        k: Annotated[int, typer.Option('--k', help="Bead difference.")] = 2,
                        fmt: FormatOpt = None, timing: TimingOpt = False):
    """The e^(2) table, case tables and exceptional relations on each [w:k]-pair of the block."""
    fmt, started = _format(fmt), _start(timing)
    if (w, k) != (3, 2):
        raise DomainError(f"pair verification covers [3:2]-pairs, got [{w}:{k}]")
    report, pair_reports = sweeps.pair_suite(e, _partition(core), w, k)
    payload = report.to_json()
    payload['pairs'] = [item.to_json() for item in pair_reports]

    def render():
        console = _console()
        console.print(f"pair: {'pass' if report.passed else 'FAIL'}, {report.checked} pairs", markup=False)
        for item in pair_reports:
            table = Table(title=f"residue {item.pair['residue']}: blockC core {Partition(tuple(item.pair['blockC']['core']))}")
            table.add_column("e^(2)")
            for name in ("alpha~", "beta~", "gamma~", "delta~"):
                table.add_column(name, justify="center")
            for name, row in zip(("alpha", "beta", "gamma", "delta"), item.table):
                table.add_row(name, *[cell if cell != '0' else '.' for cell in row])
            console.print(table)
            failed = [name for name, ok in item.checks.items() if not ok]
            console.print(f"checks failed: {', '.join(failed) or 'none'}; "
                          f"case rows checked: {len(item.case_checks)}", markup=False)

    emit('verify pair', {'e': e, 'core': _partition(core).to_json(), 'w': w, 'k': k}, payload, fmt, started,
         report.passed, render)


# --- cache and settings ------------------------------------------------------------------

@cache_app.command('list')
@handle_errors
def cache_list(fmt: FormatOpt = None):
    fmt = _format(fmt)
    rows = list_matrices()
    result = [{'file': name, 'e': e, 'weight': weight, 'core': core.to_json()} for name, e, weight, core in rows]

    def render():
        table = Table(title="cached blocks")
        for name in ("file", "e", "weight", "core"):
            table.add_column(name)
        for name, e, weight, core in rows:
            table.add_row(name, str(e), str(weight), str(core))
        _console().print(table)

    emit('cache list', {}, result, fmt, render=render)


@cache_app.command('clear')
@handle_errors
def cache_clear(fmt: FormatOpt = None):
    fmt = _format(fmt)
    removed = clear_matrices()
    emit('cache clear', {}, {'removed': removed}, fmt)


@settings_app.command('show')
@handle_errors
def settings_show(fmt: FormatOpt = None):
    fmt = _format(fmt)
    emit('settings show', {}, load_settings(), fmt)


@settings_app.command('set')
@handle_errors
def settings_set(key: str, value: str, fmt: FormatOpt = None):
    fmt = _format(fmt)
    emit('settings set', {'key': key}, {key: update_setting(key, value)}, fmt)
