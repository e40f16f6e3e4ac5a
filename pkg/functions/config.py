from functions.IMPORT import os

ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
SETTINGS_PATH = os.path.join(ROOT_DIR, 'assets', 'app_settings.json')
CACHE_DIR = './assets/decomp_cache'

MATRIX_FORMAT = 'fockcalc-decomp-v1'
MATRIX_FILE_PREFIX = 'decomp_'

ENV_CACHE = 'FOCKCALC_CACHE'
ENV_THREADS = 'FOCKCALC_THREADS'
ENV_LOG_LEVEL = 'FOCKCALC_LOG_LEVEL'
ENV_SETTINGS = 'FOCKCALC_SETTINGS'

DEFAULT_SETTINGS = {
    'cache_dir': CACHE_DIR,
    'threads': 1,
    'log_level': 'WARNING',
    'format': 'text',
    'max_iterations': 10000,
    'progress': True,
}

INT_SETTINGS = ('threads', 'max_iterations')
BOOL_SETTINGS = ('progress',)

OUTPUT_FORMATS = ('text', 'json')
ADJOINT_SAMPLES = 1000
CONSOLE_WIDTH = 120

EXIT_FAILED = 1
EXIT_USAGE = 2

# the printed table for e^(2) between the two exceptional quadruples, rows alpha..delta
# against columns alpha~..delta~, as {exponent: coefficient}
E2_TABLE = [
    [{-2: 1}, {-1: 1}, {0: 1}, {}],
    [{-1: 1}, {0: 1}, {}, {0: 1}],
    [{0: 1}, {}, {0: 1}, {1: 1}],
    [{}, {0: 1}, {1: 1}, {2: 1}],
]

# admissible (d_alpha, d_beta, d_gamma, d_delta, d_alpha~, ..., d_delta~) tuples, by exponent; None is zero
CASE_II_ROWS = [
    (2, 3, None, None, 2, 3, None, None),
    (2, None, 2, None, 2, None, 2, None),
    (2, None, None, 1, None, 1, 2, None),
    (None, 1, 2, None, 2, None, None, 1),
    (None, 1, None, 1, None, 1, None, 1),
    (None, None, 0, 1, None, None, 0, 1),
]

CASE_IV_ROWS = [
    (1, 2, 1, 2, 1, 2, 1, 2),
    (2, 1, 2, 1, 2, 1, 2, 1),
]

EXCEPTIONAL_NAMES = ('alpha', 'beta', 'gamma', 'delta')
