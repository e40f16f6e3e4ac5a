from functions.IMPORT import os, json, hashlib, logger
from functions.config import MATRIX_FORMAT, MATRIX_FILE_PREFIX
from functions.errors import CacheFormatError
from functions.canonical import DecompositionMatrix, canonical_basis_block, remember_block
from functions.settings import get_cache_dir


def core_hash(core):
    return hashlib.sha1(str(core).encode('utf-8')).hexdigest()[:12]


def matrix_filename(e, core, weight):
    return f"{MATRIX_FILE_PREFIX}e{e}_w{weight}_{core_hash(core)}.json"


def matrix_text(matrix):
    """The bit-exact v1 serialization, newline terminated."""
    return json.dumps(matrix.to_json()) + '\n'


def save_matrix(matrix, cache_dir=None):
    """Write the matrix into the cache directory and return its path; a failed write leaves no file behind."""
    cache_dir = cache_dir or get_cache_dir()
    if not os.path.exists(cache_dir):
        os.makedirs(cache_dir)
    path = os.path.join(cache_dir, matrix_filename(matrix.e, matrix.core, matrix.weight))
    tmp_path = path + '.tmp'
    try:
        with open(tmp_path, 'w') as f:
            json.dump(matrix.to_json(), f)
            f.write('\n')
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise
    logger.info("cached block e={} core={} weight={} at {}", matrix.e, matrix.core, matrix.weight, path)
    return path


def read_matrix_file(path):
    try:
        with open(path, 'r') as f:
            payload = json.load(f)
    except json.JSONDecodeError as exc:
        raise CacheFormatError(f"{path} is not valid JSON: {exc}")
    if not isinstance(payload, dict) or payload.get('format') != MATRIX_FORMAT:
        raise CacheFormatError(f"{path} is not a {MATRIX_FORMAT} file")
    try:
        return DecompositionMatrix.from_json(payload)
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise CacheFormatError(f"{path} is malformed: {exc}")


def load_matrix(e, core, weight, cache_dir=None):
    """Load a cached matrix, or None when it was never stored."""
    path = os.path.join(cache_dir or get_cache_dir(), matrix_filename(e, core, weight))
    try:
        matrix = read_matrix_file(path)
    except FileNotFoundError:
        return None
    if (matrix.e, matrix.core, matrix.weight) != (e, core, weight):
        raise CacheFormatError(f"{path} holds block e={matrix.e} core={matrix.core} weight={matrix.weight}")
    return matrix


def delete_matrix(e, core, weight, cache_dir=None):
    path = os.path.join(cache_dir or get_cache_dir(), matrix_filename(e, core, weight))
    if os.path.exists(path):
        os.remove(path)
        return True
    logger.debug("nothing cached at {}", path)
    return False


def list_matrices(cache_dir=None):
    """Cached matrix files, newest first, as (file name, e, weight, core) rows."""
    cache_dir = cache_dir or get_cache_dir()
    if not os.path.isdir(cache_dir):
        return []
    details = []
    for name in os.listdir(cache_dir):
        if not (name.startswith(MATRIX_FILE_PREFIX) and name.endswith('.json')):
            continue
        path = os.path.join(cache_dir, name)
        try:
            matrix = read_matrix_file(path)
        except CacheFormatError as exc:
            logger.warning("skipping {}: {}", name, exc)
            continue
        details.append((os.path.getmtime(path), name, matrix))
    details.sort(key=lambda item: (-item[0], item[1]))
    return [(name, matrix.e, matrix.weight, matrix.core) for _, name, matrix in details]


def clear_matrices(cache_dir=None):
    cache_dir = cache_dir or get_cache_dir()
    removed = 0
    if not os.path.isdir(cache_dir):
        return removed
    for name in os.listdir(cache_dir):
        if name.startswith(MATRIX_FILE_PREFIX) and name.endswith('.json'):
            os.remove(os.path.join(cache_dir, name))
            removed += 1
    return removed


def cached_block(e, core, weight, cache_dir=None, use_cache=True):
    """Block matrix through the disk cache: load when stored, otherwise compute and store."""
    if not use_cache:
        return canonical_basis_block(e, core, weight)
    matrix = load_matrix(e, core, weight, cache_dir)
    if matrix is not None:
        logger.debug("cache hit for block e={} core={} weight={}", e, core, weight)
        return remember_block(matrix)
    matrix = canonical_basis_block(e, core, weight)
    save_matrix(matrix, cache_dir)
    return matrix
