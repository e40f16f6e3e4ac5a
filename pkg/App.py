from functions.IMPORT import os
from functions.cli import app
from functions.settings import get_cache_dir

if not os.path.exists(get_cache_dir()):
    os.makedirs(get_cache_dir(), exist_ok=True)


if __name__ == '__main__':
    app()
