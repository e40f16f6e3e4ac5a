# Standard library imports
import os
import re
import sys
import json
import time
import random
import hashlib
import itertools
import threading
from functools import lru_cache, wraps
from typing import Annotated, Optional, List
from dataclasses import dataclass, field

# Third-party imports
from joblib import Parallel, delayed
from tqdm import tqdm
from loguru import logger
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field
from pydantic.alias_generators import to_camel

# CLI-related imports
import typer
from rich.console import Console
from rich.table import Table
