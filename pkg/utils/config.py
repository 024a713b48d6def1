import logging
import os

from dotenv import load_dotenv

load_dotenv()

# Exact linear algebra
EXACT_CAP = int(os.getenv('SHUNYA_EXACT_CAP', '256'))
MODULAR_THRESHOLD = int(os.getenv('SHUNYA_MODULAR_THRESHOLD', '300'))
MODULAR_PRIMES = int(os.getenv('SHUNYA_MODULAR_PRIMES', '5'))
NUMERIC_TOL = float(os.getenv('SHUNYA_NUMERIC_TOL', '1e-8'))

# Field and graph sizes
FIELD_TABLE_CAP = int(os.getenv('SHUNYA_FIELD_TABLE_CAP', '64'))
GAMMA_ORDER_CAP = int(os.getenv('SHUNYA_GAMMA_ORDER_CAP', '16'))

# Randomised suites
DEFAULT_SEED = int(os.getenv('SHUNYA_DEFAULT_SEED', '20240517'))
ORACLE_SAMPLE_PAIRS = int(os.getenv('SHUNYA_ORACLE_SAMPLE_PAIRS', '500'))
RANDOM_TRIALS = int(os.getenv('SHUNYA_RANDOM_TRIALS', '100'))
BLOCKDET_TRIALS = int(os.getenv('SHUNYA_BLOCKDET_TRIALS', '200'))

# Reports
REPORT_SCHEMA_VERSION = int(os.getenv('SHUNYA_REPORT_SCHEMA_VERSION', '1'))
LOG_LEVEL = os.getenv('SHUNYA_LOG_LEVEL', 'WARNING')


def configure_logging(level=None):
    """Route library logs to stderr at the configured level"""
    logging.basicConfig(
        level=getattr(logging, (level or LOG_LEVEL).upper(), logging.WARNING),
        format='%(levelname)s %(name)s: %(message)s',
    )
