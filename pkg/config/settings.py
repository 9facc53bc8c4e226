# config/settings.py

import os


def _env_flag(name, default='0'):
    return os.environ.get(name, default).strip().lower() in ('1', 'true', 'yes', 'on')


# ===== Environment Settings =====
ENVIRONMENT = os.environ.get('PMOD4_ENVIRONMENT', 'development')
DEBUG = True if ENVIRONMENT == 'development' else False

# ===== File Paths & Directories =====
LOG_DIR = os.environ.get('PMOD4_LOG_DIR', 'logs/')
LOG_LEVEL = os.environ.get('PMOD4_LOG_LEVEL', 'DEBUG' if DEBUG else 'INFO')
LOG_TO_FILE = _env_flag('PMOD4_LOG_TO_FILE', '1')

# ===== Database (audit cache) =====
DATABASE_URI = os.environ.get('PMOD4_DATABASE_URI', 'sqlite:///pmod4_cache.db')
USE_DATABASE_CACHE = _env_flag('PMOD4_USE_DATABASE_CACHE', '0')

# ===== Series Arithmetic =====
MODULUS = 4
GAMMA0_6_INDEX = 12  # [SL2(Z) : Gamma0(6)]
STURM_MARGIN = int(os.environ.get('PMOD4_STURM_MARGIN', 10))

# ===== Partition Engine =====
EXACT_PARTITION_LIMIT = 10 ** 6
HRR_GUARD_DIGITS = int(os.environ.get('PMOD4_HRR_GUARD_DIGITS', 32))
HRR_TAIL_TARGET = 0.2
HRR_MAX_DOUBLINGS = int(os.environ.get('PMOD4_HRR_MAX_DOUBLINGS', 6))
BATCH_PACKED_THRESHOLD = 10 ** 7
PARTITION_POLICY = tuple(
    part.strip() for part in os.environ.get('PMOD4_PARTITION_POLICY', 'table,batch,hrr').split(',') if part.strip()
)
CROSS_CHECK = _env_flag('PMOD4_CROSS_CHECK', '0')

# ===== Class Polynomials =====
HILBERT_GUARD_DIGITS = int(os.environ.get('PMOD4_HILBERT_GUARD_DIGITS', 64))
HILBERT_TOLERANCE = 0.25
HILBERT_MAX_RETRIES = int(os.environ.get('PMOD4_HILBERT_MAX_RETRIES', 3))
HILBERT_TERM_BUDGET = 100000

# ===== Search =====
IMPROVED_BOUND = 315791
RELATION_KMAX = 350
MAX_WORKERS = int(os.environ.get('PMOD4_MAX_WORKERS', os.cpu_count() or 1))

# ===== Test Gates =====
RUN_SLOW = _env_flag('PMOD4_RUN_SLOW')
RUN_EXTENDED = _env_flag('PMOD4_RUN_EXTENDED')
