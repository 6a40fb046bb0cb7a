import os
from dotenv import load_dotenv

load_dotenv()


def _optional_int(value):
    return int(value) if value not in (None, '') else None


CONFIG = {
    'LOG_LEVEL': os.getenv('SECRETARY_LOG_LEVEL', 'WARNING').upper(),
    'WORKERS': int(os.getenv('SECRETARY_WORKERS', str(os.cpu_count() or 1))),
    'EXACT_BUDGET_N': int(os.getenv('SECRETARY_EXACT_BUDGET_N', '14')),  # 2^n samples per order
    'P_TABLE_BUDGET': int(os.getenv('SECRETARY_P_TABLE_BUDGET', '20')),
    'MC_SIGMAS': float(os.getenv('SECRETARY_MC_SIGMAS', '4.0')),
    'RANK_MEMO_SIZE': int(os.getenv('SECRETARY_RANK_MEMO_SIZE', '200000')),
    'DEFAULT_SEED': _optional_int(os.getenv('SECRETARY_DEFAULT_SEED')),
    'DEBUG': os.getenv('DEBUG', 'False').lower() == 'true',
}

if __name__ == "__main__":
    print("Current configuration:")
    for key, value in CONFIG.items():
        print(f"{key}: {value}")
