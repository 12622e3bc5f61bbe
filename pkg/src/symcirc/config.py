"""Resource caps and run configuration.

Environment variables override the built-in defaults:

    SYMCIRC_ORACLE_N_CAP   max input count for brute-force oracles     (26)
    SYMCIRC_RANK_CAP       max symmetric-rank before fallback          (2**20)
    SYMCIRC_MONOMIAL_CAP   max distinct monomials per F2 polynomial    (2**20)
    SYMCIRC_WEIGHT_CAP     max sum of absolute THR weights per gate    (2**40)
    SYMCIRC_SIZE_CAP       max copies / bank width 2**(2*ell)          (2**16)
"""

import os
from dataclasses import dataclass, field


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return default if raw is None else int(raw)


@dataclass
class Caps:
    oracle_n: int = field(default_factory=lambda: _env_int("SYMCIRC_ORACLE_N_CAP", 26))
    rank: int = field(default_factory=lambda: _env_int("SYMCIRC_RANK_CAP", 1 << 20))
    monomials: int = field(default_factory=lambda: _env_int("SYMCIRC_MONOMIAL_CAP", 1 << 20))
    weight_magnitude: int = field(default_factory=lambda: _env_int("SYMCIRC_WEIGHT_CAP", 1 << 40))
    size: int = field(default_factory=lambda: _env_int("SYMCIRC_SIZE_CAP", 1 << 16))


@dataclass
class RunConfig:
    """CLI-level configuration: seed, caps, engine choices, output control."""

    seed: int = 0
    caps: Caps = field(default_factory=Caps)
    mm_mode: str = "naive"
    threads: int = 1
    verbosity: int = 0


DEFAULT_CAPS = Caps()
