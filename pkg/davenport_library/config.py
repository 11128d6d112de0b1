import os
from dataclasses import dataclass, field
from typing import Optional

MAX_ORDER = 64
SUBGROUP_ORDER_LIMIT = 32
MAX_PERMUTATION_DEGREE = 8
DEFAULT_PRODUCT_SET_CAP = 16
ATOM_ORACLE_CAP = 10
SEQUENCE_LENGTH_LIMIT = 64
DEFAULT_MEMORY_CAP = 4 * 2**30

# rough per-sequence footprint of a stored level entry: tuple header, dict slot, locator pair
ENTRY_OVERHEAD_BYTES = 160
ENTRY_BYTES_PER_TERM = 8
# packed atom entries: bytes header and set slot, plus one byte per term
COMPACT_ENTRY_OVERHEAD_BYTES = 64

CACHE_DIR_VARIABLE = 'DAV_CACHE_DIR'
THREADS_VARIABLE = 'DAV_THREADS'


@dataclass
class EngineConfig:
    """
    Parameters of a Davenport constant computation.

    Attributes:
        threads (int): Number of workers used for the splitting fan-out. 1 runs single-threaded.
        max_level (Optional[int]): Stop after this sequence length; the report is then incomplete.
        memory_cap_bytes (int): Estimated level storage above which the run stops with ResourceCap.
        keep_full_levels (bool): Keep every full level set in the report (oracle tests use this).
        cache_dir (Optional[str]): Directory for level dumps, None disables caching.
        stop_at_bound (bool): End the run as soon as a level reaches the general upper bound on the constant, D(G) <= |G| and
            d(G) <= |G| - 1, or d(G) <= |G|//2 for non-cyclic G. The next level is then recorded as empty without building it.
    """
    threads: int = 1
    max_level: Optional[int] = None
    memory_cap_bytes: int = DEFAULT_MEMORY_CAP
    keep_full_levels: bool = False
    cache_dir: Optional[str] = field(default=None)
    stop_at_bound: bool = True

    @classmethod
    def from_environment(cls, **overrides) -> 'EngineConfig':
        """
        Build a configuration from DAV_CACHE_DIR and DAV_THREADS, then apply explicit overrides.

        Overrides whose value is None are ignored so that unset CLI flags fall back to the environment.

        Returns:
            EngineConfig: The resulting configuration.
        """
        config = cls(cache_dir=os.environ.get(CACHE_DIR_VARIABLE) or None)
        threads = os.environ.get(THREADS_VARIABLE)
        if threads:
            config.threads = max(1, int(threads))
        for name, value in overrides.items():
            if value is not None:
                setattr(config, name, value)
        return config

    def to_parameters(self) -> dict:
        """
        The parameters that influence a result. Worker count is excluded, results do not depend on it.

        Returns:
            dict: Parameter names and values.
        """
        return {
            'max_level': self.max_level,
            'memory_cap_bytes': self.memory_cap_bytes,
        }
