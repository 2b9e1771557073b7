from ._core import (
    CapExceededError,
    DiagramParseError,
    InternalInvariantError,
    chain_groups,
    homology,
    roundtrip,
    table_cases,
    verify,
)

__all__ = [
    "homology",
    "chain_groups",
    "verify",
    "table_cases",
    "roundtrip",
    "DiagramParseError",
    "CapExceededError",
    "InternalInvariantError",
]
