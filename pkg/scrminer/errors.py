"""
Error types raised by the mining library.

Each error carries the process exit code the CLI maps it to:
2 for usage/validation problems, 3 when a resource cap is exceeded.
"""

from __future__ import annotations


class ScrMinerError(Exception):
    """Base error for schema, data, configuration and resource problems."""

    exit_code = 2


class SchemaError(ScrMinerError):
    """Schema text is malformed or violates the role rules."""
    pass


class DatasetError(ScrMinerError):
    """CSV content does not match the schema or the two-class restriction."""
    pass


class ConfigError(ScrMinerError):
    """Invalid configuration value or conflicting flags."""
    pass


class GenSpecError(ScrMinerError):
    """Synthetic dataset specification is invalid or infeasible."""
    pass


class OracleCapExceeded(ScrMinerError):
    """Exhaustive enumeration would exceed the configured condset cap."""

    exit_code = 3

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"exhaustive enumeration needs {count} condsets, cap is {cap}")


class PatternFileError(ScrMinerError):
    """A pattern file cannot be parsed back against the schema."""
    pass
