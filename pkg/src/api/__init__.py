"""
Result tables, writers and command handlers for the CLI.
"""

from .writers import FORMATS, SCHEMA_VERSION, ResultTable, format_value, write_csv, write_json, write_table

__all__ = [
    'FORMATS',
    'ResultTable',
    'SCHEMA_VERSION',
    'format_value',
    'write_csv',
    'write_json',
    'write_table',
]
