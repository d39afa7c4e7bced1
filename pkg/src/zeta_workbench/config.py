"""INI configuration for the command-line front end.

One section per subcommand, flat key=value pairs. Values read from the
file act as defaults; explicit command-line flags always win.
"""

from __future__ import annotations

import configparser
from pathlib import Path

from .errors import SchemaError

__all__ = ["load_config", "section_defaults"]


def load_config(path: str | Path) -> configparser.ConfigParser:
    parser = configparser.ConfigParser()
    read = parser.read(str(path))
    if not read:
        raise SchemaError(f"config file not found or unreadable: {path}")
    return parser


def section_defaults(parser: configparser.ConfigParser, command: str) -> dict[str, str]:
    if not parser.has_section(command):
        return {}
    return dict(parser.items(command))
