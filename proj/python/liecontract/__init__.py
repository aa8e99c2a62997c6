"""Graded contractions of the Pauli-graded sl(3): generation, verification and identification."""

import os as _os

_here = _os.path.dirname(__file__)
_bundled = _os.path.join(_here, "data")
if "LIECONTRACT_DATA" not in _os.environ and _os.path.isdir(_bundled):
    _os.environ["LIECONTRACT_DATA"] = _bundled

from ._liecontract import (  # noqa: E402
    BindingError,
    Catalog,
    CycloNumber,
    Error,
    NotASolution,
    ParseError,
    default_data_dir,
    generate_identities,
    generate_system,
    identify_brackets,
    run_cli,
    verify_casimir,
)

__all__ = [
    "BindingError",
    "Catalog",
    "CycloNumber",
    "Error",
    "NotASolution",
    "ParseError",
    "default_data_dir",
    "generate_identities",
    "generate_system",
    "identify_brackets",
    "run_cli",
    "verify_casimir",
]
