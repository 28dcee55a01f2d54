"""Exception hierarchy shared across the package.

The CLI maps ``TriageError`` (and ``FileNotFoundError``) to exit code 2;
anything argparse rejects exits with 1.
"""


class TriageError(Exception):
    """Base class for data and model errors raised by this package."""


class DatasetError(TriageError):
    """Malformed or unusable dataset input."""


class ModelFileError(TriageError):
    """Unreadable, truncated, or structurally invalid model file."""


class ModelChecksumError(ModelFileError):
    """Model file content does not match its stored checksum."""


class ModelVersionError(ModelFileError):
    """Model file was written by an unsupported format version."""
