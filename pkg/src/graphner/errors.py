"""Exception types shared across the package."""


class CorpusFormatError(ValueError):
    """A corpus/query/prediction file is malformed or fails validation."""


class ConfigError(ValueError):
    """A configuration value is out of range or inconsistent."""


class CheckpointError(ValueError):
    """A checkpoint file cannot be read (bad version, truncation, schema)."""


class NumericError(RuntimeError):
    """A numeric computation produced a non-finite or invalid result."""


class TrainingDiverged(NumericError):
    """Training hit a non-finite loss."""
