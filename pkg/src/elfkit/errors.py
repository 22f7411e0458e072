"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Tensor shapes are incompatible for the requested operation."""


class FormatError(ValueError):
    """A serialized file is malformed (bad magic, truncation, bad field)."""


class CacheMismatchError(ValueError):
    """A feature cache does not belong to the synthetic dataset in use."""


class ConfigError(ValueError):
    """An experiment or model configuration is invalid."""
