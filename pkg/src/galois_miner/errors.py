"""Exception hierarchy shared by all modules."""


class GaloisMinerError(Exception):
    """Base class for library errors."""


class InputError(GaloisMinerError, ValueError):
    """Bad user data: unknown names, malformed files, out-of-range values."""


class ConfigError(GaloisMinerError, ValueError):
    """Invalid parameters such as thresholds or affinity groupings."""


class ResourceError(GaloisMinerError, RuntimeError):
    """An enumeration guard was exceeded."""
