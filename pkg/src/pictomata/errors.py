"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for all errors raised by this package."""


class OutOfBandError(ToolkitError):
    """Position lies outside the bordered band of a picture."""


class WindowError(ToolkitError):
    """Empty or out-of-range subpicture window."""


class DimensionError(ToolkitError):
    """Concatenation operands with incompatible dimensions."""


class AlphabetError(ToolkitError):
    """Symbol or alphabet mismatch between a machine and its input."""


class ModeError(ToolkitError):
    """Operation requires the other determinism mode."""


class VariantError(ToolkitError):
    """Operation does not support this head-movement variant."""


class CapacityError(ToolkitError):
    """Enumeration or filler-set size exceeds the allowed budget."""


class PreconditionError(ToolkitError):
    """Caller violated an operation precondition."""
