"""Exception types raised across the package."""


class KMError(Exception):
    """Base class for every error raised by kmfuzzy."""


class MixedVariant(KMError):
    """Two distributions from incompatible families were combined."""


class UnsupportedVariant(KMError):
    """The operation is only defined for finitely representable (step) data."""


class ShapeMismatch(KMError):
    pass


class DiagonalNotOne(KMError):
    pass


class OffDiagonalOne(KMError):
    pass


class AsymmetricEntries(KMError):
    pass


class DegenerateLevel(KMError):
    """A level slice collapses two distinct points to distance zero."""


class UniverseMismatch(KMError):
    pass


class GridTooCoarse(KMError):
    pass


class ParseError(KMError):
    pass


class SchemaError(KMError):
    pass
