"""Exception types shared across the package."""


class SeqdivError(Exception):
    """Base class for every error this package raises on purpose."""


class FieldMismatch(SeqdivError):
    """Operands belong to different coefficient fields."""


class DivisionByZero(SeqdivError, ZeroDivisionError):
    """Division or inversion of a zero element or zero polynomial."""


class NotDivisible(SeqdivError):
    """Exact division was requested but the remainder is nonzero."""


class ZeroArgument(SeqdivError):
    """An argument that must be nonzero was zero."""


class WrongField(SeqdivError):
    """A value cannot be interpreted in the requested field."""


class NotPrime(SeqdivError, ValueError):
    """Prime-field modulus failed the primality check."""


class ParseError(SeqdivError, ValueError):
    """A polynomial or scalar literal does not match the grammar."""


class DegreeMismatch(SeqdivError):
    """Homogeneous forms of different degrees were added."""


class ConstantForm(SeqdivError):
    """A non-constant form was required."""


class ValidationError(SeqdivError):
    """Base class for sequence-parameter rejections."""


class ZeroParameter(ValidationError):
    """A sequence parameter is the zero polynomial."""


class NotCoprime(ValidationError):
    """The parameter pair generates a proper common ideal."""


class BothUnits(ValidationError):
    """Both parameters are units; every term would be trivial."""


class RatioRootOfUnity(ValidationError):
    """The parameter ratio is a root of unity, so terms would vanish."""


class PreconditionViolated(SeqdivError):
    """A documented check precondition does not hold for the given input."""


class OracleMismatch(SeqdivError):
    """The definitional computation left the base ring; internal consistency bug."""


class ConfigInvalid(SeqdivError):
    """A campaign configuration is malformed or out of the supported range."""


class UnsupportedField(SeqdivError):
    """The requested operation is not available over this field."""
