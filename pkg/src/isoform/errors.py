"""Exception hierarchy.

``InputError`` subclasses mean the caller asked for something that does not
exist or is malformed (CLI exit code 1).  ``InvariantError`` subclasses mean a
mathematical check failed on valid input, i.e. a bug or a bad catalog row
(CLI exit code 2).
"""


class IsoformError(Exception):
    pass


class InputError(IsoformError, ValueError):
    pass


class InvariantError(IsoformError, ArithmeticError):
    pass


class UnsupportedTypeError(InputError):
    pass


class ZeroRootError(InputError):
    pass


class NotDynkinDiagramError(InputError):
    pass


class NotDiagramAutomorphismError(InputError):
    pass


class OracleTooLargeError(InputError):
    pass


class UnknownPairError(InputError):
    pass


class CatalogFormatError(InputError):
    pass


class NotCartanIntegralError(InvariantError):
    pass


class RootVanishesError(InvariantError):
    pass


class LemmaViolationError(InvariantError):
    pass


class RestrictionAxiomError(InvariantError):
    pass


class PositivityViolationError(InvariantError):
    pass


class CatalogInconsistencyError(InvariantError):
    pass


class HsiangViolationError(InvariantError):
    pass
