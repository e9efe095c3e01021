"""Exception hierarchy shared by every module of the package."""


class DendriformError(Exception):
    """Base class for all errors raised by this package."""


class DerivOrderOverflow(DendriformError):
    """A derivation order would exceed the configured limit."""


class ArityMismatch(DendriformError, ValueError):
    """A grafting received the wrong number of children for its decorations."""


class LeafHasNoBreadth(DendriformError, ValueError):
    pass


class IndexOutOfRange(DendriformError, IndexError):
    pass


class ParseError(DendriformError, ValueError):
    """Malformed input text.

    ``position`` is the byte offset of the offending token and ``expected``
    the set of tokens that would have been accepted there.
    """

    def __init__(self, message, position=0, expected=()):
        self.position = position
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at offset {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class MixedOperatorAmbiguity(ParseError):
    """Different product operators were chained without parentheses."""


class UnboundSymbol(DendriformError, KeyError):
    pass


class ConfigError(DendriformError, ValueError):
    pass


class MorphismPrecondition(DendriformError):
    """The supplied map does not intertwine the derivations."""


class CommutativityViolation(DendriformError):
    """A structure required to be commutative is not, on some test pair."""

    def __init__(self, identity, witness, residual=None):
        self.identity = identity
        self.witness = witness
        self.residual = residual
        super().__init__(f"commutativity {identity!r} fails on {witness}: residual {residual}")


class AxiomViolation(DendriformError):
    """An axiom failed; carries the identity name and the witness tuple."""

    def __init__(self, identity, witness, residual=None):
        self.identity = identity
        self.witness = witness
        self.residual = residual
        super().__init__(f"identity {identity!r} fails on {witness}: residual {residual}")


class RBLawViolation(DendriformError):
    def __init__(self, witness, residual=None):
        self.witness = witness
        self.residual = residual
        super().__init__(f"Rota-Baxter law fails on {witness}: residual {residual}")


class CommutationViolation(DendriformError):
    def __init__(self, witness, residual=None):
        self.witness = witness
        self.residual = residual
        super().__init__(f"dP != Pd on {witness}: residual {residual}")


class AlphabetMismatch(DendriformError, ValueError):
    pass


class ZeroQ(DendriformError, ValueError):
    """The parameter q must be invertible for this construction."""


class WeightNotZero(DendriformError, ValueError):
    """Induced Novikov-type structures are only defined at weight zero."""
