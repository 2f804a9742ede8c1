"""Exception types shared across the package."""


class FieldError(ValueError):
    """Invalid field construction or operation (wrong field, zero division, ...)."""


class ReducibleModulusError(FieldError):
    """A defining polynomial turned out to be reducible.

    ``witness`` holds a nontrivial monic factor (or a root, for extension
    defining polynomials) demonstrating reducibility.
    """

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class NotPermutationError(FieldError):
    """An operation required a permutation but got a collision.

    ``counterexample`` is a dict with the colliding pair of inputs.
    """

    def __init__(self, message, counterexample):
        super().__init__(message)
        self.counterexample = counterexample


class SpecParseError(ValueError):
    """A spec string (field / polynomial / family / construction) failed to parse.

    ``pos`` is the character offset of the offending token where known.
    """

    def __init__(self, message, pos=None):
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)
        self.pos = pos


class CapError(RuntimeError):
    """A verification or interpolation cap would be exceeded."""
