"""Exception hierarchy.

Every validator raises a subclass of :class:`LaxcatError`; the CLI maps all of
them to exit status 2.
"""

from __future__ import annotations


class LaxcatError(Exception):
    pass


class ValidationError(LaxcatError):
    pass


class MissingComposite(ValidationError):
    def __init__(self, f: str, g: str):
        super().__init__(f"composite of {f!r} then {g!r} is not listed")
        self.f = f
        self.g = g


class NonAssociative(ValidationError):
    def __init__(self, f: str, g: str, h: str):
        super().__init__(f"composition is not associative on ({f!r}, {g!r}, {h!r})")
        self.triple = (f, g, h)


class BadIdentity(ValidationError):
    pass


class NotAFunctor(ValidationError):
    pass


class NotNatural(ValidationError):
    def __init__(self, morphism: str, detail: str = ""):
        msg = f"naturality square fails at {morphism!r}"
        super().__init__(f"{msg}: {detail}" if detail else msg)
        self.morphism = morphism


class ShapeMismatch(LaxcatError):
    pass


class SizeCapExceeded(LaxcatError):
    pass


class InternalCheckFailed(LaxcatError):
    """An invariant that holds on all valid input was violated."""


class NotOrthogonalInput(LaxcatError):
    pass


class NoSolution(LaxcatError):
    pass


class MultipleSolutions(LaxcatError):
    pass


class NotThin(ValidationError):
    pass


class NotAntisymmetric(ValidationError):
    pass


class NotAPreorder(ValidationError):
    pass


class NotMonotone(ValidationError):
    pass


class NotAGroup(ValidationError):
    pass


class NotAHomomorphism(ValidationError):
    pass


class NotIntertwining(ValidationError):
    def __init__(self, x: object):
        super().__init__(f"2-cell element does not intertwine at {x!r}")
        self.x = x


class NotALattice(ValidationError):
    pass


class NotDistributive(ValidationError):
    def __init__(self, a: object, subset: tuple):
        super().__init__(f"meet with {a!r} does not distribute over the join of {subset!r}")
        self.a = a
        self.subset = subset


class NotAVCategory(ValidationError):
    pass


class NotAVFunctor(ValidationError):
    pass


class ParseError(LaxcatError):
    pass


class SchemaError(LaxcatError):
    pass
