"""Exception types raised by the engine.

Every error carries the name of the violated invariant so the CLI can
report it verbatim.  ``ScenarioError`` maps to exit status 1, every
``PreconditionViolation`` to exit status 2.
"""


class RuledScrollError(Exception):
    invariant = "engine"


class ScenarioError(RuledScrollError):
    invariant = "scenario"


class InconsistentTable(ScenarioError):
    invariant = "InconsistentTable"


class PreconditionViolation(RuledScrollError):
    invariant = "precondition"


class UnresolvableChain(PreconditionViolation):
    invariant = "UnresolvableChain"


class NotBasePointFree(PreconditionViolation):
    invariant = "NotBasePointFree"


class InvalidPosition(PreconditionViolation):
    invariant = "InvalidPosition"


class SegreBoundViolation(PreconditionViolation):
    invariant = "SegreBoundViolation"


class SingularCenter(PreconditionViolation):
    invariant = "SingularCenter"


class AliasRequired(PreconditionViolation):
    invariant = "AliasRequired"


class MalformedCycle(PreconditionViolation):
    invariant = "MalformedCycle"
