"""Error taxonomy shared by every module.

Checkers convert DegeneracyError into a 'degenerate' verdict instead of
letting it escape a suite; the other errors are genuine caller mistakes.
"""


class PlanelabError(Exception):
    pass


class DomainError(PlanelabError):
    """Invalid operand: division by zero, repeated points, mixed radicands."""


class CapabilityError(PlanelabError):
    """Operation requires a capability (order, commutativity) the system lacks."""


class PrecisionError(PlanelabError):
    """A truncated series does not determine the requested quantity."""


class DegeneracyError(PlanelabError):
    """A geometric construction step failed; carries the step name."""

    def __init__(self, step, detail=""):
        self.step = step
        self.detail = detail
        super().__init__(f"degenerate at {step}" + (f": {detail}" if detail else ""))
