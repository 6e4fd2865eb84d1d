# utils/errors.py


class ToolkitError(ValueError):
    """
    Base error for every precondition or contract failure raised by the toolkit.
    `code` is stable and machine readable; `details` carries the witness data
    (an offending edge, the stuck residual, ...) for reports and API responses.
    """
    code = "toolkit_error"

    def __init__(self, message: str, details: dict = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_json(self):
        return {
            "code": self.code,
            "message": self.message,
            "details": self.details,
        }


class GraphError(ToolkitError):
    code = "graph_error"


class NoReductionApplies(ToolkitError):
    """No reduction rule fires but edges remain: the genus precondition is violated."""
    code = "no_reduction_applies"


class K2kPresent(ToolkitError):
    code = "k2k_present"


class ResidualNonempty(ToolkitError):
    code = "residual_nonempty"


class LightEdgeError(ToolkitError):
    code = "light_edge_error"


class IterationLimit(ToolkitError):
    code = "iteration_limit"


class SizeLimit(ToolkitError):
    code = "size_limit"


class CoverageViolation(ToolkitError):
    code = "coverage_violation"


class BoundParameterError(ToolkitError):
    code = "bound_parameter_error"


class DivisibilityError(ToolkitError):
    code = "divisibility_error"


class HyperbolicityError(ToolkitError):
    code = "hyperbolicity_error"


class UnknownFamily(ToolkitError):
    code = "unknown_family"


class ShortEarthworm(ToolkitError):
    code = "short_earthworm"


class CycleNotInterior(ToolkitError):
    code = "cycle_not_interior"


class ZeroVector(ToolkitError):
    code = "zero_vector"
