class XClassnumError(Exception):
    pass


class ContractError(XClassnumError, ValueError):
    """ An argument was outside the domain an operation is defined on. """
    pass


class SingularCurveError(ContractError):
    pass


class IdentityInvariantError(XClassnumError):
    """ A value that is true by construction turned out not to be (ie: a bug, not bad input). """
    pass


class RunConfigError(XClassnumError):
    pass
