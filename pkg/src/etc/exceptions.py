class InvalidQError(ValueError):
    """ When q is 0, 1 or -1 """
    pass


class OrderMismatchError(ValueError):
    """ When two truncated series of different order are combined """
    pass


class NonUnitConstantTermError(ZeroDivisionError):
    """ When a series without an invertible constant term is inverted """
    pass


class ZeroLeadingCoefficientError(ValueError):
    """ When a determining sequence has a_0 = 0 """
    pass


class InsufficientCoefficientsError(IndexError):
    """ When a polynomial beyond the truncation order is requested """
    pass


class DegenerateSumError(ValueError):
    """ When the sum of two q-Appell sets loses its top degree """
    pass


class ZeroBetaError(ValueError):
    """ When the Al-Salam-Carlitz scale parameter beta is 0 """
    pass


class ZeroLambdaError(ValueError):
    """ When the quasi-orthogonality parameter lambda is 0 """
    pass


class AppellPropertyError(ArithmeticError):
    """ When a constructed sequence fails D_q f_n = [n]_q f_{n-1}(qx) """
    pass


class ModuleError(Exception):
    """ when a plug-in module lacks its required entry point """
    pass
