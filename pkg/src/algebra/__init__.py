""" exact q-calculus core: scalars, polynomials, series, q-Appell sets """
