from src.algebra.appell import identity

PARAMETERS = ()
DESCRIPTION = "the identity set I = {q^binom(n,2) x^n}, A(t) = 1"


def identity_family(ctx, n):
    return identity(ctx, n)


def build(ctx, n):
    return identity_family(ctx, n)
