from src.algebra.appell import from_polynomials
from src.algebra.ortho_quasi import QuasiSpec, quasi_orthogonal_family

PARAMETERS = ('B0', 'C1', 'lam')
DESCRIPTION = "quasi-orthogonal q-Appell set Q_n = P_n - ([n]_q/lambda) P_(n-1)"


def build(ctx, n, B0=0, C1=-1, lam=1):
    spec = QuasiSpec(B0, C1, lam, ctx)
    return from_polynomials(ctx, quasi_orthogonal_family(spec, n), name=f"quasi({B0},{C1},{lam})")
