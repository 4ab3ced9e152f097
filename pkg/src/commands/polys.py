import click

from src.etc.consts import DEFAULT_FORMAT, DEFAULT_N, DEFAULT_ORDER, OUTPUT_FORMATS
from src.etc.emitters import emit, poly_record
from src.etc.exceptions import AppellPropertyError
from src.etc.structure import get_family_names, load_family
from src.etc.utilities import Q_CONTEXT, RATIONAL, pif


def family_parameters(family, given):
    """keep the options the family accepts, reject the ones it does not

    :family: the family plug-in name
    :given: dict of parameter name to value, None for options not given
    :returns: the keyword arguments for the family's build function
    :raises click.UsageError: when an option does not apply to the family

    """
    accepted = load_family(family).PARAMETERS
    params = {}
    for name, value in given.items():
        if value is None:
            continue
        if name not in accepted:
            raise click.UsageError(f"option for '{name}' does not apply to family {family}")
        params[name] = value
    return params


def create_polys_cli(cli):

    @click.option("-f", "--family", type=click.Choice(get_family_names()), required=True)
    @click.option("-m", "--order", type=int, default=None, help="integer order (bernoulli, euler)")
    @click.option("--a", "a", type=RATIONAL, default=None,
                  help="Al-Salam-Carlitz parameter, same as --alpha a --beta 1")
    @click.option("--alpha", type=RATIONAL, default=None, help="Al-Salam-Carlitz alpha")
    @click.option("--beta", type=RATIONAL, default=None, help="Al-Salam-Carlitz beta, nonzero")
    @click.option("--b0", "B0", type=RATIONAL, default=None, help="recurrence constant B_0 (quasi)")
    @click.option("--c1", "C1", type=RATIONAL, default=None, help="recurrence constant C_1 (quasi)")
    @click.option("--lambda", "lam", type=RATIONAL, default=None, help="quasi-orthogonality lambda, nonzero")
    @click.option("--q", "ctx", type=Q_CONTEXT, required=True, help="q as an exact rational, e.g. 1/2")
    @click.option("-n", "--n", "n", type=click.IntRange(min=0), default=DEFAULT_N, show_default=True,
                  help="the highest degree computed")
    @click.option("--format", "fmt", type=click.Choice(OUTPUT_FORMATS), default=DEFAULT_FORMAT,
                  show_default=True)
    @click.option("--verbose/--silent", default=False)
    @cli.command('polys')
    def polys(family, order, a, alpha, beta, B0, C1, lam, ctx, n, fmt, verbose):
        """ print the coefficient table of a q-Appell family, ascending in x """
        if a is not None:
            if alpha is not None or beta is not None:
                raise click.UsageError("--a cannot be combined with --alpha or --beta")
            alpha, beta = a, 1
        params = family_parameters(family, {
            'order': order, 'alpha': alpha, 'beta': beta, 'B0': B0, 'C1': C1, 'lam': lam})
        pif(verbose, f"building {family} {params} up to degree {n} at {ctx}...")
        try:
            seq = load_family(family).build(ctx, n, **params)
        except (ValueError, AppellPropertyError) as e:
            # parameter validation errors are ValueErrors
            raise click.UsageError(str(e))
        order = params.get('order', DEFAULT_ORDER) if 'order' in load_family(family).PARAMETERS else 0
        record = poly_record(ctx, family, order, seq.polynomials(n))
        click.echo(emit(record, fmt))
