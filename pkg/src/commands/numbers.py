import click

from src.etc.consts import DEFAULT_FORMAT, DEFAULT_N, DEFAULT_ORDER, OUTPUT_FORMATS
from src.etc.emitters import emit, number_record
from src.etc.structure import load_family
from src.etc.utilities import Q_CONTEXT, pif

NUMBER_FAMILIES = ('bernoulli', 'euler')


def family_numbers(family, ctx, order, n):
    """the numbers c_0..c_N of a family of integer order

    They are the determining coefficients of the family's polynomial set.
    """
    return load_family(family).build(ctx, n, order=order).a


def create_numbers_cli(cli):

    @click.option("-f", "--family", type=click.Choice(NUMBER_FAMILIES), required=True)
    @click.option("-m", "--order", type=int, default=DEFAULT_ORDER, show_default=True,
                  help="the integer order m of the generating function")
    @click.option("--q", "ctx", type=Q_CONTEXT, required=True, help="q as an exact rational, e.g. 1/2")
    @click.option("-n", "--n", "n", type=click.IntRange(min=0), default=DEFAULT_N, show_default=True,
                  help="the highest index computed")
    @click.option("--format", "fmt", type=click.Choice(OUTPUT_FORMATS), default=DEFAULT_FORMAT,
                  show_default=True)
    @click.option("--verbose/--silent", default=False)
    @cli.command('numbers')
    def numbers(family, order, ctx, n, fmt, verbose):
        """ print q-Bernoulli or q-Euler numbers of order m """
        pif(verbose, f"computing {family} numbers of order {order} up to n={n} at {ctx}...")
        values = family_numbers(family, ctx, order, n)
        click.echo(emit(number_record(ctx, family, order, values), fmt))
