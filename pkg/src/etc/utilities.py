import os
import click
from fractions import Fraction

from src.algebra.scalar_qcore import QContext
from src.etc.exceptions import InvalidQError


def is_directory(d):
    """ returns True if 'd' is a valid plug-in directory, False otherwise """
    return (os.path.isdir(d)
            and not os.path.basename(d).startswith('_')
            and os.path.isfile(os.path.join(d, '__init__.py')))


def plist(lst, indent="", sep="\n", err=False):
    """print a list
    :lst: the list to print
    :indent: characters to append before each item
    :sep: characters used to separate items
    :err: print to stderr instead of stdout
    """
    s = sep.join([indent + item for item in lst])
    click.echo(s, err=err)


def pif(verbose, msg):
    """print if verbose

    Messages go to stderr so that redirected table output stays clean.

    :verbose: boolean indicating whether or not to print
    :msg: message to be printed
    :returns: None

    """
    if verbose:
        click.echo(msg, err=True)


def ls(directory=None, filtr=lambda item: True, relative_to_cwd=True):
    """returns a sorted list of strings of each file/directories in _directory_

    :directory: the directory to list, defaults to the current directory
    :filtr: the filter function to apply on each returned element
    :relative_to_cwd: the returned string is relative to current working directory rather than the given directory,
    _filtr_ will always be applied with the paths relative to cwd.
    :returns: a list of strings, empty if the directory does not exist
    """
    # check for non-existing directory
    if directory and not os.path.isdir(directory):
        return []
    items = os.listdir(directory)
    # prepend the directory name if needed
    if directory:
        items = map(lambda item: os.path.join(directory, item), items)
    items = filter(filtr, items)
    if not relative_to_cwd:
        items = map(os.path.basename, items)
    # listing order is platform dependent, output must not be
    return sorted(items)


def parse_scalar(text):
    """parse an exact rational from a string such as '3/5', '-2' or '0.25'

    :text: the string to parse
    :returns: a Fraction
    :raises ValueError: when the text is not a rational literal

    """
    return Fraction(str(text).strip())


def format_scalar(value):
    """serialize an exact rational as 'num/den', or 'num' when den is 1

    :value: a Fraction or an int
    :returns: the string form

    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def latex_scalar(value):
    """ format an exact rational for a LaTeX cell """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    sign = '-' if value < 0 else ''
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


class RationalParamType(click.ParamType):
    """ click parameter type accepting exact rationals """
    name = 'rational'

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return parse_scalar(value)
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not an exact rational such as 3/5", param, ctx)


RATIONAL = RationalParamType()


class QParamType(RationalParamType):
    """ click parameter type producing a validated QContext """
    name = 'q'

    def convert(self, value, param, ctx):
        if isinstance(value, QContext):
            return value
        try:
            return QContext(super().convert(value, param, ctx))
        except InvalidQError as e:
            self.fail(str(e), param, ctx)


Q_CONTEXT = QParamType()
