"""serialize number and polynomial tables as json, csv or latex

Every emitter renders the same OutputRecord and serializes scalars through
format_scalar, so the three formats agree value for value.
"""
import csv
import io
import json
from fractions import Fraction
from typing import List, NamedTuple

from src.etc.consts import coeff_delim, csv_delim
from src.etc.utilities import format_scalar, latex_scalar


class OutputRecord(NamedTuple):
    q: str
    family: str
    order: int
    items: List[dict]  # {n, value} for numbers, {n, coeffs} for polynomials


def number_record(ctx, family, order, values):
    return OutputRecord(format_scalar(ctx.q), family, order,
                        [{'n': n, 'value': format_scalar(v)} for n, v in enumerate(values)])


def poly_record(ctx, family, order, polys):
    """coefficients ascending in x, padded with zeros up to the degree n

    :polys: f_0 .. f_N as Poly
    :returns: an OutputRecord

    """
    items = [{'n': n, 'coeffs': [format_scalar(p.coeff(i)) for i in range(n + 1)]}
             for n, p in enumerate(polys)]
    return OutputRecord(format_scalar(ctx.q), family, order, items)


def to_json(record):
    # keys in declaration order, never sorted by the encoder
    obj = {'q': record.q, 'family': record.family, 'order': record.order, 'items': record.items}
    return json.dumps(obj, indent=2, ensure_ascii=True)


def to_csv(record):
    out = io.StringIO()
    writer = csv.writer(out, delimiter=csv_delim, lineterminator='\n')
    numbers = bool(record.items) and 'value' in record.items[0]
    writer.writerow(['q', 'family', 'order', 'n', 'value' if numbers else 'coeffs'])
    for item in record.items:
        cell = item['value'] if numbers else coeff_delim.join(item['coeffs'])
        writer.writerow([record.q, record.family, record.order, item['n'], cell])
    return out.getvalue().rstrip('\n')


def to_latex(record):
    """ one tabular per family; polynomial rows carry one column per power of x """
    numbers = bool(record.items) and 'value' in record.items[0]
    width = 1 if numbers else max((len(item['coeffs']) for item in record.items), default=1)
    header = ['$n$'] + (['value'] if numbers else [f"$x^{{{i}}}$" for i in range(width)])
    lines = [
        f"% {record.family}, order {record.order}, q = {record.q}",
        r'\begin{tabular}{' + 'r' * (width + 1) + '}',
        ' & '.join(header) + r' \\ \hline',
    ]
    for item in record.items:
        cells = [item['value']] if numbers else item['coeffs'] + [''] * (width - len(item['coeffs']))
        cells = [f"${latex_scalar(Fraction(c))}$" if c else '' for c in cells]
        lines.append(' & '.join([str(item['n'])] + cells) + r' \\')
    lines.append(r'\end{tabular}')
    return '\n'.join(lines)


EMITTERS = {
    'json': to_json,
    'csv': to_csv,
    'latex': to_latex,
}


def emit(record, fmt):
    return EMITTERS[fmt](record)
