import click

from src.etc.consts import DEFAULT_N, EXIT_OK, EXIT_VERIFY_FAILED
from src.etc.exceptions import AppellPropertyError
from src.etc.structure import get_suite_names, load_suite
from src.etc.utilities import Q_CONTEXT, pif, plist
from src.suites import CheckResult, Report

ALL_SUITES = 'all'


def run_suite(name, ctx, n, verbose=False):
    """run one suite, turning a construction-time oracle failure into a failed check

    :returns: a Report

    """
    suite = load_suite(name)
    try:
        return suite.run(ctx, n, name=name, verbose=verbose)
    except AppellPropertyError as e:
        return Report(name, ctx.q, n, [CheckResult("construction", False, str(e))])


def describe(report):
    """ the report lines of one suite, first failure included """
    passed = sum(1 for r in report.results if r.gating and r.ok)
    total = sum(1 for r in report.results if r.gating)
    lines = [f"{report.suite}: {'ok' if report.ok else 'FAILED'} ({passed}/{total} checks, q={report.q}, n={report.n})"]
    for note in report.notes():
        lines.append(f"  note: {note.label}: {note.detail}")
    failure = report.first_failure()
    if failure:
        lines.append(f"  first failure: {failure.label}: {failure.detail}")
    return lines


def create_verify_cli(cli):

    @click.option("-s", "--suite", type=click.Choice([*get_suite_names(), ALL_SUITES]), required=True)
    @click.option("--q", "ctx", type=Q_CONTEXT, required=True, help="q as an exact rational, e.g. 3/5")
    @click.option("-n", "--n", "n", type=click.IntRange(min=0), default=DEFAULT_N, show_default=True,
                  help="the highest degree verified")
    @click.option("--verbose/--silent", default=False)
    @cli.command('verify')
    @click.pass_context
    def verify(click_ctx, suite, ctx, n, verbose):
        """ verify identities exactly; exit 1 on the first failing suite """
        names = get_suite_names() if suite == ALL_SUITES else [suite]
        reports = []
        for name in names:
            pif(verbose, f"running suite {name}...")
            reports.append(run_suite(name, ctx, n, verbose))
        for report in reports:
            plist(describe(report))
        click_ctx.exit(EXIT_OK if all(r.ok for r in reports) else EXIT_VERIFY_FAILED)
