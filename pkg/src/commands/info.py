import click
from src.etc.utilities import plist
from src.etc.structure import get_family_names, get_suite_names, load_family, load_suite


def create_info_cli(cli):
    info = click.Group('info', help="Show information related to the families and suites")

    @info.command('families')
    def info_families():
        """ list the family plug-ins with their parameters """
        for name in get_family_names():
            mod = load_family(name)
            params = ', '.join(getattr(mod, 'PARAMETERS', ())) or 'none'
            click.echo(f"{name}: {getattr(mod, 'DESCRIPTION', '')}")
            click.echo(f"\tparameters: {params}")

    @info.command('suites')
    def info_suites():
        """ list the verification suites """
        for name in get_suite_names():
            click.echo(f"{name}: {load_suite(name).description}")

    @info.command('all')
    def info_all():
        click.echo("Families:")
        plist(get_family_names(), indent="\t")
        click.echo("Suites:")
        plist(get_suite_names(), indent="\t")

    cli.add_command(info)
