#!/usr/bin/env python
import click

from src.commands.numbers import create_numbers_cli
from src.commands.polys import create_polys_cli
from src.commands.verify import create_verify_cli
from src.commands.info import create_info_cli


cli = click.Group(help="Exact tables and identity checks for q-Appell polynomials of type II")
create_numbers_cli(cli)
create_polys_cli(cli)
create_verify_cli(cli)
create_info_cli(cli)

if __name__ == '__main__':
    cli()
