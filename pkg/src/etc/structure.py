""" utilities related to the project structure, as specified in README.md """
import os
import importlib  # for dynamic import
from .utilities import is_directory, ls
from src.etc.consts import ROOT_DIR, family_dir, suite_dir
from src.etc.exceptions import ModuleError


def get_family_names():
    """gets all available family plug-ins
    :returns: a sorted list of family names
    """
    return ls(
        os.path.join(
            ROOT_DIR, *family_dir),
        filtr=is_directory,
        relative_to_cwd=False)


def get_suite_names():
    """gets all available verification suites
    :returns: a sorted list of suite names
    """
    return ls(
        os.path.join(
            ROOT_DIR, *suite_dir),
        filtr=is_directory,
        relative_to_cwd=False)


def load_family(family):
    """import a family plug-in

    :family: family name. E.g. bernoulli
    :returns: the plug-in module, guaranteed to define build()

    """
    if family not in get_family_names():
        raise ValueError(
            f"family with name {family} is not available")
    mod = importlib.import_module(
        '.'.join([*family_dir, family]))
    if not callable(getattr(mod, 'build', None)):
        raise ModuleError(
            f"no build function implemented in family module {family}")
    return mod


def load_suite(suite):
    """import a verification suite and instantiate it

    :suite: suite name. E.g. group
    :returns: a Suite instance

    """
    if suite not in get_suite_names():
        raise ValueError(
            f"suite with name {suite} is not available")
    mod = importlib.import_module(
        '.'.join([*suite_dir, suite]))
    Suite = getattr(mod, 'Suite', None)
    if not Suite:
        raise ModuleError(
            f"no Suite class implemented in suite module {suite}")
    return Suite()
