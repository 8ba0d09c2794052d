"""
Defaults for the `xclassnum` command line. Nothing here is read from the environment;
command-line flags override every value, and code can override them by injecting its own
`ClassnumSettings` instance:

>>> with ClassnumSettings(default_workers=4):
...     classnum_settings.default_workers
4
"""
from xsettings import BaseSettings


class ClassnumSettings(BaseSettings):
    default_workers: int = 1
    """ Worker processes used by `verify` when `--workers` is not given. """

    default_format: str = 'table'
    """ One of `table`, `csv`, `json`. """

    chunk_size: int = 64
    """ Primes handed to a worker process at a time; results are still emitted in order. """


classnum_settings = ClassnumSettings.proxy()
""" Proxy to the currently injected `ClassnumSettings`. """
