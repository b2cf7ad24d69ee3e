from ._misc import logo, num_threads, print_header, runs_on, verbosity
from ._save import dumps, flatten, save

__all__ = [
    "dumps",
    "flatten",
    "logo",
    "num_threads",
    "print_header",
    "runs_on",
    "save",
    "verbosity",
]
