"""Logging and warning setup for the command line. Library modules only create loggers."""

import logging
import warnings

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'


def configure_logging(verbose: bool = False) -> None:
    """
    Configure the root logger once per process.

    Args:
        verbose: DEBUG output when True, warnings only otherwise
    """
    level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)

    # sympy's own loggers and deprecation chatter are not useful on the command line
    logging.getLogger('sympy').setLevel(logging.ERROR)
    warnings.filterwarnings('ignore', category=DeprecationWarning, module='sympy')
    warnings.filterwarnings('ignore', category=FutureWarning)
