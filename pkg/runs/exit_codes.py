"""Process exit codes shared by the four scripts"""

import functools

from parameter_space.exceptions import ParameterError
from simulators.config import ConfigurationError

EXIT_SUCCESS = 0
EXIT_CONFIG_ERROR = 2
EXIT_INSTABILITY = 3  # also: verify suite inconclusive with nothing failed
EXIT_PROPERTY_FAILURE = 4


def guarded(command):
    """
    Wrap a cmd_* function so configuration and parameter errors
    print and map to EXIT_CONFIG_ERROR.
    """

    @functools.wraps(command)
    def wrapper(cfg):
        try:
            return command(cfg)
        except (ConfigurationError, ParameterError) as exc:
            print(f"Configuration error: {exc}")
            return EXIT_CONFIG_ERROR

    return wrapper
