import sys
from typing import List, Optional

from cli.routes import lipfree
from constants import general as general_constants
from core.configs import settings


def main(argv: Optional[List[str]] = None) -> int:
    """
    Function to run one CLI invocation
    :param argv: arguments after the program name, sys.argv[1:] when None
    :return: 0 success, 1 negative verdict, 2 input error, 3 certificate mismatch
    """
    try:
        lipfree.main(args=argv, prog_name=settings.APP_NAME, standalone_mode=True)
    except SystemExit as e:
        if e.code is None:
            return general_constants.EXIT_CODE_SUCCESS
        if isinstance(e.code, int):
            return e.code
        return general_constants.EXIT_CODE_INPUT_ERROR
    return general_constants.EXIT_CODE_SUCCESS


if __name__ == "__main__":
    sys.exit(main())
