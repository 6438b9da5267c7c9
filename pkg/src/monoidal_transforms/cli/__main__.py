import argparse
import logging
import sys

import marshmallow

from .bench import BenchCommand
from .check import CheckCommand
from .transform import TransformCommand


logger = logging.getLogger(__name__)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        add_help=False,
        allow_abbrev=False,
        prog='monoidal-transforms',
        formatter_class=argparse.RawTextHelpFormatter,
    )
    parser.set_defaults(cls=None)
    subparsers = parser.add_subparsers(
        help='sub-command help',
    )

    TransformCommand._argparse_init_sub(subparsers)
    CheckCommand._argparse_init_sub(subparsers)
    BenchCommand._argparse_init_sub(subparsers)

    args = parser.parse_args(argv)
    if not args.cls:
        parser.print_help()
        parser.exit(2)

    try:
        return args.cls(argparser=parser, **vars(args))()
    except (OSError, ValueError, marshmallow.ValidationError) as e:
        logger.error('%s', e)
        return 2


if __name__ == '__main__':
    sys.exit(main())
