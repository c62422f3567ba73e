import sys

from dponiche.cli import main

sys.exit(main())
