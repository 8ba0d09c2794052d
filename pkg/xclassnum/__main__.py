import sys

from xclassnum.cli import main

sys.exit(main())
