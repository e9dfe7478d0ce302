import sys

from biserial_walls.cli import main

sys.exit(main())
