import sys

from asm3.cli import main

sys.exit(main())
