import sys

from ncbell.cli import main

sys.exit(main())
