import sys

from weingarten.cli import main

sys.exit(main())
