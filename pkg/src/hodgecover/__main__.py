import sys

from hodgecover.cli import main

sys.exit(main())
