import sys

from liechar.cli import main

sys.exit(main())
