import sys

from ladderwood.api.cli import main


sys.exit(main())
