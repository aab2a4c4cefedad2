import sys

from twinsort.cli import main

sys.exit(main())
