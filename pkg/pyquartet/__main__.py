import sys

from pyquartet.cli import main

sys.exit(main())
