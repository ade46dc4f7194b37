import sys

from coinv.cli import main

sys.exit(main())
