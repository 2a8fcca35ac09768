import sys

from hurwitzlommel.cli import main

sys.exit(main())
