import sys

from diracbell.entrypoint import main

sys.exit(main())
