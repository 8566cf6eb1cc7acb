import sys

from polymg.labcli import main

sys.exit(main())
