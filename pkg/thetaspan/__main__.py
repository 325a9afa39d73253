import sys

from thetaspan.main import main

sys.exit(main())
