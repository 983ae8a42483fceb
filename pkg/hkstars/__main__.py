# This file is part of hkstars: exact star counting for independent sets
# Use of this file is governed by the license in LICENSE.txt.

"""Run the command-line interface with ``python -m hkstars``

"""

from hkstars.cli import main

if __name__ == "__main__":
    main()
