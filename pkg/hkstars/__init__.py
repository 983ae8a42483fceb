# This file is part of hkstars: exact star counting for independent sets
# Use of this file is governed by the license in LICENSE.txt.
