"""Default size caps.  Every cap is overridable per call; these are the defaults."""

# Largest group order group_generate and the product constructions will enumerate.
ORDER_CAP = 5000

# Largest group order for full subgroup-lattice enumeration.
LATTICE_ORDER_CAP = 400

# Largest number of subgroups enumeration will collect before aborting.
SUBGROUP_CAP = 20000

# Largest order for which the generator-image isomorphism search runs.
ISO_SEARCH_CAP = 200

# Largest chief-factor order for which the equivariant-isomorphism search runs.
SECTION_ISO_CAP = 64

# Cayley tables are materialized only up to this order; larger groups
# multiply elements by composing permutations directly.
TABLE_LIMIT = 1024
