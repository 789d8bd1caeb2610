from schemas.potentials.potential_table_schema import *
