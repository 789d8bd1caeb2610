from schemas.molecules.molecule_system_schema import *
