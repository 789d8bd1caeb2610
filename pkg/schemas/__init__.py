from schemas.core import *
from schemas.differentiability import *
from schemas.dto import *
from schemas.generators import *
from schemas.lipschitz import *
from schemas.metric import *
from schemas.molecules import *
from schemas.oracles import *
from schemas.potentials import *
from schemas.transport import *
