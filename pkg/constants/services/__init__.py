from constants.services.differentiability import *
from constants.services.generators import *
from constants.services.metric_core import *
from constants.services.oracles import *
