from schemas.dto.responses import *
from schemas.dto.requests import *
