from schemas.core.rational import *
