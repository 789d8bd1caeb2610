from schemas.dto.requests.document_requests import *
from schemas.dto.requests.run_config_requests import *
