from schemas.dto.responses.report_responses import *
