from schemas.metric.metric_space_schema import *
