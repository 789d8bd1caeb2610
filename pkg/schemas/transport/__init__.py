from schemas.transport.transport_certificate_schema import *
