from repositories.json_document_repository import JsonDocumentRepository, dumps_canonical
from repositories.documents import (
    element_documents,
    function_documents,
    space_documents,
    system_documents,
)
