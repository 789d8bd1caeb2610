from repositories.json_document_repository import JsonDocumentRepository
from schemas import ElementDocument, LipschitzFunctionDocument, SpaceDocument, SystemDocument

space_documents = JsonDocumentRepository[SpaceDocument](SpaceDocument)
system_documents = JsonDocumentRepository[SystemDocument](SystemDocument)
element_documents = JsonDocumentRepository[ElementDocument](ElementDocument)
function_documents = JsonDocumentRepository[LipschitzFunctionDocument](LipschitzFunctionDocument)
