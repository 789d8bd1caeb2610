from pathlib import Path
from typing import Any, Generic, Type, TypeVar, Union

import orjson
from pydantic import BaseModel, ValidationError

from core.exceptions import ParseError
from core.logger import logger
from core.utilities import new_request_id

SchemaType = TypeVar("SchemaType", bound=BaseModel)

CANONICAL_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2 | orjson.OPT_APPEND_NEWLINE


def dumps_canonical(data: Any) -> bytes:
    """
    Function to serialize JSON-ready data with sorted keys and two-space indentation
    :param data:
    :return:
    """
    return orjson.dumps(data, option=CANONICAL_OPTIONS)

class JsonDocumentRepository(Generic[SchemaType]):
    def __init__(self, schema: Type[SchemaType]):
        """
        Initialize the repository with the document schema
        :param schema:
        """
        self.schema = schema

    def loads(self, raw: Union[bytes, str], source: str = "<memory>") -> SchemaType:
        """
        Parse and validate one document
        :param raw:
        :param source: name used in error details
        :return:
        """
        try:
            data = orjson.loads(raw)
        except orjson.JSONDecodeError as e:
            raise ParseError(f"{source}: invalid JSON ({e}).") from e
        try:
            return self.schema.model_validate(data)
        except ValidationError as e:
            req_id = new_request_id()
            logger.error(f"JsonDocumentRepository.loads: {req_id} {source} failed {self.schema.__name__}")
            first = e.errors()[0]
            location = ".".join(str(part) for part in first["loc"])
            raise ParseError(
                f"{source}: {location or self.schema.__name__}: {first['msg']} ({req_id})",
                context=e.errors(),
            ) from e

    def load(self, path: Union[str, Path]) -> SchemaType:
        """
        Read a document from a file
        :param path:
        :return:
        """
        try:
            raw = Path(path).read_bytes()
        except OSError as e:
            raise ParseError(f"{path}: cannot read ({e.strerror}).") from e
        return self.loads(raw, source=str(path))

    def dumps(self, obj: SchemaType) -> bytes:
        """
        Serialize a document canonically
        :param obj:
        :return:
        """
        return dumps_canonical(obj.model_dump(mode="json", exclude_none=True))

    def save(self, path: Union[str, Path], obj: SchemaType) -> Path:
        """
        Write a document to a file
        :param path:
        :param obj:
        :return: the written path
        """
        target = Path(path)
        target.write_bytes(self.dumps(obj))
        return target
