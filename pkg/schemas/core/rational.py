from fractions import Fraction
from typing import Union

from pydantic import BeforeValidator, PlainSerializer
from typing_extensions import Annotated

from core.utilities import parse_rational, render_rational


def _validate_rational(value: object) -> Fraction:
    # pydantic only wraps ValueError/AssertionError into ValidationError
    try:
        return parse_rational(value)
    except Exception as e:
        raise ValueError(str(e)) from e

Rational = Annotated[
    Fraction,
    BeforeValidator(_validate_rational),
    PlainSerializer(render_rational, return_type=Union[int, str], when_used="json"),
]
