from typing import Union

from parapy.framework.errors import IndexRangeError, InvalidLabelError

SignLike = Union[str, int]


def check_index(name: str, value: int, upper: int) -> int:
    """Validates a 1-based index and returns it 0-based."""
    if not isinstance(value, int) or isinstance(value, bool) or not 1 <= value <= upper:
        raise IndexRangeError(f"[{name}] Index {value} outside 1..{upper}")
    return value - 1


def normalize_sign(sign: SignLike) -> int:
    if sign in ("+", 1):
        return 1
    if sign in ("-", -1):
        return -1
    raise InvalidLabelError(f"Sign must be '+' or '-', got '{sign}'")


def sign_symbol(sign: int) -> str:
    return "+" if sign > 0 else "-"
