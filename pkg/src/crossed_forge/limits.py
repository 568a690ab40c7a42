"""Size guards for exhaustive enumeration.

``CROSSED_FORGE_MAX_ENUM``, when set, replaces all three limits with its value.
"""
import os

from .errors import SizeGuardError

MAX_RING_ELEMENTS = 10**4
MAX_GROUP_ORDER = 24
MAX_PRODUCT_ELEMENTS = 10**6

ENV_VAR = "CROSSED_FORGE_MAX_ENUM"


def _override():
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise SizeGuardError(f"{ENV_VAR} must be an integer, got {raw!r}") from None


def max_ring_elements():
    v = _override()
    return MAX_RING_ELEMENTS if v is None else v


def max_group_order():
    v = _override()
    return MAX_GROUP_ORDER if v is None else v


def max_product_elements():
    v = _override()
    return MAX_PRODUCT_ELEMENTS if v is None else v


def check_ring_size(size, what="ring"):
    if size > max_ring_elements():
        raise SizeGuardError(f"{what} has {size} elements; exhaustive limit is {max_ring_elements()}")


def check_group_order(order, what="group"):
    if order > max_group_order():
        raise SizeGuardError(f"{what} has order {order}; exhaustive limit is {max_group_order()}")


def check_product_size(size, what="crossed product"):
    if size > max_product_elements():
        raise SizeGuardError(f"{what} has {size} elements; exhaustive limit is {max_product_elements()}")
