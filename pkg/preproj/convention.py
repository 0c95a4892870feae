"""Index convention between Weyl elements and torsion ideals.

For x in W the torsion pair (C_x, C^x) is (Fac I_u, Sub Π/I_u) with
u = u(x). The map u lives only here; every other module asks for it.

    w0-inverse  u(x) = w0 x^{-1}   (default: C_e = 0, C^e = mod Π, C_{w0} = mod Π)
    w0-left     u(x) = w0 x
    inverse     u(x) = x^{-1}
    identity    u(x) = x
"""

from typing import Callable, Dict

from core.exceptions import ConfigError
from weyl import WeylElement, longest_element

DEFAULT_CONVENTION = "w0-inverse"

_CONVENTIONS: Dict[str, Callable[[WeylElement], WeylElement]] = {
    "w0-inverse": lambda x: longest_element(x.dynkin) * x.inverse(),
    "w0-left": lambda x: longest_element(x.dynkin) * x,
    "inverse": lambda x: x.inverse(),
    "identity": lambda x: x,
}


def convention_names() -> list:
    return list(_CONVENTIONS)


def check_convention(name: str) -> str:
    if name not in _CONVENTIONS:
        raise ConfigError(f"Unknown index convention {name!r}; choose from {convention_names()}")
    return name


def ideal_index(x: WeylElement, convention: str = DEFAULT_CONVENTION) -> WeylElement:
    """The element u with C_x = Fac(I_u)."""
    return _CONVENTIONS[check_convention(convention)](x)
