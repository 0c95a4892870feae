"""Injective, global and virtual dimension of split basic algebras."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from algebra import Algebra, opposite
from core.exceptions import GorensteinAnomaly, HomologicalError, NotGorensteinWithinCutoff
from modcat import (
    DEFAULT_CUTOFF,
    IsoVerdict,
    Module,
    dual_module,
    ext,
    first_syzygy,
    is_isomorphic,
    regular_module,
    simple_modules,
    with_vertices,
)


logger = logging.getLogger(__name__)

LEFT = "left"
RIGHT = "right"


class AboveCutoff:
    """Marker for a dimension that was not reached within the cutoff."""

    _instance: Optional["AboveCutoff"] = None

    def __new__(cls) -> "AboveCutoff":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "AboveCutoff"


ABOVE_CUTOFF = AboveCutoff()

Dimension = Union[int, AboveCutoff]


def is_finite(value: Dimension) -> bool:
    return not isinstance(value, AboveCutoff)


def format_dimension(value: Dimension, cutoff: int) -> str:
    return str(value) if is_finite(value) else f">{cutoff}"


@dataclass(frozen=True)
class Resolution:
    """Outcome of walking the syzygies of one module."""

    projective_dimension: Dimension
    period: Optional[int] = None
    dims: Tuple[int, ...] = ()


@dataclass(frozen=True)
class DimensionReport:
    left_injective: Dimension
    right_injective: Dimension
    global_dimension: Dimension
    cutoff: int

    @property
    def is_gorenstein(self) -> bool:
        return (
            is_finite(self.left_injective)
            and is_finite(self.right_injective)
            and self.left_injective == self.right_injective
        )

    @property
    def anomaly(self) -> bool:
        """Both sides finite but different."""
        return (
            is_finite(self.left_injective)
            and is_finite(self.right_injective)
            and self.left_injective != self.right_injective
        )

    @property
    def virtual_dimension(self) -> Dimension:
        return self.left_injective if self.is_gorenstein else ABOVE_CUTOFF


def resolve(module: Module, cutoff: int = DEFAULT_CUTOFF, detect_period: bool = True) -> Resolution:
    """Syzygies of M until one vanishes, recurs up to isomorphism, or the cutoff is hit."""
    current = with_vertices(module)
    seen: List[Module] = []
    dims = [current.dim]
    for k in range(cutoff + 1):
        nxt = first_syzygy(current)
        dims.append(nxt.dim)
        if nxt.dim == 0:
            return Resolution(k, None, tuple(dims))
        if detect_period:
            for j, earlier in enumerate(seen):
                if is_isomorphic(earlier, nxt) is IsoVerdict.ISOMORPHIC:
                    logger.debug(f"Ω^{k + 1}({module!r}) ≅ Ω^{j + 1}: period {k - j}")
                    return Resolution(ABOVE_CUTOFF, k - j, tuple(dims))
        seen.append(nxt)
        current = nxt
    return Resolution(ABOVE_CUTOFF, None, tuple(dims))


def dual_of_regular(algebra: Algebra, side: str) -> Module:
    """D(A) as a module over the opposite of the side's algebra."""
    if side == LEFT:
        return dual_module(regular_module(algebra))
    if side == RIGHT:
        return dual_module(regular_module(opposite(algebra)))
    raise HomologicalError(f"Unknown side {side!r}")


def _ext_bound(algebra: Algebra, side: str, limit: int) -> int:
    """Largest i <= limit with Ext^i(S, A) != 0 for some simple S on that side."""
    base = algebra if side == LEFT else opposite(algebra)
    base = with_vertices(regular_module(base)).algebra
    target = regular_module(base)
    top = 0
    for s in simple_modules(base):
        for i in range(1, limit + 1):
            if ext(s, target, i, max(limit, DEFAULT_CUTOFF)):
                top = max(top, i)
    return top


def injective_dimension(algebra: Algebra, side: str = LEFT, cutoff: int = DEFAULT_CUTOFF,
                        cross_check: bool = True) -> Dimension:
    """injdim of A on one side, as pd of D(A) over the opposite algebra."""
    value = resolve(dual_of_regular(algebra, side), cutoff, detect_period=False).projective_dimension
    if cross_check and is_finite(value):
        other = _ext_bound(algebra, side, value + 1)
        if other != value:
            raise GorensteinAnomaly(f"{side} injdim of {algebra!r}: pd of D(A) gives {value}, Ext gives {other}")
    logger.debug(f"{side} injdim {algebra!r} = {value}")
    return value


def global_dimension(algebra: Algebra, cutoff: int = DEFAULT_CUTOFF) -> Dimension:
    """Maximum projective dimension of the simples; periodic syzygies count as infinite."""
    base = with_vertices(regular_module(algebra)).algebra
    top = 0
    for s in simple_modules(base):
        res = resolve(s, cutoff)
        if not is_finite(res.projective_dimension):
            if res.period:
                logger.debug(f"{s!r} has periodic syzygies with period {res.period}")
            return ABOVE_CUTOFF
        top = max(top, res.projective_dimension)
    return top


def dimension_report(algebra: Algebra, cutoff: int = DEFAULT_CUTOFF) -> DimensionReport:
    report = DimensionReport(
        injective_dimension(algebra, LEFT, cutoff),
        injective_dimension(algebra, RIGHT, cutoff),
        global_dimension(algebra, cutoff),
        cutoff,
    )
    if report.anomaly:
        logger.warning(f"{algebra!r}: left and right injective dimensions differ: {report}")
    return report


def virtual_dimension(algebra: Algebra, cutoff: int = DEFAULT_CUTOFF) -> int:
    """The common injective dimension of A on both sides."""
    left = injective_dimension(algebra, LEFT, cutoff)
    right = injective_dimension(algebra, RIGHT, cutoff)
    if not is_finite(left) or not is_finite(right) or left != right:
        raise NotGorensteinWithinCutoff(
            f"{algebra!r}: injdim left {format_dimension(left, cutoff)}, right {format_dimension(right, cutoff)}"
        )
    return left
