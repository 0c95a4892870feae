"""Primitive idempotents, basicness and Cartan matrices.

Splitting happens in the semisimple quotient B = A/rad: a random element of a
corner eBe has a minimal polynomial whose coprime factors give orthogonal
idempotents (Chinese remainder theorem). Primitive idempotents of B are then
lifted one at a time through the radical by Newton iteration.
"""

import logging
from typing import Dict, List, Optional, Sequence

import numpy as np

from core.exceptions import AlgebraError, NonSplit, NotBasic
from linalg import factor_polynomial, orthogonal_idempotent_polynomials, stack_rows
from .algebra import Algebra
from .ideals import quotient_algebra, radical


logger = logging.getLogger(__name__)

SPLIT_ATTEMPTS = 20

_WITH_IDEMPOTENTS: Dict[str, Algebra] = {}


def minimal_polynomial(algebra: Algebra, x: np.ndarray, unit: np.ndarray) -> List:
    """Monic minimal polynomial of x inside the corner with identity ``unit``."""
    fld = algebra.field
    powers = [fld.reduce(unit)]
    while True:
        nxt = algebra.mul(powers[-1], x)
        basis = stack_rows(fld, powers, algebra.dim)
        coeffs = fld.solve(basis.T, nxt)
        if coeffs is not None:
            # x^k = sum c_i x^i
            return [fld.scalar(1)] + [fld.reduce(-c) for c in coeffs[::-1]]
        powers.append(nxt)
        if len(powers) > algebra.dim + 1:
            raise AlgebraError("Minimal polynomial degree exceeds the algebra dimension")


def evaluate_polynomial(algebra: Algebra, coeffs: Sequence, x: np.ndarray, unit: np.ndarray) -> np.ndarray:
    fld = algebra.field
    result = algebra.zero()
    for c in coeffs:
        result = fld.reduce(algebra.mul(result, x) + fld.reduce(unit * c))
    return result


def _split_semisimple(algebra: Algebra, e: np.ndarray, rng: np.random.Generator) -> List[np.ndarray]:
    fld = algebra.field
    if algebra.corner(e, e).dim == 1:
        return [e]
    last_factors = None
    for attempt in range(SPLIT_ATTEMPTS):
        y = fld.random(algebra.dim, rng)
        x = algebra.mul(algebra.mul(e, y), e)
        factors = factor_polynomial(fld, minimal_polynomial(algebra, x, e))
        if len(factors) > 1:
            polys = orthogonal_idempotent_polynomials(fld, factors)
            pieces = [evaluate_polynomial(algebra, p, x, e) for p in polys]
            logger.debug(f"Split corner into {len(pieces)} pieces after {attempt + 1} attempt(s)")
            result: List[np.ndarray] = []
            for piece in pieces:
                result.extend(_split_semisimple(algebra, piece, rng))
            return result
        last_factors = factors
    if last_factors and len(last_factors[0][0]) > 2:
        raise NonSplit(
            f"Corner of dimension {algebra.corner(e, e).dim} only produced irreducible "
            f"minimal polynomials of degree {len(last_factors[0][0]) - 1}"
        )
    raise NonSplit(f"Could not split a corner of dimension {algebra.corner(e, e).dim}")


def lift_idempotent(algebra: Algebra, y: np.ndarray, max_steps: Optional[int] = None) -> np.ndarray:
    """Newton iteration e <- 3e^2 - 2e^3 from an idempotent-modulo-radical y."""
    fld = algebra.field
    e = fld.reduce(y)
    steps = max_steps if max_steps is not None else algebra.dim.bit_length() + 2
    for _ in range(steps):
        e2 = algebra.mul(e, e)
        if np.array_equal(e2, e):
            return e
        e3 = algebra.mul(e2, e)
        e = fld.reduce(3 * e2 - 2 * e3)
    if not algebra.is_idempotent(e):
        raise AlgebraError("Idempotent lifting did not converge")
    return e


def primitive_idempotents(algebra: Algebra, rng: Optional[np.random.Generator] = None) -> List[np.ndarray]:
    """Complete set of orthogonal primitive idempotents summing to 1."""
    rng = rng if rng is not None else np.random.default_rng(0)
    fld = algebra.field
    rad = radical(algebra)
    top = quotient_algebra(algebra, rad) if rad.dim else algebra
    proj = rad.carrier.quotient_projection()
    emb = rad.carrier.complement_embedding()
    targets = _split_semisimple(top, top.unit, rng)
    if len(targets) == 1:
        return [fld.reduce(algebra.unit)]
    lifted: List[np.ndarray] = []
    rest = fld.reduce(algebra.unit)
    for f in targets[:-1]:
        y = fld.matmul(emb, f) if rad.dim else f
        y = algebra.mul(algebra.mul(rest, y), rest)
        e = lift_idempotent(algebra, y)
        if not np.array_equal(fld.matmul(proj, e) if rad.dim else e, f):
            raise AlgebraError("Lifted idempotent does not reduce to its target")
        lifted.append(e)
        rest = fld.reduce(rest - e)
    lifted.append(rest)
    logger.debug(f"{algebra!r}: {len(lifted)} primitive idempotents")
    return lifted


def _key_rng(algebra: Algebra) -> np.random.Generator:
    return np.random.default_rng(int(algebra.key[:16], 16))


def ensure_idempotents(algebra: Algebra) -> Algebra:
    """The algebra itself if it carries idempotents, else a copy with primitive ones.

    Copies are cached by algebra key and split with a generator seeded from
    that key, so the vertex order does not depend on which caller came first.
    """
    if algebra.idempotents:
        return algebra
    if algebra.key not in _WITH_IDEMPOTENTS:
        _WITH_IDEMPOTENTS[algebra.key] = algebra.with_idempotents(primitive_idempotents(algebra, _key_rng(algebra)))
    return _WITH_IDEMPOTENTS[algebra.key]


def clear_idempotent_cache() -> None:
    _WITH_IDEMPOTENTS.clear()


def is_basic(algebra: Algebra) -> bool:
    """Split basic iff A/rad is a product of copies of the field."""
    algebra = ensure_idempotents(algebra)
    return algebra.dim - algebra.radical.dim == len(algebra.idempotents)


def require_basic(algebra: Algebra) -> Algebra:
    algebra = ensure_idempotents(algebra)
    if not is_basic(algebra):
        raise NotBasic(
            f"{algebra!r}: dim A/rad = {algebra.dim - algebra.radical.dim} but "
            f"{len(algebra.idempotents)} primitive idempotents"
        )
    return algebra


def cartan_matrix(algebra: Algebra) -> np.ndarray:
    """Entry (i, j) = dim e_i A e_j."""
    algebra = ensure_idempotents(algebra)
    idems = algebra.idempotents
    cartan = np.zeros((len(idems), len(idems)), dtype=np.int64)
    for i, ei in enumerate(idems):
        for j, ej in enumerate(idems):
            cartan[i, j] = algebra.corner(ei, ej).dim
    return cartan
