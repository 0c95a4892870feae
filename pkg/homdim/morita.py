"""Invariants of basic algebras that any Morita equivalence must preserve.

Agreement of fingerprints is recorded as Morita-consistent; it is not a proof
of equivalence.
"""

import logging
from dataclasses import asdict, dataclass
from itertools import permutations
from typing import Any, Dict, Optional, Tuple

import numpy as np

from algebra import Algebra, cartan_matrix, radical_powers


logger = logging.getLogger(__name__)

RADICAL_DEPTH = 4


@dataclass(frozen=True)
class Fingerprint:
    simples: int
    dim: int
    cartan: Tuple[Tuple[int, ...], ...]
    radical_dims: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["cartan"] = [list(row) for row in self.cartan]
        data["radical_dims"] = list(self.radical_dims)
        return data


def canonical_cartan(cartan: np.ndarray) -> Tuple[Tuple[int, ...], ...]:
    """Lexicographically least form under simultaneous row and column permutation."""
    n = cartan.shape[0]
    best: Optional[Tuple[int, ...]] = None
    for perm in permutations(range(n)):
        candidate = tuple(int(x) for x in cartan[np.ix_(perm, perm)].reshape(-1))
        if best is None or candidate < best:
            best = candidate
    flat = best or ()
    return tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))


def fingerprint(algebra: Algebra) -> Fingerprint:
    cartan = cartan_matrix(algebra)
    return Fingerprint(
        cartan.shape[0],
        algebra.dim,
        canonical_cartan(cartan),
        tuple(radical_powers(algebra, RADICAL_DEPTH)),
    )


def transpose_fingerprint(fp: Fingerprint) -> Fingerprint:
    """The fingerprint of the opposite algebra."""
    cartan = np.array(fp.cartan, dtype=np.int64).reshape(fp.simples, fp.simples)
    return Fingerprint(fp.simples, fp.dim, canonical_cartan(cartan.T), fp.radical_dims)


def morita_consistent(left: Algebra, right: Algebra) -> bool:
    a, b = fingerprint(left), fingerprint(right)
    if a != b:
        logger.debug(f"Fingerprints differ: {a} vs {b}")
    return a == b
