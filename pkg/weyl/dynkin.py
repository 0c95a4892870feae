"""Simply-laced Dynkin types and their root systems.

Vertex labels: A_n is the path 1-2-...-n. D_n and E_n follow Bourbaki:
D_n has the chain 1-...-(n-2) with n-1 and n both attached to n-2;
E_n has the chain 1-3-4-...-n with 2 attached to 4.
"""

import logging
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from core.exceptions import WeylError


logger = logging.getLogger(__name__)

_E_ORDERS = {6: 51840, 7: 2903040, 8: 696729600}


@dataclass(frozen=True)
class DynkinType:
    """A simply-laced Dynkin type: family in {A, D, E} and rank n."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family == "A" and self.rank >= 1:
            return
        if self.family == "D" and self.rank >= 4:
            return
        if self.family == "E" and self.rank in (6, 7, 8):
            return
        raise WeylError(f"Unsupported Dynkin type {self.family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        match = re.fullmatch(r"\s*([ADEade])_?(\d+)\s*", text)
        if not match:
            raise WeylError(f"Cannot parse Dynkin type: {text!r}")
        return cls(match.group(1).upper(), int(match.group(2)))

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def __str__(self) -> str:
        return self.label

    @property
    def edges(self) -> List[Tuple[int, int]]:
        """Edges (i, j) with i < j, 1-based labels."""
        n = self.rank
        if self.family == "A":
            return [(i, i + 1) for i in range(1, n)]
        if self.family == "D":
            return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
        chain = [1] + list(range(3, n + 1))
        return sorted(list(zip(chain, chain[1:])) + [(2, 4)])

    @property
    def group_order(self) -> int:
        n = self.rank
        if self.family == "A":
            return math.factorial(n + 1)
        if self.family == "D":
            return 2 ** (n - 1) * math.factorial(n)
        return _E_ORDERS[n]

    def cartan_matrix(self) -> np.ndarray:
        n = self.rank
        cartan = 2 * np.eye(n, dtype=np.int64)
        for i, j in self.edges:
            cartan[i - 1, j - 1] = cartan[j - 1, i - 1] = -1
        return cartan


@lru_cache(maxsize=None)
def simple_reflections(dynkin: DynkinType) -> Tuple[np.ndarray, ...]:
    """Matrices of s_1..s_n acting on root-lattice coordinates (columns)."""
    cartan = dynkin.cartan_matrix()
    n = dynkin.rank
    mats = []
    for i in range(n):
        s = np.eye(n, dtype=np.int64)
        s[i, :] -= cartan[i, :]
        s.setflags(write=False)
        mats.append(s)
    return tuple(mats)


@lru_cache(maxsize=None)
def positive_roots(dynkin: DynkinType) -> np.ndarray:
    """Positive roots as rows of simple-root coordinates, ordered by height."""
    refl = simple_reflections(dynkin)
    n = dynkin.rank
    seen = {tuple(row) for row in np.eye(n, dtype=np.int64)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for root in frontier:
            vec = np.array(root, dtype=np.int64)
            for s in refl:
                image = tuple(int(x) for x in s @ vec)
                if min(image) >= 0 and image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    roots = sorted(seen, key=lambda r: (sum(r), r))
    out = np.array(roots, dtype=np.int64)
    out.setflags(write=False)
    logger.debug(f"{dynkin.label}: {len(roots)} positive roots")
    return out
