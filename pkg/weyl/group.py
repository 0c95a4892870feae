"""Weyl group elements as integer matrices on the root lattice."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence

import numpy as np

from core.exceptions import EnumerationBoundExceeded, WeylError
from .dynkin import DynkinType, positive_roots, simple_reflections


logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_BOUND = 100_000


@dataclass(frozen=True, eq=False)
class WeylElement:
    """An element of W(Q); equality is equality of the action matrices."""

    dynkin: DynkinType
    matrix: np.ndarray

    def __post_init__(self) -> None:
        self.matrix.setflags(write=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.dynkin == other.dynkin and np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash((self.dynkin, self.matrix.tobytes()))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        _check_same_type(self, other)
        return WeylElement(self.dynkin, self.matrix @ other.matrix)

    def __repr__(self) -> str:
        return f"WeylElement({self.dynkin.label}, [{format_word(reduced_word(self))}])"

    @property
    def length(self) -> int:
        return length(self)

    def inverse(self) -> "WeylElement":
        return element_from_word(self.dynkin, list(reversed(reduced_word(self))))


def _check_same_type(u: WeylElement, v: WeylElement) -> None:
    if u.dynkin != v.dynkin:
        raise WeylError(f"Type mismatch: {u.dynkin.label} vs {v.dynkin.label}")


def identity(dynkin: DynkinType) -> WeylElement:
    return WeylElement(dynkin, np.eye(dynkin.rank, dtype=np.int64))


def parse_word(text: str) -> List[int]:
    """Parse ``"1,3,2,1,3"``; the empty string is the empty word."""
    text = text.strip()
    if text in ("", "e", "[]"):
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as e:
        raise WeylError(f"Invalid word: {text!r}") from e


def format_word(word: Sequence[int]) -> str:
    return ",".join(str(i) for i in word)


def element_from_word(dynkin: DynkinType, word: Iterable[int]) -> WeylElement:
    """Product s_{i1} s_{i2} ... s_{ik} of simple reflections."""
    refl = simple_reflections(dynkin)
    mat = np.eye(dynkin.rank, dtype=np.int64)
    for i in word:
        if not 1 <= i <= dynkin.rank:
            raise WeylError(f"Index {i} out of range for {dynkin.label}")
        mat = mat @ refl[i - 1]
    return WeylElement(dynkin, mat)


def simple_reflection(dynkin: DynkinType, i: int) -> WeylElement:
    return element_from_word(dynkin, [i])


def length(w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    images = positive_roots(w.dynkin) @ w.matrix.T
    return int(np.count_nonzero(images.min(axis=1) < 0))


def has_left_descent(w: WeylElement, i: int) -> bool:
    """l(s_i w) < l(w), i.e. w^{-1}(alpha_i) is negative."""
    return length(simple_reflection(w.dynkin, i) * w) < length(w)


def reduced_word(w: WeylElement) -> List[int]:
    """Leftmost-descent greedy reduced word."""
    word: List[int] = []
    current = w
    remaining = length(current)
    while remaining:
        for i in range(1, w.dynkin.rank + 1):
            candidate = simple_reflection(w.dynkin, i) * current
            cand_len = length(candidate)
            if cand_len < remaining:
                word.append(i)
                current, remaining = candidate, cand_len
                break
    return word


def condition_P(v: WeylElement, w: WeylElement) -> bool:
    """w = v'v with l(w) = l(v') + l(v)."""
    _check_same_type(v, w)
    return length(w * v.inverse()) + length(v) == length(w)


def left_weak_leq(v: WeylElement, w: WeylElement) -> bool:
    """v is a suffix of w: the relation tested by condition (P)."""
    return condition_P(v, w)


def right_weak_leq(v: WeylElement, w: WeylElement) -> bool:
    """v is a prefix of w: l(v) + l(v^{-1} w) = l(w)."""
    _check_same_type(v, w)
    return length(v) + length(v.inverse() * w) == length(w)


def demazure_product(u: WeylElement, v: WeylElement) -> WeylElement:
    """Monoid product with s*w = sw if l(sw) > l(w), else w."""
    _check_same_type(u, v)
    result = v
    for i in reversed(reduced_word(u)):
        s = simple_reflection(u.dynkin, i)
        candidate = s * result
        if length(candidate) > length(result):
            result = candidate
    return result


@lru_cache(maxsize=None)
def longest_element(dynkin: DynkinType) -> WeylElement:
    w = identity(dynkin)
    grew = True
    while grew:
        grew = False
        for i in range(1, dynkin.rank + 1):
            candidate = w * simple_reflection(dynkin, i)
            if length(candidate) > length(w):
                w, grew = candidate, True
                break
    return w


def enumerate_elements(dynkin: DynkinType, bound: int = DEFAULT_ENUMERATION_BOUND) -> List[WeylElement]:
    """All elements of W, ordered by (length, reduced word)."""
    if dynkin.group_order > bound:
        raise EnumerationBoundExceeded(
            f"|W({dynkin.label})| = {dynkin.group_order} exceeds bound {bound}"
        )
    return list(_enumerate_cached(dynkin))


@lru_cache(maxsize=None)
def _enumerate_cached(dynkin: DynkinType) -> tuple:
    start = identity(dynkin)
    seen = {start}
    frontier = [start]
    gens = [simple_reflection(dynkin, i) for i in range(1, dynkin.rank + 1)]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                sw = s * w
                if sw not in seen:
                    seen.add(sw)
                    nxt.append(sw)
        frontier = nxt
    elements = sorted(seen, key=lambda w: (length(w), reduced_word(w)))
    logger.info(f"Enumerated {len(elements)} elements of W({dynkin.label})")
    return tuple(elements)


def alternative_reduced_word(w: WeylElement) -> Optional[List[int]]:
    """A reduced word for w different from reduced_word(w), or None if w has only one."""
    word = reduced_word(w)
    rightmost = list(reversed(reduced_word(w.inverse())))
    if rightmost != word:
        return rightmost
    edges = {frozenset(e) for e in w.dynkin.edges}
    for k in range(len(word) - 1):
        i, j = word[k], word[k + 1]
        if i != j and frozenset((i, j)) not in edges:
            return word[:k] + [j, i] + word[k + 2:]
    for k in range(len(word) - 2):
        i, j, i2 = word[k], word[k + 1], word[k + 2]
        if i == i2 and frozenset((i, j)) in edges:
            return word[:k] + [j, i, j] + word[k + 3:]
    return None
