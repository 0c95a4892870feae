"""Exact base fields and dense elimination kernels.

Matrices are plain numpy arrays: ``int64`` holding canonical residues
``0..p-1`` over a prime field, ``object`` arrays of :class:`fractions.Fraction`
over the rationals. Every kernel returns fresh arrays; inputs are never
mutated.
"""

import hashlib
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np
from sympy import isprime

from core.exceptions import ConfigError, DimensionMismatchError, FieldMismatchError


logger = logging.getLogger(__name__)

DEFAULT_PRIME = 32003
MAX_PRIME = 2 ** 26
_INT64_MAX = np.iinfo(np.int64).max


@dataclass(frozen=True)
class FieldSpec:
    """The rationals (characteristic 0) or the prime field F_p."""

    characteristic: int = DEFAULT_PRIME

    def __post_init__(self) -> None:
        p = self.characteristic
        if p < 0 or (p != 0 and not isprime(p)):
            raise ConfigError(f"Field characteristic must be 0 or a prime, got {p}")
        if p >= MAX_PRIME:
            raise ConfigError(f"Prime {p} too large for int64 kernels, need p < {MAX_PRIME}")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``"q"`` or ``"p:<prime>"``."""
        text = text.strip().lower()
        if text in ("q", "qq", "rationals"):
            return cls(0)
        if text.startswith("p:"):
            try:
                return cls(int(text[2:]))
            except ValueError as e:
                raise ConfigError(f"Invalid field spec: {text}") from e
        raise ConfigError(f"Invalid field spec: {text}")

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime field"

    @property
    def label(self) -> str:
        return "q" if self.characteristic == 0 else f"p:{self.characteristic}"

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def check_same(self, other: "FieldSpec") -> None:
        if self != other:
            raise FieldMismatchError(f"Field mismatch: {self.label} vs {other.label}")

    # -- scalars -----------------------------------------------------------

    def scalar(self, value: Any) -> Any:
        if self.is_rational:
            return Fraction(value)
        if isinstance(value, Fraction):
            return (value.numerator * pow(value.denominator, -1, self.characteristic)) % self.characteristic
        return int(value) % self.characteristic

    def inv(self, value: Any) -> Any:
        if self.is_rational:
            return 1 / Fraction(value)
        return pow(int(value), -1, self.characteristic)

    def scalar_to_json(self, value: Any) -> Any:
        if self.is_rational:
            value = Fraction(value)
            return str(value) if value.denominator != 1 else value.numerator
        return int(value)

    def scalar_from_json(self, value: Any) -> Any:
        return self.scalar(Fraction(value) if isinstance(value, str) else value)

    # -- arrays ------------------------------------------------------------

    @property
    def dtype(self) -> Any:
        return object if self.is_rational else np.int64

    def zeros(self, shape: Any) -> np.ndarray:
        out = np.zeros(shape, dtype=self.dtype)
        if self.is_rational:
            out[...] = Fraction(0)
        return out

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.scalar(1)
        return out

    def asarray(self, data: Any) -> np.ndarray:
        if self.is_rational:
            arr = np.array(data, dtype=object)
            flat = [Fraction(x) for x in arr.reshape(-1)]
            out = np.empty(arr.shape, dtype=object)
            out.reshape(-1)[:] = flat if flat else []
            return out
        arr = np.array(data, dtype=object) if _has_fractions(data) else np.asarray(data)
        if arr.dtype == object:
            flat = [self.scalar(x) for x in arr.reshape(-1)]
            return np.array(flat, dtype=np.int64).reshape(arr.shape)
        return np.mod(arr.astype(np.int64), self.characteristic)

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        if self.is_rational:
            return arr
        return np.mod(arr, self.characteristic)

    @property
    def max_inner(self) -> int:
        """Longest dot product whose unreduced sum of residue products fits in int64."""
        return _INT64_MAX // max((self.characteristic - 1) ** 2, 1)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        inner = a.shape[-1]
        if self.is_rational or inner <= self.max_inner:
            return self.reduce(np.matmul(a, b))
        step = self.max_inner
        total = None
        for k in range(0, inner, step):
            right = b[k:k + step] if b.ndim == 1 else b[..., k:k + step, :]
            part = self.reduce(np.matmul(a[..., k:k + step], right))
            total = part if total is None else self.reduce(total + part)
        return total

    def is_zero(self, arr: np.ndarray) -> bool:
        return not np.any(arr != 0)

    def random(self, shape: Any, rng: np.random.Generator) -> np.ndarray:
        if self.is_rational:
            return self.asarray(rng.integers(-3, 4, size=shape))
        return rng.integers(0, self.characteristic, size=shape, dtype=np.int64)

    def digest(self, *arrays: np.ndarray) -> str:
        """Stable sha256 over array contents, used as an identity key."""
        h = hashlib.sha256(self.label.encode())
        for arr in arrays:
            h.update(str(arr.shape).encode())
            if self.is_rational:
                h.update(",".join(str(x) for x in arr.reshape(-1)).encode())
            else:
                h.update(np.ascontiguousarray(arr, dtype=np.int64).tobytes())
        return h.hexdigest()

    # -- elimination ---------------------------------------------------------

    def rref(self, matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
        """Reduced row-echelon form without zero rows, plus pivot columns."""
        a = np.array(matrix, dtype=self.dtype, copy=True)
        if a.ndim != 2:
            raise DimensionMismatchError(f"rref expects a matrix, got shape {a.shape}")
        rows, cols = a.shape
        pivots: List[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(a[r:, c])[0]
            if nz.size == 0:
                continue
            k = r + int(nz[0])
            if k != r:
                a[[r, k]] = a[[k, r]]
            a[r] = self.reduce(a[r] * self.inv(a[r, c]))
            others = np.nonzero(a[:, c])[0]
            others = others[others != r]
            if others.size:
                a[others] = self.reduce(a[others] - np.outer(a[others, c], a[r]))
            pivots.append(c)
            r += 1
        return a[:r], pivots

    def rank(self, matrix: np.ndarray) -> int:
        if matrix.size == 0:
            return 0
        return len(self.rref(matrix)[1])

    def nullspace(self, matrix: np.ndarray) -> np.ndarray:
        """Rows form a basis of ``{x : matrix @ x = 0}``."""
        n = matrix.shape[1]
        if matrix.shape[0] == 0:
            return self.eye(n)
        r, pivots = self.rref(matrix)
        free = [c for c in range(n) if c not in set(pivots)]
        basis = self.zeros((len(free), n))
        for k, j in enumerate(free):
            basis[k, j] = self.scalar(1)
            for i, pc in enumerate(pivots):
                basis[k, pc] = self.reduce(-r[i, j])
        return basis

    def solve(self, a: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
        """One solution X of ``a @ X = b`` or None if inconsistent."""
        vector = b.ndim == 1
        rhs = b.reshape(-1, 1) if vector else b
        n = a.shape[1]
        aug = np.concatenate([a, rhs], axis=1) if a.shape[0] else self.zeros((0, n + rhs.shape[1]))
        r, pivots = self.rref(aug)
        if any(pc >= n for pc in pivots):
            return None
        x = self.zeros((n, rhs.shape[1]))
        for i, pc in enumerate(pivots):
            x[pc] = r[i, n:]
        return x[:, 0] if vector else x

    def inverse(self, a: np.ndarray) -> Optional[np.ndarray]:
        n = a.shape[0]
        if a.shape != (n, n):
            raise DimensionMismatchError(f"Cannot invert shape {a.shape}")
        x = self.solve(a, self.eye(n))
        if x is None or not np.array_equal(self.matmul(a, x), self.eye(n)):
            return None
        return x


def _has_fractions(data: Any) -> bool:
    if isinstance(data, Fraction):
        return True
    if isinstance(data, np.ndarray):
        return data.dtype == object
    if isinstance(data, (list, tuple)):
        return any(_has_fractions(x) for x in data)
    return False


def stack_rows(field: FieldSpec, rows: Sequence[np.ndarray], width: int) -> np.ndarray:
    """Stack vectors into a matrix, tolerating an empty list."""
    if not rows:
        return field.zeros((0, width))
    return np.array(np.vstack(rows), dtype=field.dtype)
