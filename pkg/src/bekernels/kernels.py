"""Kernel sequences behind the Bernoulli and Euler numbers.

Both sequences start from K(0) = 1 and are determined by a reciprocal
factorial weight w(b): 1/(2b+1)! for the Bernoulli-type kernel, 1/(2b)!
for the Euler-type one.  Three independent routes compute the same values:

* ``kernel_recursive``   -- K(n) = -sum_{n'<n} K(n') * w(n - n'),
* ``kernel_compositions``-- sum over all compositions of n of
  (-1)^(number of parts) * product of w(part),
* ``kernel_determinant`` -- (-1)^n times the determinant of the n x n
  lower Hessenberg matrix with unit superdiagonal and w(i - j + 1) at and
  below the diagonal.

The routes exist to check one another; none of them may be redefined in
terms of the others.
"""

from __future__ import annotations

import enum
import threading
import warnings
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterator, Optional, Tuple, Union

from .compositions import compositions
from .exactnum import factorial, format_rational, parse_rational

__all__ = [
    "BRUTE_FORCE_SOFT_LIMIT",
    "KernelCache",
    "KernelKind",
    "kernel_compositions",
    "kernel_determinant",
    "kernel_recursive",
    "read_cache_file",
    "shared_cache",
    "write_cache_file",
]

# Above this index a composition sum walks more than 2**22 tuples; callers
# get a warning rather than an error so that explicit overrides stay easy.
BRUTE_FORCE_SOFT_LIMIT = 22


class KernelKind(enum.Enum):
    """Which weight family a kernel value belongs to."""

    BERNOULLI = "b"
    EULER = "e"

    def weight_denominator(self, b: int) -> int:
        """Denominator of the weight w(b): (2b+1)! for kind b, (2b)! for kind e."""
        if b < 1:
            raise ValueError(f"weight index must be >= 1, got {b}")
        return factorial(2 * b + 1) if self is KernelKind.BERNOULLI else factorial(2 * b)

    def weight(self, b: int) -> Fraction:
        return Fraction(1, self.weight_denominator(b))


class KernelCache:
    """Write-once memo table of kernel values for a single kind.

    Index 0 is pre-seeded with 1.  ``put`` never overwrites: storing a
    different value at an existing index raises, storing an equal value is
    a no-op.  All mutation happens under a lock, so a cache may be shared
    across threads.
    """

    def __init__(self, kind: KernelKind):
        self.kind = kind
        self._values: Dict[int, Fraction] = {0: Fraction(1)}
        self._lock = threading.Lock()

    def get(self, n: int) -> Optional[Fraction]:
        return self._values.get(n)

    def put(self, n: int, value: Fraction) -> None:
        if n < 0:
            raise ValueError(f"kernel index must be >= 0, got {n}")
        with self._lock:
            existing = self._values.get(n)
            if existing is None:
                self._values[n] = value
            elif existing != value:
                raise ValueError(
                    f"cache is write-once: index {n} already holds "
                    f"{format_rational(existing)}, refusing {format_rational(value)}"
                )

    def __contains__(self, n: int) -> bool:
        return n in self._values

    def __len__(self) -> int:
        return len(self._values)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(sorted(self._values.items()))


_shared: Dict[KernelKind, KernelCache] = {}
_shared_lock = threading.Lock()


def shared_cache(kind: KernelKind) -> KernelCache:
    """Process-wide cache used when callers do not supply their own."""
    with _shared_lock:
        if kind not in _shared:
            _shared[kind] = KernelCache(kind)
        return _shared[kind]


def kernel_recursive(kind: KernelKind, n: int, cache: Optional[KernelCache] = None) -> Fraction:
    """K(n) by the defining recursion, filling the cache up to n.

    Every value K(1)..K(n) not already cached is computed in ascending
    order, so a later call at a smaller or equal index is a lookup.
    """
    if n < 0:
        raise ValueError(f"kernel index must be >= 0, got {n}")
    if cache is None:
        cache = shared_cache(kind)
    elif cache.kind is not kind:
        raise ValueError(f"cache holds kind {cache.kind.value!r}, not {kind.value!r}")
    known = cache.get(n)
    if known is not None:
        return known
    for m in range(1, n + 1):
        if m in cache:
            continue
        total = Fraction(0)
        for prior in range(m):
            total += cache.get(prior) * kind.weight(m - prior)
        cache.put(m, -total)
    return cache.get(n)


def kernel_compositions(kind: KernelKind, n: int) -> Fraction:
    """K(n) as a signed sum over all 2**(n-1) compositions of n.

    Exponential in n by construction; beyond BRUTE_FORCE_SOFT_LIMIT a
    warning is emitted and the walk proceeds anyway.  n = 0 is rejected:
    the empty composition is the callers' base case, not an enumerated one.
    """
    if n < 1:
        raise ValueError(f"composition sum requires n >= 1, got {n}")
    if n > BRUTE_FORCE_SOFT_LIMIT:
        warnings.warn(
            f"composition sum at n={n} enumerates 2**{n - 1} terms; "
            f"expect a long wait past n={BRUTE_FORCE_SOFT_LIMIT}",
            stacklevel=2,
        )
    total = Fraction(0)
    for parts in compositions(n):
        denominator = 1
        for b in parts:
            denominator *= kind.weight_denominator(b)
        if len(parts) % 2:
            total -= Fraction(1, denominator)
        else:
            total += Fraction(1, denominator)
    return total


def kernel_determinant(kind: KernelKind, n: int) -> Fraction:
    """K(n) = (-1)^n det(H_n) for the lower Hessenberg weight matrix H_n.

    H_n has 1 on the superdiagonal and w(i - j + 1) at entry (i, j) for
    j <= i.  Expanding along the last row gives the minor recurrence
    d_k = sum_{j=1..k} (-1)^(k-j) w(k - j + 1) d_{j-1} with d_0 = 1, so no
    matrix is ever materialized here; the explicit-matrix route lives in
    the test suite as an independent check.
    """
    if n < 1:
        raise ValueError(f"determinant form requires n >= 1, got {n}")
    weights = [kind.weight(b) for b in range(1, n + 1)]
    minors = [Fraction(1)]
    for k in range(1, n + 1):
        acc = Fraction(0)
        sign = 1
        for j in range(k, 0, -1):
            acc += sign * weights[k - j] * minors[j - 1]
            sign = -sign
        minors.append(acc)
    return minors[n] if n % 2 == 0 else -minors[n]


def write_cache_file(cache: KernelCache, path: Union[str, Path]) -> None:
    """Persist a cache as sorted ``n p/q`` lines."""
    lines = [f"{n} {format_rational(value)}" for n, value in cache.items()]
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")


def read_cache_file(path: Union[str, Path], kind: KernelKind) -> KernelCache:
    """Rebuild a cache from the ``n p/q`` line format; bad lines raise ValueError."""
    cache = KernelCache(kind)
    text = Path(path).read_text(encoding="ascii")
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            index_text, value_text = line.split()
            index, value = int(index_text), parse_rational(value_text)
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: bad cache line {line!r}") from exc
        cache.put(index, value)
    return cache
