"""Permutations, r-regular multipermutations and translocations.

Everything is 1-indexed at the API boundary: ``Permutation((2, 1, 3))(1) == 2``
and ``Translocation(1, 3)`` moves the first entry to the third position.
Values are immutable; functions accept plain integer sequences wherever a
``Multipermutation`` is expected and return the same kind they were given.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence, TypeVar

from .exceptions import DimensionError, ParameterError

#: Above this many members ``equivalence_class`` returns a lazy iterator.
EQUIVALENCE_CLASS_MATERIALIZE_CAP = 10**6


@dataclass(frozen=True)
class Permutation:
    """A bijection on ``[1..n]``; ``images[i-1]`` holds sigma(i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise ParameterError("a permutation needs n >= 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ParameterError(f"{format_sequence(images)} is not a permutation of 1..{len(images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        return cls(parse_sequence(text))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ParameterError(f"index {i} outside [1..{self.n}]")
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __getitem__(self, idx):
        return self.images[idx]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for pos, value in enumerate(self.images, start=1):
            inv[value - 1] = pos
        return Permutation(tuple(inv))

    def __str__(self) -> str:
        return format_sequence(self.images)


@dataclass(frozen=True)
class Multipermutation:
    """An r-regular multipermutation over the symbols ``1..n/r``."""

    symbols: tuple[int, ...]
    r: int

    def __post_init__(self):
        symbols = tuple(int(v) for v in self.symbols)
        object.__setattr__(self, "symbols", symbols)
        check_regular(symbols, self.r)

    @classmethod
    def from_sequence(cls, seq: Sequence[int], r: int | None = None) -> Multipermutation:
        """Build from a sequence, inferring ``r`` from the content when omitted."""
        seq = tuple(int(v) for v in seq)
        return cls(seq, infer_regularity(seq) if r is None else r)

    @classmethod
    def parse(cls, text: str, r: int | None = None) -> Multipermutation:
        return cls.from_sequence(parse_sequence(text), r)

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def num_symbols(self) -> int:
        return len(self.symbols) // self.r

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, idx):
        return self.symbols[idx]

    def __str__(self) -> str:
        return format_sequence(self.symbols)


class Translocation:
    """The move phi(i, j): delete the entry at position i and reinsert it at j.

    Every ``Translocation(i, i)`` is the identity and compares equal to every
    other one.
    """

    __slots__ = ("i", "j")

    def __init__(self, i: int, j: int):
        if i < 1 or j < 1:
            raise ParameterError(f"translocation indices must be >= 1, got ({i}, {j})")
        object.__setattr__(self, "i", int(i))
        object.__setattr__(self, "j", int(j))

    def __setattr__(self, name, value):
        raise AttributeError("Translocation is immutable")

    @classmethod
    def identity(cls) -> Translocation:
        return cls(1, 1)

    @property
    def is_identity(self) -> bool:
        return self.i == self.j

    def _key(self) -> tuple[int, int]:
        return (1, 1) if self.i == self.j else (self.i, self.j)

    def __eq__(self, other):
        if not isinstance(other, Translocation):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __lt__(self, other: Translocation) -> bool:
        return self._key() < other._key()

    def __iter__(self):
        return iter((self.i, self.j))

    def __repr__(self) -> str:
        return f"Translocation({self.i}, {self.j})"

    def as_permutation(self, n: int) -> Permutation:
        """The explicit image list of phi(i, j) in S_n."""
        i, j = self.i, self.j
        if max(i, j) > n:
            raise ParameterError(f"{self!r} does not act on length {n}")
        if i < j:
            images = list(range(1, i)) + list(range(i + 1, j + 1)) + [i] + list(range(j + 1, n + 1))
        elif i > j:
            images = list(range(1, j)) + [i] + list(range(j, i)) + list(range(i + 1, n + 1))
        else:
            images = list(range(1, n + 1))
        return Permutation(tuple(images))


# -- text format ------------------------------------------------------------

def parse_sequence(text: str) -> tuple[int, ...]:
    """Parse the comma-separated integer format, e.g. ``"1, 3,1,2,2,3"``."""
    cleaned = "".join(str(text).split())
    if not cleaned:
        raise ParameterError("empty sequence")
    try:
        return tuple(int(tok) for tok in cleaned.split(","))
    except ValueError:
        raise ParameterError(f"malformed sequence {text!r}; expected comma-separated integers") from None


def format_sequence(seq: Sequence[int]) -> str:
    return ",".join(str(int(v)) for v in seq)


# -- validation helpers ------------------------------------------------------

def check_divides(n: int, r: int) -> None:
    if not isinstance(r, int) or r < 1:
        raise ParameterError(f"r must be a positive integer, got {r!r}")
    if n < 1 or n % r:
        raise ParameterError(f"r={r} does not divide n={n}")


def check_regular(seq: Sequence[int], r: int) -> None:
    """Raise ``ParameterError`` unless every symbol 1..n/r occurs exactly r times."""
    n = len(seq)
    check_divides(n, r)
    counts = Counter(seq)
    k = n // r
    if set(counts) != set(range(1, k + 1)) or any(c != r for c in counts.values()):
        raise ParameterError(f"{format_sequence(seq)} is not a valid multipermutation with each of 1..{k} repeated {r} times")


def infer_regularity(seq: Sequence[int]) -> int:
    if not seq:
        raise ParameterError("empty sequence")
    counts = Counter(seq)
    r = len(seq) // len(counts)
    check_regular(seq, r)
    return r


def is_permutation(seq: Sequence[int]) -> bool:
    return sorted(seq) == list(range(1, len(seq) + 1))


def as_tuple(x) -> tuple[int, ...]:
    if isinstance(x, Permutation):
        return x.images
    if isinstance(x, Multipermutation):
        return x.symbols
    return tuple(x)


def _as_permutation(x) -> Permutation:
    return x if isinstance(x, Permutation) else Permutation(tuple(x))


# -- operations -----------------------------------------------------------

def compose(sigma, tau) -> Permutation:
    """Return sigma*tau with ``(sigma*tau)(i) = sigma(tau(i))``."""
    sigma, tau = _as_permutation(sigma), _as_permutation(tau)
    if sigma.n != tau.n:
        raise DimensionError(f"cannot compose permutations of length {sigma.n} and {tau.n}")
    s = sigma.images
    return Permutation(tuple(s[t - 1] for t in tau.images))


Seq = TypeVar("Seq", Permutation, Multipermutation, tuple)


def act(m: Seq, sigma) -> Seq:
    """Right action ``(m . sigma)(i) = m(sigma(i))`` on any length-n tuple."""
    sigma = _as_permutation(sigma)
    values = as_tuple(m)
    if len(values) != sigma.n:
        raise DimensionError(f"cannot act with S_{sigma.n} on a length-{len(values)} tuple")
    return _rewrap(m, tuple(values[s - 1] for s in sigma.images))


def project(sigma, r: int) -> Multipermutation:
    """Map sigma to the multipermutation with entries ceil(sigma(i)/r)."""
    sigma = _as_permutation(sigma)
    check_divides(sigma.n, r)
    return Multipermutation(tuple(-(-v // r) for v in sigma.images), r)


def identity_multipermutation(n: int, r: int) -> Multipermutation:
    """The projection of the identity: ``(1,..,1, 2,..,2, ...)``."""
    check_divides(n, r)
    return Multipermutation(tuple(-(-v // r) for v in range(1, n + 1)), r)


def translocate(values: tuple, i: int, j: int) -> tuple:
    """Fast 1-based phi(i, j) on a plain tuple, without validation."""
    if i < j:
        return values[: i - 1] + values[i:j] + (values[i - 1],) + values[j:]
    if i > j:
        return values[: j - 1] + (values[i - 1],) + values[j - 1 : i - 1] + values[i:]
    return values


def apply_translocation(m: Seq, phi: Translocation | tuple[int, int]) -> Seq:
    """Return ``m . phi(i, j)``; works on permutations, multipermutations and tuples."""
    i, j = phi
    values = as_tuple(m)
    n = len(values)
    if not (1 <= i <= n and 1 <= j <= n):
        raise ParameterError(f"translocation ({i}, {j}) outside [1..{n}]")
    return _rewrap(m, translocate(values, i, j))


def _rewrap(template, values: tuple):
    if isinstance(template, Permutation):
        return Permutation(values)
    if isinstance(template, Multipermutation):
        return Multipermutation(values, template.r)
    return values


def equivalence_class_size(n: int, r: int) -> int:
    check_divides(n, r)
    return math.factorial(r) ** (n // r)


def iter_equivalence_class(sigma, r: int) -> Iterator[Permutation]:
    """Yield every pi with the same r-projection as sigma, in lexicographic order."""
    sigma = _as_permutation(sigma)
    m = project(sigma, r).symbols
    n = sigma.n
    used = [False] * (n + 1)
    current: list[int] = []

    def extend(pos: int):
        if pos == n:
            yield Permutation(tuple(current))
            return
        block = m[pos]
        for v in range((block - 1) * r + 1, block * r + 1):
            if not used[v]:
                used[v] = True
                current.append(v)
                yield from extend(pos + 1)
                current.pop()
                used[v] = False

    return extend(0)


def equivalence_class(sigma, r: int, cap: int = EQUIVALENCE_CLASS_MATERIALIZE_CAP):
    """All permutations equivalent to sigma under r-projection.

    Returns a ``frozenset`` when the class has at most ``cap`` members and the
    lexicographic iterator from :func:`iter_equivalence_class` otherwise.
    """
    sigma = _as_permutation(sigma)
    if equivalence_class_size(sigma.n, r) <= cap:
        return frozenset(iter_equivalence_class(sigma, r))
    return iter_equivalence_class(sigma, r)
