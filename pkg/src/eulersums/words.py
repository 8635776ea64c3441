"""Euler-sum index words, restricted index sets, and the stuffle product."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence


class WordError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class EulerWord:
    """Index ``(s_1, ..., s_d; eps_1, ..., eps_d)``; ``bar=True`` means eps = -1.

    Ordering is lexicographic on the ``(s, bar)`` entries.
    """

    entries: tuple[tuple[int, bool], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple((int(s), bool(b)) for s, b in self.entries))
        for s, _ in self.entries:
            if s < 1:
                raise WordError(f"exponents must be positive integers, got {s}")

    @classmethod
    def of(cls, *entries: tuple[int, bool]) -> EulerWord:
        return cls(tuple(entries))

    @property
    def depth(self) -> int:
        return len(self.entries)

    @property
    def weight(self) -> int:
        return sum(s for s, _ in self.entries)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.entries)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(-1 if b else 1 for _, b in self.entries)

    @property
    def bars(self) -> int:
        return sum(b for _, b in self.entries)

    def is_admissible(self) -> bool:
        return bool(self.entries) and self.entries[0] != (1, False)

    def check_admissible(self) -> EulerWord:
        if not self.entries:
            raise WordError("empty word")
        if self.entries[0] == (1, False):
            raise WordError("inadmissible word: need (s1, eps1) != (1, 1), the leading entry 1 without bar diverges")
        return self

    def __str__(self) -> str:
        return ",".join(f"{s}b" if b else str(s) for s, b in self.entries)


WordCombination = Counter  # EulerWord -> positive multiplicity


def parse_word(text: str) -> EulerWord:
    """Parse ``"2b,4"`` style text; ``b`` marks an alternating entry."""
    cleaned = "".join(text.split())
    if not cleaned:
        raise WordError("empty word")
    entries = []
    for tok in cleaned.split(","):
        bar = tok.endswith("b")
        digits = tok[:-1] if bar else tok
        if not digits.isdigit():
            raise WordError(f"cannot parse entry {tok!r}; expected a positive integer with optional 'b'")
        entries.append((int(digits), bar))
    return EulerWord(tuple(entries)).check_admissible()


def parse_composition(text: str) -> tuple[int, ...]:
    cleaned = "".join(text.split())
    try:
        parts = tuple(int(t) for t in cleaned.split(","))
    except ValueError:
        raise WordError(f"cannot parse composition {text!r}") from None
    if not parts or any(p < 1 for p in parts):
        raise WordError(f"composition parts must be positive, got {text!r}")
    return parts


def compositions(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``n`` into ``d`` positive parts, lexicographically."""
    if d < 1 or d > n:
        return
    if d == 1:
        yield (n,)
        return
    for first in range(1, n - d + 2):
        for rest in compositions(n - first, d - 1):
            yield (first,) + rest


def sign_assignments(d: int, alpha: int) -> Iterator[tuple[bool, ...]]:
    """Bar patterns of length ``d`` with exactly ``alpha`` bars.

    Order: by bar positions, lexicographic (``(T, F)`` before ``(F, T)``).
    """
    for pos in itertools.combinations(range(d), alpha):
        chosen = set(pos)
        yield tuple(i in chosen for i in range(d))


def xi_word(c: Sequence[int]) -> EulerWord:
    """``(j_1, ..., j_d) -> (2j_1, ..., 2j_d)`` with a bar exactly where ``j_i`` is odd."""
    return EulerWord(tuple((2 * j, j % 2 == 1) for j in c))


def restricted_words(n: int, d: int, alpha: int) -> Iterator[EulerWord]:
    """Words ``(2j_1, ..., 2j_d)`` over compositions of ``n`` with exactly ``alpha`` bars."""
    patterns = list(sign_assignments(d, alpha))
    for comp in compositions(n, d):
        for bars in patterns:
            yield EulerWord(tuple((2 * j, b) for j, b in zip(comp, bars)))


def _stuffle(a: tuple, b: tuple) -> Counter:
    if not a:
        return Counter({b: 1})
    if not b:
        return Counter({a: 1})
    out: Counter = Counter()
    for tail, mult in _stuffle(a[1:], b).items():
        out[(a[0],) + tail] += mult
    for tail, mult in _stuffle(a, b[1:]).items():
        out[(b[0],) + tail] += mult
    merged = (a[0][0] + b[0][0], a[0][1] != b[0][1])
    for tail, mult in _stuffle(a[1:], b[1:]).items():
        out[(merged,) + tail] += mult
    return out


def stuffle(w1: EulerWord, w2: EulerWord) -> Counter:
    """Quasi-shuffle product; merged heads add exponents and multiply signs."""
    w1.check_admissible()
    w2.check_admissible()
    return Counter({EulerWord(k): m for k, m in _stuffle(w1.entries, w2.entries).items()})


def combination_items(comb: Counter) -> list[tuple[EulerWord, int]]:
    """Canonical sorted ``(word, multiplicity)`` list."""
    return sorted(comb.items())
