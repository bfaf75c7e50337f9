"""Words over {0..q-1}, tandem duplication, and root extraction.

A tandem duplication copies a block of up to k adjacent symbols and
inserts the copy immediately after the original, turning x = uvw into
uvvw.  A word is irreducible (for a given k) when it contains no
substring ww with 1 <= |w| <= k, so no length-at-most-k deduplication
applies.  For k in {2, 3} and any alphabet size every word has a unique
irreducible root, which is what makes greedy deduplication a decoder.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import DomainError

DNA_ALPHABET = "ACGT"


@dataclass(frozen=True)
class Word:
    """Immutable word over the alphabet {0, ..., q-1}."""

    symbols: tuple[int, ...]
    q: int

    def __post_init__(self) -> None:
        if self.q < 2:
            raise DomainError(f"alphabet size must be at least 2, got {self.q}")
        for s in self.symbols:
            if not (isinstance(s, int) and 0 <= s < self.q):
                raise DomainError(f"symbol {s!r} outside alphabet of size {self.q}")

    @classmethod
    def from_string(cls, text: str, q: int) -> "Word":
        """Parse a digit string; each character is one symbol (needs q <= 10)."""
        if q > 10:
            raise DomainError("digit strings only cover alphabets up to q = 10")
        try:
            syms = tuple(int(ch) for ch in text.strip())
        except ValueError:
            raise DomainError(f"not a digit string: {text!r}") from None
        return cls(syms, q)

    @classmethod
    def from_dna(cls, text: str) -> "Word":
        """Parse an ACGT string as a word over q = 4 (A=0, C=1, G=2, T=3)."""
        try:
            syms = tuple(DNA_ALPHABET.index(ch) for ch in text.strip().upper())
        except ValueError:
            raise DomainError(f"not a DNA string: {text!r}") from None
        return cls(syms, 4)

    def to_dna(self) -> str:
        if self.q != 4:
            raise DomainError("DNA rendering requires q = 4")
        return "".join(DNA_ALPHABET[s] for s in self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, i: int) -> int:
        return self.symbols[i]

    def __str__(self) -> str:
        if self.q <= 10:
            return "".join(str(s) for s in self.symbols)
        return ".".join(str(s) for s in self.symbols)

    def concat(self, other: "Word") -> "Word":
        if other.q != self.q:
            raise DomainError("cannot concatenate words over different alphabets")
        return Word(self.symbols + other.symbols, self.q)

    def append(self, *syms: int) -> "Word":
        return Word(self.symbols + syms, self.q)


@dataclass(frozen=True)
class DuplicationEvent:
    """One tandem duplication: copy x[position : position+length] in place."""

    position: int
    length: int

    def __post_init__(self) -> None:
        if self.position < 0:
            raise DomainError(f"duplication position must be >= 0, got {self.position}")
        if self.length < 1:
            raise DomainError(f"duplication length must be >= 1, got {self.length}")


@dataclass(frozen=True)
class DupSystem:
    """A duplication system: alphabet size q >= 3 and root-unique k in {2, 3}."""

    q: int
    k: int

    def __post_init__(self) -> None:
        if self.q < 3:
            raise DomainError(f"alphabet size must be at least 3, got {self.q}")
        if self.k not in (2, 3):
            raise DomainError(f"duplication bound k must be 2 or 3, got {self.k}")


def _check_alphabet(x: Word, sys: DupSystem) -> None:
    if x.q != sys.q:
        raise DomainError(f"word alphabet q={x.q} does not match system q={sys.q}")


def tandem_duplicate(x: Word, e: DuplicationEvent) -> Word:
    """Apply one duplication event: x = uvw -> uvvw with v = the copied block."""
    end = e.position + e.length
    if end > len(x):
        raise DomainError(
            f"event copies [{e.position}:{end}] but the word has length {len(x)}"
        )
    s = x.symbols
    return Word(s[:end] + s[e.position:end] + s[end:], x.q)


def find_tandem_repeat(x: Word, k: int) -> Optional[DuplicationEvent]:
    """Locate the leftmost shortest substring ww with |w| <= k, if any.

    Ties break toward the smallest start position, then the smallest
    length, so the result is deterministic.
    """
    if k < 1:
        raise DomainError(f"repeat length bound must be >= 1, got {k}")
    s = x.symbols
    n = len(s)
    for i in range(n - 1):
        for t in range(1, k + 1):
            if i + 2 * t <= n and s[i:i + t] == s[i + t:i + 2 * t]:
                return DuplicationEvent(i, t)
    return None


def is_irreducible(x: Word, k: int) -> bool:
    """True when x contains no substring ww with |w| <= k."""
    return find_tandem_repeat(x, k) is None


def root(y: Word, sys: DupSystem) -> Word:
    """Deduplicate greedily until irreducible; unique for k in {2, 3}.

    Each pass removes the leftmost shortest repeat.  After an edit at
    position i no new repeat can start before i - 2k + 2, so the scan
    resumes nearby instead of from the front.
    """
    _check_alphabet(y, sys)
    k = sys.k
    syms = list(y.symbols)
    start = 0
    while True:
        n = len(syms)
        hit = None
        i = start
        while i < n - 1:
            for t in range(1, k + 1):
                if i + 2 * t <= n and syms[i:i + t] == syms[i + t:i + 2 * t]:
                    hit = (i, t)
                    break
            if hit is not None:
                break
            i += 1
        if hit is None:
            return Word(tuple(syms), y.q)
        i, t = hit
        del syms[i + t:i + 2 * t]
        start = max(0, i - 2 * k)


def extend_zeta(x: Word, i: int) -> Word:
    """Append i copies of the last symbol of x (a run extension)."""
    if len(x) == 0:
        raise DomainError("cannot extend the empty word")
    if i < 0:
        raise DomainError(f"extension count must be >= 0, got {i}")
    return Word(x.symbols + (x.symbols[-1],) * i, x.q)


def random_descendant(
    x: Word, t: int, sys: DupSystem, seed: int
) -> tuple[Word, list[DuplicationEvent]]:
    """Apply t random duplications and return the result with its event trace.

    Each step draws the block length uniformly from [1, min(k, current
    length)] and the position uniformly over valid starts.  The same seed
    always yields the same trace.
    """
    _check_alphabet(x, sys)
    if t < 0:
        raise DomainError(f"duplication count must be >= 0, got {t}")
    if len(x) == 0 and t > 0:
        raise DomainError("cannot duplicate within the empty word")
    rng = random.Random(seed)
    syms = list(x.symbols)
    events: list[DuplicationEvent] = []
    for _ in range(t):
        length = rng.randint(1, min(sys.k, len(syms)))
        pos = rng.randint(0, len(syms) - length)
        syms[pos + length:pos + length] = syms[pos:pos + length]
        events.append(DuplicationEvent(pos, length))
    return Word(tuple(syms), x.q), events
