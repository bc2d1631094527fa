"""Braid words on k strands."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import List, Sequence, Tuple


@dataclass(frozen=True)
class BraidWord:
    """Letters are signed generator indices: ``i`` is sigma_i, ``-i`` its inverse."""

    strands: int
    letters: Tuple[int, ...]

    def __init__(self, strands: int, letters: Sequence[int] = ()):
        object.__setattr__(self, "strands", int(strands))
        object.__setattr__(self, "letters", tuple(int(x) for x in letters))
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"generator {x} out of range for {self.strands} strands")

    @classmethod
    def parse(cls, text: str, strands: int) -> "BraidWord":
        """Parse comma/space separated signed indices such as ``"1,-2,1,-2"``."""
        items = [x for x in text.replace(",", " ").split() if x]
        try:
            letters = [int(x) for x in items]
        except ValueError as exc:
            raise ValueError(f"malformed braid word {text!r}") from exc
        return cls(strands, letters)

    def __str__(self):
        return ",".join(str(x) for x in self.letters) or "()"

    @property
    def writhe(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def permutation(self) -> List[int]:
        """Image of each strand position after traversing the braid once."""
        perm = list(range(self.strands))
        for x in self.letters:
            i = abs(x) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return perm

    def components(self) -> int:
        perm = self.permutation()
        seen = [False] * self.strands
        count = 0
        for start in range(self.strands):
            if not seen[start]:
                count += 1
                j = start
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
        return count

    def is_knot(self) -> bool:
        return self.components() == 1

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, [-x for x in self.letters])

    def rotate(self, k: int = 1) -> "BraidWord":
        """Cyclic permutation of the letters (a conjugate braid)."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.strands, self.letters[k:] + self.letters[:k])

    def stabilize(self, positive: bool = True) -> "BraidWord":
        """Markov stabilization: add a strand and the letter ``+-sigma_k``."""
        k = self.strands
        return BraidWord(k + 1, self.letters + ((k if positive else -k),))

    def key(self) -> str:
        """Stable identifier used for cache file names."""
        text = f"{self.strands}:{self}"
        return hashlib.sha256(text.encode()).hexdigest()[:16]

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters)}
