"""Kodaira symbols of special fibres."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError

_FIXED = {"II": 1, "III": 2, "IV": 3, "IV*": 7, "III*": 8, "II*": 9}
_PATTERN = re.compile(r"^(I\*?)_?(\d+)$|^(II\*?|III\*?|IV\*?)$")


@dataclass(frozen=True)
class KodairaSymbol:
    """One of I_n (n >= 0), II, III, IV, I*_n (n >= 0), IV*, III*, II*."""

    kind: str
    n: int = 0

    @classmethod
    def parse(cls, text: str) -> "KodairaSymbol":
        t = str(text).strip().replace(" ", "")
        m = _PATTERN.match(t)
        if not m:
            raise ParseError(f"unknown Kodaira symbol {text!r}")
        if m.group(1):
            return cls(m.group(1), int(m.group(2)))
        return cls(m.group(3), 0)

    def __str__(self) -> str:
        if self.kind in ("I", "I*"):
            return f"{self.kind}{self.n}"
        return self.kind

    @property
    def components(self) -> int:
        """Number of irreducible components d (I_0 counts as 1)."""
        if self.kind == "I":
            return max(self.n, 1)
        if self.kind == "I*":
            return 5 + self.n
        return _FIXED[self.kind]

    @property
    def reduction(self) -> str:
        if self.kind == "I":
            return "good" if self.n == 0 else "multiplicative"
        return "additive"

    def to_json(self) -> str:
        return str(self)
