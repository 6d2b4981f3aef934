# src/hermrank/poly/forms.py
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from hermrank.arith import ZERO, GaussianRational, gaussian
from hermrank.errors import DimensionMismatch, InvalidInput


@dataclass(frozen=True)
class SignatureForm:
    """
    대각 Hermitian form <z,w>_{r,s,t} = z1 w̄1 + ... + zr w̄r - z_{r+1} w̄_{r+1} - ... - z_{r+s} w̄_{r+s}.

    - eigenvalues: 앞 r 개 +1, 다음 s 개 -1, 마지막 t 개 0
    - (r, s) != (0, 0)
    """

    r: int
    s: int
    t: int = 0

    def __post_init__(self) -> None:
        if min(self.r, self.s, self.t) < 0:
            raise InvalidInput(f"[SignatureForm] negative entry in ({self.r},{self.s},{self.t})")
        if self.r == 0 and self.s == 0:
            raise InvalidInput("[SignatureForm] (r, s) must not be (0, 0)")

    @classmethod
    def euclidean(cls, n: int) -> "SignatureForm":
        return cls(n, 0, 0)

    @classmethod
    def parse(cls, text: str) -> "SignatureForm":
        """'r,s,t' (또는 'r,s')."""
        try:
            parts = [int(x) for x in text.replace(" ", "").split(",")]
        except ValueError:
            raise InvalidInput(f"[SignatureForm.parse] expected 'r,s,t', got {text!r}") from None
        if len(parts) == 2:
            parts.append(0)
        if len(parts) != 3:
            raise InvalidInput(f"[SignatureForm.parse] expected 'r,s,t', got {text!r}")
        return cls(*parts)

    @property
    def n(self) -> int:
        return self.r + self.s + self.t

    @property
    def tau(self) -> int:
        """0 고유값의 중복도."""
        return self.t

    @property
    def nondegenerate_rank(self) -> int:
        return self.r + self.s

    @property
    def eigenvalues(self) -> Tuple[int, ...]:
        return (1,) * self.r + (-1,) * self.s + (0,) * self.t

    def extend(self) -> "SignatureForm":
        """동차화로 변수 하나가 늘 때: (r, s, t) -> (r, s, t+1)."""
        return SignatureForm(self.r, self.s, self.t + 1)

    def pairing(self, z: Sequence, w: Sequence) -> GaussianRational:
        if len(z) != self.n or len(w) != self.n:
            raise DimensionMismatch(f"[SignatureForm.pairing] expected length {self.n}")
        acc = ZERO
        for eps, a, b in zip(self.eigenvalues, z, w):
            if eps:
                term = gaussian(a) * gaussian(b).conj()
                acc = acc + term if eps > 0 else acc - term
        return acc

    def __str__(self) -> str:
        return f"{self.r},{self.s},{self.t}"
