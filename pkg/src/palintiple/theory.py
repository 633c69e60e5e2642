"""Pair classification and constructive families.

Which class an (n, b)-palintiple falls in can be read off n and b:

* (n + 1) | b                      -> symmetric
* gcd(b - n, n**2 - 1) >= n + 1    -> shifted-symmetric
* otherwise                        -> asymmetric candidate

The first rule is conditional on every symmetric palintiple having carries
divisible by n - 1; the harness checks that empirically.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from math import gcd

from .digits import (
    DigitString,
    PalintipleClass,
    PalintipleRecord,
    check_parameters,
    verify_palintiple,
)
from .errors import CarryNotMultiple, InvalidRSequence, NotDivisible


class PairClass(str, enum.Enum):
    SYMMETRIC = "symmetric"
    SHIFTED_SYMMETRIC = "shifted-symmetric"
    ASYMMETRIC_CANDIDATE = "asymmetric-candidate"

    def __str__(self) -> str:
        return self.value

    @property
    def palintiple_class(self) -> PalintipleClass:
        """The carry class palintiples of this pair are expected to have."""
        return {
            PairClass.SYMMETRIC: PalintipleClass.SYMMETRIC,
            PairClass.SHIFTED_SYMMETRIC: PalintipleClass.SHIFTED_SYMMETRIC,
            PairClass.ASYMMETRIC_CANDIDATE: PalintipleClass.ASYMMETRIC,
        }[self]


@dataclass(frozen=True)
class RSequence:
    """Bits r_0 .. r_k encoding symmetric carries as c_j = (n - 1) * r_j.

    r_{k+1} is implicitly 0.
    """

    bits: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.bits) - 1

    def at(self, j: int) -> int:
        return self.bits[j] if 0 <= j < len(self.bits) else 0

    def __str__(self) -> str:
        return "".join(str(r) for r in self.bits)


def pair_class(n: int, b: int) -> PairClass:
    check_parameters(n, b)
    if b % (n + 1) == 0:
        return PairClass.SYMMETRIC
    if gcd(b - n, n * n - 1) >= n + 1:
        return PairClass.SHIFTED_SYMMETRIC
    return PairClass.ASYMMETRIC_CANDIDATE


def congruence_solutions(n: int, b: int) -> list[int]:
    """All 1 <= c <= n - 1 with (b - n) * c = 0 mod (n**2 - 1), ascending."""
    check_parameters(n, b)
    m = n * n - 1
    step = m // gcd(b - n, m)
    return list(range(step, n, step))


def build_shifted_symmetric(n: int, b: int, c: int, m: int = 2) -> PalintipleRecord:
    """The m-digit shifted-symmetric palintiple with carries (0, c, ..., c, 0).

    Substituting constant interior carries into the digit formula gives
    d_0 = (b - n)c/(n^2 - 1), d_k = (nb - 1)c/(n^2 - 1) and
    d_j = (b - 1)c/(n - 1) in between.
    """
    check_parameters(n, b)
    if m < 2:
        raise ValueError("digit count must be at least 2")
    if c not in congruence_solutions(n, b):
        raise ValueError(f"c={c} does not solve (b - n)c = 0 mod (n^2 - 1)")
    nn = n * n - 1
    low = (b - n) * c // nn
    high = (n * b - 1) * c // nn
    mid = (b - 1) * c // (n - 1)
    d = DigitString(b, (low,) + (mid,) * (m - 2) + (high,))
    rec = verify_palintiple(d, n)
    assert rec.cls is PalintipleClass.SHIFTED_SYMMETRIC, rec
    return rec


def check_r_sequence(bits) -> RSequence:
    """Validate r-sequence rules; raise InvalidRSequence at the first failure."""
    bits = tuple(int(r) for r in bits)
    k = len(bits) - 1
    if k < 1:
        raise InvalidRSequence("need at least two bits", bits)
    for j, r in enumerate(bits):
        if r not in (0, 1):
            raise InvalidRSequence(f"r_{j} = {r} is not a bit", bits, j)
    for j in range(k + 1):
        if bits[j] != bits[k - j]:
            raise InvalidRSequence(f"not palindromic at {j}", bits, j)
    if bits[0] != 0:
        raise InvalidRSequence("r_0 must be 0", bits, 0)
    if bits[1] != 1:
        raise InvalidRSequence("r_1 must be 1", bits, 1)
    for j in range(1, k):
        if bits[j - 1] == bits[j + 1] != bits[j]:
            raise InvalidRSequence(f"isolated bit at {j}", bits, j)
    return RSequence(bits)


def enumerate_r_sequences(k: int) -> list[RSequence]:
    """Every valid r-sequence of length k + 1, in lexicographic order."""
    if k < 1:
        raise ValueError("k must be at least 1")
    half = k // 2 + 1
    out = []
    for head in product((0, 1), repeat=half):
        bits = head + tuple(reversed(head[: k + 1 - half]))
        try:
            out.append(check_r_sequence(bits))
        except InvalidRSequence:
            continue
    return out


def generate_symmetric(n: int, b: int, r: RSequence) -> PalintipleRecord:
    """Digits d_j = n q r_{k-j+1} + q r_{j+1} - r_j with q = b / (n + 1)."""
    check_parameters(n, b)
    if b % (n + 1):
        raise NotDivisible(f"{n + 1} does not divide {b}")
    r = check_r_sequence(r.bits if isinstance(r, RSequence) else r)
    q = b // (n + 1)
    k = r.k
    digits = tuple(n * q * r.at(k - j + 1) + q * r.at(j + 1) - r.at(j) for j in range(k + 1))
    rec = verify_palintiple(DigitString(b, digits), n)
    assert rec.carries.carries == tuple((n - 1) * r.at(j) for j in range(k + 2)), rec
    return rec


def recover_r_sequence(p: PalintipleRecord) -> RSequence:
    """Divide the carries of ``p`` by n - 1 and validate the result."""
    step = p.n - 1
    bits = []
    for j, c in enumerate(p.carries.carries[:-1]):
        if c % step:
            raise CarryNotMultiple(
                f"carry c_{j} = {c} of {p.digits} is not a multiple of {step}", j
            )
        bits.append(c // step)
    return check_r_sequence(bits)


def choose_n_for_composite(b: int) -> int | None:
    """Smallest 1 < n < b with (n + 1) | (b + 1); None when b + 1 is prime."""
    if b <= 3:
        raise ValueError("b must exceed 3")
    for n in range(2, b):
        if (b + 1) % (n + 1) == 0:
            return n
    return None
