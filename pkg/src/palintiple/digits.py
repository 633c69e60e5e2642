"""Digit and carry arithmetic for (n, b)-palintiples.

A palintiple p = (d_k ... d_0)_b satisfies p = n * reverse(p).  Digits are
stored little-endian (``digits[j]`` multiplies b**j); the text format is
most-significant first, joined by ``"."``.

Multiplying reverse(p) by n column by column produces the carries
c_0 .. c_{k+1}.  Column j reads

    n * d_{k-j} + c_j = d_j + b * c_{j+1}

so c_0 = 0 and, when the product does not grow, c_{k+1} = 0.  All work here
is digit-wise; nothing requires materialising the value of p.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    BadParameters,
    DigitOutOfRange,
    LeadingZero,
    NonIntegralDigit,
    NotAMultiple,
    PalintipleError,
)


class PalintipleClass(str, enum.Enum):
    SYMMETRIC = "symmetric"
    SHIFTED_SYMMETRIC = "shifted-symmetric"
    ASYMMETRIC = "asymmetric"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DigitString:
    """Base-``base`` digits, least significant first."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise BadParameters(f"base must be at least 2, got {self.base}")
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))
        if not self.digits:
            raise PalintipleError("a digit string needs at least one digit")
        for j, d in enumerate(self.digits):
            if not 0 <= d < self.base:
                raise DigitOutOfRange(
                    f"digit {d} at position {j} is not a base-{self.base} digit"
                )

    @classmethod
    def parse(cls, text: str, base: int) -> "DigitString":
        """Parse the dotted, most-significant-first format (``"9.8.0.1"``)."""
        parts = text.strip().split(".")
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise PalintipleError(f"malformed digit string {text!r}") from None
        if any(v < 0 for v in values):
            raise DigitOutOfRange(f"negative digit in {text!r}")
        return cls(base, tuple(reversed(values)))

    @classmethod
    def from_int(cls, value: int, base: int) -> "DigitString":
        if value < 0:
            raise PalintipleError("value must be non-negative")
        out = []
        while True:
            value, d = divmod(value, base)
            out.append(d)
            if value == 0:
                break
        return cls(base, tuple(out))

    @classmethod
    def from_msd(cls, digits: Sequence[int], base: int) -> "DigitString":
        return cls(base, tuple(reversed(digits)))

    @property
    def k(self) -> int:
        """Index of the most significant digit."""
        return len(self.digits) - 1

    def msd_first(self) -> tuple[int, ...]:
        return self.digits[::-1]

    def to_int(self) -> int:
        value = 0
        for d in reversed(self.digits):
            value = value * self.base + d
        return value

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return ".".join(str(d) for d in reversed(self.digits))


@dataclass(frozen=True)
class CarrySequence:
    """Carries c_0 .. c_{k+1} of n * reverse(p), lowest column first."""

    carries: tuple[int, ...]
    multiplier: int

    def __post_init__(self):
        object.__setattr__(self, "carries", tuple(int(c) for c in self.carries))

    @property
    def k(self) -> int:
        return len(self.carries) - 2

    def __getitem__(self, j: int) -> int:
        return self.carries[j]

    def __len__(self) -> int:
        return len(self.carries)


@dataclass(frozen=True)
class PalintipleRecord:
    n: int
    base: int
    digits: DigitString
    carries: CarrySequence
    cls: PalintipleClass

    @property
    def k(self) -> int:
        return self.digits.k

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "base": self.base,
            "digits": str(self.digits),
            "carries": list(self.carries.carries),
            "class": self.cls.value,
        }


def check_parameters(n: int, b: int) -> None:
    if b <= 2:
        raise BadParameters(f"base must exceed 2, got {b}")
    if not 1 < n < b:
        raise BadParameters(f"multiplier must satisfy 1 < n < b, got n={n}, b={b}")


def reverse_digits(d: DigitString) -> DigitString:
    return DigitString(d.base, d.digits[::-1])


def schoolbook_multiply(d: DigitString, n: int) -> tuple[DigitString, CarrySequence]:
    """Multiply ``d`` by ``n`` column by column.

    Returns the product digits and the carries c_0 .. c_L, where L = len(d)
    and c_L is the overflow carry.  Any overflow is appended to the product,
    so its length may exceed ``len(d)``.
    """
    b = d.base
    carries = [0]
    out = []
    carry = 0
    for digit in d.digits:
        carry, r = divmod(n * digit + carry, b)
        out.append(r)
        carries.append(carry)
    tail = carry
    while tail:
        tail, r = divmod(tail, b)
        out.append(r)
    return DigitString(b, tuple(out)), CarrySequence(tuple(carries), n)


def classify_carries(c: CarrySequence, k: int | None = None) -> PalintipleClass:
    """Classify a carry sequence by its palindromic pattern.

    The all-zero sequence matches both patterns; it never belongs to a
    palintiple and is reported as symmetric.
    """
    if k is None:
        k = c.k
    cs = c.carries
    if len(cs) != k + 2:
        raise PalintipleError(f"expected {k + 2} carries, got {len(cs)}")
    if all(cs[j] == cs[k - j] for j in range(k + 1)):
        return PalintipleClass.SYMMETRIC
    if all(cs[j] == cs[k - j + 1] for j in range(k + 1)):
        return PalintipleClass.SHIFTED_SYMMETRIC
    return PalintipleClass.ASYMMETRIC


def verify_palintiple(d: DigitString, n: int) -> PalintipleRecord:
    """Check that ``d`` equals ``n`` times its reversal and classify it."""
    b = d.base
    check_parameters(n, b)
    if len(d) < 2:
        raise NotAMultiple("a single digit cannot be a proper multiple of itself")
    if d.digits[-1] == 0 or d.digits[0] == 0:
        raise LeadingZero(f"{d} or its reversal has a leading zero")
    product, carries = schoolbook_multiply(reverse_digits(d), n)
    if len(product) != len(d):
        raise NotAMultiple(f"{n} * reverse({d}) has more digits than {d}")
    for j, (x, y) in enumerate(zip(product.digits, d.digits)):
        if x != y:
            raise NotAMultiple(
                f"{n} * reverse({d}) = {product}; digit {j} differs ({x} != {y})"
            )
    return PalintipleRecord(n, b, d, carries, classify_carries(carries))


def digits_from_carries(c: CarrySequence, b: int) -> DigitString:
    """Recover the digits of the unique palintiple with carries ``c``.

    Solving the column equations at j and k - j simultaneously gives

        d_j = (n*b*c_{k-j+1} - n*c_{k-j} + b*c_{j+1} - c_j) / (n**2 - 1).
    """
    n = c.multiplier
    check_parameters(n, b)
    cs = c.carries
    k = c.k
    if k < 1:
        raise PalintipleError("need carries c_0 .. c_{k+1} with k >= 1")
    if cs[0] != 0 or cs[k + 1] != 0:
        raise PalintipleError("boundary carries c_0 and c_{k+1} must be zero")
    m = n * n - 1
    out = []
    for j in range(k + 1):
        num = n * b * cs[k - j + 1] - n * cs[k - j] + b * cs[j + 1] - cs[j]
        dj, rem = divmod(num, m)
        if rem:
            raise NonIntegralDigit(f"d_{j} = {num}/{m} is not an integer")
        if not 0 <= dj < b:
            raise DigitOutOfRange(f"d_{j} = {dj} is outside [0, {b})")
        out.append(dj)
    if out[0] == 0 or out[k] == 0:
        raise LeadingZero("recovered digits have a leading zero")
    return DigitString(b, tuple(out))


def concatenate(p: PalintipleRecord, m: int) -> PalintipleRecord:
    """Repeat the digits of ``p`` ``m`` times; the result is again a palintiple."""
    if m < 1:
        raise PalintipleError("repeat count must be at least 1")
    if m == 1:
        return p
    d = DigitString(p.base, p.digits.digits * m)
    try:
        return verify_palintiple(d, p.n)
    except PalintipleError as exc:  # pragma: no cover - invariant
        raise AssertionError(f"concatenation of {p.digits} failed: {exc}") from exc
