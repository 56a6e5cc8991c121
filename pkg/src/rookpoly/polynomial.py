"""Rook polynomials with exact integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (0,)


@dataclass(frozen=True)
class RookPolynomial:
    """``coeffs[k]`` is the number of ways to place ``k`` non-attacking rooks."""

    coeffs: tuple[int, ...] = (1,)

    def __post_init__(self):
        c = _trim(self.coeffs)
        if any(a < 0 for a in c):
            raise ValueError("rook polynomial coefficients are nonnegative")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def one(cls) -> "RookPolynomial":
        return cls((1,))

    @classmethod
    def parse_csv(cls, text: str) -> "RookPolynomial":
        return cls(tuple(int(t) for t in text.strip().split(",")))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs != (0,) else -1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "RookPolynomial") -> "RookPolynomial":
        return poly_shift_add(self, other, 1, 0)

    def __mul__(self, other: "RookPolynomial") -> "RookPolynomial":
        return poly_mul(self, other)

    def __call__(self, x):
        total = 0
        for a in reversed(self.coeffs):
            total = total * x + a
        return total

    def to_csv(self) -> str:
        return ",".join(str(a) for a in self.coeffs)

    def __str__(self) -> str:
        terms = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if k == 0:
                terms.append(str(a))
                continue
            power = "x" if k == 1 else f"x^{k}"
            terms.append(power if a == 1 else f"{a}{power}")
        return " + ".join(terms) if terms else "0"


def poly_mul(p: RookPolynomial, q: RookPolynomial) -> RookPolynomial:
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return RookPolynomial(tuple(out))


def poly_shift_add(acc: RookPolynomial, p: RookPolynomial,
                   scalar: int, power: int) -> RookPolynomial:
    """Return ``acc + scalar * x**power * p``."""
    if scalar < 0:
        raise ValueError("scalar must be nonnegative")
    if scalar == 0:
        return acc
    out = list(acc.coeffs)
    need = power + len(p.coeffs)
    if len(out) < need:
        out.extend([0] * (need - len(out)))
    for k, a in enumerate(p.coeffs):
        out[power + k] += scalar * a
    return RookPolynomial(tuple(out))


def rectangular_poly(m: int, n: int) -> RookPolynomial:
    """Rook polynomial of the full ``m x n`` board.

    The k-th coefficient is C(m,k) C(n,k) k!, i.e. the falling factorial
    m(m-1)...(m-k+1) times C(n,k).  Each term is obtained from the previous
    one by an exact integer ratio update.
    """
    if m < 0 or n < 0:
        raise ValueError("dimensions must be nonnegative")
    coeffs = [1]
    term = 1
    for k in range(1, min(m, n) + 1):
        # C(m,k)C(n,k)k! = C(m,k-1)C(n,k-1)(k-1)! * (m-k+1)(n-k+1)/k
        term = term * (m - k + 1) * (n - k + 1) // k
        coeffs.append(term)
    return RookPolynomial(tuple(coeffs))
