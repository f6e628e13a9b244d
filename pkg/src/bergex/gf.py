"""Small finite fields GF(p^k) for the algebraic constructions.

Elements are integers 0..q-1 encoding base-p coefficient vectors of
polynomials over GF(p). Prime fields reduce to modular arithmetic; prime
powers multiply modulo the lexicographically smallest monic irreducible
polynomial, found by brute force. Desk scale only: q <= 81.
"""

from __future__ import annotations

from functools import cached_property

MAX_ORDER = 81


def prime_power(q: int) -> tuple[int, int] | None:
    """(p, k) with q = p^k for prime p, else None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q:
            break
        if q % p:
            continue
        k, m = 0, q
        while m % p == 0:
            m //= p
            k += 1
        return (p, k) if m == 1 else None
    return (q, 1)


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    num = num[:]
    dd = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] * inv_lead % p
        if c:
            for j, d in enumerate(den):
                num[i - dd + j] = (num[i - dd + j] - c * d) % p
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num


def _find_irreducible(p: int, k: int) -> list[int]:
    """Lex-smallest monic irreducible of degree k over GF(p)."""
    def divisors_exist(cand):
        # divisible by some monic poly of degree 1..k//2?
        for deg in range(1, k // 2 + 1):
            for code in range(p ** deg):
                den = [(code // p ** i) % p for i in range(deg)] + [1]
                if len(_poly_mod(cand, den, p)) == 1 and _poly_mod(cand, den, p)[0] == 0:
                    return True
        return False

    for code in range(p ** k):
        cand = [(code // p ** i) % p for i in range(k)] + [1]
        if not divisors_exist(cand):
            return cand
    raise AssertionError("no irreducible polynomial found")


class GF:
    """Arithmetic in GF(q) with a full multiplication table."""

    def __init__(self, q: int):
        pk = prime_power(q)
        if pk is None:
            raise ValueError(f"{q} is not a prime power")
        if q > MAX_ORDER:
            raise ValueError(f"field order {q} exceeds the supported {MAX_ORDER}")
        self.q = q
        self.p, self.k = pk
        self.modulus = [0, 1] if self.k == 1 else _find_irreducible(self.p, self.k)

    def _digits(self, a: int) -> list[int]:
        return [(a // self.p ** i) % self.p for i in range(self.k)]

    def _undigits(self, d) -> int:
        return sum(c * self.p ** i for i, c in enumerate(d))

    def add(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        return self._undigits([(x + y) % self.p for x, y in zip(da, db)])

    @cached_property
    def _mul_table(self) -> list[list[int]]:
        table = [[0] * self.q for _ in range(self.q)]
        for a in range(self.q):
            da = self._digits(a)
            for b in range(a, self.q):
                db = self._digits(b)
                prod = [0] * (2 * self.k - 1)
                for i, x in enumerate(da):
                    if not x:
                        continue
                    for j, y in enumerate(db):
                        prod[i + j] = (prod[i + j] + x * y) % self.p
                red = _poly_mod(prod, self.modulus, self.p)
                red += [0] * (self.k - len(red))
                v = self._undigits(red[:self.k])
                table[a][b] = table[b][a] = v
        return table

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        return self._mul_table[a][b]

    def pow(self, a: int, e: int) -> int:
        out, base = 1, a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    @cached_property
    def generator(self) -> int:
        for a in range(1, self.q):
            if self.element_order(a) == self.q - 1:
                return a
        raise AssertionError("no generator found")

    def subgroup(self, order: int) -> tuple[int, ...]:
        """The unique multiplicative subgroup of the given order."""
        if order < 1 or (self.q - 1) % order:
            raise ValueError(f"{order} does not divide the group order {self.q - 1}")
        step = (self.q - 1) // order
        return tuple(sorted(self.pow(self.generator, step * i) for i in range(order)))
