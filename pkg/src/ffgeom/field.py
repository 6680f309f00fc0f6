"""Exact arithmetic over GF(p^k), with the additive character table.

Elements are canonical integer indices in [0, q).  For k = 1 the index is
the residue itself; for k > 1 it is the base-p digit encoding of the
polynomial coefficients, low degree first:

    index = c0 + c1*p + c2*p^2 + ... + c_{k-1}*p^(k-1).

A Field instance is immutable after construction and precomputes all the
lookup tables (inverse, negation, exp/log for extension multiplication,
trace, character) that the bucketing kernels need, so it can be shared
freely across workers.  Counts stay exact Python integers everywhere;
floating point enters only through the character values.
"""

from __future__ import annotations

import functools
import math
import re

import numpy as np

from .errors import (
    DegreeMismatchError,
    NonPrimeError,
    ParseError,
    ReduciblePolynomialError,
    ZeroInverseError,
)

MAX_Q = 1 << 16  # fields beyond 2^16 elements are out of scope


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Polynomials over GF(p): coefficient lists, low degree first, trimmed.

def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m, coefficients mod p."""
    a = [x % p for x in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    del a[dm:]
    return _poly_trim(a)


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _monic_polys_lex(p: int, deg: int):
    """Monic degree-`deg` polynomials in lex order on (c0, ..., c_{deg-1}).

    Low-degree-first comparison: c0 is the most significant coordinate,
    so c_{deg-1} varies fastest.
    """
    idx = [0] * deg
    while True:
        yield idx + [1]
        i = deg - 1
        while i >= 0 and idx[i] == p - 1:
            idx[i] = 0
            i -= 1
        if i < 0:
            return
        idx[i] += 1


def _is_irreducible(m: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(m) - 1
    if deg < 1:
        return False
    if m[0] == 0:  # divisible by t
        return deg == 1
    for d in range(1, deg // 2 + 1):
        for cand in _monic_polys_lex(p, d):
            if not _poly_mod(m, cand, p):
                return False
    return True


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over GF(p),
    coefficients compared low-degree-first."""
    for coeffs in _monic_polys_lex(p, k):
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("an irreducible polynomial of every degree exists")


class Field:
    """Arithmetic context for GF(p^k). Construct via make_field()."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...] | None):
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = modulus

        q = self.q
        # digit matrix: row i = base-p digits of i, low degree first
        vals = np.arange(q, dtype=np.int64)
        digits = np.empty((q, k), dtype=np.int64)
        for j in range(k):
            digits[:, j] = vals % p
            vals = vals // p
        self._digits = digits
        self._pw = (p ** np.arange(k, dtype=np.int64))

        self._neg_np = ((p - digits) % p) @ self._pw
        self._neg = self._neg_np.tolist()

        if k > 1:
            self._build_ext_tables()
        else:
            self._build_prime_tables()

        self._build_trace_and_character()

    # -- construction helpers ------------------------------------------------

    def _idx_to_poly(self, a: int) -> list[int]:
        out = []
        p = self.p
        for _ in range(self.k):
            out.append(a % p)
            a //= p
        return _poly_trim(out)

    def _poly_to_idx(self, c: list[int]) -> int:
        s = 0
        for coef in reversed(c):
            s = s * self.p + coef
        return s

    def _mul_poly_idx(self, a: int, b: int) -> int:
        prod = _poly_mul(self._idx_to_poly(a), self._idx_to_poly(b), self.p)
        return self._poly_to_idx(_poly_mod(prod, list(self.modulus), self.p))

    def _pow_poly_idx(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_poly_idx(r, a)
            a = self._mul_poly_idx(a, a)
            e >>= 1
        return r

    def _build_ext_tables(self):
        q = self.q
        order = q - 1
        factors = _prime_factors(order)
        gen = None
        for g in range(2, q):
            if all(self._pow_poly_idx(g, order // r) != 1 for r in factors):
                gen = g
                break
        assert gen is not None
        exp = [1] * (2 * order)
        for i in range(1, order):
            exp[i] = self._mul_poly_idx(exp[i - 1], gen)
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        log = [0] * q  # log[0] is a sentinel; callers mask zeros
        for i in range(order):
            log[exp[i]] = i
        self._exp = exp
        self._log = log
        self._exp_np = np.array(exp, dtype=np.int64)
        self._log_np = np.array(log, dtype=np.int64)
        inv = [0] * q
        for a in range(1, q):
            inv[a] = exp[order - log[a]]
        self._inv = inv
        self._inv_np = np.array(inv, dtype=np.int64)

    def _build_prime_tables(self):
        p = self.p
        inv = [0] * p
        if p > 1:
            inv[1] = 1
        for a in range(2, p):
            inv[a] = (p - (p // a) * inv[p % a] % p) % p
        self._inv = inv
        self._inv_np = np.array(inv, dtype=np.int64)

    def _build_trace_and_character(self):
        p, k = self.p, self.k
        if k == 1:
            tr = np.arange(self.q, dtype=np.int64)
        else:
            # trace is F_p-linear: evaluate it on the power basis t^j once
            basis_tr = []
            for j in range(k):
                x = self._poly_to_idx([0] * j + [1])
                acc = x
                frob = x
                for _ in range(k - 1):
                    frob = self._pow_poly_idx(frob, p)
                    acc = self.add(acc, frob)
                assert acc < p  # lands in the prime subfield
                basis_tr.append(acc)
            tr = (self._digits @ np.array(basis_tr, dtype=np.int64)) % p
        self._trace_np = tr
        self._char_np = np.exp(2j * np.pi * tr / p)

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"Field(GF({self.q}))"

    def spec_string(self) -> str:
        if self.k == 1:
            return str(self.p)
        mod = ",".join(str(c) for c in self.modulus)
        return f"{self.p}^{self.k} modulus={mod}"

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "q": self.q,
            "modulus": list(self.modulus) if self.modulus else None,
        }

    # -- scalar arithmetic on element indices ---------------------------------

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p, s, m = self.p, 0, 1
        for _ in range(self.k):
            s += (((a % p) + (b % p)) % p) * m
            a //= p
            b //= p
            m *= p
        return s

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverseError("0 has no multiplicative inverse")
        return self._inv[a]

    def pow_(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    # -- element encoding ------------------------------------------------------

    def coeffs_of(self, a: int) -> tuple[int, ...]:
        """Base-p digit vector (polynomial coefficients, low degree first)."""
        out = []
        p = self.p
        for _ in range(self.k):
            out.append(a % p)
            a //= p
        return tuple(out)

    def element_from_coeffs(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            raise DegreeMismatchError(
                f"{len(coeffs)} coefficients for an extension of degree {self.k}"
            )
        s = 0
        for c in reversed(coeffs):
            if not 0 <= c < self.p:
                raise ValueError(f"coefficient {c} not in [0, {self.p})")
            s = s * self.p + c
        return s

    # -- character --------------------------------------------------------------

    def trace(self, a: int) -> int:
        return int(self._trace_np[a])

    def character(self, a: int) -> complex:
        """Additive character exp(2*pi*i * Tr(a) / p); nontrivial, chi(0) = 1."""
        return complex(self._char_np[a])

    def character_table(self) -> np.ndarray:
        """chi(a) for every a, indexed by element; do not mutate."""
        return self._char_np

    # -- vectorized arithmetic (numpy int64 index arrays) -----------------------

    def v_add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._pw

    def v_neg(self, a):
        if self.k == 1:
            return (self.p - a) % self.p
        if self.p == 2:
            return np.asarray(a)
        return self._neg_np[a]

    def v_sub(self, a, b):
        if self.k == 1:
            return (a - b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self.v_add(a, self._neg_np[b])

    def v_mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        a = np.asarray(a)
        b = np.asarray(b)
        out = self._exp_np[self._log_np[a] + self._log_np[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def v_inv(self, a):
        return self._inv_np[a]


@functools.lru_cache(maxsize=None)
def _make_field_cached(p: int, k: int, modulus: tuple[int, ...] | None) -> Field:
    return Field(p, k, modulus)


def make_field(p: int, k: int = 1, modulus=None) -> Field:
    """Build GF(p^k).

    When k > 1 and no modulus is given, the lexicographically smallest
    monic irreducible polynomial of degree k (low-degree-first comparison)
    is used, so the encoding is reproducible across runs and machines.
    """
    if not is_prime(p):
        raise NonPrimeError(f"{p} is not prime")
    if k < 1:
        raise DegreeMismatchError(f"extension degree must be >= 1, got {k}")
    if p ** k > MAX_Q:
        raise ValueError(f"q = {p}^{k} exceeds the supported maximum {MAX_Q}")
    if k == 1:
        if modulus is not None:
            raise DegreeMismatchError("prime fields take no modulus")
        return _make_field_cached(p, 1, None)
    if modulus is None:
        mod = default_modulus(p, k)
    else:
        mod = tuple(int(c) for c in modulus)
        if len(mod) != k + 1:
            raise DegreeMismatchError(
                f"modulus needs {k + 1} coefficients, got {len(mod)}"
            )
        if mod[-1] != 1:
            raise DegreeMismatchError("modulus must be monic")
        if any(not 0 <= c < p for c in mod):
            raise DegreeMismatchError("modulus coefficients must lie in [0, p)")
        if not _is_irreducible(list(mod), p):
            raise ReduciblePolynomialError(
                f"modulus {list(mod)} is reducible over GF({p})"
            )
    return _make_field_cached(p, k, mod)


_FIELD_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_field_spec(text: str) -> Field:
    """Parse a field specification string: "p", "p^k", optionally followed
    by "modulus=c0,c1,...,ck" (whitespace separated)."""
    tokens = text.split()
    if not tokens:
        raise ParseError("empty field specification")
    m = _FIELD_RE.match(tokens[0])
    if not m:
        raise ParseError(f"bad field specification {tokens[0]!r}")
    p = int(m.group(1))
    k = int(m.group(2)) if m.group(2) else 1
    modulus = None
    for tok in tokens[1:]:
        if tok.startswith("modulus="):
            try:
                modulus = [int(c) for c in tok[len("modulus="):].split(",")]
            except ValueError as exc:
                raise ParseError(f"bad modulus list {tok!r}") from exc
        else:
            raise ParseError(f"unexpected token {tok!r} in field specification")
    return make_field(p, k, modulus)
