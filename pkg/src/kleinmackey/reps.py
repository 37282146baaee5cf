"""Virtual real representations of the Klein four-group and of C2.

A Klein-group representation is an integer tuple (a, b, c, d) of
coefficients on (1, alpha, beta, gamma); column order is fixed that way
everywhere to avoid transposition bugs.  A C2 representation is (a, b)
on (1, sigma).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .groups import KLEIN


@dataclass(frozen=True)
class RepK:
    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0

    @property
    def dim(self):
        return self.a + self.b + self.c + self.d

    def coeffs(self):
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other):
        return RepK(self.a + other.a, self.b + other.b,
                    self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RepK(-self.a, -self.b, -self.c, -self.d)

    def __rmul__(self, n):
        return RepK(n * self.a, n * self.b, n * self.c, n * self.d)

    def pretty(self):
        names = ("", "a", "b", "g")
        parts = []
        for coeff, sym in zip(self.coeffs(), names):
            if coeff == 0:
                continue
            if sym == "":
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(sym)
            elif coeff == -1:
                parts.append(f"-{sym}")
            else:
                parts.append(f"{coeff}{sym}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out


@dataclass(frozen=True)
class RepC2:
    a: int = 0
    b: int = 0

    @property
    def dim(self):
        return self.a + self.b

    def coeffs(self):
        return (self.a, self.b)

    def __add__(self, other):
        return RepC2(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RepC2(-self.a, -self.b)

    def __rmul__(self, n):
        return RepC2(n * self.a, n * self.b)


ALPHA = RepK(0, 1, 0, 0)
BETA = RepK(0, 0, 1, 0)
GAMMA = RepK(0, 0, 0, 1)
RHO_K = RepK(1, 1, 1, 1)
SIGMA = RepC2(0, 1)
RHO_C2 = RepC2(1, 1)

# Restriction matrices to the cyclic subgroups, columns (1, alpha, beta, gamma),
# rows (1, sigma), exactly as the source tables print them.  Note that these
# tables treat gamma as the character trivial on L and beta as trivial on D,
# which is the opposite pairing from the kernel bookkeeping (ker beta = L,
# ker gamma = D) that the cell structures use; see restrict_rep_by_kernels.
RESTRICT_MATRICES = {
    "L": ((1, 0, 0, 1), (0, 1, 1, 0)),
    "D": ((1, 0, 1, 0), (0, 1, 0, 1)),
    "R": ((1, 1, 0, 0), (0, 0, 1, 1)),
}

# Fixed-point homomorphisms, same printed convention.
FIXED_MATRICES = {
    "L": ((1, 0, 0, 0), (0, 0, 0, 1)),
    "D": ((1, 0, 0, 0), (0, 0, 1, 0)),
    "R": ((1, 0, 0, 0), (0, 1, 0, 0)),
}

_CHAR_COEFF = {"alpha": 1, "beta": 2, "gamma": 3}  # index into coeffs()


def _apply(matrix, v):
    co = v.coeffs()
    return RepC2(sum(m * x for m, x in zip(matrix[0], co)),
                 sum(m * x for m, x in zip(matrix[1], co)))


def restrict_rep(v, h):
    """Restriction RO(K) -> RO(C2) along the cyclic subgroup h, printed tables."""
    return _apply(RESTRICT_MATRICES[h], v)


def fixed_rep(v, h):
    """Fixed points RO(K) -> RO(C2) of the cyclic subgroup h, printed tables."""
    return _apply(FIXED_MATRICES[h], v)


def restrict_rep_by_kernels(v, h):
    """Restriction with a character trivial on h exactly when h is its kernel.

    This is the pairing the sphere cell structures realize (alpha dies on R,
    beta on L, gamma on D); it agrees with restrict_rep on any representation
    symmetric in (alpha, beta, gamma), in particular on multiples of rho.
    """
    triv = v.a
    sig = 0
    for char, idx in _CHAR_COEFF.items():
        if KLEIN.char_kernels[char] == h:
            triv += v.coeffs()[idx]
        else:
            sig += v.coeffs()[idx]
    return RepC2(triv, sig)


_TERM = re.compile(r"^([+-]?\d*)([abg]?)$")


def parse_rep(text):
    """Parse "a,b,c,d" tuples or symbolic sums like "2+a-3b" over tokens 1,a,b,g."""
    text = text.strip()
    if "," in text:
        parts = text.split(",")
        if len(parts) != 4:
            raise ValueError(f"expected 4 comma-separated integers: {text!r}")
        try:
            a, b, c, d = (int(p) for p in parts)
        except ValueError:
            raise ValueError(f"bad representation tuple: {text!r}") from None
        return RepK(a, b, c, d)
    coeffs = {"": 0, "a": 0, "b": 0, "g": 0}
    terms = re.findall(r"[+-]?[^+-]+", text.replace(" ", ""))
    if not terms:
        raise ValueError("empty representation")
    for term in terms:
        m = _TERM.match(term)
        if not m:
            raise ValueError(f"bad term {term!r} in representation {text!r}")
        num, sym = m.groups()
        if num in ("", "+"):
            n = 1
        elif num == "-":
            n = -1
        else:
            n = int(num)
        if sym == "" and num in ("", "+", "-"):
            raise ValueError(f"bad term {term!r} in representation {text!r}")
        coeffs[sym] += n
    return RepK(coeffs[""], coeffs["a"], coeffs["b"], coeffs["g"])


def parse_rep_c2(text):
    parts = text.strip().split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 2 comma-separated integers: {text!r}")
    return RepC2(int(parts[0]), int(parts[1]))
