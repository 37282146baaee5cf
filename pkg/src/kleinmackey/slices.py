"""Slice data for integer suspensions of the constant-functor spectrum.

Everything here is closed-form: the slice cells of the n-fold suspension
over C2 and over the Klein group, their graded homotopy, the printed towers
through n = 10 (with the exotic cofiber node), and the cyclic-subgroup
restriction consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import bredon
from .groups import KLEIN
from .mackey import (catalog, format_name_expr, identify, parse_name_expr,
                     restrict_to)
from .reps import RepC2, RepK, restrict_rep


@dataclass(frozen=True)
class SliceCell:
    """One slice: dimension i, suspension as printed, coefficient names."""
    group: str
    i: int
    susp: object = None          # RepK or RepC2; None when trivial
    coeff: tuple = ()            # name expression ((atom, mult), ...)
    trivial: bool = False

    def pretty(self):
        if self.trivial:
            return "*"
        return f"{pretty_susp(self.susp)} H{pretty_coeff(self.coeff)}"


_GLYPHS = {
    "F": "F", "F*": "F*", "f": "f", "g": "g", "m": "m", "m*": "m*",
    "w": "w", "w*": "w*", "mg": "mg", "mg*": "mg*", "W": "W", "W*": "W*",
    "phiL(F)": "φ*_L F", "phiD(F)": "φ*_D F", "phiR(F)": "φ*_R F",
    "phiL(F*)": "φ*_L F*", "phiD(F*)": "φ*_D F*", "phiR(F*)": "φ*_R F*",
    "phiL(f)": "φ*_L f", "phiD(f)": "φ*_D f", "phiR(f)": "φ*_R f",
    "phiLDR(F)": "φ*_{LDR}F", "phiLDR(F*)": "φ*_{LDR}F*",
    "phiLDR(f)": "φ*_{LDR}f",
}


def pretty_coeff(expr):
    """Display form like "(φ*_{LDR}F* ⊕ g^2)"; bare name for single atoms."""
    if expr == "C":
        return " C"
    canonical = format_name_expr(expr)
    if canonical == "0":
        return " 0"
    parts = []
    for chunk in canonical.split(" + "):
        base, sep, power = chunk.rpartition("^")
        if sep and power.isdigit():
            parts.append(f"{_GLYPHS.get(base, base)}^{power}")
        else:
            parts.append(_GLYPHS.get(chunk, chunk))
    if len(parts) == 1:
        return parts[0]
    return "(" + " ⊕ ".join(parts) + ")"


def pretty_susp(v):
    if isinstance(v, RepK):
        k, a = v.b, v.a - v.b
        if (v.b, v.c, v.d) != (k, k, k):
            return f"Σ^{{{v.pretty()}}}"
        rho = "" if k == 0 else ("ρ" if k == 1 else f"{k}ρ")
    else:
        k, a = v.b, v.a - v.b
        rho = "" if k == 0 else ("ρ" if k == 1 else f"{k}ρ")
    if rho and a:
        return f"Σ^{{{rho}+{a}}}" if a > 0 else f"Σ^{{{rho}{a}}}"
    if rho:
        return f"Σ^{{{rho}}}" if len(rho) > 1 else f"Σ^{rho}"
    return f"Σ^{a}" if a else "Σ^0"


def _k_cell(i, k, a, names):
    return SliceCell("K", i, RepK(k + a, k, k, k), parse_name_expr(names))


def _c2_cell(i, k, a, names):
    return SliceCell("C2", i, RepC2(k + a, k), parse_name_expr(names, "C2"))


def slice_bounds_K(n):
    """Slice range of the n-fold suspension over the Klein group."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return (n, max(n, 4 * n - 12))


def slice_K(n, i):
    """The i-slice of the n-fold Klein suspension, in theorem-normal form."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    lo, hi = slice_bounds_K(n)
    if i < lo or i > hi:
        return SliceCell("K", i, trivial=True)
    if n <= 3:
        return _k_cell(n, 0, n, "F") if i == n else SliceCell("K", i, trivial=True)
    if i == n:
        k4, r4 = divmod(n, 4)
        return {
            0: _k_cell(n, k4, 0, "F*"),
            1: _k_cell(n, k4, 1, "f"),
            2: _k_cell(n, k4, 2, "f"),
            3: _k_cell(n, k4, 3, "F"),
        }[r4]
    if i % 4 == 0:
        k = i // 4
        if i == n + 1:
            return _k_cell(i, k, 0, "mg*")
        if n + 2 <= i <= 2 * n - 4:
            extra = i - n - 2
            names = "phiLDR(F*)" + (f" + g^{extra}" if extra else "")
            return _k_cell(i, k, 0, names)
        if 2 * n - 3 <= i <= 4 * n - 12:
            return _k_cell(i, 0, k, f"g^{2 * (n - k) - 5}")
        return SliceCell("K", i, trivial=True)
    if i % 4 == 2 and n < i <= 2 * n - 4:
        return _k_cell(i, (i - 2) // 4, 1, "phiLDR(f)")
    return SliceCell("K", i, trivial=True)


def slice_C2(n, i):
    """The i-slice of the n-fold suspension over C2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 3:
        if i != n:
            return SliceCell("C2", i, trivial=True)
        return {0: _c2_cell(0, 0, 0, "F"), 1: _c2_cell(1, 0, 1, "F"),
                2: _c2_cell(2, 1, 0, "f"), 3: _c2_cell(3, 1, 1, "f")}[n]
    if i == n:
        if n % 2 == 0:
            return _c2_cell(n, n // 2, 0, "F*")
        return _c2_cell(n, (n - 1) // 2, 1, "f")
    if i % 2 == 0:
        j = i // 2
        first = n // 2 + 1 if n % 2 == 0 else (n + 1) // 2
        if first <= j <= n - 2:
            return _c2_cell(i, 0, j, "g")
    return SliceCell("C2", i, trivial=True)


def slice_C2_f(n, i):
    """The i-slice of the n-fold C2 suspension of the free functor."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 2:
        if i == n:
            return _c2_cell(n, 0, n, "f")
        return SliceCell("C2", i, trivial=True)
    if i == 2 * n - 2:
        return _c2_cell(i, 0, n - 1, "g")
    if n <= i <= max(n, 2 * n - 4):
        return slice_C2(n, i)
    return SliceCell("C2", i, trivial=True)


# ---------------------------------------------------------------------------
# graded homotopy of cells


def _rho_decompose(v):
    if isinstance(v, RepK):
        k = v.b
        if (v.b, v.c, v.d) != (k, k, k):
            raise ValueError(f"not of the form a + k rho: {v}")
    else:
        k = v.b
    return v.a - k, k


def _merge(table, degree, names):
    if not names:
        return
    cur = dict(table.get(degree, ()))
    for atom, mult in names:
        cur[atom] = cur.get(atom, 0) + mult
    table[degree] = tuple(sorted(cur.items()))


def _expr(text):
    return parse_name_expr(text)


def _atom_homotopy_K(a, k, atom):
    """Closed-form homotopy of the (a + k rho)-suspension of one atom, or None."""
    out = {}
    if k == 0:
        if atom == "g":
            _merge(out, a, _expr("g"))
        else:
            _merge(out, a, ((atom, 1),))
        return out
    if atom == "g":
        _merge(out, a + k, _expr("g"))
        return out
    if atom == "F":
        if k < 0:
            # trade one rho for a 4-fold desuspension of the dual functor
            return _atom_homotopy_K(a - 4, k + 1, "F*")
        _merge(out, 4 * k + a, _expr("F"))
        _merge(out, 4 * k - 1 + a, _expr("mg"))
        for i in range(2 * k, 4 * k - 1):
            extra = 4 * k - 2 - i
            _merge(out, i + a, _expr("phiLDR(F)" + (f" + g^{extra}" if extra else "")))
        for i in range(k, 2 * k):
            _merge(out, i + a, _expr(f"g^{2 * (i - k) + 1}"))
        return out
    if atom == "F*":
        if k < 0:
            kk = -k
            _merge(out, -4 * kk + a, _expr("F*"))
            _merge(out, -(4 * kk - 1) + a, _expr("mg*"))
            for i in range(2 * kk, 4 * kk - 1):
                extra = 4 * kk - 2 - i
                _merge(out, -i + a,
                       _expr("phiLDR(F*)" + (f" + g^{extra}" if extra else "")))
            for i in range(kk, 2 * kk):
                _merge(out, -i + a, _expr(f"g^{2 * (i - kk) + 1}"))
            return out
        # one rho untwists to a plain 4-fold suspension of the constant functor
        return _atom_homotopy_K(a + 4, k - 1, "F")
    if atom == "f":
        _merge(out, 4 * k + a, _expr("F"))
        _merge(out, 4 * k - 1 + a, _expr("mg"))
        for i in range(2 * k + 1, 4 * k - 1):
            extra = 4 * k - 2 - i
            _merge(out, i + a, _expr("phiLDR(F)" + (f" + g^{extra}" if extra else "")))
        for i in range(k + 2, 2 * k + 1):
            mult = 2 * (i - k - 1)
            if mult:
                _merge(out, i + a, _expr(f"g^{mult}"))
        return out
    if atom in ("m", "mg"):
        _merge(out, 2 * k + a, _expr("phiLDR(F)"))
        for i in range(k + 1, 2 * k):
            _merge(out, i + a, _expr("g^3"))
        _merge(out, k + a, _expr("g" if atom == "m" else "g^2"))
        return out
    if atom == "mg*":
        # one rho trades the dual for a double suspension of m
        return _atom_homotopy_K(a + 2, k - 1, "m")
    if atom == "m*":
        return _atom_homotopy_K(a + 2, k - 1, "mg")
    if atom.startswith("phi"):
        h, inner = atom[3], atom[5:-1]
        if inner == "F":
            _merge(out, 2 * k + a, ((atom, 1),))
            for i in range(k, 2 * k):
                _merge(out, i + a, _expr("g"))
            return out
        if inner == "f":
            _merge(out, 2 * k + a, ((f"phi{h}(F)", 1),))
            for i in range(k + 1, 2 * k):
                _merge(out, i + a, _expr("g"))
            return out
        if inner == "F*":
            if k == 1:
                _merge(out, a + 2, ((f"phi{h}(f)", 1),))
                return out
            _merge(out, 2 * k + a, ((f"phi{h}(F)", 1),))
            for i in range(k + 2, 2 * k):
                _merge(out, i + a, _expr("g"))
            return out
    return None


def graded_homotopy_K(a, k, coeff, allow_oracle=False):
    """Homotopy names of the (a + k rho)-suspension of H(coeff) over K.

    Homotopy is additive over coefficient sums, so each atom is dispatched
    to its closed form; atoms without one (the w and W family) go through
    the chain oracle when allowed.
    """
    out = {}
    for atom, mult in coeff:
        table = _atom_homotopy_K(a, k, atom)
        if table is None:
            if not allow_oracle:
                raise ValueError(f"no closed form for coefficient {atom!r}")
            table = _oracle_homotopy(a, k, ((atom, 1),))
        for _ in range(mult):
            for deg, names in table.items():
                _merge(out, deg, names)
    return out


def _oracle_homotopy(a, k, coeff):
    v = RepK(a + k, k, k, k)
    table = bredon.homotopy(v, format_name_expr(coeff))
    out = {}
    for deg, m in table.items():
        expr = identify(m)
        if expr is None:
            raise ValueError(f"oracle value not a catalog sum at degree {deg}")
        if expr:
            out[deg] = expr
    return out


def graded_homotopy_C2(a, k, coeff):
    """Homotopy names of the (a + k rho)-suspension of H(coeff) over C2."""
    out = {}
    atoms = dict(coeff)
    if not atoms:
        return out
    if set(atoms) == {"g"}:
        _merge(out, a + k, (("g", atoms["g"]),))
        return out
    if len(atoms) > 1:
        for atom, mult in atoms.items():
            for deg, names in graded_homotopy_C2(a, k, ((atom, mult),)).items():
                _merge(out, deg, names)
        return out
    (name, mult), = atoms.items()
    unit = ((name, 1),)
    if k == 0:
        _merge(out, a, ((name, mult),))
        return out
    if name == "F":
        _merge(out, 2 * k + a, (("F", mult),))
        for i in range(k, 2 * k):
            _merge(out, i + a, (("g", mult),))
        return out
    if name == "f":
        _merge(out, 2 * k + a, (("F", mult),))
        for i in range(k + 1, 2 * k):
            _merge(out, i + a, (("g", mult),))
        return out
    if name == "F*":
        if k == 1:
            _merge(out, a + 2, (("f", mult),))
            return out
        _merge(out, 2 * k + a, (("F", mult),))
        for i in range(k + 2, 2 * k):
            _merge(out, i + a, (("g", mult),))
        return out
    raise ValueError(f"no closed form for C2 coefficient {name}")


def homotopy_of_slice(cell: SliceCell, allow_oracle=False):
    """Graded homotopy names of a slice cell; {} for trivial cells."""
    if cell.trivial:
        return {}
    a, k = _rho_decompose(cell.susp)
    if cell.group == "K":
        return graded_homotopy_K(a, k, cell.coeff, allow_oracle=allow_oracle)
    return graded_homotopy_C2(a, k, cell.coeff)


# the cofiber C of the constant functor mapping into its three-fold
# inflation is not a twisted Eilenberg-MacLane spectrum; it is recorded by
# its two homotopy Mackey functors
COFIBER_C_HOMOTOPY = ((0, (("g", 2),)), (1, (("f", 1),)))


def cofiber_node_homotopy(m):
    """Homotopy of the (rho + m)-suspension of the cofiber spectrum C.

    The two recorded homotopy functors of C live in a two-stage tower whose
    rho-twisted layers have disjoint degrees, so the suspension's homotopy
    is just the union of the twisted layers.
    """
    out = {}
    for deg, names in COFIBER_C_HOMOTOPY:
        for d, expr in graded_homotopy_K(m + deg, 1, names).items():
            _merge(out, d, expr)
    return out


def effective_slice_dim(cell: SliceCell):
    """Slice dimension of a cell, promoting geometric and inflated parts.

    The suspension of a purely geometric cell counts four-fold; coefficients
    inflated from C2 double the slice dimension of their C2 cell; ordinary
    coefficients contribute their honest representation dimension.
    """
    if cell.trivial:
        return None
    a, k = _rho_decompose(cell.susp)
    names = set(dict(cell.coeff))
    if cell.group == "C2":
        if names == {"g"}:
            return 2 * (a + k)
        if names == {"f"} and a >= 1:
            return 2 * k + a            # one suspension of a 1-slice chain
        return cell.susp.dim
    if names == {"g"}:
        return 4 * (a + k)
    if names <= {"phiL(f)", "phiD(f)", "phiR(f)"}:
        return 2 * (2 * k + a)          # doubled C2 slice dim of S^{k rho + a} Hf
    if names <= {"phiL(F)", "phiD(F)", "phiR(F)"}:
        return 2 * (2 * k + a)
    if names <= {"phiL(F*)", "phiD(F*)", "phiR(F*)"} | {"g"}:
        return 4 * k + 2 * a
    if names == {"f"} and a >= 1:
        return 4 * k + a
    return cell.susp.dim


# ---------------------------------------------------------------------------
# towers


@dataclass(frozen=True)
class TowerNode:
    kind: str                 # "slice" | "summand" | "section" | "total" | "aux"
    label: str
    i: object = None          # slice dimension for slice/summand nodes
    susp: object = None
    coeff: object = None      # name expression, or the string "C"
    homotopy: tuple = ()      # sorted ((degree, expr), ...)
    summand_of: object = None
    note: str = ""

    def pretty(self):
        if self.coeff == "C":
            return f"{pretty_susp(self.susp)} C"
        return f"{pretty_susp(self.susp)} H{pretty_coeff(self.coeff)}"


def _node(kind, label, i, k, a, names, summand_of=None, note=""):
    susp = RepK(k + a, k, k, k)
    if names == "C":
        if k != 1:
            raise ValueError("cofiber nodes only appear with a single rho twist")
        hom = tuple(sorted(cofiber_node_homotopy(a).items()))
        return TowerNode(kind, label, i, susp, "C", hom, summand_of, note)
    coeff = parse_name_expr(names)
    hom = tuple(sorted(graded_homotopy_K(a, k, coeff, allow_oracle=True).items()))
    return TowerNode(kind, label, i, susp, coeff, hom, summand_of, note)


@lru_cache(maxsize=None)
def tower_K(n):
    """The printed tower node list for n <= 10; bare slice list above that."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return (_node("slice", "P^0_0", 0, 0, 0, "F"),)
    if n == 1:
        return (_node("slice", "P^1_1", 1, 0, 1, "F"),)
    if n == 2:
        return (_node("slice", "P^2_2", 2, 0, 2, "F"),)
    if n == 3:
        return (_node("slice", "P^3_3", 3, 0, 3, "F"),)
    if n == 4:
        return (_node("slice", "P^4_4", 4, 1, 0, "F*"),)
    if n == 5:
        return (
            _node("slice", "P^8_8", 8, 0, 2, "g"),
            _node("total", "X", None, 1, 1, "F*"),
            _node("slice", "P^6_6", 6, 1, 1, "phiLDR(f)"),
            _node("section", "P^6", None, 1, 1, "w*"),
            _node("slice", "P^5_5", 5, 1, 1, "f"),
        )
    if n == 6:
        return (
            _node("slice", "P^12_12", 12, 0, 3, "g"),
            _node("total", "X", None, 1, 2, "F*"),
            _node("slice", "P^8_8", 8, 1, 2, "phiLDR(f)"),
            _node("section", "P^8", None, 1, 2, "w*"),
            _node("slice", "P^6_6", 6, 1, 2, "f"),
        )
    if n == 7:
        return (
            _node("slice", "P^16_16", 16, 0, 4, "g"),
            _node("total", "X", None, 1, 3, "F*"),
            _node("slice", "P^12_12", 12, 0, 3, "g^3"),
            _node("section", "P^12", None, 1, 3, "w*"),
            _node("slice", "P^10_10", 10, 1, 3, "phiLDR(F)"),
            _node("section", "P^10", None, 1, 3, "W*"),
            _node("slice", "P^8_8", 8, 1, 2, "m"),
            _node("section", "P^8_7", None, 1, 3, "f"),
            _node("slice", "P^7_7", 7, 1, 3, "F"),
        )
    if n == 8:
        return (
            _node("slice", "P^20_20", 20, 0, 5, "g"),
            _node("total", "X", None, 1, 4, "F*"),
            _node("slice", "P^16_16", 16, 0, 4, "g^3"),
            _node("section", "P^16", None, 1, 4, "w*"),
            _node("slice", "P^12_12", 12, 3, 0, "phiLDR(F*) + g^2"),
            _node("section", "P^12", None, 1, 4, "W*"),
            _node("slice", "P^10_10", 10, 1, 3, "phiLDR(F)"),
            _node("section", "P^10", None, 1, 3, "C"),
            _node("slice", "P^8_8", 8, 1, 4, "F"),
        )
    if n == 9:
        return (
            _node("slice", "P^24_24", 24, 0, 6, "g"),
            _node("total", "X", None, 1, 5, "F*"),
            _node("slice", "P^20_20", 20, 0, 5, "g^3"),
            _node("section", "P^20", None, 1, 5, "w*"),
            _node("summand", "A", 16, 0, 4, "g^3", summand_of=16),
            _node("aux", "aux", None, 1, 5, "phiLDR(F)"),
            _node("section", "P^16", None, 1, 5, "W*"),
            _node("slice", "P^14_14", 14, 3, 1, "phiLDR(f)"),
            _node("summand", "B", 16, 1, 3, "g^2", summand_of=16),
            _node("section", "P^13", None, 1, 5, "f"),
            _node("summand", "C", 12, 1, 4, "phiLDR(F)", summand_of=12),
            _node("section", "P^11", None, 1, 4, "C"),
            _node("summand", "D", 12, 1, 2, "g", summand_of=12),
            _node("section", "P^10", None, 1, 5, "F"),
            _node("slice", "P^10_10", 10, 2, 1, "phiLDR(f)"),
            _node("section", "P^9", None, 2, 1, "w*"),
            _node("slice", "P^9_9", 9, 2, 1, "f"),
        )
    if n == 10:
        return (
            _node("slice", "P^28_28", 28, 0, 7, "g"),
            _node("total", "X", None, 1, 6, "F*"),
            _node("slice", "P^24_24", 24, 0, 6, "g^3"),
            _node("section", "P^24", None, 1, 6, "w*"),
            _node("summand", "A", 20, 0, 5, "g^3", summand_of=20),
            _node("aux", "aux", None, 1, 6, "phiLDR(F)"),
            _node("section", "P^20", None, 1, 6, "W*"),
            _node("summand", "C", 16, 3, 2, "phiLDR(f)", summand_of=16),
            _node("summand", "B", 20, 1, 4, "g^2", summand_of=20),
            _node("section", "P^17", None, 1, 6, "f"),
            _node("summand", "D", 16, 3, 1, "g^3", summand_of=16),
            _node("aux", "aux2", None, 1, 5, "phiLDR(F)"),
            _node("section", "P^15", None, 1, 5, "C"),
            _node("slice", "P^14_14", 14, 3, 1, "phiLDR(f)"),
            _node("summand", "E", 16, 1, 3, "g", summand_of=16),
            _node("section", "P^12", None, 1, 6, "F"),
            _node("slice", "P^12_12", 12, 2, 2, "phiLDR(f)"),
            _node("section", "P^11", None, 2, 2, "w*"),
            _node("slice", "P^10_10", 10, 2, 2, "f"),
        )
    nodes = []
    lo, hi = slice_bounds_K(n)
    for i in range(lo, hi + 1):
        cell = slice_K(n, i)
        if cell.trivial:
            continue
        hom = tuple(sorted(homotopy_of_slice(cell).items()))
        nodes.append(TowerNode("slice", f"P^{i}_{i}", i, cell.susp, cell.coeff,
                               hom, note="section structure not asserted"))
    return tuple(reversed(nodes))


def tower_slice_parts(n):
    """{i: [name-exprs]} of the tower's slice content (slices plus summands)."""
    parts = {}
    for node in tower_K(n):
        if node.kind in ("slice", "summand"):
            parts.setdefault(node.i, []).append((node.susp, node.coeff))
    return parts


# ---------------------------------------------------------------------------
# restriction to cyclic subgroups


_C2_RESTRICTIONS = {}


def _restrict_coeff(expr, h):
    """Name expression of a Klein coefficient restricted to a cyclic subgroup."""
    key = (expr, h)
    if key not in _C2_RESTRICTIONS:
        m = restrict_to(catalog(format_name_expr(expr)), h)
        got = identify(m)
        if got is None:
            raise ValueError(f"restriction of {expr} to {h} is not a C2 catalog sum")
        _C2_RESTRICTIONS[key] = got
    return _C2_RESTRICTIONS[key]


def restriction_consistency(n):
    """Check that every Klein slice restricts to the matching C2 slice.

    For each slice dimension and each cyclic subgroup, the restricted cell's
    graded homotopy must agree with the C2 slice formulas; returns the list
    of mismatch descriptions (empty means consistent).
    """
    failures = []
    lo, hi = slice_bounds_K(n)
    for i in range(lo, hi + 3):
        kcell = slice_K(n, i)
        ccell = slice_C2(n, i)
        expect = homotopy_of_slice(ccell)
        for h in KLEIN.cyclics:
            if kcell.trivial:
                got = {}
            else:
                rsusp = restrict_rep(kcell.susp, h)
                rcoeff = _restrict_coeff(kcell.coeff, h)
                a, k = _rho_decompose(rsusp)
                got = graded_homotopy_C2(a, k, rcoeff)
            if got != expect:
                failures.append(
                    f"n={n} i={i} at {h}: restricted {got} != C2 slice {expect}")
    return failures


def slice_predicates(m):
    """Eilenberg-MacLane slice tests: 0-slice, 1-slice, (-1)-slice."""
    gd = m.gd
    if m.group == "C2":
        res_ok = m.res_edge("C2", "e").kernel_basis() == ()
        tr_ok = m.tr_edge("C2", "e").rank() == m.dim("C2")
        return {"is_zero_slice_EM": True, "is_one_slice_EM": res_ok,
                "is_minus_one_slice_EM": tr_ok}
    joint = m.res_edge("K", "L").vstack(m.res_edge("K", "D")).vstack(m.res_edge("K", "R"))
    inj = joint.kernel_basis() == () and all(
        m.res_edge(h, "e").kernel_basis() == () for h in gd.cyclics)
    jt = m.tr_edge("K", "L").hstack(m.tr_edge("K", "D")).hstack(m.tr_edge("K", "R"))
    surj = jt.rank() == m.dim("K") and all(
        m.tr_edge(h, "e").rank() == m.dim(h) for h in gd.cyclics)
    return {"is_zero_slice_EM": True, "is_one_slice_EM": inj,
            "is_minus_one_slice_EM": surj}
