"""Mackey functors for C2 and the Klein four-group as levelwise GF(2) data.

A functor is stored as one dimension per subgroup level plus a restriction
and a transfer matrix per lattice edge.  All group actions are trivial, so
the double coset rule collapses to concrete matrix identities that
check_axioms verifies.  The catalog holds the named functors used
throughout; identify() writes an arbitrary functor as a sum of catalog
names by matching additive rank invariants.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .f2 import BitMatrix
from .groups import group_by_name


@dataclass(frozen=True)
class Mackey:
    group: str
    dims: tuple   # per level, in group_by_name(group).levels order
    res: tuple    # per edge (upper, lower): matrix M(upper) -> M(lower)
    tr: tuple     # per edge (upper, lower): matrix M(lower) -> M(upper)

    @property
    def gd(self):
        return group_by_name(self.group)

    def dim(self, level):
        return self.dims[self.gd.levels.index(level)]

    def _edge_index(self, upper, lower):
        return self.gd.edges.index((upper, lower))

    def res_edge(self, upper, lower):
        return self.res[self._edge_index(upper, lower)]

    def tr_edge(self, upper, lower):
        return self.tr[self._edge_index(upper, lower)]

    def res_map(self, upper, lower):
        """Composite restriction M(upper) -> M(lower) down a lattice chain."""
        chain = self.gd.subgroup_chain(upper, lower)
        m = BitMatrix.identity(self.dim(upper))
        for i in range(len(chain) - 1):
            m = self.res_edge(chain[i], chain[i + 1]) @ m
        return m

    def tr_map(self, lower, upper):
        """Composite transfer M(lower) -> M(upper) up a lattice chain."""
        chain = self.gd.subgroup_chain(upper, lower)
        m = BitMatrix.identity(self.dim(lower))
        for i in range(len(chain) - 1, 0, -1):
            m = self.tr_edge(chain[i - 1], chain[i]) @ m
        return m

    def is_zero(self):
        return all(d == 0 for d in self.dims)

    def total_dim(self):
        return sum(self.dims)

    def to_json_dict(self):
        levels = self.gd.levels
        return {
            "group": self.group,
            "dims": {lv: d for lv, d in zip(levels, self.dims)},
            "res": {f"{u}>{lo}": self.res_edge(u, lo).to_lists()
                    for u, lo in self.gd.edges},
            "tr": {f"{lo}>{u}": self.tr_edge(u, lo).to_lists()
                   for u, lo in self.gd.edges},
        }

    def pretty(self):
        """Lewis diagram as aligned text plus the nonzero maps."""
        levels = self.gd.levels
        dims = {lv: d for lv, d in zip(levels, self.dims)}
        lines = []
        if self.group == "K":
            lines.append(f"{dims['K']:>9}")
            lines.append(f"{dims['L']:>5}{dims['D']:>4}{dims['R']:>4}")
            lines.append(f"{dims['e']:>9}")
        else:
            lines.append(f"{dims['C2']:>5}")
            lines.append(f"{dims['e']:>5}")
        shown = []
        for u, lo in self.gd.edges:
            r = self.res_edge(u, lo)
            if not r.is_zero():
                shown.append(f"res {u}>{lo} = {r.to_lists()}")
        for u, lo in self.gd.edges:
            t = self.tr_edge(u, lo)
            if not t.is_zero():
                shown.append(f"tr {lo}>{u} = {t.to_lists()}")
        if not shown:
            shown.append("(all maps zero)")
        return "\n".join(lines + shown)


def mackey_from_json(d):
    gd = group_by_name(d["group"])
    dims = tuple(int(d["dims"][lv]) for lv in gd.levels)
    dim = {lv: n for lv, n in zip(gd.levels, dims)}
    res = []
    tr = []
    for u, lo in gd.edges:
        rm = d["res"][f"{u}>{lo}"]
        tm = d["tr"][f"{lo}>{u}"]
        res.append(BitMatrix.from_rows(rm, dim[u]) if rm else BitMatrix.zeros(dim[lo], dim[u]))
        tr.append(BitMatrix.from_rows(tm, dim[lo]) if tm else BitMatrix.zeros(dim[u], dim[lo]))
    return Mackey(d["group"], dims, tuple(res), tuple(tr))


def zero_mackey(group="K"):
    gd = group_by_name(group)
    n = len(gd.edges)
    return Mackey(group, (0,) * len(gd.levels),
                  tuple(BitMatrix.zeros(0, 0) for _ in range(n)),
                  tuple(BitMatrix.zeros(0, 0) for _ in range(n)))


def build_mackey(group, dims, res=None, tr=None):
    """Construct with sparse maps: res/tr given as {(upper, lower): rows}."""
    gd = group_by_name(group)
    dim = {lv: d for lv, d in zip(gd.levels, dims)}
    res = res or {}
    tr = tr or {}
    rmats = []
    tmats = []
    for u, lo in gd.edges:
        r = res.get((u, lo))
        t = tr.get((u, lo))
        rmats.append(BitMatrix.from_rows(r, dim[u]) if r is not None
                     else BitMatrix.zeros(dim[lo], dim[u]))
        tmats.append(BitMatrix.from_rows(t, dim[lo]) if t is not None
                     else BitMatrix.zeros(dim[u], dim[lo]))
    return Mackey(group, tuple(dims), tuple(rmats), tuple(tmats))


def dual(m):
    """Transpose every matrix and swap restrictions with transfers."""
    return Mackey(m.group, m.dims,
                  tuple(t.transpose() for t in m.tr),
                  tuple(r.transpose() for r in m.res))


def direct_sum(ms, group=None):
    ms = list(ms)
    if not ms:
        return zero_mackey(group or "K")
    group = ms[0].group
    if any(x.group != group for x in ms):
        raise ValueError("cannot sum functors over different groups")
    gd = group_by_name(group)
    dims = tuple(sum(x.dims[i] for x in ms) for i in range(len(gd.levels)))
    res = tuple(BitMatrix.block_diag([x.res[i] for x in ms])
                for i in range(len(gd.edges)))
    tr = tuple(BitMatrix.block_diag([x.tr[i] for x in ms])
               for i in range(len(gd.edges)))
    return Mackey(group, dims, res, tr)


def inflate(h, m):
    """Pull back along K -> K/h: for cyclic h, m is a C2 functor placed on the
    levels containing h; for h == "K", m is a plain dimension and the result
    is that many copies of the geometric functor."""
    if h == "K":
        n = int(m)
        return build_mackey("K", (n, 0, 0, 0, 0))
    if h not in ("L", "D", "R"):
        raise ValueError(f"not a cyclic subgroup: {h!r}")
    if m.group != "C2":
        raise ValueError("inflation along a cyclic quotient needs a C2 functor")
    top, bot = m.dim("C2"), m.dim("e")
    dims = {"K": top, "L": 0, "D": 0, "R": 0, "e": 0}
    dims[h] = bot
    gd = group_by_name("K")
    res = {}
    tr = {}
    for u, lo in gd.edges:
        if (u, lo) == ("K", h):
            res[(u, lo)] = m.res_edge("C2", "e").to_lists()
            tr[(u, lo)] = m.tr_edge("C2", "e").to_lists()
    return build_mackey("K", tuple(dims[lv] for lv in gd.levels), res, tr)


def restrict_to(m, h):
    """The underlying C2 functor at a cyclic subgroup h of the Klein group."""
    return Mackey("C2", (m.dim(h), m.dim("e")),
                  (m.res_edge(h, "e"),), (m.tr_edge(h, "e"),))


# ---------------------------------------------------------------------------
# catalog


def _c2_table():
    F = build_mackey("C2", (1, 1), res={("C2", "e"): [[1]]})
    f = build_mackey("C2", (0, 1))
    g = build_mackey("C2", (1, 0))
    return {"F": F, "F*": dual(F), "f": f, "g": g, "0": zero_mackey("C2")}


_C2 = _c2_table()


def catalog_c2(name):
    try:
        return _C2[name]
    except KeyError:
        raise ValueError(f"unknown C2 catalog name {name!r}") from None


def _k_table():
    one = [[1]]
    F = build_mackey("K", (1, 1, 1, 1, 1),
                     res={("K", "L"): one, ("K", "D"): one, ("K", "R"): one,
                          ("L", "e"): one, ("D", "e"): one, ("R", "e"): one})
    m = build_mackey("K", (1, 1, 1, 1, 0),
                     res={("K", "L"): one, ("K", "D"): one, ("K", "R"): one})
    w = build_mackey("K", (0, 1, 1, 1, 1),
                     res={("L", "e"): one, ("D", "e"): one, ("R", "e"): one})
    mg = build_mackey("K", (2, 1, 1, 1, 0),
                      res={("K", "L"): [[1, 0]], ("K", "D"): [[1, 1]],
                           ("K", "R"): [[0, 1]]})
    W = build_mackey("K", (3, 1, 1, 1, 1),
                     res={("L", "e"): one, ("D", "e"): one, ("R", "e"): one},
                     tr={("K", "L"): [[1], [0], [0]], ("K", "D"): [[0], [1], [0]],
                         ("K", "R"): [[0], [0], [1]]})
    table = {
        "F": F, "F*": dual(F),
        "g": build_mackey("K", (1, 0, 0, 0, 0)),
        "f": build_mackey("K", (0, 0, 0, 0, 1)),
        "m": m, "m*": dual(m),
        "w": w, "w*": dual(w),
        "mg": mg, "mg*": dual(mg),
        "W": W, "W*": dual(W),
        "0": zero_mackey("K"),
    }
    for h in ("L", "D", "R"):
        for c2name in ("F", "F*", "f"):
            table[f"phi{h}({c2name})"] = inflate(h, catalog_c2(c2name))
    return table


_K = _k_table()

CATALOG_ATOMS = tuple(n for n in _K if n != "0")


def catalog(name):
    """A named Klein-group functor, including sums like "phiLDR(F*) + g^2"."""
    if name in _K:
        return _K[name]
    return expr_to_mackey(parse_name_expr(name))


# ---------------------------------------------------------------------------
# name expressions: formal sums of catalog atoms with multiplicities

_ATOM_RE = re.compile(r"^(?P<base>[^^]+?)(?:\^(?P<pow>\d+))?$")


def parse_name_expr(text, group="K"):
    """Parse "phiLDR(F*) + g^2" into a sorted ((atom, mult), ...) tuple."""
    text = text.strip()
    if text in ("0", ""):
        return ()
    counts = {}
    for chunk in text.replace("⊕", "+").split("+"):
        chunk = chunk.strip()
        m = _ATOM_RE.match(chunk)
        if not m:
            raise ValueError(f"bad name term {chunk!r}")
        base, power = m.group("base").strip(), int(m.group("pow") or 1)
        expanded = _expand_atom(base, group)
        for atom in expanded:
            counts[atom] = counts.get(atom, 0) + power
    return tuple(sorted(counts.items()))


def _expand_atom(base, group):
    if group == "C2":
        if base in _C2 and base != "0":
            return [base]
        raise ValueError(f"unknown C2 name {base!r}")
    m = re.match(r"^phi(L|D|R|LD|LDR)\((F\*|F|f|g)\)$", base)
    if m:
        parts, inner = m.groups()
        if inner == "g":
            # inflating the C2 geometric functor just gives g again
            return ["g"] * len(parts)
        return [f"phi{h}({inner})" for h in parts]
    if base in _K and base != "0":
        return [base]
    raise ValueError(f"unknown catalog name {base!r}")


def expr_to_mackey(expr, group="K"):
    table = _K if group == "K" else _C2
    parts = []
    for atom, mult in expr:
        parts.extend([table[atom]] * mult)
    return direct_sum(parts, group=group)


_DISPLAY_ORDER = (
    "F", "F*", "W", "W*", "mg", "mg*", "m", "m*", "w", "w*",
    "phiLDR(F)", "phiLDR(F*)", "phiLDR(f)",
    "phiL(F)", "phiD(F)", "phiR(F)", "phiL(F*)", "phiD(F*)", "phiR(F*)",
    "phiL(f)", "phiD(f)", "phiR(f)", "f", "g",
)


def format_name_expr(expr):
    """Canonical display form, regrouping full L,D,R inflation triples."""
    if not expr:
        return "0"
    counts = dict(expr)
    out = []
    for inner in ("F", "F*", "f"):
        names = [f"phi{h}({inner})" for h in ("L", "D", "R")]
        triple = min(counts.get(nm, 0) for nm in names)
        if triple:
            for nm in names:
                counts[nm] -= triple
            counts[f"phiLDR({inner})"] = triple
    for name in _DISPLAY_ORDER:
        mult = counts.pop(name, 0)
        if mult == 1:
            out.append(name)
        elif mult > 1:
            out.append(f"{name}^{mult}")
    for name, mult in sorted(counts.items()):
        if mult:
            out.append(name if mult == 1 else f"{name}^{mult}")
    return " + ".join(out)


def expr_dims(expr, group="K"):
    """Levelwise dimensions of a name expression without building matrices."""
    gd = group_by_name(group)
    table = _K if group == "K" else _C2
    dims = [0] * len(gd.levels)
    for atom, mult in expr:
        for i, d in enumerate(table[atom].dims):
            dims[i] += mult * d
    return tuple(dims)


# ---------------------------------------------------------------------------
# axioms

def check_axioms(m):
    """All double-coset and lattice-coherence identities; returns failures."""
    failures = []

    def expect_zero(mat, label):
        if not mat.is_zero():
            failures.append(label)

    def expect_equal(a, b, label):
        if a != b:
            failures.append(label)

    if m.group == "C2":
        r = m.res_edge("C2", "e")
        t = m.tr_edge("C2", "e")
        expect_zero(r @ t, "res C2>e . tr e>C2 != 0")
        expect_zero(t @ r, "tr e>C2 . res C2>e != 0")
        return failures

    cyc = m.gd.cyclics
    for h1 in cyc:
        for h2 in cyc:
            if h1 == h2:
                continue
            lhs = m.res_edge("K", h1) @ m.tr_edge("K", h2)
            rhs = m.tr_edge(h1, "e") @ m.res_edge(h2, "e")
            expect_equal(lhs, rhs, f"res K>{h1} . tr {h2}>K != tr e>{h1} . res {h2}>e")
    for h in cyc:
        expect_zero(m.res_edge("K", h) @ m.tr_edge("K", h),
                    f"res K>{h} . tr {h}>K != 0")
        expect_zero(m.res_edge(h, "e") @ m.tr_edge(h, "e"),
                    f"res {h}>e . tr e>{h} != 0")
    paths_r = [m.res_edge(h, "e") @ m.res_edge("K", h) for h in cyc]
    paths_t = [m.tr_edge("K", h) @ m.tr_edge(h, "e") for h in cyc]
    for i, h in enumerate(cyc[1:], start=1):
        expect_equal(paths_r[0], paths_r[i], f"res K>e via L and via {h} differ")
        expect_equal(paths_t[0], paths_t[i], f"tr e>K via L and via {h} differ")
    return failures


# ---------------------------------------------------------------------------
# fingerprints and identification

def _stack_rank(mats, how):
    mats = list(mats)
    acc = mats[0]
    for m2 in mats[1:]:
        acc = acc.vstack(m2) if how == "v" else acc.hstack(m2)
    return acc.rank()


def fingerprint(m):
    """Isomorphism-invariant rank data, additive under direct sums.

    Shaped as (dims, res-part, tr-part, mixed composites) so that dualizing
    a functor swaps the middle two parts.
    """
    if m.group == "C2":
        r = m.res_edge("C2", "e")
        t = m.tr_edge("C2", "e")
        return (m.dims, (r.rank(),), (t.rank(),),
                ((r @ t).rank(), (t @ r).rank()))
    cyc = m.gd.cyclics
    res_down = [m.res_edge("K", h) for h in cyc]
    res_low = [m.res_edge(h, "e") for h in cyc]
    tr_up = [m.tr_edge("K", h) for h in cyc]
    tr_low = [m.tr_edge(h, "e") for h in cyc]
    res_part = (
        tuple(x.rank() for x in res_down) + tuple(x.rank() for x in res_low),
        _stack_rank(res_down, "v"),
        tuple(_stack_rank([res_down[i], res_down[j]], "v")
              for i, j in ((0, 1), (0, 2), (1, 2))),
        _stack_rank(res_low, "h"),
        m.res_map("K", "e").rank(),
    )
    tr_part = (
        tuple(x.rank() for x in tr_up) + tuple(x.rank() for x in tr_low),
        _stack_rank(tr_up, "h"),
        tuple(_stack_rank([tr_up[i], tr_up[j]], "h")
              for i, j in ((0, 1), (0, 2), (1, 2))),
        _stack_rank(tr_low, "v"),
        m.tr_map("e", "K").rank(),
    )
    mixed = tuple((m.res_edge("K", h1) @ m.tr_edge("K", h2)).rank()
                  for h1 in cyc for h2 in cyc) + \
        tuple((m.res_edge(h, "e") @ m.tr_edge(h, "e")).rank() for h in cyc)
    return (m.dims, res_part, tr_part, mixed)


def _flatten(x):
    if isinstance(x, tuple):
        out = []
        for y in x:
            out.extend(_flatten(y))
        return out
    return [x]


_IDENTIFY_ATOMS_K = (
    "F", "F*", "W", "W*", "mg", "mg*", "m", "m*", "w", "w*",
    "phiL(F)", "phiD(F)", "phiR(F)", "phiL(F*)", "phiD(F*)", "phiR(F*)",
    "phiL(f)", "phiD(f)", "phiR(f)", "f", "g",
)


@lru_cache(maxsize=None)
def _atom_fingerprints(group):
    table = _K if group == "K" else _C2
    atoms = _IDENTIFY_ATOMS_K if group == "K" else ("F", "F*", "f", "g")
    return tuple((name, tuple(_flatten(fingerprint(table[name]))))
                 for name in atoms)


def identify(m):
    """Write m as a sum of catalog names by matching fingerprints.

    Fingerprints are additive, so this solves an exact nonnegative integer
    combination; they are not a complete isomorphism invariant in general,
    but the test suite backs them with brute-force isomorphism checks on
    the functors this package produces.  Returns the name-expression tuple,
    or None when no catalog combination matches.
    """
    if m.is_zero():
        return ()
    target = _flatten(fingerprint(m))
    atoms = _atom_fingerprints(m.group)

    def dfs(idx, remaining):
        if all(x == 0 for x in remaining):
            return {}
        if idx == len(atoms):
            return None
        name, vec = atoms[idx]
        bound = min((r // v for r, v in zip(remaining, vec) if v), default=0)
        for count in range(bound, -1, -1):
            nxt = [r - count * v for r, v in zip(remaining, vec)]
            if any(x < 0 for x in nxt):
                continue
            sol = dfs(idx + 1, nxt)
            if sol is not None:
                if count:
                    sol[name] = count
                return sol
        return None

    sol = dfs(0, target)
    if sol is None:
        return None
    return tuple(sorted(sol.items()))


def hom_space(m1, m2):
    """Basis of Mackey-functor maps m1 -> m2, each as {level: BitMatrix}."""
    if m1.group != m2.group:
        raise ValueError("group mismatch")
    gd = m1.gd
    levels = gd.levels
    offsets = {}
    total = 0
    for lv in levels:
        offsets[lv] = total
        total += m1.dim(lv) * m2.dim(lv)

    def var(lv, i, j):
        # entry (i, j) of f_lv: M1(lv) -> M2(lv), i < dim2, j < dim1
        return offsets[lv] + i * m1.dim(lv) + j

    rows = []
    # constraint: for each edge (u, lo):
    #   res2 @ f_u == f_lo @ res1      (maps M1(u) -> M2(lo))
    #   f_u @ tr1 == tr2 @ f_lo        (maps M1(lo) -> M2(u))
    for u, lo in gd.edges:
        r1, r2 = m1.res_edge(u, lo), m2.res_edge(u, lo)
        t1, t2 = m1.tr_edge(u, lo), m2.tr_edge(u, lo)
        for i in range(m2.dim(lo)):
            for j in range(m1.dim(u)):
                row = 0
                for k in range(m2.dim(u)):
                    if r2.entry(i, k):
                        row ^= 1 << var(u, k, j)
                for k in range(m1.dim(lo)):
                    if r1.entry(k, j):
                        row ^= 1 << var(lo, i, k)
                if row:
                    rows.append(row)
        for i in range(m2.dim(u)):
            for j in range(m1.dim(lo)):
                row = 0
                for k in range(m1.dim(u)):
                    if t1.entry(k, j):
                        row ^= 1 << var(u, i, k)
                for k in range(m2.dim(lo)):
                    if t2.entry(i, k):
                        row ^= 1 << var(lo, k, j)
                if row:
                    rows.append(row)

    system = BitMatrix(len(rows), total, tuple(rows))
    basis = []
    for vec in system.kernel_basis():
        maps = {}
        for lv in levels:
            mat = []
            for i in range(m2.dim(lv)):
                r = 0
                for j in range(m1.dim(lv)):
                    if (vec >> var(lv, i, j)) & 1:
                        r |= 1 << j
                mat.append(r)
            maps[lv] = BitMatrix(m2.dim(lv), m1.dim(lv), tuple(mat))
        basis.append(maps)
    return basis


def is_isomorphic(m1, m2, cap=18):
    """Brute-force isomorphism test via the hom space; exact but small-only."""
    if m1.group != m2.group or m1.dims != m2.dims:
        return False
    if fingerprint(m1) != fingerprint(m2):
        return False
    basis = hom_space(m1, m2)
    if len(basis) > cap:
        raise ValueError(f"hom space too large to enumerate ({len(basis)})")
    levels = m1.gd.levels
    for mask in range(1, 1 << len(basis)):
        ok = True
        for lv in levels:
            n = m1.dim(lv)
            acc = BitMatrix.zeros(m2.dim(lv), n)
            mm = mask
            while mm:
                k = (mm & -mm).bit_length() - 1
                acc = acc + basis[k][lv]
                mm &= mm - 1
            if acc.rank() != n:
                ok = False
                break
        if ok:
            return True
    return False


def rank_tuples_of_hom(m1_expr, m2_expr, group="K", cap=14):
    """All levelwise rank tuples realized by maps between two named sums.

    Enumerates the hom space when it is small; callers needing large cases
    should special-case them.  Returns a set of dim-per-level tuples.
    """
    m1 = expr_to_mackey(m1_expr, group)
    m2 = expr_to_mackey(m2_expr, group)
    basis = hom_space(m1, m2)
    if len(basis) > cap:
        raise ValueError(f"hom space too large ({len(basis)})")
    levels = m1.gd.levels
    out = set()
    for mask in range(1 << len(basis)):
        ranks = []
        for lv in levels:
            acc = BitMatrix.zeros(m2.dim(lv), m1.dim(lv))
            mm = mask
            while mm:
                k = (mm & -mm).bit_length() - 1
                acc = acc + basis[k][lv]
                mm &= mm - 1
            ranks.append(acc.rank())
        out.add(tuple(ranks))
    return out
