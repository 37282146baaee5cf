"""The two ambient groups: C2 and the Klein four-group.

Group elements are int bitmasks in F2^2 (or F2 for C2) with XOR as the
operation, so every element is its own inverse.  The Klein group has
cyclic subgroups L, D, R: the left factor, the diagonal, and the right
factor.  The three nontrivial characters a (alpha), b (beta), g (gamma)
die on R, L, D respectively.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class GroupData:
    name: str
    elements: tuple
    levels: tuple          # subgroup names, whole group first, trivial last
    subgroups: dict        # name -> frozenset of elements
    cyclics: tuple         # proper nontrivial subgroup names
    char_kernels: dict     # character name -> subgroup name it dies on
    edges: tuple           # adjacent (upper, lower) pairs in the lattice

    def order(self, h):
        return len(self.subgroups[h])

    def leq(self, a, b):
        return self.subgroups[a] <= self.subgroups[b]

    def meet(self, a, b):
        return self._name_of(self.subgroups[a] & self.subgroups[b])

    def join(self, a, b):
        prod = frozenset(x ^ y for x in self.subgroups[a] for y in self.subgroups[b])
        return self._name_of(prod)

    def _name_of(self, elems):
        for name, s in self.subgroups.items():
            if s == elems:
                return name
        raise ValueError(f"not a subgroup: {elems}")

    def coset_rep(self, g, h):
        return min(g ^ s for s in self.subgroups[h])

    def cosets(self, h):
        return tuple(sorted({self.coset_rep(g, h) for g in self.elements}))

    def subgroup_chain(self, a, b):
        """Levels from a down to b (inclusive) along lattice edges; needs b <= a."""
        if a == b:
            return (a,)
        for up, lo in self.edges:
            if up == a and self.leq(b, lo):
                return (a,) + self.subgroup_chain(lo, b)
        raise ValueError(f"no chain {a} -> {b}")


KLEIN = GroupData(
    name="K",
    elements=(0, 1, 2, 3),
    levels=("K", "L", "D", "R", "e"),
    subgroups={
        "K": frozenset({0, 1, 2, 3}),
        "L": frozenset({0, 2}),
        "D": frozenset({0, 3}),
        "R": frozenset({0, 1}),
        "e": frozenset({0}),
    },
    cyclics=("L", "D", "R"),
    char_kernels={"alpha": "R", "beta": "L", "gamma": "D"},
    edges=(("K", "L"), ("K", "D"), ("K", "R"), ("L", "e"), ("D", "e"), ("R", "e")),
)

C2 = GroupData(
    name="C2",
    elements=(0, 1),
    levels=("C2", "e"),
    subgroups={"C2": frozenset({0, 1}), "e": frozenset({0})},
    cyclics=(),
    char_kernels={"sigma": "e"},
    edges=(("C2", "e"),),
)


def group_by_name(name):
    if name == "K":
        return KLEIN
    if name == "C2":
        return C2
    raise ValueError(f"unknown group {name!r}")


@lru_cache(maxsize=None)
def char_value(group_name, char, g):
    """The character evaluated at g, as 0/1."""
    grp = group_by_name(group_name)
    ker = grp.subgroups[grp.char_kernels[char]]
    return 0 if g in ker else 1


def char_twist(group, char):
    """Some element on which the character is nonzero."""
    ker = group.subgroups[group.char_kernels[char]]
    for g in group.elements:
        if g not in ker:
            return g
    raise ValueError("trivial character")
