"""Discrete groups with exact integer arithmetic.

Concrete groups: the integers, integer lattices, the integer Heisenberg
group and finite cyclic groups.  Elements are plain ints or int tuples,
so they hash and compare natively.  Haar measure is counting measure
throughout; "compact set" means a finite explicit set of elements.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Hashable, Iterable, Optional, Sequence

from .errors import TorsionElementError

Element = Hashable


class Group(ABC):
    """Countable discrete group: identity, multiplication, inversion."""

    kind: str = ""
    torsion_free: bool = False

    @abstractmethod
    def identity(self) -> Element: ...

    @abstractmethod
    def mul(self, g: Element, h: Element) -> Element: ...

    @abstractmethod
    def inv(self, g: Element) -> Element: ...

    @abstractmethod
    def coords(self, g: Element) -> list[int]:
        """Serialize an element as a list of ints."""

    @abstractmethod
    def element(self, coords: Sequence[int] | int) -> Element:
        """Inverse of :meth:`coords`; accepts a bare int for rank-1 groups."""

    def order(self) -> Optional[int]:
        """Group order, or None when infinite."""
        return None

    def pow(self, g: Element, n: int) -> Element:
        """n-fold product of g (inverse-fold for negative n), by
        square-and-multiply over ``mul``."""
        if n < 0:
            return self.pow(self.inv(g), -n)
        acc = self.identity()
        base = g
        while n:
            if n & 1:
                acc = self.mul(acc, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return acc


@dataclass(frozen=True)
class IntegerGroup(Group):
    """The additive group of integers."""

    kind: str = "Z"
    torsion_free: bool = True

    def identity(self):
        return 0

    def mul(self, g, h):
        return g + h

    def inv(self, g):
        return -g

    def coords(self, g):
        return [g]

    def element(self, coords):
        if isinstance(coords, int):
            return coords
        (x,) = coords
        return int(x)


@dataclass(frozen=True)
class LatticeGroup(Group):
    """The additive lattice of integer d-tuples."""

    d: int = 2
    kind: str = "Zd"
    torsion_free: bool = True

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("lattice rank must be >= 1")

    def identity(self):
        return (0,) * self.d

    def mul(self, g, h):
        return tuple(a + b for a, b in zip(g, h))

    def inv(self, g):
        return tuple(-a for a in g)

    def coords(self, g):
        return list(g)

    def element(self, coords):
        if len(coords) != self.d:
            raise ValueError(f"expected {self.d} coordinates, got {len(coords)}")
        return tuple(int(c) for c in coords)


@dataclass(frozen=True)
class HeisenbergGroup(Group):
    """Integer Heisenberg group on triples (x, y, z) with
    (x,y,z)*(x',y',z') = (x+x', y+y', z+z'+x*y') and inverse (-x,-y,xy-z)."""

    kind: str = "heisenberg"
    torsion_free: bool = True

    def identity(self):
        return (0, 0, 0)

    def mul(self, g, h):
        x, y, z = g
        xp, yp, zp = h
        return (x + xp, y + yp, z + zp + x * yp)

    def inv(self, g):
        x, y, z = g
        return (-x, -y, x * y - z)

    def coords(self, g):
        return list(g)

    def element(self, coords):
        x, y, z = coords
        return (int(x), int(y), int(z))


@dataclass(frozen=True)
class CyclicGroup(Group):
    """Finite cyclic group of residues mod m (additive)."""

    m: int = 2
    kind: str = "cyclic"

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("cyclic modulus must be >= 1")

    def identity(self):
        return 0

    def mul(self, g, h):
        return (g + h) % self.m

    def inv(self, g):
        return (-g) % self.m

    def coords(self, g):
        return [g]

    def element(self, coords):
        if isinstance(coords, int):
            return coords % self.m
        (x,) = coords
        return int(x) % self.m

    def order(self):
        return self.m


@dataclass(frozen=True)
class CompactSet:
    """Finite explicit element set; the counting measure is its size."""

    elements: frozenset

    @classmethod
    def of(cls, elements: Iterable[Element]) -> "CompactSet":
        return cls(frozenset(elements))

    def measure(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self.elements

    def sorted_elements(self, group: Group) -> list[Element]:
        """Elements in coordinate order, for deterministic iteration."""
        return sorted(self.elements, key=lambda g: tuple(group.coords(g)))

    def translated(self, group: Group, g: Element) -> "CompactSet":
        """Right translate K·g."""
        return CompactSet(frozenset(group.mul(k, g) for k in self.elements))


def box(group: Group, bounds: Sequence[Sequence[int]]) -> CompactSet:
    """Coordinate box: bounds is one (lo, hi) inclusive pair per coordinate."""
    ranges = []
    for lo, hi in bounds:
        if lo > hi:
            raise ValueError(f"empty bound ({lo}, {hi})")
        ranges.append(range(int(lo), int(hi) + 1))
    return CompactSet(frozenset(group.element(list(c)) for c in itertools.product(*ranges)))


def torsion_order(group: Group, a: Element, n_max: int) -> Optional[int]:
    """Smallest n <= n_max with a^n = identity, or None.

    Torsion-free groups short-circuit analytically for a != identity.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    e = group.identity()
    if a == e:
        return 1
    if group.torsion_free:
        return None
    g = a
    for n in range(1, n_max + 1):
        if g == e:
            return n
        g = group.mul(g, a)
    return None


def separation_constant(group: Group, K: CompactSet, a: Element, n_max: int) -> Optional[int]:
    """Smallest M with K ∩ K·a^{±n} = ∅ for every n in (M, n_max].

    Returns None when separation cannot be certified within the budget
    (the last probed shift still collides).  Raises TorsionElementError
    for elements of finite order, for which no such M can exist.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    order = torsion_order(group, a, n_max)
    if order is not None:
        raise TorsionElementError(order)
    base = K.elements
    last_collision = 0
    an = group.identity()
    for n in range(1, n_max + 1):
        an = group.mul(an, a)
        a_neg = group.inv(an)
        if any(group.mul(k, an) in base for k in base) or any(
            group.mul(k, a_neg) in base for k in base
        ):
            last_collision = n
    if last_collision == n_max:
        return None
    return last_collision


GROUP_KINDS = {
    "Z": IntegerGroup,
    "Zd": LatticeGroup,
    "heisenberg": HeisenbergGroup,
    "cyclic": CyclicGroup,
}
