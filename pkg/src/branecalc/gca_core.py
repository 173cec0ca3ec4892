"""Free graded-commutative algebras over the rationals.

Generators carry an integer degree >= 1.  A monomial is a sorted tuple of
(generator id, exponent) pairs; odd-degree generators square to zero and
reordering factors accumulates the Koszul sign (-1)^(|a||b|) per
transposition.  Elements are sparse rational linear combinations of
canonical monomials, so equality of elements is equality of term maps.

Monomials are ordered by generator id (creation order), which stays stable
when an algebra is extended with new generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

Scalar = Union[int, Fraction]
Monomial = tuple  # tuple[tuple[int, int], ...], sorted by generator id

#: The empty monomial, i.e. the algebra unit.
ONE: Monomial = ()


@dataclass(frozen=True)
class Provenance:
    """Records how a generator arose.

    kind is "base" for generators of the underlying algebra V and "susp"
    for suspended copies; shift is the suspension amount (s^shift); origin
    is the name of the generator of V being suspended; factor tags the
    tensor factor ("L"/"R") when two copies of an algebra are glued.
    """

    kind: str = "base"
    shift: int = 0
    origin: str | None = None
    factor: str | None = None


@dataclass(frozen=True)
class Generator:
    gid: int
    name: str
    degree: int
    prov: Provenance = Provenance()

    @property
    def is_odd(self) -> bool:
        return self.degree % 2 == 1


class GradedAlgebra:
    """A free graded-commutative algebra on named generators."""

    def __init__(self, name: str = ""):
        self.name = name
        self._gens: list[Generator] = []
        self._by_name: dict[str, Generator] = {}
        self._basis_cache: dict[int, tuple[Monomial, ...]] = {}

    # ------------------------------------------------------------------
    # construction

    def add_generator(
        self, name: str, degree: int, prov: Provenance = Provenance()
    ) -> Generator:
        if degree < 1:
            raise ValueError(f"generator {name!r} has degree {degree} < 1")
        if name in self._by_name:
            raise ValueError(f"duplicate generator name {name!r}")
        g = Generator(len(self._gens), name, degree, prov)
        self._gens.append(g)
        self._by_name[name] = g
        self._basis_cache.clear()
        return g

    @property
    def generators(self) -> tuple[Generator, ...]:
        return tuple(self._gens)

    def gen(self, key: Union[str, int]) -> Generator:
        if isinstance(key, int):
            return self._gens[key]
        try:
            return self._by_name[key]
        except KeyError:
            raise KeyError(f"unknown generator {key!r}") from None

    def has_gen(self, name: str) -> bool:
        return name in self._by_name

    # ------------------------------------------------------------------
    # monomial arithmetic

    def monomial_degree(self, mono: Monomial) -> int:
        return sum(self._gens[gid].degree * e for gid, e in mono)

    def normalize(self, raw: Sequence[tuple[int, int]]) -> tuple[int, Monomial]:
        """Sort a raw factor list into canonical form.

        Returns (sign, monomial); the sign is the Koszul sign of the
        permutation, or 0 when an odd generator ends up with exponent >= 2
        (in which case the monomial slot is the unit and must be ignored).
        """
        word: list[int] = []
        for gid, e in raw:
            if not 0 <= gid < len(self._gens):
                raise KeyError(f"unknown generator id {gid}")
            if e < 0:
                raise ValueError("negative exponent")
            word.extend([gid] * e)
        sign = 1
        # insertion sort, counting odd-odd transpositions
        for i in range(1, len(word)):
            j = i
            while j > 0 and word[j - 1] > word[j]:
                if self._gens[word[j - 1]].is_odd and self._gens[word[j]].is_odd:
                    sign = -sign
                word[j - 1], word[j] = word[j], word[j - 1]
                j -= 1
        factors: list[tuple[int, int]] = []
        for gid in word:
            if factors and factors[-1][0] == gid:
                if self._gens[gid].is_odd:
                    return 0, ONE
                factors[-1] = (gid, factors[-1][1] + 1)
            else:
                factors.append((gid, 1))
        return sign, tuple(factors)

    def mul_monomials(self, a: Monomial, b: Monomial) -> tuple[int, Monomial]:
        """Concatenate two canonical monomials and renormalize."""
        if not a:
            return 1, b
        if not b:
            return 1, a
        # a and b are each sorted; only count b-factors passing a-factors.
        sign = 1
        for gid_b, e_b in b:
            if not self._gens[gid_b].is_odd:
                continue
            passed = sum(e for gid_a, e in a if gid_a > gid_b and self._gens[gid_a].is_odd)
            if passed % 2 and e_b % 2:
                sign = -sign
        merged: list[tuple[int, int]] = []
        ia = ib = 0
        while ia < len(a) and ib < len(b):
            if a[ia][0] < b[ib][0]:
                merged.append(a[ia]); ia += 1
            elif a[ia][0] > b[ib][0]:
                merged.append(b[ib]); ib += 1
            else:
                gid = a[ia][0]
                if self._gens[gid].is_odd:
                    return 0, ONE
                merged.append((gid, a[ia][1] + b[ib][1]))
                ia += 1; ib += 1
        merged.extend(a[ia:])
        merged.extend(b[ib:])
        for gid, e in merged:
            if self._gens[gid].is_odd and e > 1:
                return 0, ONE
        return sign, tuple(merged)

    # ------------------------------------------------------------------
    # basis enumeration

    def basis(self, n: int) -> tuple[Monomial, ...]:
        """All canonical monomials of degree n, deterministically ordered."""
        if n < 0:
            return ()
        cached = self._basis_cache.get(n)
        if cached is not None:
            return cached
        out: list[Monomial] = []

        def rec(idx: int, remaining: int, acc: list[tuple[int, int]]) -> None:
            if remaining == 0:
                out.append(tuple(acc))
                return
            if idx >= len(self._gens):
                return
            g = self._gens[idx]
            max_e = 1 if g.is_odd else remaining // g.degree
            for e in range(0, max_e + 1):
                if e * g.degree > remaining:
                    break
                if e:
                    acc.append((idx, e))
                rec(idx + 1, remaining - e * g.degree, acc)
                if e:
                    acc.pop()

        rec(0, n, [])
        result = tuple(out)
        self._basis_cache[n] = result
        return result

    # ------------------------------------------------------------------
    # element factories

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {ONE: Fraction(1)})

    def scalar(self, c: Scalar) -> "Element":
        c = Fraction(c)
        return Element(self, {ONE: c} if c else {})

    def generator_element(self, key: Union[str, int]) -> "Element":
        g = self.gen(key)
        return Element(self, {((g.gid, 1),): Fraction(1)})

    def element(self, terms: dict[Monomial, Scalar]) -> "Element":
        return Element(self, {m: Fraction(c) for m, c in terms.items() if c})

    def monomial_element(self, mono: Monomial, coeff: Scalar = 1) -> "Element":
        c = Fraction(coeff)
        return Element(self, {mono: c} if c else {})

    def monomial_string(self, mono: Monomial) -> str:
        if not mono:
            return "1"
        parts = []
        for gid, e in mono:
            name = self._gens[gid].name
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        tag = self.name or "GCA"
        return f"<{tag} on {[g.name for g in self._gens]}>"


class Element:
    """A sparse rational combination of canonical monomials."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: GradedAlgebra, terms: dict[Monomial, Fraction]):
        self.algebra = algebra
        self.terms = terms

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int | None:
        """Degree of a homogeneous element; None for zero; error if mixed."""
        degs = {self.algebra.monomial_degree(m) for m in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"element is not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def homogeneous_part(self, n: int) -> "Element":
        alg = self.algebra
        return Element(
            alg, {m: c for m, c in self.terms.items() if alg.monomial_degree(m) == n}
        )

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items())

    # -- ring operations -----------------------------------------------

    def _check(self, other: "Element") -> None:
        if self.algebra is not other.algebra:
            raise ValueError("elements live in different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, Fraction(0)) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Element(self.algebra, terms)

    def __neg__(self) -> "Element":
        return Element(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __mul__(self, other: Union["Element", Scalar]) -> "Element":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return self.algebra.zero()
            return Element(self.algebra, {m: k * c for m, k in self.terms.items()})
        self._check(other)
        alg = self.algebra
        terms: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                sign, m = alg.mul_monomials(ma, mb)
                if sign == 0:
                    continue
                c = ca * cb * sign
                s = terms.get(m, Fraction(0)) + c
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Element(alg, terms)

    def __rmul__(self, other: Scalar) -> "Element":
        return self.__mul__(other)

    def __truediv__(self, other: Scalar) -> "Element":
        return self * (Fraction(1) / Fraction(other))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.algebra), tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            ms = self.algebra.monomial_string(m)
            if c == 1 and m:
                parts.append(ms)
            elif c == -1 and m:
                parts.append(f"-{ms}")
            elif m:
                parts.append(f"{c}*{ms}")
            else:
                parts.append(str(c))
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


def tensor(
    a: GradedAlgebra, b: GradedAlgebra, name: str = ""
) -> tuple[GradedAlgebra, dict[int, int], dict[int, int]]:
    """Tensor product of free GCAs.

    Returns the product algebra together with generator-id translation maps
    for the two inclusions a -> a(x)b and b -> a(x)b.  Name collisions are
    resolved by the factor-qualified suffixes "@L" and "@R".
    """
    out = GradedAlgebra(name or f"{a.name}(x){b.name}")
    clash = {g.name for g in a.generators} & {g.name for g in b.generators}
    left: dict[int, int] = {}
    right: dict[int, int] = {}
    for g in a.generators:
        nm = g.name + "@L" if g.name in clash else g.name
        prov = Provenance(g.prov.kind, g.prov.shift, g.prov.origin, "L")
        left[g.gid] = out.add_generator(nm, g.degree, prov).gid
    for g in b.generators:
        nm = g.name + "@R" if g.name in clash else g.name
        prov = Provenance(g.prov.kind, g.prov.shift, g.prov.origin, "R")
        right[g.gid] = out.add_generator(nm, g.degree, prov).gid
    return out, left, right


def translate(e: Element, target: GradedAlgebra, gid_map: dict[int, int]) -> Element:
    """Push an element through a generator-id translation (degree 0, 1:1)."""
    terms: dict[Monomial, Fraction] = {}
    for m, c in e.terms.items():
        raw = [(gid_map[gid], exp) for gid, exp in m]
        sign, mono = target.normalize(raw)
        if sign == 0:
            continue
        s = terms.get(mono, Fraction(0)) + c * sign
        if s:
            terms[mono] = s
        else:
            terms.pop(mono, None)
    return Element(target, terms)
