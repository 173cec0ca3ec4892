"""Differentials, DGA morphisms, and the mapping-space model constructors.

The constructors build, on top of a minimal Sullivan algebra (∧V, d):

* ``sphere_model(V, k)``  — (∧V ⊗ ∧s^(k-1)V, d̄) with
  d̄(s^(k-1)v) = (-1)^(k-1) s^(k-1)(dv), where s^(k-1) is the degree
  -(k-1) derivation sending v to s^(k-1)v and suspensions to 0;
* ``disk_model(V, k)``    — adds s^k V with
  d(s^k v) = s^(k-1)v + (-1)^k s^(k)(dv);
* ``path_model(V)``       — (∧V⊗² ⊗ ∧sV, d) with
  d(sv) = 1⊗v - v⊗1 - Σ_{i≥1} (sd)^i/i! (v⊗1),
  the s-derivation sending both v⊗1 and 1⊗v to sv and sv to 0.

Suspended generators are named "s{shift}_{name}"; the two halves of a
tensor square are suffixed "@L"/"@R".
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .gca_core import (
    Element,
    Generator,
    GradedAlgebra,
    Monomial,
    ONE,
    Provenance,
    tensor,
    translate,
)


class ModelError(Exception):
    """A model-level failure (bad shape, d² ≠ 0, unstable ideal, ...)."""


# ---------------------------------------------------------------------------
# derivations and morphisms


@dataclass
class Derivation:
    """A degree-r map defined on generators, extended by the Leibniz rule."""

    algebra: GradedAlgebra
    degree: int
    images: dict[int, Element]

    def on_generator(self, gid: int) -> Element:
        img = self.images.get(gid)
        return img if img is not None else self.algebra.zero()

    def __call__(self, e: Element) -> Element:
        alg = self.algebra
        if e.algebra is not alg:
            raise ValueError("element not in this derivation's algebra")
        out = alg.zero()
        for mono, coeff in e.terms.items():
            word: list[int] = []
            for gid, exp in mono:
                word.extend([gid] * exp)
            prefix_deg = 0
            for pos, gid in enumerate(word):
                img = self.images.get(gid)
                if img is not None and not img.is_zero():
                    sign = -1 if (self.degree * prefix_deg) % 2 else 1
                    # slices of a sorted word are sorted: sign +1, exponents
                    # just need collapsing
                    _, pre_m = alg.normalize([(g, 1) for g in word[:pos]])
                    _, suf_m = alg.normalize([(g, 1) for g in word[pos + 1:]])
                    pre = alg.monomial_element(pre_m)
                    suf = alg.monomial_element(suf_m)
                    out = out + pre * img * suf * (coeff * sign)
                prefix_deg += alg.gen(gid).degree
        return out


def extend_derivation(theta: Derivation, e: Element) -> Element:
    return theta(e)


def _apply_algebra_map(
    e: Element, images: dict[int, Element], target: GradedAlgebra
) -> Element:
    out = target.zero()
    for mono, coeff in e.terms.items():
        term = target.one() * coeff
        for gid, exp in mono:
            try:
                img = images[gid]
            except KeyError:
                raise ModelError(f"no image for generator id {gid}") from None
            for _ in range(exp):
                term = term * img
            if term.is_zero():
                break
        out = out + term
    return out


@dataclass
class DgaMorphism:
    """A degree-0 multiplicative map between models, given on generators."""

    source: "DgaModel"
    target: "DgaModel"
    images: dict[int, Element]

    def __call__(self, e: Element) -> Element:
        return _apply_algebra_map(e, self.images, self.target.algebra)

    def chain_defects(self) -> list[str]:
        """Generators where f∘d ≠ d∘f.

        Both f∘d and d∘f extend from generators as f-derivations, so
        agreement on generators is agreement everywhere.
        """
        bad = []
        for g in self.source.algebra.generators:
            ge = self.source.algebra.generator_element(g.gid)
            lhs = self(self.source.d(ge))
            rhs = self.target.d(self(ge))
            if lhs != rhs:
                bad.append(g.name)
        return bad

    def check_chain(self) -> None:
        bad = self.chain_defects()
        if bad:
            raise ModelError(f"not a chain map on generators: {bad}")


def compose(g: DgaMorphism, f: DgaMorphism) -> DgaMorphism:
    if f.target is not g.source:
        raise ModelError("composition mismatch")
    images = {
        gen.gid: g(f(f.source.algebra.generator_element(gen.gid)))
        for gen in f.source.algebra.generators
    }
    return DgaMorphism(f.source, g.target, images)


# ---------------------------------------------------------------------------
# models


@dataclass
class DgaModel:
    """A free GCA with a square-zero degree +1 differential.

    base_gids marks the distinguished base subalgebra for semifree shapes
    (e.g. the sphere model inside a disk model).
    """

    algebra: GradedAlgebra
    d: Derivation
    base_gids: tuple[int, ...] = ()
    cohomology_cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def fiber_gids(self) -> tuple[int, ...]:
        base = set(self.base_gids)
        return tuple(g.gid for g in self.algebra.generators if g.gid not in base)

    def gen_elem(self, name: str) -> Element:
        return self.algebra.generator_element(name)

    def d_squared_witnesses(self) -> list[str]:
        """Generators with d(d(g)) ≠ 0; empty iff d² = 0 everywhere.

        d² is a derivation (degree +2), so vanishing on generators is
        vanishing on the whole algebra.
        """
        bad = []
        for g in self.algebra.generators:
            if not self.d(self.d(self.algebra.generator_element(g.gid))).is_zero():
                bad.append(g.name)
        return bad

    def check(self) -> None:
        bad = self.d_squared_witnesses()
        if bad:
            raise ModelError(f"d² ≠ 0 on generators: {bad}")

    def signature(self) -> tuple:
        """Structural fingerprint: generators plus differential images."""
        return tuple(
            (g.name, g.degree, repr(self.d(self.algebra.generator_element(g.gid))))
            for g in self.algebra.generators
        )


def make_model(
    gens: Sequence[tuple[str, int]],
    diffs: dict[str, dict[Monomial, Fraction]] | None = None,
    name: str = "",
) -> DgaModel:
    """Convenience constructor for a base Sullivan algebra (∧V, d)."""
    alg = GradedAlgebra(name)
    for nm, deg in gens:
        alg.add_generator(nm, deg, Provenance("base", 0, nm, None))
    images: dict[int, Element] = {}
    for nm, terms in (diffs or {}).items():
        images[alg.gen(nm).gid] = alg.element(terms)
    model = DgaModel(alg, Derivation(alg, 1, images), tuple(range(len(gens))))
    return model


def _copy_generators(src: GradedAlgebra, dst: GradedAlgebra) -> dict[int, int]:
    out = {}
    for g in src.generators:
        out[g.gid] = dst.add_generator(g.name, g.degree, g.prov).gid
    return out


def is_minimal(V: DgaModel) -> bool:
    """No linear part: every monomial of every d(v) has word length ≥ 2."""
    for g in V.algebra.generators:
        for mono in V.d(V.algebra.generator_element(g.gid)).terms:
            if sum(e for _, e in mono) < 2:
                return False
    return True


def sphere_model(V: DgaModel, k: int) -> DgaModel:
    """Model of the space of maps from a (k-1)-sphere: ∧V ⊗ ∧s^(k-1)V."""
    if k < 1:
        raise ModelError("k must be ≥ 1")
    if any(g.degree < k for g in V.algebra.generators):
        raise ModelError(f"sphere model needs all generator degrees ≥ k={k}")
    shift = k - 1
    alg = GradedAlgebra(f"sphere[{shift}]({V.algebra.name})")
    base_map = _copy_generators(V.algebra, alg)
    susp: dict[int, int] = {}
    for g in V.algebra.generators:
        susp[g.gid] = alg.add_generator(
            f"s{shift}_{g.name}", g.degree - shift,
            Provenance("susp", shift, g.name, g.prov.factor),
        ).gid
    s_der = Derivation(
        alg, -shift,
        {base_map[g.gid]: alg.generator_element(susp[g.gid])
         for g in V.algebra.generators},
    )
    sign = -1 if shift % 2 else 1
    images: dict[int, Element] = {}
    for g in V.algebra.generators:
        dv = translate(V.d(V.algebra.generator_element(g.gid)), alg, base_map)
        if not dv.is_zero():
            images[base_map[g.gid]] = dv
        sdv = s_der(dv) * sign
        if not sdv.is_zero():
            images[susp[g.gid]] = sdv
    model = DgaModel(alg, Derivation(alg, 1, images),
                     tuple(base_map[g.gid] for g in V.algebra.generators))
    model.check()
    return model


def disk_model(V: DgaModel, k: int) -> DgaModel:
    """Model of the space of maps from a k-disk: ∧V ⊗ ∧s^(k-1)V ⊗ ∧s^kV."""
    if k < 1:
        raise ModelError("k must be ≥ 1")
    if any(g.degree < k + 1 for g in V.algebra.generators):
        raise ModelError(f"disk model needs all generator degrees ≥ k+1={k + 1}")
    alg = GradedAlgebra(f"disk[{k}]({V.algebra.name})")
    base_map = _copy_generators(V.algebra, alg)
    susp_lo: dict[int, int] = {}
    susp_hi: dict[int, int] = {}
    for g in V.algebra.generators:
        susp_lo[g.gid] = alg.add_generator(
            f"s{k - 1}_{g.name}", g.degree - (k - 1),
            Provenance("susp", k - 1, g.name, g.prov.factor),
        ).gid
    for g in V.algebra.generators:
        susp_hi[g.gid] = alg.add_generator(
            f"s{k}_{g.name}", g.degree - k,
            Provenance("susp", k, g.name, g.prov.factor),
        ).gid
    s_lo = Derivation(
        alg, -(k - 1),
        {base_map[g.gid]: alg.generator_element(susp_lo[g.gid])
         for g in V.algebra.generators},
    )
    s_hi = Derivation(
        alg, -k,
        {base_map[g.gid]: alg.generator_element(susp_hi[g.gid])
         for g in V.algebra.generators},
    )
    images: dict[int, Element] = {}
    for g in V.algebra.generators:
        dv = translate(V.d(V.algebra.generator_element(g.gid)), alg, base_map)
        if not dv.is_zero():
            images[base_map[g.gid]] = dv
        lo = s_lo(dv) * (-1 if (k - 1) % 2 else 1)
        if not lo.is_zero():
            images[susp_lo[g.gid]] = lo
        hi = alg.generator_element(susp_lo[g.gid]) + s_hi(dv) * (-1 if k % 2 else 1)
        images[susp_hi[g.gid]] = hi
    model = DgaModel(
        alg, Derivation(alg, 1, images),
        tuple(base_map[g.gid] for g in V.algebra.generators)
        + tuple(susp_lo[g.gid] for g in V.algebra.generators),
    )
    model.check()
    return model


def path_model(V: DgaModel, max_series_iterations: int = 64) -> DgaModel:
    """Relative model ∧V⊗² ⊗ ∧sV of the multiplication ∧V⊗² → ∧V."""
    if any(g.degree < 2 for g in V.algebra.generators):
        raise ModelError("path model needs all generator degrees ≥ 2")
    if not is_minimal(V):
        raise ModelError("path model needs a minimal input (no linear part)")
    alg = GradedAlgebra(f"path({V.algebra.name})")
    left: dict[int, int] = {}
    right: dict[int, int] = {}
    susp: dict[int, int] = {}
    for g in V.algebra.generators:
        left[g.gid] = alg.add_generator(
            g.name + "@L", g.degree, Provenance("base", 0, g.name, "L")
        ).gid
    for g in V.algebra.generators:
        right[g.gid] = alg.add_generator(
            g.name + "@R", g.degree, Provenance("base", 0, g.name, "R")
        ).gid
    for g in V.algebra.generators:
        susp[g.gid] = alg.add_generator(
            f"s1_{g.name}", g.degree - 1, Provenance("susp", 1, g.name, None)
        ).gid
    s_images = {}
    for g in V.algebra.generators:
        sv = alg.generator_element(susp[g.gid])
        s_images[left[g.gid]] = sv
        s_images[right[g.gid]] = sv
    s_der = Derivation(alg, -1, s_images)

    images: dict[int, Element] = {}
    d_partial = Derivation(alg, 1, images)  # shares the dict being filled
    for g in V.algebra.generators:
        dv = V.d(V.algebra.generator_element(g.gid))
        dl = translate(dv, alg, left)
        dr = translate(dv, alg, right)
        if not dl.is_zero():
            images[left[g.gid]] = dl
        if not dr.is_zero():
            images[right[g.gid]] = dr
    # d(sv) needs d on lower-degree suspensions: fill in ascending degree
    for g in sorted(V.algebra.generators, key=lambda h: (h.degree, h.gid)):
        total = (alg.generator_element(right[g.gid])
                 - alg.generator_element(left[g.gid]))
        u = alg.generator_element(left[g.gid])
        for i in range(1, max_series_iterations + 1):
            u = s_der(d_partial(u))
            if u.is_zero():
                break
            total = total - u * Fraction(1, math.factorial(i))
        else:
            raise ModelError(
                f"path-model twisting series for {g.name} did not terminate "
                f"within {max_series_iterations} iterations"
            )
        if not total.is_zero():
            images[susp[g.gid]] = total
    model = DgaModel(
        alg, d_partial,
        tuple(left[g.gid] for g in V.algebra.generators)
        + tuple(right[g.gid] for g in V.algebra.generators),
    )
    model.check()
    return model


# ---------------------------------------------------------------------------
# sub-models and canonical morphisms


def sub_model(M: DgaModel, gids: Iterable[int], name: str = "") -> tuple[DgaModel, dict[int, int]]:
    """The sub-DGA on a d-closed subset of generators.

    Returns the model and the gid translation from M into it.
    """
    keep = list(gids)
    keep_set = set(keep)
    alg = GradedAlgebra(name or f"sub({M.algebra.name})")
    gid_map: dict[int, int] = {}
    for gid in keep:
        g = M.algebra.gen(gid)
        gid_map[gid] = alg.add_generator(g.name, g.degree, g.prov).gid
    images: dict[int, Element] = {}
    for gid in keep:
        img = M.d(M.algebra.generator_element(gid))
        for mono in img.terms:
            if any(f not in keep_set for f, _ in mono):
                raise ModelError(
                    f"generators do not span a sub-DGA: d({M.algebra.gen(gid).name}) "
                    "leaves the span"
                )
        if not img.is_zero():
            images[gid_map[gid]] = translate(img, alg, gid_map)
    base = tuple(gid_map[g] for g in M.base_gids if g in keep_set)
    return DgaModel(alg, Derivation(alg, 1, images), base), gid_map


def base_model(M: DgaModel) -> tuple[DgaModel, dict[int, int]]:
    return sub_model(M, M.base_gids, name=f"base({M.algebra.name})")


def morphism_phi(sphere: DgaModel) -> DgaMorphism:
    """φ: sphere model → ∧V; identity on V, zero on suspensions."""
    target, gid_map = base_model(sphere)
    images: dict[int, Element] = {}
    for g in sphere.algebra.generators:
        if g.gid in gid_map:
            images[g.gid] = target.algebra.generator_element(gid_map[g.gid])
        else:
            images[g.gid] = target.algebra.zero()
    f = DgaMorphism(sphere, target, images)
    f.check_chain()
    return f


def morphism_eps_tilde(disk: DgaModel) -> DgaMorphism:
    """ε̃: disk model → ∧V; identity on V, zero on both suspensions."""
    keep = [g.gid for g in disk.algebra.generators if g.prov.kind == "base"]
    target, gid_map = sub_model(disk, keep, name=f"base({disk.algebra.name})")
    images: dict[int, Element] = {}
    for g in disk.algebra.generators:
        if g.gid in gid_map:
            images[g.gid] = target.algebra.generator_element(gid_map[g.gid])
        else:
            images[g.gid] = target.algebra.zero()
    f = DgaMorphism(disk, target, images)
    f.check_chain()
    return f


def base_change(M: DgaModel, f: DgaMorphism) -> tuple[DgaModel, DgaMorphism]:
    """A ⊗_B M for M semifree over B and f: B → A.

    The result is free on A's generators plus M's fiber generators; M's
    differential is rewritten through f.  Returns the model and the induced
    map M → A ⊗_B M.
    """
    base_names = {M.algebra.gen(gid).name for gid in M.base_gids}
    f_names = {g.name for g in f.source.algebra.generators}
    if base_names != f_names:
        raise ModelError("morphism source does not match the base of M")
    alg = GradedAlgebra(f"({f.target.algebra.name})⊗({M.algebra.name})")
    a_map = _copy_generators(f.target.algebra, alg)
    fiber_map: dict[int, int] = {}
    for gid in M.fiber_gids:
        g = M.algebra.gen(gid)
        nm = g.name if not alg.has_gen(g.name) else g.name + "'"
        fiber_map[gid] = alg.add_generator(nm, g.degree, g.prov).gid
    # the algebra map ρ: M → result (base through f, fiber to itself)
    rho: dict[int, Element] = {}
    for gid in M.base_gids:
        g = M.algebra.gen(gid)
        src_gid = f.source.algebra.gen(g.name).gid
        img = f.images.get(src_gid)
        if img is None:
            raise ModelError(f"morphism lacks an image for base generator {g.name}")
        rho[gid] = translate(img, alg, a_map)
    for gid in M.fiber_gids:
        rho[gid] = alg.generator_element(fiber_map[gid])
    images: dict[int, Element] = {}
    for g in f.target.algebra.generators:
        img = translate(
            f.target.d(f.target.algebra.generator_element(g.gid)), alg, a_map
        )
        if not img.is_zero():
            images[a_map[g.gid]] = img
    for gid in M.fiber_gids:
        img = _apply_algebra_map(
            M.d(M.algebra.generator_element(gid)), rho, alg
        )
        if not img.is_zero():
            images[fiber_map[gid]] = img
    result = DgaModel(
        alg, Derivation(alg, 1, images),
        tuple(a_map[g.gid] for g in f.target.algebra.generators),
    )
    result.check()
    push = DgaMorphism(M, result, rho)
    return result, push


def relative_tensor(
    M: DgaModel, N: DgaModel
) -> tuple[DgaModel, DgaMorphism, DgaMorphism]:
    """M ⊗_B N for two semifree models over the same base B.

    Fiber generators whose names collide get "@L"/"@R" suffixes.  Returns
    the glued model and the two inclusion morphisms.
    """
    m_base = [M.algebra.gen(g) for g in M.base_gids]
    n_base = {N.algebra.gen(g).name: g for g in N.base_gids}
    if {g.name for g in m_base} != set(n_base):
        raise ModelError("relative tensor: base generator names differ")
    alg = GradedAlgebra(f"({M.algebra.name})⊗_B({N.algebra.name})")
    m_map: dict[int, int] = {}
    n_map: dict[int, int] = {}
    for g in m_base:
        other = N.algebra.gen(n_base[g.name])
        if other.degree != g.degree:
            raise ModelError(f"base generator {g.name} has mismatched degrees")
        new = alg.add_generator(g.name, g.degree, g.prov).gid
        m_map[g.gid] = new
        n_map[other.gid] = new
    m_fiber_names = {M.algebra.gen(g).name for g in M.fiber_gids}
    n_fiber_names = {N.algebra.gen(g).name for g in N.fiber_gids}
    clash = m_fiber_names & n_fiber_names
    for gid in M.fiber_gids:
        g = M.algebra.gen(gid)
        nm = g.name + "@L" if g.name in clash else g.name
        prov = Provenance(g.prov.kind, g.prov.shift, g.prov.origin,
                          "L" if g.name in clash else g.prov.factor)
        m_map[gid] = alg.add_generator(nm, g.degree, prov).gid
    for gid in N.fiber_gids:
        g = N.algebra.gen(gid)
        nm = g.name + "@R" if g.name in clash else g.name
        prov = Provenance(g.prov.kind, g.prov.shift, g.prov.origin,
                          "R" if g.name in clash else g.prov.factor)
        n_map[gid] = alg.add_generator(nm, g.degree, prov).gid
    images: dict[int, Element] = {}
    for g in m_base:
        img_m = translate(M.d(M.algebra.generator_element(g.gid)), alg, m_map)
        img_n = translate(
            N.d(N.algebra.generator_element(n_base[g.name])), alg, n_map
        )
        if img_m != img_n:
            raise ModelError(
                f"relative tensor: differentials disagree on base generator {g.name}"
            )
        if not img_m.is_zero():
            images[m_map[g.gid]] = img_m
    for gid in M.fiber_gids:
        img = translate(M.d(M.algebra.generator_element(gid)), alg, m_map)
        if not img.is_zero():
            images[m_map[gid]] = img
    for gid in N.fiber_gids:
        img = translate(N.d(N.algebra.generator_element(gid)), alg, n_map)
        if not img.is_zero():
            images[n_map[gid]] = img
    result = DgaModel(
        alg, Derivation(alg, 1, images),
        tuple(m_map[g.gid] for g in m_base),
    )
    result.check()
    inc_m = DgaMorphism(
        M, result,
        {gid: alg.generator_element(new) for gid, new in m_map.items()},
    )
    inc_n = DgaMorphism(
        N, result,
        {gid: alg.generator_element(new) for gid, new in n_map.items()},
    )
    return result, inc_m, inc_n


def tensor_model(M: DgaModel, N: DgaModel) -> tuple[DgaModel, DgaMorphism, DgaMorphism]:
    """Plain tensor product of models (over the ground field)."""
    alg, left, right = tensor(M.algebra, N.algebra)
    images: dict[int, Element] = {}
    for g in M.algebra.generators:
        img = translate(M.d(M.algebra.generator_element(g.gid)), alg, left)
        if not img.is_zero():
            images[left[g.gid]] = img
    for g in N.algebra.generators:
        img = translate(N.d(N.algebra.generator_element(g.gid)), alg, right)
        if not img.is_zero():
            images[right[g.gid]] = img
    base = tuple(left[g] for g in M.base_gids) + tuple(right[g] for g in N.base_gids)
    result = DgaModel(alg, Derivation(alg, 1, images), base)
    inc_m = DgaMorphism(
        M, result, {g: alg.generator_element(n) for g, n in left.items()}
    )
    inc_n = DgaMorphism(
        N, result, {g: alg.generator_element(n) for g, n in right.items()}
    )
    return result, inc_m, inc_n


def quotient(M: DgaModel, kill_names: Sequence[str]) -> tuple[DgaModel, DgaMorphism]:
    """Quotient by the ideal generated by a set of generators.

    Requires the ideal to be d-stable: every monomial of d(g) for a killed
    generator must itself contain a killed generator.
    """
    kill = set()
    for nm in kill_names:
        kill.add(M.algebra.gen(nm).gid)
    for gid in kill:
        dg = M.d(M.algebra.generator_element(gid))
        for mono in dg.terms:
            if not any(f in kill for f, _ in mono):
                g = M.algebra.gen(gid)
                raise ModelError(
                    f"ideal not d-stable: d({g.name}) has a term outside the "
                    f"ideal in degree {g.degree + 1}"
                )
    keep = [g.gid for g in M.algebra.generators if g.gid not in kill]
    alg = GradedAlgebra(f"({M.algebra.name})/I")
    gid_map: dict[int, int] = {}
    for gid in keep:
        g = M.algebra.gen(gid)
        gid_map[gid] = alg.add_generator(g.name, g.degree, g.prov).gid
    images: dict[int, Element] = {}
    for gid in keep:
        dg = M.d(M.algebra.generator_element(gid))
        kept_terms = {
            mono: c for mono, c in dg.terms.items()
            if not any(f in kill for f, _ in mono)
        }
        if kept_terms:
            images[gid_map[gid]] = translate(
                Element(M.algebra, kept_terms), alg, gid_map
            )
    result = DgaModel(
        alg, Derivation(alg, 1, images),
        tuple(gid_map[g] for g in M.base_gids if g in gid_map),
    )
    result.check()
    proj_images = {
        g.gid: (alg.generator_element(gid_map[g.gid]) if g.gid in gid_map
                else alg.zero())
        for g in M.algebra.generators
    }
    proj = DgaMorphism(M, result, proj_images)
    return result, proj


# ---------------------------------------------------------------------------
# transpositions


def _partner_name(name: str) -> str:
    if name.endswith("@L"):
        return name[:-2] + "@R"
    if name.endswith("@R"):
        return name[:-2] + "@L"
    raise ModelError(f"generator {name!r} has no tensor-factor tag")


def square_transposition(square: DgaModel) -> DgaMorphism:
    """The factor swap a⊗b ↦ (-1)^(|a||b|) b⊗a on a tensor square."""
    alg = square.algebra
    images = {
        g.gid: alg.generator_element(_partner_name(g.name))
        for g in alg.generators
    }
    t = DgaMorphism(square, square, images)
    t.check_chain()
    return t


def loop_transposition(path: DgaModel) -> DgaMorphism:
    """The swap on ∧V⊗² extended to the path model by sv ↦ -sv."""
    alg = path.algebra
    images: dict[int, Element] = {}
    for g in alg.generators:
        if g.prov.kind == "susp":
            images[g.gid] = -alg.generator_element(g.gid)
        else:
            images[g.gid] = alg.generator_element(_partner_name(g.name))
    t = DgaMorphism(path, path, images)
    t.check_chain()
    return t


def suspension_negation(M: DgaModel, shifts: Iterable[int]) -> DgaMorphism:
    """Automorphism negating the suspension generators with given shifts."""
    wanted = set(shifts)
    alg = M.algebra
    images: dict[int, Element] = {}
    for g in alg.generators:
        e = alg.generator_element(g.gid)
        images[g.gid] = -e if (g.prov.kind == "susp" and g.prov.shift in wanted) else e
    t = DgaMorphism(M, M, images)
    t.check_chain()
    return t


def transposition_morphisms(M: DgaModel) -> tuple[DgaMorphism, DgaMorphism]:
    """(t, t̃) for the recognized shapes.

    For a path model: t is the factor swap on the base square ∧V⊗² and t̃
    extends the swap to ∧sV by negation.  For a sphere/disk pair shape the
    two maps negate s^(k-1)- resp. both suspension levels.
    """
    kinds = {(g.prov.kind, g.prov.shift) for g in M.algebra.generators}
    susp_shifts = sorted(s for k, s in kinds if k == "susp")
    if any(g.name.endswith(("@L", "@R")) for g in M.algebra.generators
           if g.prov.kind == "base"):
        base, _ = base_model(M)
        return square_transposition(base), loop_transposition(M)
    if len(susp_shifts) in (1, 2):
        t = suspension_negation(M, susp_shifts[:1])
        t_tilde = suspension_negation(M, susp_shifts)
        return t, t_tilde
    raise ModelError("unrecognized model shape for transpositions")
