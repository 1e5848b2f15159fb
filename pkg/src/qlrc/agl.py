"""Subgroups of the affine maps x -> a*x + b over a finite field.

A subgroup acting on the field partitions it into orbits; whenever an orbit
has size equal to the group order, the monic annihilator of that orbit is
constant on every orbit (a "good polynomial" in the locally-recoverable-code
sense), which is what makes these groups useful for block structure.

Subgroups are either given by an explicit closed set of maps or generated
from a pair (M, B): a multiplicative subgroup M of a subfield K and a
K-subspace B of the field, giving {a*x + b : a in M, b in B}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstructionError, InputError
from .field import Field, FieldElement
from .poly import Polynomial, annihilator


class NotSubgroup(InputError):
    """The supplied multiplicative set is not a subgroup."""


class NotSubspace(InputError):
    """The supplied additive set is not a subspace over K."""


class NotSubfield(InputError):
    """The supplied K descriptor does not name a subfield."""


class NotRegularOrbit(InputError):
    """The base point's orbit is smaller than the group."""


class DomainNotClosed(InputError):
    """The requested orbit domain is not closed under the group action."""


@dataclass(frozen=True)
class AffineMap:
    """x -> a*x + b with a != 0."""

    a: FieldElement
    b: FieldElement

    def __post_init__(self):
        if self.a.is_zero():
            raise InputError("affine map needs an invertible linear part")
        if self.a.field != self.b.field:
            raise InputError("affine map coefficients must share a field")

    @classmethod
    def identity(cls, field: Field) -> AffineMap:
        return cls(field.one(), field.zero())

    def __call__(self, x: FieldElement) -> FieldElement:
        return self.a * x + self.b

    def __mul__(self, other: AffineMap) -> AffineMap:
        # composition: self after other
        return AffineMap(self.a * other.a, self.a * other.b + self.b)

    def inverse(self) -> AffineMap:
        ai = self.a.inv()
        return AffineMap(ai, -(ai * self.b))

    @property
    def is_identity(self) -> bool:
        return self.a == self.a.field.one() and self.b.is_zero()

    def as_polynomial(self) -> Polynomial:
        return Polynomial(self.a.field, (self.b, self.a))

    def sort_key(self):
        return (self.a.value(), self.b.value())

    def __repr__(self):
        return f"(x -> {Polynomial(self.a.field, (self.b, self.a))!r})"


@dataclass(frozen=True)
class MBProvenance:
    """Record of the (K, M, B) data a subgroup was generated from."""

    subfield_degree: int
    M: tuple[FieldElement, ...]
    B: tuple[FieldElement, ...]


class AglSubgroup:
    """A finite subgroup of the affine maps over one field.

    Construction verifies the group axioms exhaustively: identity present,
    closure under composition, closure under inverse.
    """

    def __init__(self, field: Field, maps, provenance: MBProvenance | None = None):
        self.field = field
        self.maps = tuple(sorted(set(maps), key=AffineMap.sort_key))
        self.provenance = provenance
        if not self.maps:
            raise NotSubgroup("a subgroup cannot be empty")
        mapset = set(self.maps)
        if AffineMap.identity(field) not in mapset:
            raise NotSubgroup("identity map missing")
        for f in self.maps:
            if f.inverse() not in mapset:
                raise NotSubgroup(f"inverse of {f!r} missing")
            for g in self.maps:
                if f * g not in mapset:
                    raise NotSubgroup(f"composition {f!r} * {g!r} escapes the set")

    def __len__(self):
        return len(self.maps)

    def __iter__(self):
        return iter(self.maps)

    def __contains__(self, f):
        return f in set(self.maps)

    def __eq__(self, other):
        return (
            isinstance(other, AglSubgroup)
            and self.field == other.field
            and self.maps == other.maps
        )

    def __repr__(self):
        return f"AglSubgroup(order={len(self.maps)}, field={self.field!r})"

    def orbit(self, alpha: FieldElement) -> list[FieldElement]:
        """The orbit of alpha, sorted canonically."""
        alpha = self.field.element(alpha)
        return sorted({f(alpha) for f in self.maps}, key=lambda e: e.value())

    def descriptor(self) -> dict:
        if self.provenance is not None:
            prov = self.provenance
            gen = _cyclic_generator(prov.M)
            basis = _subspace_basis(self.field, prov.subfield_degree, prov.B)
            return {
                "kind": "MB",
                "K": {"p": self.field.p, "m_sub": prov.subfield_degree},
                "M_generator": gen.to_list(),
                "B_basis": [b.to_list() for b in basis],
            }
        return {
            "kind": "explicit",
            "maps": [{"a": f.a.to_list(), "b": f.b.to_list()} for f in self.maps],
        }


@dataclass(frozen=True)
class OrbitPartition:
    """Orbits of a subgroup acting on a closed domain.

    Orbits are canonically sorted inside and listed by smallest member.
    """

    orbits: tuple[tuple[FieldElement, ...], ...]

    def index_of(self, x: FieldElement) -> int:
        for i, orb in enumerate(self.orbits):
            if x in orb:
                return i
        raise InputError(f"{x!r} is not in the partitioned domain")


@dataclass(frozen=True)
class GoodPolynomial:
    """A polynomial constant on each block of a partition into equal orbits.

    `values` lists the constant attained on each block of `partition`.  The
    generating subgroup is kept around because the spectral distance bounds
    need it.
    """

    g: Polynomial
    partition: OrbitPartition
    values: tuple[FieldElement, ...]
    subgroup: AglSubgroup
    base_point: FieldElement | None


def _cyclic_generator(M: tuple[FieldElement, ...]) -> FieldElement:
    """An element of M whose powers exhaust M."""
    target = len(M)
    mset = set(M)
    for g in sorted(M, key=lambda e: e.value()):
        seen = {g}
        x = g
        while True:
            x = x * g
            if x in seen:
                break
            seen.add(x)
        if len(seen) == target and seen == mset:
            return g
    raise AssertionError("multiplicative subgroup with no generator")  # unreachable


def _subspace_basis(field: Field, k_degree: int, B: tuple[FieldElement, ...]):
    """Greedy K-basis extraction from the subspace B."""
    K = field.subfield_elements(k_degree)
    basis: list[FieldElement] = []
    spanned = {field.zero()}
    for b in sorted(B, key=lambda e: e.value()):
        if b in spanned:
            continue
        basis.append(b)
        # spanned is a K-subspace already, so one extension round suffices
        spanned = {s + k * b for s in spanned for k in K}
    return basis


def subgroup_from_MB(field: Field, k_degree: int, M, B) -> AglSubgroup:
    """Build {a*x + b : a in M, b in B} and verify the (K, M, B) premises.

    K is the subfield of order p**k_degree.  M must be a multiplicative
    subgroup of K*, B a K-subspace of the field; both checks are exhaustive.
    """
    if field.m % k_degree != 0:
        raise NotSubfield(f"degree {k_degree} does not divide {field.m}")
    K = set(field.subfield_elements(k_degree))
    M = [field.element(a) for a in M]
    B = [field.element(b) for b in B]
    mset, bset = set(M), set(B)
    if len(mset) != len(M) or len(bset) != len(B):
        raise InputError("M and B must not contain duplicates")
    if field.one() not in mset:
        raise NotSubgroup("M must contain 1")
    for a in mset:
        if a.is_zero() or a not in K:
            raise NotSubgroup("M must sit inside the subfield's nonzero elements")
        for b in mset:
            if a * b not in mset:
                raise NotSubgroup(f"M is not closed: {a!r} * {b!r} escapes")
    if field.zero() not in bset:
        raise NotSubspace("B must contain 0")
    for x in bset:
        for y in bset:
            if x + y not in bset:
                raise NotSubspace(f"B is not closed under addition: {x!r} + {y!r}")
        for k in K:
            if k * x not in bset:
                raise NotSubspace(f"B is not closed under K-scaling: {k!r} * {x!r}")
    maps = [AffineMap(a, b) for a in mset for b in bset]
    prov = MBProvenance(
        subfield_degree=k_degree,
        M=tuple(sorted(mset, key=lambda e: e.value())),
        B=tuple(sorted(bset, key=lambda e: e.value())),
    )
    return AglSubgroup(field, maps, provenance=prov)


def subgroup_from_descriptor(field: Field, d: dict) -> AglSubgroup:
    try:
        kind = d["kind"]
    except (KeyError, TypeError):
        raise InputError(f"bad subgroup descriptor: {d!r}") from None
    if kind == "MB":
        kd = d["K"]
        if "p" in kd and kd["p"] != field.p:
            raise InputError("subgroup subfield characteristic differs from the field")
        k_degree = kd["m_sub"]
        gen = field.element(d["M_generator"])
        if gen.is_zero():
            raise NotSubgroup("M generator must be nonzero")
        M = {field.one()}
        x = gen
        while x not in M:
            M.add(x)
            x = x * gen
        basis = [field.element(b) for b in d.get("B_basis", [])]
        K = field.subfield_elements(k_degree) if field.m % k_degree == 0 else []
        B = {field.zero()}
        for v in basis:
            B = {s + k * v for s in B for k in K} | B
        return subgroup_from_MB(field, k_degree, M, B)
    if kind == "explicit":
        maps = [
            AffineMap(field.element(fm["a"]), field.element(fm["b"])) for fm in d["maps"]
        ]
        return AglSubgroup(field, maps)
    raise InputError(f"unknown subgroup kind {kind!r}")


def orbits(subgroup: AglSubgroup, domain) -> OrbitPartition:
    """Partition a closed domain into orbits of the subgroup."""
    field = subgroup.field
    els = sorted({field.element(x) for x in domain}, key=lambda e: e.value())
    elset = set(els)
    out = []
    seen: set[FieldElement] = set()
    for x in els:
        if x in seen:
            continue
        orb = subgroup.orbit(x)
        for y in orb:
            if y not in elset:
                raise DomainNotClosed(f"{y!r} = image of {x!r} lies outside the domain")
        seen.update(orb)
        out.append(tuple(orb))
    return OrbitPartition(tuple(out))


def _verify_constant_on(g: Polynomial, blocks) -> tuple[FieldElement, ...]:
    values = []
    for orb in blocks:
        vals = {g(x) for x in orb}
        if len(vals) != 1:
            raise ConstructionError(f"polynomial is not constant on the block {orb!r}")
        values.append(next(iter(vals)))
    return tuple(values)


def _regular_blocks(subgroup: AglSubgroup) -> tuple[tuple[FieldElement, ...], ...]:
    part = orbits(subgroup, subgroup.field.elements())
    return tuple(orb for orb in part.orbits if len(orb) == len(subgroup))


def good_polynomial(subgroup: AglSubgroup, alpha) -> GoodPolynomial:
    """The monic annihilator of a regular orbit, constant on all such orbits.

    alpha must have an orbit of full size len(subgroup); the returned
    partition lists every full-size orbit in the field, and constancy of g
    on each of them is verified by evaluation before returning.
    """
    field = subgroup.field
    alpha = field.element(alpha)
    orb = subgroup.orbit(alpha)
    if len(orb) != len(subgroup):
        raise NotRegularOrbit(
            f"orbit of {alpha!r} has size {len(orb)}, group has order {len(subgroup)}"
        )
    g = annihilator(field, orb)
    blocks = _regular_blocks(subgroup)
    values = _verify_constant_on(g, blocks)
    return GoodPolynomial(g, OrbitPartition(blocks), values, subgroup, alpha)


def good_polynomial_power(subgroup: AglSubgroup) -> GoodPolynomial:
    """The companion power form x**|M| for a purely multiplicative subgroup.

    For subgroups {a*x : a in M} the orbit of 0 is the singleton {0}, so the
    annihilator route needs a nonzero base point and yields x**|M| - c.  The
    shifted form x**|M| is constant on the same orbits and is occasionally
    the more convenient normal form, so it gets its own constructor instead
    of a special case inside good_polynomial.
    """
    if any(not f.b.is_zero() for f in subgroup):
        raise InputError("power form requires a purely multiplicative subgroup")
    field = subgroup.field
    g = Polynomial.monomial(field, field.one(), len(subgroup))
    blocks = _regular_blocks(subgroup)
    values = _verify_constant_on(g, blocks)
    return GoodPolynomial(g, OrbitPartition(blocks), values, subgroup, None)


def theta_subgroup(subgroup: AglSubgroup, gamma: Polynomial) -> AglSubgroup:
    """Stabilizer {t : gamma(t(x)) == gamma(x) as polynomials}."""
    if gamma.is_zero():
        raise InputError("the stabilizer of the zero polynomial is everything")
    kept = [t for t in subgroup if gamma.compose(t.as_polynomial()) == gamma]
    return AglSubgroup(subgroup.field, kept)
