"""Dual-containing evaluation codes with locality from orbit partitions.

The pipeline: pick a subgroup H of affine maps with |H| = r + 1, take an
evaluation set A that is a union of full-size orbits (blocks), solve for a
multiplier vector u with sum_i u_i^2 * a_i^j = 0 for all j <= n - 2, and
evaluate two nested spans of monomials x^i * g(x)^j through the weighted
evaluation map f -> (u_1 f(a_1), ..., u_n f(a_n)).  The inner span T is
orthogonal to the outer span S under the weighting, which makes the big
code contain its own dual; the block structure of g gives every coordinate
a repair group of size r.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .agl import (
    AffineMap,
    AglSubgroup,
    GoodPolynomial,
    MBProvenance,
    OrbitPartition,
    good_polynomial,
    subgroup_from_descriptor,
)
from .errors import ConstructionError, InputError
from .field import Embedding, Field, FieldElement, field_from_descriptor
from .poly import Polynomial, annihilator, interpolate, poly_from_lists
from .rng import Xorshift64Star


class DegenerateSet(InputError):
    """Evaluation points must be pairwise distinct."""


class BadDimension(InputError):
    """k is outside the window n/2 < k <= n*r/(r+1)."""


class LocalityTooSmall(InputError):
    """Locality r must be at least 2."""


class RankDeficient(ConstructionError):
    """A generator matrix came out with too small a rank."""


class OrthogonalityFailure(ConstructionError):
    """Two rows that must be orthogonal are not."""


class LengthMismatch(InputError):
    """Message length does not match the code dimension."""


class BlockIncomplete(InputError):
    """A repair block is missing a second symbol."""


# ---------------------------------------------------------------------------
# multipliers


@dataclass(frozen=True)
class MultiplierSolution:
    """Multiplier vector u over `field`, possibly a quadratic extension.

    When `extended` is set the evaluation points were embedded into the
    extension and `embedding` maps the original field into it.
    """

    u: tuple[FieldElement, ...]
    field: Field
    points: tuple[FieldElement, ...]
    embedding: Embedding | None
    extended: bool


def _power_sum_check(u, points, upto: int) -> bool:
    """sum_i u_i^2 * x_i^j == 0 for 0 <= j <= upto, by direct summation."""
    field = points[0].field
    w = [ui * ui for ui in u]
    pw = [field.one()] * len(points)
    for _ in range(upto + 1):
        acc = field.zero()
        for wi, pi in zip(w, pw):
            acc = acc + wi * pi
        if not acc.is_zero():
            return False
        pw = [p * x for p, x in zip(pw, points)]
    return True


def solve_multipliers(points) -> MultiplierSolution:
    """A nowhere-zero u with sum u_i^2 * a_i^j = 0 for all j <= n - 2.

    The square vector is forced up to scaling: u_i^2 must be proportional to
    v_i = prod_{j != i} (a_i - a_j)^{-1}.  In characteristic 2 every element
    is a square.  For odd q the v_i are scaled by the canonically smallest
    non-residue when they are uniformly non-square; when their residue
    classes are mixed no scaling works over GF(q) and everything moves to
    GF(q^2), where every base-field element is a square.
    """
    points = list(points)
    if len(points) < 2:
        raise InputError("need at least two evaluation points")
    fld = points[0].field
    points = [fld.element(x) for x in points]
    if len({x.coeffs for x in points}) != len(points):
        raise DegenerateSet("evaluation points repeat")

    v = []
    for i, x in enumerate(points):
        prod = fld.one()
        for j, y in enumerate(points):
            if j != i:
                prod = prod * (x - y)
        v.append(prod.inv())

    embedding = None
    out_field = fld
    out_points = points
    if fld.p == 2:
        u = [fld.sqrt(vi) for vi in v]
    else:
        flags = [fld.is_quadratic_residue(vi) for vi in v]
        if all(flags):
            u = [fld.sqrt(vi) for vi in v]
        elif not any(flags):
            c = next(
                x for x in fld.elements() if not x.is_zero() and not fld.is_quadratic_residue(x)
            )
            u = [fld.sqrt(c * vi) for vi in v]
        else:
            out_field, embedding = fld.extend()
            out_points = [embedding(x) for x in points]
            u = [out_field.sqrt(embedding(vi)) for vi in v]

    if any(ui is None or ui.is_zero() for ui in u):
        raise ConstructionError("multiplier solve produced a zero entry")
    if not _power_sum_check(u, out_points, len(points) - 2):
        raise ConstructionError("multiplier power-sum identity failed")
    return MultiplierSolution(
        u=tuple(u),
        field=out_field,
        points=tuple(out_points),
        embedding=embedding,
        extended=embedding is not None,
    )


# ---------------------------------------------------------------------------
# exponent sets


def _smallest_pairs(count: int, r: int) -> list[tuple[int, int]]:
    """First `count` pairs (i, j), 1 <= i <= r-1, ordered by i + j*(r+1)."""
    pairs: list[tuple[int, int]] = []
    j = 0
    while len(pairs) < count:
        for i in range(1, r):
            pairs.append((i, j))
            if len(pairs) == count:
                break
        j += 1
    return pairs


def _largest_degree_closed_form(count: int, r: int) -> int | None:
    if count == 0:
        return None
    full, rem = divmod(count, r - 1)
    if rem == 0:
        return (r + 1) * full - 2
    return (r + 1) * full + rem


@dataclass(frozen=True)
class ExponentSets:
    """The monomial exponents (i, j) for x^i * g^j defining S and T.

    s2 contains the pure powers of g shared by both spans; t1 is an initial
    segment of s1.  ell / ell_prime are the largest degrees in s1 / t1
    (None when t1 is empty), computed by enumeration and confirmed against
    the closed form.
    """

    n: int
    k: int
    r: int
    s1: tuple[tuple[int, int], ...]
    s2: tuple[tuple[int, int], ...]
    t1: tuple[tuple[int, int], ...]
    ell: int | None
    ell_prime: int | None

    def degree(self, pair: tuple[int, int]) -> int:
        i, j = pair
        return i + j * (self.r + 1)

    @property
    def s_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.s1 + self.s2, key=self.degree)

    @property
    def t_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.t1 + self.s2, key=self.degree)


def exponent_sets(n: int, k: int, r: int, allow_degenerate: bool = False) -> ExponentSets:
    """Exponent sets for an [n, k] code with locality r.

    Requires (r+1) | n and n/2 < k <= n*r/(r+1).  The degenerate boundary
    k == n/(r+1) (no x^i monomials at all) is only reachable with
    allow_degenerate=True; it produces a code equal to its own dual span
    and is of no use downstream, so it is fenced off by default.
    """
    if r < 2:
        raise LocalityTooSmall(f"locality {r} < 2")
    if n <= 0 or n % (r + 1) != 0:
        raise BadDimension(f"block size {r + 1} does not divide n = {n}")
    u_count = n // (r + 1)
    if allow_degenerate and k == u_count:
        s2 = tuple((0, j) for j in range(u_count))
        return ExponentSets(n, k, r, (), s2, (), None, None)
    if not (2 * k > n and k * (r + 1) <= n * r):
        raise BadDimension(f"k = {k} outside (n/2, n*r/(r+1)] for n = {n}, r = {r}")

    s1 = _smallest_pairs(k - u_count, r)
    ell = max(i + j * (r + 1) for i, j in s1)
    if ell != _largest_degree_closed_form(k - u_count, r):
        raise ConstructionError("largest-degree closed form disagrees with enumeration")

    t_count = n - k - u_count
    t1 = s1[:t_count]
    if t_count:
        ell_prime = max(i + j * (r + 1) for i, j in t1)
    else:
        ell_prime = None
    if ell_prime != _largest_degree_closed_form(t_count, r):
        raise ConstructionError("largest-degree closed form disagrees with enumeration")
    if ell_prime is not None and ell + ell_prime > n - 2:
        raise ConstructionError("degree budget ell + ell' exceeded n - 2")

    s2 = tuple((0, j) for j in range(u_count))
    return ExponentSets(n, k, r, tuple(s1), s2, tuple(t1), ell, ell_prime)


# ---------------------------------------------------------------------------
# evaluation sets


@dataclass(frozen=True)
class EvaluationSet:
    """Ordered evaluation points, their block partition, and multipliers.

    Points are in canonical ascending order of the base field (inherited
    through the embedding when the instance was extended); blocks are index
    tuples into `points`, each a full-size orbit of the subgroup behind
    `good`.
    """

    field: Field
    points: tuple[FieldElement, ...]
    blocks: tuple[tuple[int, ...], ...]
    u: tuple[FieldElement, ...]
    good: GoodPolynomial
    extended: bool
    base_field: Field

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def r(self) -> int:
        return len(self.blocks[0]) - 1

    def block_of(self, z: int) -> tuple[int, ...]:
        for blk in self.blocks:
            if z in blk:
                return blk
        raise InputError(f"position {z} is not covered by any block")


def _resolve_alpha(subgroup: AglSubgroup, alpha):
    if alpha == "auto":
        order = len(subgroup)
        for x in subgroup.field.elements():
            if len(subgroup.orbit(x)) == order:
                return x
        raise InputError("subgroup has no full-size orbit at all")
    return subgroup.field.element(alpha)


def _embed_subgroup(subgroup: AglSubgroup, emb: Embedding, big: Field) -> AglSubgroup:
    prov = subgroup.provenance
    big_prov = None
    if prov is not None:
        big_prov = MBProvenance(
            subfield_degree=prov.subfield_degree,
            M=tuple(emb(a) for a in prov.M),
            B=tuple(emb(b) for b in prov.B),
        )
    maps = [AffineMap(emb(f.a), emb(f.b)) for f in subgroup]
    return AglSubgroup(big, maps, provenance=big_prov)


def build_evaluation_set(
    subgroup: AglSubgroup,
    alpha="auto",
    domain="full_field",
    n: int | None = None,
) -> EvaluationSet:
    """Pick blocks from the subgroup's full-size orbits and solve multipliers.

    domain selects the evaluation points: "full_field" uses every field
    element (all orbits must then have full size), "orbits" takes the first
    n/(r+1) full-size orbits in canonical order, and an explicit element
    list must be exactly a union of full-size orbits.

    When the multiplier solve has to move to GF(q^2), every ingredient
    (points, blocks, g, subgroup) is embedded and the returned set lives in
    the extension with `extended` set.
    """
    fld = subgroup.field
    if len(subgroup) < 3:
        raise LocalityTooSmall(f"subgroup order {len(subgroup)} gives locality < 2")
    good = good_polynomial(subgroup, _resolve_alpha(subgroup, alpha))
    blocks_all = good.partition.orbits
    size = len(subgroup)

    if isinstance(domain, str) and domain == "full_field":
        if sum(len(b) for b in blocks_all) != fld.q:
            raise InputError("full-size orbits do not cover the field; use domain='orbits'")
        chosen = list(blocks_all)
        if n is not None and n != fld.q:
            raise InputError(f"full_field implies n = {fld.q}, got {n}")
    elif isinstance(domain, str) and domain == "orbits":
        if n is None:
            n = size * len(blocks_all)
        if n % size != 0:
            raise BadDimension(f"n = {n} is not a multiple of the block size {size}")
        want = n // size
        if want < 1 or want > len(blocks_all):
            raise InputError(
                f"requested {want} blocks but the subgroup has {len(blocks_all)} full-size orbits"
            )
        chosen = list(blocks_all[:want])
    elif isinstance(domain, str):
        raise InputError(f"unknown evaluation domain {domain!r}")
    else:
        els = {fld.element(x) for x in domain}
        if n is not None and n != len(els):
            raise InputError("explicit domain size disagrees with n")
        chosen = [b for b in blocks_all if set(b) <= els]
        covered = {x for b in chosen for x in b}
        if covered != els:
            raise InputError("explicit domain is not a union of full-size orbits")

    points = sorted({x for b in chosen for x in b}, key=lambda e: e.value())
    index = {x.coeffs: i for i, x in enumerate(points)}
    blocks = tuple(tuple(sorted(index[x.coeffs] for x in b)) for b in chosen)
    blocks = tuple(sorted(blocks, key=lambda b: b[0]))

    sol = solve_multipliers(points)
    if not sol.extended:
        return EvaluationSet(
            field=fld,
            points=tuple(points),
            blocks=blocks,
            u=sol.u,
            good=good,
            extended=False,
            base_field=fld,
        )

    emb, big = sol.embedding, sol.field
    big_sub = _embed_subgroup(good.subgroup, emb, big)
    big_blocks_els = tuple(tuple(sol.points[i] for i in blk) for blk in blocks)
    big_g = Polynomial(big, [emb(c) for c in good.g.coeffs])
    values = []
    for blk in big_blocks_els:
        vals = {big_g(x) for x in blk}
        if len(vals) != 1:
            raise ConstructionError("block constancy lost under embedding")
        values.append(next(iter(vals)))
    big_good = GoodPolynomial(
        big_g,
        OrbitPartition(big_blocks_els),
        tuple(values),
        big_sub,
        emb(good.base_point) if good.base_point is not None else None,
    )
    return EvaluationSet(
        field=big,
        points=sol.points,
        blocks=blocks,
        u=sol.u,
        good=big_good,
        extended=True,
        base_field=fld,
    )


# ---------------------------------------------------------------------------
# the code itself


@dataclass(frozen=True)
class CodeInstance:
    """An [n, k] evaluation code C with its dual D = C-perp inside it."""

    eval_set: EvaluationSet
    k: int
    exps: ExponentSets
    matrix_c: tuple[tuple[FieldElement, ...], ...]
    matrix_d: tuple[tuple[FieldElement, ...], ...]
    seed: int = 1

    @property
    def n(self) -> int:
        return self.eval_set.n

    @property
    def r(self) -> int:
        return self.eval_set.r

    @property
    def field(self) -> Field:
        return self.eval_set.field

    @property
    def kappa(self) -> int:
        return 2 * self.k - self.n

    @property
    def ell(self) -> int | None:
        return self.exps.ell

    @property
    def ell_prime(self) -> int | None:
        return self.exps.ell_prime

    def summary(self) -> str:
        tag = " (extended field)" if self.eval_set.extended else ""
        return (
            f"[{self.n},{self.k}]_{self.field.q} locality {self.r}, "
            f"dual-containing: OK, qLRC [[{self.n},{self.kappa}]]_{self.field.q}{tag}"
        )


def _monomial_row(es: EvaluationSet, gpow: Polynomial, i: int):
    f = gpow.shift(i)
    return tuple(u * f(x) for u, x in zip(es.u, es.points))


def build_code(es: EvaluationSet, k: int, seed: int = 1) -> CodeInstance:
    """Generator matrices for S and T spans, with all structure checks on.

    Raises RankDeficient / OrthogonalityFailure when the evaluation rows do
    not behave; with a correctly solved multiplier vector these indicate an
    upstream bug, not bad input, hence construction errors.
    """
    n, r = es.n, es.r
    exps = exponent_sets(n, k, r)
    fld = es.field

    max_j = max(j for _, j in exps.s_pairs)
    gpows = [Polynomial.one(fld)]
    for _ in range(max_j):
        gpows.append(gpows[-1] * es.good.g)

    rows_s = [_monomial_row(es, gpows[j], i) for i, j in exps.s_pairs]
    rows_t = [_monomial_row(es, gpows[j], i) for i, j in exps.t_pairs]

    if linalg.rank([list(r_) for r_ in rows_s]) != k:
        raise RankDeficient(f"big span evaluated to rank < {k}")
    if linalg.rank([list(r_) for r_ in rows_t]) != n - k:
        raise RankDeficient(f"dual span evaluated to rank < {n - k}")
    for i, rs in enumerate(rows_s):
        for j, rt in enumerate(rows_t):
            if not linalg.dot(list(rs), list(rt)).is_zero():
                raise OrthogonalityFailure(
                    f"S row {exps.s_pairs[i]} not orthogonal to T row {exps.t_pairs[j]}"
                )
    stacked = [list(r_) for r_ in rows_s] + [list(r_) for r_ in rows_t]
    if linalg.rank(stacked) != k:
        raise ConstructionError("dual span escapes the big span")
    if not set(exps.t_pairs) <= set(exps.s_pairs):
        raise ConstructionError("T exponents escape S")

    return CodeInstance(
        eval_set=es,
        k=k,
        exps=exps,
        matrix_c=tuple(rows_s),
        matrix_d=tuple(rows_t),
        seed=seed,
    )


def encode(inst: CodeInstance, message) -> list[FieldElement]:
    """message . G_C, message coordinates matching S rows in degree order."""
    if len(message) != inst.k:
        raise LengthMismatch(f"message length {len(message)} != k = {inst.k}")
    fld = inst.field
    msg = [fld.element(c) for c in message]
    out = [fld.zero()] * inst.n
    for m, row in zip(msg, inst.matrix_c):
        if m.is_zero():
            continue
        out = [acc + m * c for acc, c in zip(out, row)]
    return out


def repair(inst: CodeInstance, received, z: int) -> FieldElement:
    """Recover the erased coordinate z from the r survivors in its block.

    The codeword restricted to a block agrees with a polynomial of degree
    at most r - 1 after dividing out the multipliers, so interpolation
    through the survivors recovers it.  Exactly the r in-block coordinates
    are read; the caller guarantees the rest of the word is intact.
    """
    es = inst.eval_set
    if not 0 <= z < inst.n:
        raise InputError(f"position {z} out of range")
    if received[z] is not None:
        raise InputError(f"position {z} holds a symbol; nothing to repair")
    block = es.block_of(z)
    pts = []
    for idx in block:
        if idx == z:
            continue
        sym = received[idx]
        if sym is None:
            raise BlockIncomplete(f"position {idx} in the repair block is also missing")
        pts.append((es.points[idx], es.u[idx].inv() * es.field.element(sym)))
    lam = interpolate(pts)
    return es.u[z] * lam(es.points[z])


# ---------------------------------------------------------------------------
# spec parsing, dumps, verification


def instance_from_spec(spec: dict) -> CodeInstance:
    """Build a CodeInstance from a plain-dict instance description."""
    try:
        fld = field_from_descriptor(spec["field"])
        n, r, k = spec["n"], spec["r"], spec["k"]
        sub_desc = spec["subgroup"]
    except (KeyError, TypeError) as e:
        raise InputError(f"instance spec is missing a field: {e}") from None
    subgroup = subgroup_from_descriptor(fld, sub_desc)
    if len(subgroup) != r + 1:
        raise InputError(f"subgroup order {len(subgroup)} does not match r + 1 = {r + 1}")
    alpha = spec.get("alpha", "auto")
    if isinstance(alpha, list):
        alpha = fld.element(alpha)
    domain = spec.get("evaluation_domain", "full_field")
    if isinstance(domain, list):
        domain = [fld.element(x) for x in domain]
    es = build_evaluation_set(subgroup, alpha=alpha, domain=domain, n=n)
    if es.n != n:
        raise InputError(f"evaluation domain produced n = {es.n}, spec says {n}")
    return build_code(es, k, seed=int(spec.get("seed", 1)))


def instance_to_dump(inst: CodeInstance) -> dict:
    es = inst.eval_set
    return {
        "field": es.field.descriptor(),
        "base_field": es.base_field.descriptor(),
        "extended": es.extended,
        "n": inst.n,
        "k": inst.k,
        "r": inst.r,
        "seed": inst.seed,
        "points": [x.to_list() for x in es.points],
        "blocks": [list(b) for b in es.blocks],
        "u": [x.to_list() for x in es.u],
        "g": es.good.g.to_lists(),
        "alpha": es.good.base_point.to_list() if es.good.base_point is not None else None,
        "subgroup": es.good.subgroup.descriptor(),
        "s1": [list(p) for p in inst.exps.s1],
        "s2": [list(p) for p in inst.exps.s2],
        "t1": [list(p) for p in inst.exps.t1],
        "ell": inst.exps.ell,
        "ell_prime": inst.exps.ell_prime,
        "generator_c": [[c.to_list() for c in row] for row in inst.matrix_c],
        "generator_d": [[c.to_list() for c in row] for row in inst.matrix_d],
    }


def instance_from_dump(d: dict) -> CodeInstance:
    """Rebuild an instance from its dump with shape checks only.

    Semantic integrity is deliberately not re-derived here; that is what
    verify_instance is for, so that a tampered dump loads and then fails
    the right check.
    """
    try:
        fld = field_from_descriptor(d["field"])
        base = field_from_descriptor(d["base_field"])
        points = tuple(fld.element(x) for x in d["points"])
        blocks = tuple(tuple(int(i) for i in b) for b in d["blocks"])
        u = tuple(fld.element(x) for x in d["u"])
        g = poly_from_lists(fld, d["g"])
        subgroup = subgroup_from_descriptor(fld, d["subgroup"])
        alpha = fld.element(d["alpha"]) if d["alpha"] is not None else None
        exps = ExponentSets(
            n=d["n"],
            k=d["k"],
            r=d["r"],
            s1=tuple((int(i), int(j)) for i, j in d["s1"]),
            s2=tuple((int(i), int(j)) for i, j in d["s2"]),
            t1=tuple((int(i), int(j)) for i, j in d["t1"]),
            ell=d["ell"],
            ell_prime=d["ell_prime"],
        )
        mc = tuple(tuple(fld.element(c) for c in row) for row in d["generator_c"])
        md = tuple(tuple(fld.element(c) for c in row) for row in d["generator_d"])
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"malformed instance dump: {e}") from None
    if len(points) != d["n"] or len(u) != d["n"]:
        raise InputError("dump lengths are inconsistent with n")
    block_els = tuple(tuple(points[i] for i in blk) for blk in blocks)
    values = tuple(g(orb[0]) for orb in block_els)
    good = GoodPolynomial(g, OrbitPartition(block_els), values, subgroup, alpha)
    es = EvaluationSet(
        field=fld,
        points=points,
        blocks=blocks,
        u=u,
        good=good,
        extended=bool(d["extended"]),
        base_field=base,
    )
    return CodeInstance(
        eval_set=es, k=d["k"], exps=exps, matrix_c=mc, matrix_d=md, seed=int(d.get("seed", 1))
    )


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _check(name: str, fn) -> CheckResult:
    try:
        problem = fn()
    except Exception as e:  # noqa: BLE001 - verification must report, not crash
        return CheckResult(name, False, f"{type(e).__name__}: {e}")
    if problem:
        return CheckResult(name, False, problem)
    return CheckResult(name, True)


def verify_instance(inst: CodeInstance, trials: int = 100, seed: int | None = None):
    """Re-derive every structural property of a (possibly reloaded) instance.

    Returns a list of CheckResult in a fixed order; each check re-computes
    its property from the raw instance data rather than trusting stored
    derived values.
    """
    es = inst.eval_set
    fld = inst.field
    n, k, r = inst.n, inst.k, inst.r
    rng = Xorshift64Star(inst.seed if seed is None else seed)

    def chk_power_sums():
        if not _power_sum_check(list(es.u), list(es.points), n - 2):
            return "weighted power sums do not vanish up to degree n - 2"
        if any(ui.is_zero() for ui in es.u):
            return "a multiplier is zero"
        return None

    def chk_ranks():
        if linalg.rank([list(row) for row in inst.matrix_c]) != k:
            return f"big generator rank != {k}"
        if linalg.rank([list(row) for row in inst.matrix_d]) != n - k:
            return f"dual generator rank != {n - k}"
        return None

    def chk_dual_containment():
        for rs in inst.matrix_c:
            for rt in inst.matrix_d:
                if not linalg.dot(list(rs), list(rt)).is_zero():
                    return "a generator row pair is not orthogonal"
        stacked = [list(row) for row in inst.matrix_c] + [list(row) for row in inst.matrix_d]
        if linalg.rank(stacked) != k:
            return "dual rows escape the big code"
        return None

    def chk_constancy():
        g = es.good.g
        if g.degree != r + 1:
            return f"block polynomial degree {g.degree} != {r + 1}"
        for blk in es.blocks:
            vals = {g(es.points[i]) for i in blk}
            if len(vals) != 1:
                return f"block {blk} sees several values of g"
        return None

    def chk_rows_match():
        exps = inst.exps
        if not set(exps.t1) <= set(exps.s1):
            return "T1 exponents escape S1"
        if exps.s1:
            ell = max(exps.degree(p) for p in exps.s1)
            if ell != exps.ell:
                return "stored ell does not match the exponent list"
        gpows = [Polynomial.one(fld)]
        for _ in range(max(j for _, j in exps.s_pairs)):
            gpows.append(gpows[-1] * es.good.g)
        for pair, row in zip(exps.s_pairs, inst.matrix_c):
            if _monomial_row(es, gpows[pair[1]], pair[0]) != tuple(row):
                return f"S row {pair} does not match its evaluation"
        for pair, row in zip(exps.t_pairs, inst.matrix_d):
            if _monomial_row(es, gpows[pair[1]], pair[0]) != tuple(row):
                return f"T row {pair} does not match its evaluation"
        return None

    def chk_ring():
        u_count = len(es.blocks)
        h = annihilator(fld, es.points)
        basis_polys = [Polynomial.one(fld)]
        for _ in range(u_count - 1):
            basis_polys.append(basis_polys[-1] * es.good.g)
        basis_polys = [bp % h for bp in basis_polys]
        vecs = [[bp.coefficient(i) for i in range(n)] for bp in basis_polys]
        if linalg.rank(vecs) != u_count:
            return "power basis of the block-constant ring is dependent"
        pairs = [(i, j) for i in range(u_count) for j in range(i, u_count)]
        if len(pairs) > 45:
            pairs = [pairs[rng.below(len(pairs))] for _ in range(45)]
        for i, j in pairs:
            prod = (basis_polys[i] * basis_polys[j]) % h
            target = [prod.coefficient(t) for t in range(n)]
            if linalg.solve_in_span(vecs, target) is None:
                return f"g^{i} * g^{j} mod h leaves the power-basis span"
        return None

    def chk_repair():
        for _ in range(trials):
            msg = [rng.element(fld) for _ in range(k)]
            word = encode(inst, msg)
            z = rng.below(n)
            received: list = [c for c in word]
            received[z] = None
            if repair(inst, received, z) != word[z]:
                return f"repair mismatch at position {z}"
        return None

    return [
        _check("multiplier-power-sums", chk_power_sums),
        _check("generator-ranks", chk_ranks),
        _check("dual-containment", chk_dual_containment),
        _check("block-polynomial-constancy", chk_constancy),
        _check("generator-row-consistency", chk_rows_match),
        _check("quotient-ring-closure", chk_ring),
        _check("local-repair", chk_repair),
    ]
