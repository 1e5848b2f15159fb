"""Distance bounds, spectral audits, and exact codeword enumeration.

Two lower bounds on the weight of codewords outside the dual span are
computed: a degree bound min(r+1, n-ell) that only uses the largest
evaluated degree, and a spectral bound that exploits how the zeros of a
codeword spread across orbit blocks.  The spectral route goes through the
Schreier graph of a block under the symbol-fixing subgroup of each
codeword, whose second eigenvalue is known exactly, and the expander mixing
lemma.  Everything numeric is guarded by exact rational arithmetic when an
integer threshold is extracted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .agl import AglSubgroup, theta_subgroup
from .construct import CodeInstance
from .errors import ConstructionError, InputError, ResourceError
from .field import FieldElement
from .poly import Polynomial
from .rng import Xorshift64Star


class TooLarge(ResourceError):
    """q**k exceeds the enumeration cap."""


class NotAglProvenance(InputError):
    """The instance does not carry the subgroup the spectral bound needs."""


class NoConvergence(ConstructionError):
    """The eigenvalue sweep failed to reach its tolerance."""


class NotRegular(InputError):
    """The vertex set is not a single full-size orbit."""


class NotSymmetricGeneratingSet(InputError):
    """The generating set is not closed under inverses."""


def smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise InputError(f"{n} has no prime factor")
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


# ---------------------------------------------------------------------------
# closed-form bounds


def degree_bound(n: int, r: int, ell: int | None) -> int:
    """Weight of any nonzero codeword is >= min(r+1, n-ell).

    Every evaluated polynomial has degree at most max(ell, n-(r+1)), so a
    nonzero codeword has at most that many zero coordinates.  With no x^i
    monomials at all (ell is None) the pure g-powers cap the degree at
    n-(r+1) and the bound is r+1.
    """
    if ell is None:
        return r + 1
    return min(r + 1, n - ell)


@dataclass(frozen=True)
class BoundValue:
    real: float
    ceiling: int
    vacuous: bool


def weight_bound(n: int, r: int, theta_order: int, ell: int) -> BoundValue:
    """Spectral weight bound for a codeword whose stabilizer has the given order.

    real value:  n * (1 - t/(2(r+1)) - sqrt(t^2/(4(r+1)^2) + mu/(r+1) * (ell-1)/n))
    with t = theta_order and mu = r+1-t.  The integer ceiling is certified
    with exact rational arithmetic so that a bound landing on an integer is
    not bumped up by float fuzz.  Non-positive bounds are clamped to 1 and
    flagged vacuous (any nonzero codeword has weight >= 1).
    """
    if ell < 1:
        raise InputError(f"largest degree ell = {ell} must be >= 1")
    big_r = r + 1
    if not 1 <= theta_order <= big_r:
        raise InputError(f"stabilizer order {theta_order} outside [1, {big_r}]")
    mu = big_r - theta_order
    a_term = Fraction(n) - Fraction(n * theta_order, 2 * big_r)
    radicand = Fraction(theta_order**2, 4 * big_r * big_r) + Fraction(mu * (ell - 1), big_r * n)
    real = float(a_term) - n * math.sqrt(radicand)

    def value_le(t: int) -> bool:
        # bound <= t  <=>  a_term - t <= n * sqrt(radicand)
        d = a_term - t
        return d <= 0 or d * d <= n * n * radicand

    t = math.ceil(real - 1e-9)
    while not value_le(t):
        t += 1
    while value_le(t - 1):
        t -= 1
    return BoundValue(real=real, ceiling=max(t, 1), vacuous=t < 1)


def agl_bound(n: int, r: int, ell: int, p: int | None = None) -> BoundValue:
    """Worst-case spectral bound over all codewords of one instance.

    The stabilizer of a nontrivial codeword is a proper subgroup, so its
    order is at most (r+1)/p with p the smallest prime factor of r+1, and
    the bound is worst there.
    """
    if p is None:
        p = smallest_prime_factor(r + 1)
    return weight_bound(n, r, (r + 1) // p, ell)


def quantum_singleton_rhs(n: int, delta: int, r: int) -> int:
    """Largest qLRC dimension allowed at distance delta and locality r."""
    if delta < 1:
        raise InputError("distance must be positive")
    b = (n - (delta - 1)) // (r + 1)
    a = n - 2 * (delta - 1) - b
    return a - a // (r + 1)


def singleton_optimal(n: int, kappa: int, delta: int, r: int) -> bool:
    """Sufficient condition for (n, kappa, delta, r) to sit on the bound."""
    if (n + kappa) % 2:
        raise InputError("n + kappa must be even for a CSS-style instance")
    half = (n + kappa) // 2
    rhs = r + 2 + half - math.ceil(Fraction(half, r)) * (r + 1)
    return 2 <= delta <= rhs


# ---------------------------------------------------------------------------
# instance-level parameters


@dataclass(frozen=True)
class QlrcParams:
    """Parameters of the quantum code cut from a dual-containing instance."""

    n: int
    kappa: int
    q: int
    r: int
    ell: int | None
    p: int
    degree_bound: int
    agl_bound_real: float | None
    agl_bound_int: int | None
    agl_vacuous: bool | None
    singleton_rhs_at_agl_bound: int | None
    optimal: bool | None
    delta_exact: int | None = None

    def delta_floor(self) -> int:
        cands = [self.degree_bound]
        if self.agl_bound_int is not None:
            cands.append(self.agl_bound_int)
        return max(cands)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "kappa": self.kappa,
            "q": self.q,
            "r": self.r,
            "ell": self.ell,
            "p": self.p,
            "degree_bound": self.degree_bound,
            "agl_bound_real": self.agl_bound_real,
            "agl_bound_int": self.agl_bound_int,
            "singleton_rhs_at_agl_bound": self.singleton_rhs_at_agl_bound,
            "optimal": self.optimal,
            "delta_exact": self.delta_exact,
        }


def css_params(inst: CodeInstance, delta_exact: int | None = None) -> QlrcParams:
    """[[n, 2k-n]] parameters plus every bound this package can certify."""
    n, r, ell = inst.n, inst.r, inst.ell
    p = smallest_prime_factor(r + 1)
    if inst.eval_set.good.subgroup is not None and ell is not None:
        bv = agl_bound(n, r, ell, p)
        rhs = quantum_singleton_rhs(n, bv.ceiling, r)
        opt = singleton_optimal(n, inst.kappa, bv.ceiling, r)
        agl_real, agl_int, vac = bv.real, bv.ceiling, bv.vacuous
    else:
        agl_real = agl_int = vac = rhs = opt = None
    return QlrcParams(
        n=n,
        kappa=inst.kappa,
        q=inst.field.q,
        r=r,
        ell=ell,
        p=p,
        degree_bound=degree_bound(n, r, ell),
        agl_bound_real=agl_real,
        agl_bound_int=agl_int,
        agl_vacuous=vac,
        singleton_rhs_at_agl_bound=rhs,
        optimal=opt,
        delta_exact=delta_exact,
    )


def sweep_rows(n: int, r: int):
    """(kappa, degree_bound, agl_bound_int) for every admissible dimension."""
    from .construct import exponent_sets  # local to avoid cycle at import time

    if n % (r + 1):
        raise InputError(f"block size {r + 1} does not divide n = {n}")
    p = smallest_prime_factor(r + 1)
    rows = []
    for k in range(n // 2 + 1, n * r // (r + 1) + 1):
        exps = exponent_sets(n, k, r)
        rows.append(
            (2 * k - n, degree_bound(n, r, exps.ell), agl_bound(n, r, exps.ell, p).ceiling)
        )
    return rows


# ---------------------------------------------------------------------------
# exact minimum weight outside the dual span


def _scan_lead(tables, rows, q: int, k: int, n: int, lead: int, one: int) -> int:
    """Stateless worker: minimum weight over codewords whose first nonzero
    message digit sits at `lead` with value 1, skipping dual members.
    Ranges for different `lead` values partition the nonzero codewords up
    to scalar multiples, which preserve both weight and dual membership."""
    add, mul = tables
    scaled = [[[mul[s][x] for x in row] for s in range(q)] for row in rows]
    best = n + 1

    def in_dual(word) -> bool:
        for row in rows:
            acc = 0
            for wi, ri in zip(word, row):
                if wi and ri:
                    acc = add[acc][mul[wi][ri]]
            if acc:
                return False
        return True

    def rec(t: int, word: list[int]):
        nonlocal best
        if t == k:
            w = sum(1 for x in word if x)
            if 0 < w < best and not in_dual(word):
                best = w
            return
        rec(t + 1, word)
        for s in range(1, q):
            srow = scaled[t][s]
            rec(t + 1, [add[a][b] for a, b in zip(word, srow)])

    rec(lead + 1, [mul[one][x] for x in rows[lead]])
    return best


def distance_bruteforce(inst: CodeInstance, cap: int = 1 << 24) -> int:
    """Exact min weight over codewords outside the dual span, by enumeration.

    Walks one representative per projective class (first nonzero message
    digit normalized to 1), so the work is (q^k - 1)/(q - 1) words of n
    table lookups each.  Dual members are skipped via orthogonality against
    every generator row.  The index space is split by leading digit into
    independent ranges; each range is scanned by a stateless worker and the
    local minima are reduced at the end.
    """
    q, k, n = inst.field.q, inst.k, inst.n
    if q**k > cap:
        raise TooLarge(f"q^k = {q}^{k} exceeds the cap {cap}")
    tables = inst.field.tables()
    rows = [[c.value() for c in row] for row in inst.matrix_c]
    one = inst.field.one().value()
    best = min(_scan_lead(tables, rows, q, k, n, lead, one) for lead in range(k))
    if best > n:
        raise ConstructionError("no codeword found outside the dual span")
    return best


# ---------------------------------------------------------------------------
# Schreier graphs and the mixing audit


@dataclass(frozen=True)
class SchreierGraph:
    """Graph on one block: x ~ t(x) for t in the generating set H minus Theta."""

    vertices: tuple[FieldElement, ...]
    adjacency: tuple[tuple[int, ...], ...]
    mu: int
    theta_order: int


def schreier_graph(orbit, subgroup: AglSubgroup, theta: AglSubgroup) -> SchreierGraph:
    """Build the block graph generated by the maps outside the stabilizer.

    The orbit must be a single full-size (free) orbit of the subgroup and
    theta a proper subgroup of it.  The complement generating set is closed
    under inverses, so the graph is undirected; freeness rules out both
    self-loops and repeated edges, and the adjacency matrix is the all-ones
    matrix minus the corresponding stabilizer graph.
    """
    field = subgroup.field
    verts = sorted({field.element(x) for x in orbit}, key=lambda e: e.value())
    if len(verts) != len(subgroup):
        raise NotRegular(f"orbit size {len(verts)} != subgroup order {len(subgroup)}")
    sub_set = set(subgroup.maps)
    theta_set = set(theta.maps)
    if not theta_set < sub_set:
        raise InputError("theta must be a proper subgroup of the acting subgroup")
    gens = [t for t in subgroup if t not in theta_set]
    for t in gens:
        if t.inverse() in theta_set:
            raise NotSymmetricGeneratingSet(f"inverse of {t!r} fell into the stabilizer")
    for x in verts:
        if len({f(x) for f in subgroup}) != len(subgroup):
            raise NotRegular(f"action is not free at {x!r}")

    idx = {x.coeffs: i for i, x in enumerate(verts)}
    size = len(verts)

    def adj_from(maps):
        mat = [[0] * size for _ in range(size)]
        for i, x in enumerate(verts):
            for t in maps:
                y = t(x)
                if y.coeffs not in idx:
                    raise NotRegular("generating set walks out of the orbit")
                mat[i][idx[y.coeffs]] = 1
        return mat

    mat = adj_from(gens)
    stab_mat = adj_from(theta_set)
    for i in range(size):
        for j in range(size):
            if mat[i][j] + stab_mat[i][j] != 1:
                raise ConstructionError("graph plus stabilizer graph is not all-ones")
        if sum(mat[i]) != len(gens):
            raise ConstructionError("graph is not regular of the expected degree")

    return SchreierGraph(
        vertices=tuple(verts),
        adjacency=tuple(tuple(row) for row in mat),
        mu=len(gens),
        theta_order=len(theta_set),
    )


def jacobi_eigenvalues(mat, tol: float = 1e-10, max_sweeps: int = 100) -> list[float]:
    """All eigenvalues of a small dense symmetric matrix, by cyclic Jacobi.

    Sweeps rotate away off-diagonal entries until their Frobenius norm
    drops below tol; raises NoConvergence if max_sweeps is exhausted.
    """
    a = [[float(x) for x in row] for row in mat]
    size = len(a)
    if size == 1:
        return [a[0][0]]
    for _ in range(max_sweeps):
        off = math.sqrt(sum(a[i][j] ** 2 for i in range(size) for j in range(i + 1, size)) * 2.0)
        if off < tol:
            return sorted(a[i][i] for i in range(size))
        for p_ in range(size - 1):
            for q_ in range(p_ + 1, size):
                apq = a[p_][q_]
                if abs(apq) < tol / (size * size):
                    continue
                theta = (a[q_][q_] - a[p_][p_]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app, aqq = a[p_][p_], a[q_][q_]
                for i in range(size):
                    if i == p_ or i == q_:
                        continue
                    aip, aiq = a[i][p_], a[i][q_]
                    a[i][p_] = a[p_][i] = c * aip - s * aiq
                    a[i][q_] = a[q_][i] = s * aip + c * aiq
                a[p_][p_] = c * c * app - 2.0 * s * c * apq + s * s * aqq
                a[q_][q_] = s * s * app + 2.0 * s * c * apq + c * c * aqq
                a[p_][q_] = a[q_][p_] = 0.0
    raise NoConvergence(f"off-diagonal norm still above {tol} after {max_sweeps} sweeps")


def second_eigenvalue(graph: SchreierGraph, tol: float = 1e-10, max_sweeps: int = 100) -> float:
    """Largest |eigenvalue| after removing one copy of the top (degree) one."""
    eig = jacobi_eigenvalues(graph.adjacency, tol=tol, max_sweeps=max_sweeps)
    top = max(eig)
    if abs(top - graph.mu) > 1e-6:
        raise ConstructionError(f"top eigenvalue {top} is not the degree {graph.mu}")
    eig.remove(top)
    return max(abs(e) for e in eig) if eig else 0.0


def expander_mixing_check(graph: SchreierGraph, s_idx, t_idx, lam: float | None = None) -> bool:
    """|e(S,T) - d|S||T|/n| <= lam*sqrt(|S||T|(1-|S|/n)(1-|T|/n)), with slack.

    e(S, T) counts ordered pairs (x, y) with x in S, y in T, x ~ y, so an
    edge inside S-intersect-T contributes twice, matching the spectral
    proof's convention.  A 1e-6 additive slack absorbs eigensolver error.
    """
    if lam is None:
        lam = second_eigenvalue(graph)
    size = len(graph.vertices)
    s_idx, t_idx = list(s_idx), list(t_idx)
    e = sum(graph.adjacency[i][j] for i in s_idx for j in t_idx)
    ns, nt = len(s_idx), len(t_idx)
    lhs = abs(e - graph.mu * ns * nt / size)
    rhs = lam * math.sqrt(ns * nt * (1 - ns / size) * (1 - nt / size)) + 1e-6
    return lhs <= rhs


# ---------------------------------------------------------------------------
# per-codeword audit of the spectral machinery


@dataclass(frozen=True)
class AuditTrial:
    weight: int
    theta_order: int
    bound_real: float
    bound_int: int
    gamma_degree: int
    g_degree: int
    g_degree_cap: int
    pair_count: int
    root_count: int


@dataclass(frozen=True)
class AuditReport:
    trials: tuple[AuditTrial, ...]
    min_weight: int
    failures: tuple[str, ...]
    monotone_in_theta: bool

    @property
    def ok(self) -> bool:
        return not self.failures and self.monotone_in_theta


def weight_bound_audit(inst: CodeInstance, trials: int = 200, seed: int | None = None) -> AuditReport:
    """Sample codewords outside the dual span and audit the spectral bound.

    For each sample: split off the non-block-constant part gamma, compute
    its exact stabilizer, check the weight against the bound at the actual
    stabilizer order, then build the associated quotient-product polynomial
    explicitly and confirm its degree cap and that its root count in the
    evaluation set dominates the count of same-orbit zero pairs.
    """
    es = inst.eval_set
    sub = es.good.subgroup
    if sub is None:
        raise NotAglProvenance("instance carries no acting subgroup")
    if inst.ell is None:
        raise InputError("audit needs a nonempty x^i monomial part")
    fld, n, r, ell = inst.field, inst.n, inst.r, inst.ell
    rng = Xorshift64Star(inst.seed if seed is None else seed)
    p = smallest_prime_factor(r + 1)

    thetas = list(range(1, (r + 1) // p + 1))
    vals = [weight_bound(n, r, t, ell).real for t in thetas]
    monotone = all(a >= b - 1e-12 for a, b in zip(vals, vals[1:]))

    s_pairs = inst.exps.s_pairs
    s1set = set(inst.exps.s1)
    gpows = [Polynomial.one(fld)]
    for _ in range(max(j for _, j in s_pairs)):
        gpows.append(gpows[-1] * es.good.g)
    monos = [gpows[j].shift(i) for i, j in s_pairs]
    x_poly = Polynomial.x(fld)
    rows = [list(row) for row in inst.matrix_c]

    def in_dual(word) -> bool:
        return all(linalg.dot(word, row).is_zero() for row in rows)

    out: list[AuditTrial] = []
    failures: list[str] = []
    for trial in range(trials):
        while True:
            coeffs = [rng.element(fld) for _ in s_pairs]
            word = [fld.zero()] * n
            for c, row in zip(coeffs, rows):
                if not c.is_zero():
                    word = [acc + c * rc for acc, rc in zip(word, row)]
            if any(not w.is_zero() for w in word) and not in_dual(word):
                break
        gamma = Polynomial.zero(fld)
        for c, pair, mono in zip(coeffs, s_pairs, monos):
            if pair in s1set and not c.is_zero():
                gamma = gamma + mono * Polynomial.constant(c)
        if gamma.is_zero():
            failures.append(f"trial {trial}: sampled word outside dual has no x^i part")
            continue
        theta = theta_subgroup(sub, gamma)
        t_ord = len(theta)
        mu = len(sub) - t_ord
        bv = weight_bound(n, r, t_ord, ell)
        weight = sum(1 for w in word if not w.is_zero())
        if weight < bv.ceiling:
            failures.append(
                f"trial {trial}: weight {weight} below bound {bv.ceiling} at stabilizer {t_ord}"
            )

        theta_set = set(theta.maps)
        bigg = Polynomial.one(fld)
        for t in sub:
            if t in theta_set:
                continue
            tp = t.as_polynomial()
            num = gamma.compose(tp) - gamma
            den = tp - x_poly
            quo, rem = divmod(num, den)
            if not rem.is_zero():
                failures.append(f"trial {trial}: difference quotient is not a polynomial")
                quo = num  # keep going with something sane
            bigg = bigg * quo
        cap = mu * (ell - 1)
        gdeg = int(bigg.degree) if not bigg.is_zero() else -1
        if bigg.is_zero() or gdeg > min(mu * (int(gamma.degree) - 1), cap):
            failures.append(f"trial {trial}: quotient product degree {gdeg} exceeds its cap")

        zero_idx = [i for i, w in enumerate(word) if w.is_zero()]
        zero_set = {es.points[i].coeffs for i in zero_idx}
        pair_count = 0
        for i in zero_idx:
            x = es.points[i]
            for t in sub:
                if t in theta_set:
                    continue
                if t(x).coeffs in zero_set:
                    pair_count += 1
        root_count = 0
        gg = bigg
        for x in es.points:
            while not gg.is_zero() and gg(x).is_zero():
                gg = gg // Polynomial(fld, (-x, fld.one()))
                root_count += 1
        if not pair_count <= root_count <= max(gdeg, 0):
            failures.append(
                f"trial {trial}: zero pairs {pair_count} vs roots {root_count} vs degree {gdeg}"
            )
        out.append(
            AuditTrial(
                weight=weight,
                theta_order=t_ord,
                bound_real=bv.real,
                bound_int=bv.ceiling,
                gamma_degree=int(gamma.degree),
                g_degree=gdeg,
                g_degree_cap=cap,
                pair_count=pair_count,
                root_count=root_count,
            )
        )
    return AuditReport(
        trials=tuple(out),
        min_weight=min((t.weight for t in out), default=0),
        failures=tuple(failures),
        monotone_in_theta=monotone,
    )
