"""Decomposition engine: Sylvester-form search and validation, exact
coefficient solving, length bounds, badge searches, signature reports,
classification of quartics and the special sextic families, and sweeps.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .errors import (
    DegenerateRepresentationError,
    NotIncomparableError,
    OddDegreeError,
    SylvesterRejectionError,
    ZeroFormError,
)
from .forms import (
    Badge,
    BinaryForm,
    PowerSumRep,
    ProjLinearForm,
    expand_exact,
    minimal_badges,
    mirror,
)
from .quadforms import (
    CONE_NEG,
    CONE_NONE,
    CONE_POS,
    Inertia,
    catalecticant,
    charpoly_general,
    det_poly_matrix,
    hankel,
    inertia,
    kernel_basis,
)
from .realroots import (
    RealAlgebraic,
    Scalar,
    UniPoly,
    deflate_rational_roots,
    scalar_cmp,
    scalar_sign,
    simplest_between,
)

# Stable rule identifiers attached to report conclusions (documented in README).
TAG_SPAN = "thm-2.1"
TAG_QUADRATIC = "thm-2.2"
TAG_PSD = "thm-2.9.1"
TAG_CONE_WIDTH = "thm-2.9.2"
TAG_LOWER = "cor-2.10.1"
TAG_CONE_UNIQUE = "cor-2.10.2"
TAG_LENGTH_RANK = "cor-2.10.3"
TAG_POSSIBLE = "thm-3.1.1"
TAG_SPLITS = "thm-3.1.2"
TAG_INCOMPARABLE = "thm-3.2"
TAG_QUARTIC_UNIQUE = "thm-4.1"
TAG_QUARTIC = "thm-4.2"
TAG_SEXTIC_PAIR = "cor-4.3"
TAG_SEXTIC_FAMILY = "thm-4.4"
TAG_MIRROR = "lem-4.6"

STATUS_PROVEN = "proven"
STATUS_OBSERVED = "observed"

CERT_EXACT = "exact"
CERT_INTERVALS = "certified-intervals"


@dataclass(frozen=True)
class SearchConfig:
    """Budgets for the search and refinement layers; all defaults CLI-overridable."""

    precision_steps: int = 256
    search_budget: int = 10_000
    denom_bound: int = 12
    seed: int = 0


@dataclass(frozen=True)
class ProjRootSet:
    """Projective roots of a Sylvester form: finite values plus infinity."""

    finite: Tuple[Scalar, ...]
    infinity_mult: int


@dataclass(frozen=True)
class SylvesterForm:
    """Degree-r form with coefficient vector in the kernel of the r-Hankel
    block, squarefree with all r projective roots real and distinct."""

    r: int
    coeffs: Tuple[Fraction, ...]
    roots: ProjRootSet

    def dehomogenized(self) -> UniPoly:
        return UniPoly([self.coeffs[self.r - i] for i in range(self.r + 1)])

    def text(self) -> str:
        pieces = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            i = self.r - j
            factors = []
            if i > 0:
                factors.append("x" if i == 1 else f"x^{i}")
            if j > 0:
                factors.append("y" if j == 1 else f"y^{j}")
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            pieces.append(("-" if c < 0 else "+", "*".join(factors)))
        if not pieces:
            return "0"
        sign0, head = pieces[0]
        out = ("-" if sign0 == "-" else "") + head
        for sign, mono in pieces[1:]:
            out += f" {sign} {mono}"
        return out


@dataclass(frozen=True)
class DecompResult:
    rep: PowerSumRep
    badge: Badge
    certification: str  # CERT_EXACT or CERT_INTERVALS
    witness: SylvesterForm


@dataclass(frozen=True)
class LengthResult:
    """lower: every length <= lower is proven impossible; upper: achieved."""

    lower: int
    upper: int
    conclusive: bool
    witness: Optional[DecompResult]


# ---------------------------------------------------------------------------
# Sylvester candidates and validation
# ---------------------------------------------------------------------------


def sylvester_candidates(p: BinaryForm, r: int) -> List[Tuple[Fraction, ...]]:
    """Kernel basis of the r-Hankel block; r = d+1 is unconstrained by
    convention and returns the standard basis."""
    d = p.degree
    if r == d + 1:
        basis = []
        for i in range(d + 2):
            vec = [Fraction(0)] * (d + 2)
            vec[i] = Fraction(1)
            basis.append(tuple(vec))
        return basis
    return kernel_basis(hankel(p, r))


def validate_sylvester(coeffs: Sequence, r: int) -> SylvesterForm:
    """Accept iff squarefree with exactly r distinct real projective roots."""
    cs = [Fraction(c) for c in coeffs]
    if len(cs) != r + 1:
        raise SylvesterRejectionError(
            SylvesterRejectionError.ZERO, f"need {r + 1} coefficients"
        )
    if all(c == 0 for c in cs):
        raise SylvesterRejectionError(SylvesterRejectionError.ZERO, "zero vector")
    cs = _primitive(cs)
    ell = UniPoly([cs[r - i] for i in range(r + 1)])
    inf_mult = r - ell.degree
    if inf_mult >= 2:
        raise SylvesterRejectionError(
            SylvesterRejectionError.REPEATED_INFINITY,
            f"y^{inf_mult} divides the candidate",
        )
    finite: List[Scalar] = []
    if ell.degree > 0:
        if ell.gcd(ell.derivative()).degree > 0:
            raise SylvesterRejectionError(
                SylvesterRejectionError.NOT_SQUAREFREE, "repeated factor"
            )
        if ell.count_real_roots() < ell.degree:
            raise SylvesterRejectionError(
                SylvesterRejectionError.COMPLEX_ROOTS, "not all roots are real"
            )
        rats, cof = deflate_rational_roots(ell)
        finite.extend(rats)
        finite.extend(RealAlgebraic.isolate(cof))
        finite.sort(key=functools.cmp_to_key(scalar_cmp))
    return SylvesterForm(r, tuple(cs), ProjRootSet(tuple(finite), inf_mult))


def _primitive(vec) -> List[Fraction]:
    from .quadforms import _primitive_vector

    return list(_primitive_vector([Fraction(v) for v in vec]))


# ---------------------------------------------------------------------------
# Exact coefficient solving
# ---------------------------------------------------------------------------


def solve_coefficients(
    p: BinaryForm, sylv: SylvesterForm, precision_steps: int = 256
) -> DecompResult:
    """Solve p = sum_k lambda_k (alpha_k x + beta_k y)^d for the roots of a
    validated Sylvester form.

    Rational roots give exact rational coefficients; irrational roots give
    real algebraic coefficients with exactly determined signs.  Terms whose
    coefficient is exactly zero are dropped, keeping the result honest.
    The solution is verified exactly against every coefficient of p.
    """
    d = p.degree
    ell = sylv.dehomogenized()
    m = ell.degree
    has_inf = sylv.roots.infinity_mult > 0
    a = p.coeffs

    if m > d + (0 if has_inf else 1):
        raise ZeroFormError("candidate degree exceeds what the form supports")

    if m <= 0:
        # h is proportional to y: p must be a multiple of x^d
        lam_inf = a[0]
        if any(a[j] != 0 for j in range(1, d + 1)):
            raise ZeroFormError("candidate is not a Sylvester form for p")
        terms = []
        if lam_inf != 0:
            terms.append((lam_inf, ProjLinearForm(Fraction(1), Fraction(0))))
        rep = PowerSumRep(d, tuple(terms))
        return DecompResult(rep, rep.badge(), CERT_EXACT, sylv)

    e = ell.coeffs  # ascending, e[m] = leading
    moments = [a[d - j] for j in range(m)]
    n_coeffs = [
        sum(moments[j] * e[u + 1 + j] for j in range(m - u)) for u in range(m)
    ]
    npoly = UniPoly(n_coeffs)
    ellp = ell.derivative()

    def power_sum(i: int) -> Fraction:
        """sum_k lambda_k gamma_k^i, exactly, via the trace form."""
        b = (npoly.shift_up(i)).rem(ell)
        coef = b.coeffs[m - 1] if b.degree == m - 1 else Fraction(0)
        return coef / e[m]

    lam_inf = (a[0] - power_sum(d)) if has_inf else Fraction(0)
    for j in range(d + 1):
        want = a[j] - (lam_inf if j == 0 and has_inf else Fraction(0))
        if power_sum(d - j) != want:
            raise ZeroFormError("candidate is not a Sylvester form for p")

    terms: List[Tuple[Scalar, ProjLinearForm]] = []
    alg_present = False

    rational_roots = [g for g in sylv.roots.finite if isinstance(g, Fraction)]
    algebraic_roots = [g for g in sylv.roots.finite if isinstance(g, RealAlgebraic)]

    for rho in rational_roots:
        lam = npoly(rho) / ellp(rho)
        if lam == 0:
            continue
        if rho == 0:
            terms.append((lam, ProjLinearForm(Fraction(0), Fraction(1))))
        else:
            terms.append((lam * rho**d, ProjLinearForm(Fraction(1), 1 / rho)))

    if algebraic_roots:
        alg_present = True
        cof = algebraic_roots[0].defining
        cofm = cof.monic()
        inv = _mod_inverse(ellp.rem(cofm), cofm)
        lam_poly = (npoly.rem(cofm) * inv).rem(cofm)
        scaled_poly = (lam_poly.shift_up(d)).rem(cofm)  # lambda * gamma^d
        zero_part = npoly.gcd(cofm)
        chi = _charpoly_of_mod(scaled_poly, cofm).squarefree_part()
        for gamma in algebraic_roots:
            if zero_part.degree > 0 and zero_part.count_real_roots(gamma.lo, gamma.hi):
                continue
            lam_scaled = _isolate_value(scaled_poly, gamma, chi)
            if isinstance(lam_scaled, RealAlgebraic):
                while lam_scaled.lo <= 0 <= lam_scaled.hi:
                    lam_scaled = lam_scaled.refined()
            beta = gamma.reciprocal()
            terms.append((lam_scaled, ProjLinearForm(Fraction(1), beta)))

    if has_inf and lam_inf != 0:
        terms.append((lam_inf, ProjLinearForm(Fraction(1), Fraction(0))))

    terms.sort(key=_term_sort_key)
    rep = PowerSumRep(d, tuple(terms))
    cert = CERT_INTERVALS if alg_present else CERT_EXACT
    if cert == CERT_EXACT:
        assert expand_exact(rep).coeffs == p.coeffs, "exact solve must re-expand"
    return DecompResult(rep, rep.badge(), cert, sylv)


def _term_sort_key(term):
    lam, form = term
    if form.is_y_axis:
        return (1, Fraction(0), 0.0)
    beta = form.beta
    if isinstance(beta, Fraction):
        return (0, -beta, 0.0)
    return (0, Fraction(0), -float((beta.lo + beta.hi) / 2))


def _mod_inverse(a: UniPoly, mod: UniPoly) -> UniPoly:
    """Inverse of a modulo mod over Q[t]; requires gcd(a, mod) = 1."""
    r0, r1 = mod, a.rem(mod)
    u0, u1 = UniPoly(), UniPoly([1])
    while not r1.is_zero:
        q, r2 = r0.divmod(r1)
        r0, r1 = r1, r2
        u0, u1 = u1, u0 - q * u1
    if r0.degree != 0:
        raise ZeroFormError("polynomial is not invertible modulo the cofactor")
    return (u0 * (1 / r0.coeffs[0])).rem(mod)


def _charpoly_of_mod(g: UniPoly, modulus: UniPoly) -> UniPoly:
    """Characteristic polynomial of multiplication by g in Q[t]/(modulus)."""
    n = modulus.degree
    comp = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        comp[i][i - 1] = Fraction(1)
    for i in range(n):
        comp[i][n - 1] -= modulus.coeffs[i]
    acc = [[Fraction(0)] * n for _ in range(n)]
    for c in reversed(g.coeffs or (Fraction(0),)):
        acc = _mat_mul(acc, comp)
        for i in range(n):
            acc[i][i] += c
    return charpoly_general(acc)


def _mat_mul(a, b):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)
    ]


def _isolate_value(g: UniPoly, gamma: RealAlgebraic, defining: UniPoly) -> Scalar:
    """The number g(gamma) as a RealAlgebraic rooted in `defining`
    (or a Fraction when the enclosure pins a rational root exactly)."""
    cur = gamma
    while True:
        iv = g.eval_interval(cur.interval())
        for endpoint in (iv.lo, iv.hi):
            if defining(endpoint) == 0:
                diff = g - UniPoly([endpoint])
                if cur.sign_of_poly(diff) == 0:
                    return endpoint
        if (
            defining(iv.lo) != 0
            and defining(iv.hi) != 0
            and defining.count_real_roots(iv.lo, iv.hi) == 1
        ):
            return RealAlgebraic(defining.primitive_int(), iv.lo, iv.hi)
        cur = cur.refined()


# ---------------------------------------------------------------------------
# Fallback spanning decomposition
# ---------------------------------------------------------------------------


def fallback_sylvester(d: int) -> SylvesterForm:
    """y * prod_{k=1..d} (k x - y): distinct nodes covering every form."""
    coeffs = [Fraction(0), Fraction(1)]  # the factor y
    for k in range(1, d + 1):
        coeffs = _conv(coeffs, [Fraction(k), Fraction(-1)])
    return validate_sylvester(coeffs, d + 1)


def vandermonde_rep(p: BinaryForm, precision_steps: int = 256) -> DecompResult:
    """Always-available decomposition through the d+1 pairwise distinct
    powers x^d, (x + y)^d, ..., (x + d y)^d."""
    return solve_coefficients(p, fallback_sylvester(p.degree), precision_steps)


def _conv(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, va in enumerate(a):
        for j, vb in enumerate(b):
            out[i + j] += va * vb
    return out


# ---------------------------------------------------------------------------
# Complete decision for two-dimensional kernels (pencils)
# ---------------------------------------------------------------------------


def decide_pencil(
    b1: Sequence[Fraction], b2: Sequence[Fraction], r: int
) -> List[SylvesterForm]:
    """All validity regions of the pencil span{b1, b2} at degree r.

    Between real roots of the discriminant-style resultant and of the leading
    coefficient, validity is constant, so finitely many exact rational samples
    decide the whole pencil.  An empty result proves no valid form exists.
    """
    wits: List[SylvesterForm] = []
    seen = set()

    def try_vec(vec):
        vec = [Fraction(v) for v in vec]
        if all(v == 0 for v in vec):
            return
        key = tuple(_primitive(vec))
        if key in seen:
            return
        seen.add(key)
        try:
            wits.append(validate_sylvester(vec, r))
        except SylvesterRejectionError:
            pass

    cs = [UniPoly([Fraction(b1[j]), Fraction(b2[j])]) for j in range(r + 1)]
    tcoeffs = [cs[r - i] for i in range(r + 1)]
    while tcoeffs and tcoeffs[-1].is_zero:
        tcoeffs.pop()
    if tcoeffs and r - (len(tcoeffs) - 1) <= 1:
        deg_t = len(tcoeffs) - 1
        lead = tcoeffs[-1]
        specials = []
        if lead.degree >= 1:
            specials.append(-lead.coeffs[0] / lead.coeffs[1])
        samples: List[Fraction] = []
        if deg_t >= 1:
            dcoeffs = [tcoeffs[i + 1] * (i + 1) for i in range(deg_t)]
            res = _resultant_t(tcoeffs, dcoeffs)
        else:
            res = UniPoly([1])
        if not res.is_zero:
            g = res * lead if lead.degree >= 1 else res
            if g.degree >= 1:
                roots = RealAlgebraic.isolate(g)
            else:
                roots = []
            if not roots:
                samples = [Fraction(0)]
            else:
                samples.append(Fraction(roots[0].lo.numerator // roots[0].lo.denominator))
                for r1, r2 in zip(roots, roots[1:]):
                    while r1.hi >= r2.lo:
                        r1, r2 = r1.refined(), r2.refined()
                    samples.append(simplest_between(r1.hi, r2.lo))
                last = roots[-1].hi
                samples.append(Fraction(last.numerator // last.denominator + 1))
        for u in itertools.chain(samples, specials):
            try_vec([Fraction(b1[j]) + u * Fraction(b2[j]) for j in range(r + 1)])
    try_vec(list(b2))
    return wits


def _resultant_t(f: List[UniPoly], g: List[UniPoly]) -> UniPoly:
    """Resultant in t of two polynomials whose t-coefficients live in Q[u]."""
    n, m = len(f) - 1, len(g) - 1
    if n < 0 or m < 0:
        return UniPoly()
    if n == 0:
        return _upoly_pow(f[0], m)
    if m == 0:
        return _upoly_pow(g[0], n)
    size = n + m
    rows = []
    fd = list(reversed(f))  # descending
    gd = list(reversed(g))
    for i in range(m):
        rows.append(
            [UniPoly()] * i + fd + [UniPoly()] * (size - i - len(fd))
        )
    for i in range(n):
        rows.append(
            [UniPoly()] * i + gd + [UniPoly()] * (size - i - len(gd))
        )
    return det_poly_matrix(rows)


def _upoly_pow(p: UniPoly, k: int) -> UniPoly:
    out = UniPoly([1])
    for _ in range(k):
        out = out * p
    return out


# ---------------------------------------------------------------------------
# Structured and randomized searches for kernels of dimension >= 3
# ---------------------------------------------------------------------------


def _u_grid(denom_bound: int, mag: int = 6):
    """Rationals ordered by denominator then magnitude, 0 excluded last."""
    seen = set()
    for den in range(1, max(denom_bound, 1) + 1):
        for num in range(0, mag * den + 1):
            for s in (1, -1):
                q = Fraction(s * num, den)
                if q not in seen:
                    seen.add(q)
                    yield q


def _structured_candidates(p: BinaryForm, r: int, config: SearchConfig):
    """Products of quadratics x^2 + (2+u) x y + y^2 (times one linear factor
    when r is odd), with the final parameter solved exactly from the kernel."""
    if r < 2 or r > p.degree:
        return
    mat = hankel(p, r)
    nquads = r // 2
    if nquads < 1:
        return
    linears = [None] if r % 2 == 0 else [
        [Fraction(1), Fraction(1)],
        [Fraction(1), Fraction(-1)],
        [Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(1)],
    ]
    base = [Fraction(1), Fraction(2), Fraction(1)]
    mid = [Fraction(0), Fraction(1), Fraction(0)]
    for lin in linears:
        for u in itertools.islice(_u_grid(config.denom_bound), 200):
            fixed = [Fraction(1)]
            if lin is not None:
                fixed = _conv(fixed, lin)
            quad_u = [Fraction(1), Fraction(2) + u, Fraction(1)]
            for _ in range(nquads - 1):
                fixed = _conv(fixed, quad_u)
            va = _conv(fixed, base)
            vb = _conv(fixed, mid)
            ra = mat.apply(va)
            rb = mat.apply(vb)
            pivot = next((i for i, v in enumerate(rb) if v != 0), None)
            if pivot is None:
                if all(v == 0 for v in ra):
                    for v in (Fraction(0), Fraction(1), Fraction(-3)):
                        yield [va[i] + v * vb[i] for i in range(len(va))]
                continue
            v = -ra[pivot] / rb[pivot]
            if all(ra[i] + v * rb[i] == 0 for i in range(len(ra))):
                yield [va[i] + v * vb[i] for i in range(len(va))]


def _combination_candidates(basis, config: SearchConfig, rng: random.Random):
    """Small integer combinations by height, then seeded random rationals."""
    dim = len(basis)
    ncols = len(basis[0])
    seen = set()

    def emit(weights):
        vec = [
            sum(Fraction(w) * basis[k][j] for k, w in enumerate(weights))
            for j in range(ncols)
        ]
        if all(v == 0 for v in vec):
            return None
        key = tuple(_primitive(vec))
        if key in seen:
            return None
        seen.add(key)
        return vec

    for height in range(1, 4):
        for weights in itertools.product(range(-height, height + 1), repeat=dim):
            if max(abs(w) for w in weights) != height:
                continue
            vec = emit(weights)
            if vec is not None:
                yield vec
    while True:
        weights = [
            Fraction(rng.randint(-8, 8), rng.randint(1, config.denom_bound))
            for _ in range(dim)
        ]
        vec = emit(weights)
        if vec is not None:
            yield vec


def _search_high_dim(
    p: BinaryForm,
    r: int,
    basis,
    config: SearchConfig,
    rng: random.Random,
    collect_all: bool = False,
):
    """Budgeted search for valid Sylvester forms in a kernel of dim >= 3."""
    found: List[SylvesterForm] = []
    tried = 0
    for vec in itertools.chain(
        _structured_candidates(p, r, config),
        _combination_candidates(basis, config, rng),
    ):
        if tried >= config.search_budget:
            return found, True
        tried += 1
        try:
            sylv = validate_sylvester(vec, r)
        except SylvesterRejectionError:
            continue
        found.append(sylv)
        if not collect_all:
            return found, False
        if len(found) >= 12:
            return found, False
    return found, True


# ---------------------------------------------------------------------------
# Length computation
# ---------------------------------------------------------------------------


def real_length(p: BinaryForm, config: SearchConfig = SearchConfig()) -> LengthResult:
    """Iterate r = 1, 2, ...; kernel dimensions 0 and 1 and pencils are decided
    conclusively, larger kernels are searched within the budget.  Always
    returns an achieved upper bound (the spanning fallback at r = d+1)."""
    if p.is_zero:
        raise ZeroFormError("length of the zero form is undefined")
    d = p.degree
    rng = random.Random(config.seed)
    excluded: Dict[int, bool] = {}
    result: Optional[DecompResult] = None
    for r in range(1, d + 1):
        basis = kernel_basis(hankel(p, r))
        dim = len(basis)
        if dim == 0:
            excluded[r] = True
            continue
        if dim == 1:
            try:
                sylv = validate_sylvester(basis[0], r)
            except SylvesterRejectionError:
                excluded[r] = True
                continue
            result = solve_coefficients(p, sylv, config.precision_steps)
            break
        if dim == 2:
            wits = decide_pencil(basis[0], basis[1], r)
            if wits:
                result = solve_coefficients(p, wits[0], config.precision_steps)
                break
            excluded[r] = True
            continue
        found, exhausted = _search_high_dim(p, r, basis, config, rng)
        if found:
            result = solve_coefficients(p, found[0], config.precision_steps)
            break
        excluded[r] = False
    if result is None:
        result = vandermonde_rep(p, config.precision_steps)
    upper = result.rep.length
    conclusive = all(excluded.get(rr) is True for rr in range(1, upper))
    if conclusive:
        lower = upper - 1
    else:
        lower = 0
        while excluded.get(lower + 1) is True:
            lower += 1
        lower = min(lower, upper - 1)
    return LengthResult(lower, upper, conclusive, result)


# ---------------------------------------------------------------------------
# Badge search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BadgeSearchResult:
    badges: frozenset
    decomps: Tuple[DecompResult, ...]
    exhausted: bool


def badge_search(
    p: BinaryForm, r: int, config: SearchConfig = SearchConfig()
) -> BadgeSearchResult:
    """Observed badges from validated Sylvester forms at degree r."""
    if p.is_zero:
        raise ZeroFormError("badge search needs a nonzero form")
    d = p.degree
    rng = random.Random(config.seed)
    wits: List[SylvesterForm] = []
    exhausted = False
    if r == d + 1:
        wits.append(fallback_sylvester(d))
    else:
        basis = kernel_basis(hankel(p, r))
        dim = len(basis)
        if dim == 1:
            try:
                wits.append(validate_sylvester(basis[0], r))
            except SylvesterRejectionError:
                pass
        elif dim == 2:
            tried = 0
            for vec in _structured_candidates(p, r, config):
                if tried >= config.search_budget:
                    break
                tried += 1
                try:
                    wits.append(validate_sylvester(vec, r))
                    break
                except SylvesterRejectionError:
                    continue
            wits.extend(decide_pencil(basis[0], basis[1], r))
        elif dim >= 3:
            found, exhausted = _search_high_dim(
                p, r, basis, config, rng, collect_all=True
            )
            wits.extend(found)
    badges = set()
    decomps = []
    odd_symmetric = mirror(p) == -p
    seen = set()
    for sylv in wits:
        if sylv.coeffs in seen:
            continue
        seen.add(sylv.coeffs)
        dec = solve_coefficients(p, sylv, config.precision_steps)
        decomps.append(dec)
        badges.add(dec.badge)
        if odd_symmetric:
            badges.add(dec.badge.swapped())
    return BadgeSearchResult(frozenset(badges), tuple(decomps), exhausted)


# ---------------------------------------------------------------------------
# Certificates and bounds
# ---------------------------------------------------------------------------


def real_linear_factor_count(p: BinaryForm) -> int:
    """Number of real linear factors of p, counting multiplicity."""
    if p.is_zero:
        raise ZeroFormError("zero form")
    k = next(j for j in range(p.degree + 1) if p.coeffs[j] != 0)
    q = p.dehomogenized()
    total = k
    if q.degree > 0:
        for factor, mult in q.multiplicity_profile():
            total += mult * factor.count_real_roots()
    return total


def root_profile(p: BinaryForm):
    """(y-multiplicity, [(squarefree factor, multiplicity, real root count)])."""
    if p.is_zero:
        raise ZeroFormError("zero form")
    k = next(j for j in range(p.degree + 1) if p.coeffs[j] != 0)
    q = p.dehomogenized()
    profile = []
    if q.degree > 0:
        for factor, mult in q.multiplicity_profile():
            profile.append((factor, mult, factor.count_real_roots()))
    return k, profile


def splits_over_reals(p: BinaryForm) -> bool:
    """True iff p is a product of deg(p) real linear forms."""
    return real_linear_factor_count(p) == p.degree


def is_power_of_linear(p: BinaryForm) -> bool:
    """True iff p = c * (linear form)^d."""
    k, profile = root_profile(p)
    if k == p.degree:
        return True
    if k > 0:
        return False
    return len(profile) == 1 and profile[0][0].degree == 1 and profile[0][1] == p.degree


def sign_change_certificate(
    rep: PowerSumRep, expansion: Optional[BinaryForm] = None
) -> Tuple[int, int, bool]:
    """(tau, sigma, tau <= sigma): real linear factors of the expansion vs
    sign changes of the angularly sorted, cyclically wrapped coefficients."""
    if rep.length < 2:
        raise DegenerateRepresentationError("need at least two terms")
    if not rep.is_honest():
        raise DegenerateRepresentationError("representation is not honest")
    if expansion is None:
        expansion = expand_exact(rep)
    if expansion.is_zero:
        raise DegenerateRepresentationError("expansion vanishes identically")
    ordered = sorted(
        rep.terms, key=functools.cmp_to_key(lambda s, t: s[1].slope_cmp(t[1]))
    )
    signs = [scalar_sign(lam) for lam, _ in ordered]
    if any(s == 0 for s in signs):
        raise DegenerateRepresentationError("zero coefficient in representation")
    wrap = signs[0] * (1 if rep.degree % 2 == 0 else -1)
    seq = signs + [wrap]
    sigma = sum(1 for a, b in zip(seq, seq[1:]) if a * b < 0)
    tau = real_linear_factor_count(expansion)
    return tau, sigma, tau <= sigma


def signature_lower_bound(p: BinaryForm) -> Badge:
    """Componentwise max of the catalecticant inertia pair and, for split
    forms other than powers of a single linear form, (s, s)."""
    if p.is_zero:
        raise ZeroFormError("zero form")
    if p.degree % 2 != 0:
        raise OddDegreeError("even degree required")
    inert = inertia(catalecticant(p))
    pos, neg = inert.pos, inert.neg
    s = p.degree // 2
    if splits_over_reals(p) and not is_power_of_linear(p):
        pos, neg = max(pos, s), max(neg, s)
    return Badge(pos, neg)


def possible_signatures(s: int) -> frozenset:
    """All badges that can be signatures in degree 2s."""
    allowed = {Badge(s + 1, 0), Badge(0, s + 1)}
    allowed.update(Badge(i, j) for i in range(s + 1) for j in range(s + 1))
    return frozenset(allowed)


def incomparable_constraints_ok(b1: Badge, b2: Badge, s: int) -> bool:
    """Necessary conditions for two incomparable signatures in degree 2s."""
    if b1.precedes(b2) or b2.precedes(b1):
        raise NotIncomparableError(f"{b1} and {b2} are comparable")
    if b1.pos < b2.pos:
        b1, b2 = b2, b1
    a, b = b1.pos, b1.neg
    c, d = b2.pos, b2.neg
    return (
        a + d >= s + 3
        and b + c >= s + 1
        and max(a + b, c + d) >= s + 2
        and min(a, b, c, d) >= 1
    )


# ---------------------------------------------------------------------------
# Signature reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SignatureReport:
    degree: int
    inertia: Inertia
    cone: str
    splits: bool
    length_lower: int
    length_upper: int
    length_conclusive: bool
    signatures: Tuple[Tuple[Badge, str], ...]
    set_complete: bool
    lower_bound_badge: Badge
    provenance: Tuple[str, ...]
    witness: Optional[DecompResult] = None

    @property
    def conclusive(self) -> bool:
        return self.set_complete

    def signature_set(self) -> frozenset:
        return frozenset(b for b, _ in self.signatures)


def _sorted_signatures(badges, status):
    return tuple((b, status) for b in sorted(badges, key=Badge.key))


def _check_possible(badges, s):
    allowed = possible_signatures(s)
    for b in badges:
        assert b in allowed, f"signature {b} outside the admissible set"


def signature_report(
    p: BinaryForm, config: SearchConfig = SearchConfig()
) -> SignatureReport:
    """Decision tree: quadratic inertia, cone membership, splitting, the
    quartic classification, then length-based rules, with searched badges and
    exact lower bounds as the inconclusive fallback."""
    if p.is_zero:
        raise ZeroFormError("signature report needs a nonzero form")
    if p.degree % 2 != 0:
        raise OddDegreeError("signature report needs an even-degree form")
    d = p.degree
    s = d // 2
    h = catalecticant(p)
    inert = inertia(h)
    rank = inert.rank
    psd = inert.neg == 0
    nsd = inert.pos == 0
    cone = CONE_POS if psd else (CONE_NEG if nsd else CONE_NONE)
    splits = splits_over_reals(p)
    lower_bound = signature_lower_bound(p)

    def report(sigs, status, complete, tags, ll, lu, lc, witness=None):
        badges = set(sigs)
        if status == STATUS_PROVEN:
            _check_possible(badges, s)
        return SignatureReport(
            degree=d,
            inertia=inert,
            cone=cone,
            splits=splits,
            length_lower=ll,
            length_upper=lu,
            length_conclusive=lc,
            signatures=_sorted_signatures(badges, status),
            set_complete=complete,
            lower_bound_badge=lower_bound,
            provenance=tuple(tags),
            witness=witness,
        )

    if d == 2:
        return report(
            {Badge(inert.pos, inert.neg)},
            STATUS_PROVEN,
            True,
            [TAG_QUADRATIC],
            rank - 1,
            rank,
            True,
        )
    if psd:
        return report(
            {Badge(rank, 0)},
            STATUS_PROVEN,
            True,
            [TAG_PSD, TAG_CONE_UNIQUE],
            rank - 1,
            rank,
            True,
        )
    if nsd:
        return report(
            {Badge(0, rank)},
            STATUS_PROVEN,
            True,
            [TAG_PSD, TAG_CONE_UNIQUE],
            rank - 1,
            rank,
            True,
        )
    if splits and not is_power_of_linear(p):
        return report(
            {Badge(s, s)},
            STATUS_PROVEN,
            True,
            [TAG_SPLITS],
            2 * s - 1,
            2 * s,
            True,
        )
    if d == 4:
        return report(
            {Badge(inert.pos, inert.neg)},
            STATUS_PROVEN,
            True,
            [TAG_QUARTIC_UNIQUE, TAG_QUARTIC],
            rank - 1,
            rank,
            True,
        )

    length = real_length(p, config)
    observed = set()
    if length.witness is not None:
        observed.add(length.witness.badge)
        if mirror(p) == -p:
            observed.add(length.witness.badge.swapped())

    def widen_observed():
        found = badge_search(p, length.upper, config)
        observed.update(found.badges)

    if length.conclusive and length.upper == rank:
        return report(
            {Badge(inert.pos, inert.neg)},
            STATUS_PROVEN,
            True,
            [TAG_LENGTH_RANK],
            length.lower,
            length.upper,
            True,
            length.witness,
        )
    if d == 6 and length.conclusive and length.upper == 5:
        badge = length.witness.badge
        assert badge in (Badge(2, 3), Badge(3, 2)), "admissible 5-term sextic badge"
        if mirror(p) == -p:
            return report(
                {Badge(2, 3), Badge(3, 2)},
                STATUS_PROVEN,
                True,
                [TAG_MIRROR, TAG_SEXTIC_PAIR, TAG_POSSIBLE],
                length.lower,
                length.upper,
                True,
                length.witness,
            )
        return report(
            {badge},
            STATUS_PROVEN,
            False,
            [TAG_SEXTIC_PAIR, TAG_POSSIBLE, TAG_LOWER],
            length.lower,
            length.upper,
            True,
            length.witness,
        )

    widen_observed()
    return report(
        minimal_badges(observed) if observed else set(),
        STATUS_OBSERVED,
        False,
        [TAG_LOWER],
        length.lower,
        length.upper,
        length.conclusive,
        length.witness,
    )


def quartic_classify(p: BinaryForm, config: SearchConfig = SearchConfig()) -> SignatureReport:
    """Unique quartic signature: S(H_p), or (2,2) for split non-powers."""
    if p.degree != 4:
        raise OddDegreeError("quartic classification needs degree 4")
    if p.is_zero:
        raise ZeroFormError("zero form")
    return signature_report(p, config)


# ---------------------------------------------------------------------------
# Sweeps and jump detection
# ---------------------------------------------------------------------------

JUMP_NONE = "none"
JUMP_UP = "up"
JUMP_DOWN = "down"


def jump_direction(grid_sigs: frozenset, limit_sigs: frozenset) -> str:
    """Compare the signature set at a grid point against the limit form."""
    if grid_sigs == limit_sigs:
        return JUMP_NONE
    if any(not any(l.precedes(g) for g in grid_sigs) for l in limit_sigs):
        return JUMP_UP
    return JUMP_DOWN


@dataclass(frozen=True)
class SweepRow:
    param: Fraction
    report: Optional[SignatureReport]
    error: Optional[str]
    jump_vs_limit: str


@dataclass(frozen=True)
class SweepResult:
    rows: Tuple[SweepRow, ...]
    limit_param: Optional[Fraction]
    limit_report: Optional[SignatureReport]
    limit_error: Optional[str]


def sweep(
    family: Callable[[Fraction], BinaryForm],
    grid: Sequence[Fraction],
    limit: Optional[Fraction] = None,
    config: SearchConfig = SearchConfig(),
) -> SweepResult:
    """Per-parameter signature reports plus the limit form, with jump flags."""
    limit_report = None
    limit_error = None
    if limit is not None:
        try:
            limit_report = signature_report(family(Fraction(limit)), config)
        except Exception as exc:  # per-row errors are embedded, never fatal
            limit_error = f"{type(exc).__name__}: {exc}"
    rows = []
    for t in grid:
        t = Fraction(t)
        try:
            rep = signature_report(family(t), config)
            flag = JUMP_NONE
            if limit_report is not None:
                flag = jump_direction(rep.signature_set(), limit_report.signature_set())
            rows.append(SweepRow(t, rep, None, flag))
        except Exception as exc:
            rows.append(SweepRow(t, None, f"{type(exc).__name__}: {exc}", JUMP_NONE))
    return SweepResult(tuple(rows), limit, limit_report, limit_error)
