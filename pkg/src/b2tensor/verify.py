"""Verification suites: every claim checked against an independent route.

Each check compares two computations that share no code path (closed form vs
convolution, recursion vs antisymmetrization, ...) over an explicit sweep and
reports pass or fail. Known deviations of the published formulas from the
exact values are reported as documented-discrepancy: they are expected, kept
visible, and do not fail a run. All sweeps are exact integer or rational
arithmetic; a single unequal value anywhere is a failure.

Sweep sizes derive from one knob, pmax (default 10): sweeps whose cost grows
quickly stop at pmax or below, polynomial identities run to pmax+4, and the
cheap long recurrences run to 3*pmax.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

from . import closed_forms as cf
from .engine import (
    decomposition,
    iterate_single_step,
    m_extended,
    recur_multiplicity,
    single_step_decompose,
    tensor_with_vector,
)
from .fans import (
    _support_halo,
    diff_report,
    fan_closed_form,
    fan_line_structure,
    fan_power_direct,
    fan_recursion_solve,
    fan_step_audit,
    fan_with_zero,
    singular_power_direct,
    singular_power_projected,
    spinor_singular_closed,
    vector_singular_closed,
)
from .lattice import Weight, dim_irrep
from .series import denominator_product, singular_element, weight_multiplicities

PASS = "pass"
FAIL = "fail"
DOCUMENTED = "documented-discrepancy"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    evidence: str

    def to_json_obj(self) -> dict:
        return {"name": self.name, "status": self.status, "evidence": self.evidence}


@dataclass
class VerificationReport:
    suite: str
    pmax: int
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, DOCUMENTED: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def to_json_obj(self) -> dict:
        n = self.counts()
        return {
            "suite": self.suite,
            "pmax": self.pmax,
            "pass": n[PASS],
            "fail": n[FAIL],
            "documented-discrepancy": n[DOCUMENTED],
            "checks": [c.to_json_obj() for c in self.checks],
        }

    def render_pretty(self) -> str:
        lines = [f"suite {self.suite} (pmax={self.pmax})"]
        for c in self.checks:
            lines.append(f"  [{c.status}] {c.name}: {c.evidence}")
        n = self.counts()
        lines.append(
            f"{n[PASS]} pass, {n[FAIL]} fail, {n[DOCUMENTED]} documented-discrepancy"
        )
        return "\n".join(lines) + "\n"


def _fail(name: str, where: str) -> CheckResult:
    return CheckResult(name, FAIL, f"first mismatch at {where}")


# ---------------------------------------------------------------------------
# oracle agreement


def check_four_routes(pmax: int) -> CheckResult:
    """Brute antisymmetrization, weight-shift recursion, fan recursion and
    repeated single-step products must produce identical decompositions."""
    name = "four-routes-agree"
    n = 0
    for mod in ("vector", "spinor"):
        recs = recur_multiplicity(mod, pmax)
        for p in range(pmax + 1):
            a = decomposition(mod, p)
            if not (
                a
                == recs[p].to_result()
                == fan_recursion_solve(mod, p).to_result()
                == iterate_single_step(mod, p)
            ):
                return _fail(name, f"module={mod} p={p}")
            n += 1
    return CheckResult(name, PASS, f"4 routes identical on {n} (module,p) pairs, p <= {pmax}")


def check_dimension_sum(pmax: int) -> CheckResult:
    """Sum of multiplicity times irreducible dimension recovers dim^p."""
    name = "dimension-identity"
    bound = pmax + 4
    for mod, dim in (("vector", 5), ("spinor", 4)):
        recs = recur_multiplicity(mod, bound)
        for p in range(bound + 1):
            total = sum(m * dim_irrep(w) for w, m in recs[p].restrict_positive().items())
            if total != dim**p:
                return _fail(name, f"module={mod} p={p}")
    return CheckResult(name, PASS, f"sum m*dim == dim^p for both modules, p <= {bound}")


# ---------------------------------------------------------------------------
# published tables


def check_vector_table(pmax: int) -> CheckResult:
    """All 16 cells of the near-highest-weight vector table, including zeros,
    against the extended multiplicity function; large p and the small-p
    region where the polynomials turn negative and match reflected values."""
    name = "vector-table"
    bound = pmax + 4
    powers = [2, 3] + list(range(6, bound + 1))
    for p in powers:
        for i in range(4):
            for j in range(4):
                got = cf.vector_table(i, j, p)
                want = m_extended("vector", p, cf.vector_table_weight(i, j, p))
                if got != want:
                    return _fail(name, f"p={p} cell=({i},{j})")
    return CheckResult(
        name, PASS, f"16 cells match extended M for p in {{2,3}} and 6..{bound}"
    )


def check_spinor_table(pmax: int) -> CheckResult:
    """The eight spinor-table entries, the off-lattice half-integer columns,
    and the p=2 entry whose polynomial value -1 is a reflected multiplicity."""
    name = "spinor-table"
    bound = pmax + 4
    for p in range(2, bound + 1):
        for (a, b) in cf.SPINOR_TABLE_KEYS:
            got = cf.spinor_table(a, b, p)
            want = m_extended("spinor", p, cf.spinor_table_weight(a, b, p))
            if got != want:
                return _fail(name, f"p={p} entry=({a},{b})")
        for b in (1, 2, 3):
            for a in (Fraction(1, 2), Fraction(3, 2)):
                if cf.spinor_table(a, b, p) != 0:
                    return _fail(name, f"p={p} half column ({a},{b})")
                try:
                    cf.spinor_table_weight(a, b, p)
                    return _fail(name, f"p={p} ({a},{b}) unexpectedly on lattice")
                except ValueError:
                    pass
    if cf.spinor_table(2, 2, 2) != -1:
        return _fail(name, "extended spot (2,2) p=2")
    return CheckResult(
        name,
        PASS,
        f"8 entries + 6 off-lattice half columns match for 2 <= p <= {bound}; "
        "extended spot (2,2,p=2) == -1",
    )


def check_diagonal_low(pmax: int) -> CheckResult:
    """Diagonal families s = 1..3 match the extended multiplicities exactly."""
    name = "diagonal-families-s1-3"
    bound = pmax + 4
    n = 0
    for s in (1, 2, 3):
        for p in range(1, bound + 1):
            for t in range(0, p + 1):
                got = cf.diagonal_formula(s, t, p)
                want = m_extended("vector", p, cf.diagonal_weight(s, t, p))
                if got != want:
                    return _fail(name, f"s={s} t={t} p={p}")
                n += 1
    return CheckResult(name, PASS, f"{n} points exact for s=1..3, p <= {bound}, 0 <= t <= p")


def check_diagonal_high(pmax: int) -> CheckResult:
    """Diagonal families s = 4..6: s=4 and s=6 hold as printed; the printed
    s=5 bracket is wrong at every offset (reusing the s=4 coefficients) and
    first fails at p = t+1; the refitted bracket matches everywhere."""
    name = "diagonal-families-s4-6"
    bound = pmax + 4
    for s in (4, 6):
        for t in range(0, 7):
            for p in range(1, bound + 1):
                got = cf.diagonal_formula(s, t, p)
                want = m_extended("vector", p, cf.diagonal_weight(s, t, p))
                if got != want:
                    return _fail(name, f"s={s} t={t} p={p}")
    for t in range(0, 7):
        first_bad = None
        for p in range(1, bound + 1):
            got = cf.diagonal_formula(5, t, p)
            want = m_extended("vector", p, cf.diagonal_weight(5, t, p))
            if got != want:
                first_bad = p
                break
        if first_bad != t + 1:
            return _fail(name, f"s=5 t={t}: first printed failure at {first_bad}, expected {t + 1}")
        for p in range(1, bound + 1):
            got = cf.diagonal_formula(5, t, p, corrected=True)
            want = m_extended("vector", p, cf.diagonal_weight(5, t, p))
            if got != want:
                return _fail(name, f"s=5 corrected t={t} p={p}")
    return CheckResult(
        name,
        DOCUMENTED,
        f"s=4 and s=6 exact for t <= 6, p <= {bound}; printed s=5 wrong at every "
        f"t (first failure p=t+1, non-integer values); corrected bracket exact",
    )


def check_diagonal_spinor_line(pmax: int) -> CheckResult:
    """The s=1 diagonal family reproduces the first spinor-table line."""
    name = "diagonal-spinor-line"
    bound = pmax + 4
    for p in range(2, bound + 1):
        for a in (0, 1, 2):
            if cf.diagonal_formula(1, a, p) != cf.spinor_table(a, 1, p):
                return _fail(name, f"a={a} p={p}")
    return CheckResult(name, PASS, f"s=1 values equal spinor entries (a,1) for p <= {bound}")


def check_known_window(pmax: int) -> CheckResult:
    """The window of multiplicities around the top vector row: row p is
    0,-1,1,0,0,0 over second coordinate -2..3, row p-1 is 1-p,0,0,p-1,0,0,
    row p-2 carries p(p-3)/2 at 2 and 0 at 3; and M(p-2,1) = (p-1)(p-2)/2
    out to triple the base sweep."""
    name = "known-window"
    long_bound = 3 * pmax
    recs = recur_multiplicity("vector", max(long_bound, pmax))
    for p in range(5, pmax + 1):
        m = recs[p]
        rows = [
            [m(Weight.make(p, d)) for d in range(-2, 4)],
            [m(Weight.make(p - 1, d)) for d in range(-2, 4)],
        ]
        if rows[0] != [0, -1, 1, 0, 0, 0]:
            return _fail(name, f"p={p} row p: {rows[0]}")
        if rows[1] != [1 - p, 0, 0, p - 1, 0, 0]:
            return _fail(name, f"p={p} row p-1: {rows[1]}")
        if m(Weight.make(p - 2, 2)) != p * (p - 3) // 2 or m(Weight.make(p - 2, 3)) != 0:
            return _fail(name, f"p={p} row p-2")
    for p in range(2, long_bound + 1):
        if recs[p](Weight.make(p - 2, 1)) != (p - 1) * (p - 2) // 2:
            return _fail(name, f"M(p-2,1) at p={p}")
    return CheckResult(
        name,
        PASS,
        f"window rows exact for 5 <= p <= {pmax}; M(p-2,1) == (p-1)(p-2)/2 "
        f"for 2 <= p <= {long_bound}",
    )


# ---------------------------------------------------------------------------
# closed forms vs direct convolution


def check_fan_closed_form(pmax: int) -> CheckResult:
    """Validated fan closed form equals -R^(p-1) reflected, zero point included,
    over support plus a halo of definitely-zero points."""
    name = "fan-closed-form"
    bound = max(1, pmax - 2)
    n = 0
    for p in range(1, bound + 1):
        truth = fan_with_zero(p)
        for w in _support_halo(truth):
            if w.d1 % 2 or w.d2 % 2:
                continue
            if fan_closed_form(p, w.d1 // 2, w.d2 // 2) != truth.coeff(w):
                return _fail(name, f"p={p} point={w.text()}")
            n += 1
    return CheckResult(name, PASS, f"{n} points equal the direct fan for p <= {bound}")


def check_vector_singular_closed(pmax: int) -> CheckResult:
    """Validated vector closed form equals the projected power Pi directly."""
    name = "vector-singular-closed-form"
    bound = max(1, pmax - 2)
    n = 0
    for p in range(1, bound + 1):
        truth = singular_power_projected(1, p)
        for w in _support_halo(truth):
            if vector_singular_closed(p, w) != truth.coeff(w):
                return _fail(name, f"p={p} point={w.text()}")
            n += 1
    return CheckResult(name, PASS, f"{n} points equal Pi_vector for p <= {bound}")


def check_spinor_singular_closed(pmax: int) -> CheckResult:
    """Re-derived spinor closed form equals the projected power Pi directly."""
    name = "spinor-singular-closed-form"
    bound = max(1, pmax - 2)
    n = 0
    for p in range(1, bound + 1):
        truth = singular_power_projected(2, p)
        for w in _support_halo(truth):
            if spinor_singular_closed(p, w) != truth.coeff(w):
                return _fail(name, f"p={p} point={w.text()}")
            n += 1
    return CheckResult(name, PASS, f"{n} points equal Pi_spinor for p <= {bound}")


def check_diff_reports(pmax: int) -> CheckResult:
    """The verbatim transcriptions differ from the direct values: under the
    strict truncated binomial every report is nonempty, e.g. the fan value at
    the origin is -1 but the printed sum gives 0."""
    name = "printed-formula-diffs"
    bound = min(pmax, 4)
    counts = []
    for p in range(1, bound + 1):
        row = []
        for kind in ("fan", "vector", "spinor"):
            rows = diff_report(kind, p)
            if not rows:
                return _fail(name, f"{kind} p={p}: empty report")
            row.append(len(rows))
        counts.append((p, row))
    origin = [r for r in diff_report("fan", 2) if r["point"] == "0,0"]
    if origin != [{"point": "0,0", "printed": "0", "direct": "-1"}]:
        return _fail(name, "fan origin row at p=2")
    body = "; ".join(f"p={p}: fan {a}, vector {b}, spinor {c}" for p, (a, b, c) in counts)
    return CheckResult(name, DOCUMENTED, f"nonempty diffs (strict reading): {body}")


def check_line_structure(pmax: int) -> CheckResult:
    """Along its lowest alpha1 line the fan R^(p-1) carries (-1)^t C(p-1,t)
    on p points; the published structure claim has C(p,t) on p+1 points,
    which instead describes R^p."""
    name = "fan-line-structure"
    for p in range(2, pmax + 1):
        want = [(t, (-1) ** t * comb(p - 1, t)) for t in range(p)] + [(p, 0)]
        if fan_line_structure(p) != want:
            return _fail(name, f"p={p}")
    return CheckResult(
        name,
        DOCUMENTED,
        f"line values are (-1)^t C(p-1,t) with the (p+1)-th point zero for "
        f"p <= {pmax}; the printed claim C(p,t) on p+1 points describes R^p",
    )


# ---------------------------------------------------------------------------
# fans against singular elements


def check_fan_identity(pmax: int) -> CheckResult:
    """R^(p-1) * Phi == Pi as series; equivalently the source-inclusive
    pointwise relation sum_gamma gamma_p(gamma) Phi(mu+gamma) + Pi(mu) = 0."""
    name = "fan-identity"
    bound = max(1, pmax - 2)
    for i, mod in ((1, "vector"), (2, "spinor")):
        for p in range(1, bound + 1):
            lhs = fan_power_direct(p) * singular_power_direct(i, p)
            if lhs != singular_power_projected(i, p):
                return _fail(name, f"module={mod} p={p}")
    fan = fan_with_zero(3)
    phi = singular_power_direct(1, 3)
    pi = singular_power_projected(1, 3)
    for w in _support_halo(pi):
        total = pi.coeff(w) + sum(c * phi.coeff(w + g) for g, c in fan.items())
        if total != 0:
            return _fail(name, f"pointwise p=3 at {w.text()}")
    return CheckResult(
        name,
        PASS,
        f"R^(p-1)*Phi == Pi for both modules, p <= {bound}; pointwise "
        "source-inclusive sum vanishes on the p=3 vector window",
    )


def check_singular_contribution(pmax: int) -> CheckResult:
    """The recursion step at (p-2,1): the projected-power source contributes
    p(p-1), the fan lines contribute their published totals, and everything
    sums to the multiplicity (p-1)(p-2)/2."""
    name = "singular-contribution"
    bound = max(2, pmax - 2)
    for p in range(2, bound + 1):
        if singular_power_projected(1, p).coeff(Weight.make(p - 2, 1)) != p * (p - 1):
            return _fail(name, f"Pi(p-2,1) at p={p}")
    frozen = {
        5: {"lines": [(0, 20), (1, -48), (2, 14)], "singular": 20, "total": 6},
        6: {"lines": [(0, 45), (1, -100), (2, 35)], "singular": 30, "total": 10},
        7: {"lines": [(0, 84), (1, -180), (2, 69)], "singular": 42, "total": 15},
    }
    for p, want in frozen.items():
        audit = fan_step_audit("vector", p, Weight.make(p - 2, 1))
        if audit != want:
            return _fail(name, f"audit p={p}: {audit}")
        if audit["total"] != (p - 1) * (p - 2) // 2:
            return _fail(name, f"audit total p={p}")
    return CheckResult(
        name,
        PASS,
        f"Pi(p-2,1) == p(p-1) for p <= {bound}; step audits at p=5,6,7 "
        "reproduce the published line totals",
    )


def check_character_product(pmax: int) -> CheckResult:
    """Freudenthal characters times the denominator give singular elements:
    ch(lam) * Psi^0 == Psi^lam on both cosets."""
    name = "character-product"
    vmax = max(2, pmax // 2)
    R = denominator_product()
    n = 0
    for d1 in range(0, 2 * vmax + 1):
        for d2 in range(d1 % 2, d1 + 1, 2):
            lam = Weight(d1, d2)
            if weight_multiplicities(lam) * R != singular_element(lam):
                return _fail(name, f"lam={lam.text()}")
            n += 1
    return CheckResult(name, PASS, f"{n} dominant weights with first coordinate <= {vmax}")


# ---------------------------------------------------------------------------
# conjectures


def check_multiplicity_free(pmax: int) -> CheckResult:
    """Products with the vector module are multiplicity free; the case
    formulas agree with the general signed-reflection rule and preserve
    dimension, including the two-summand edge at (1/2,1/2)."""
    name = "vector-product-multiplicity-free"
    mu1max = max(2, pmax - 2)
    n = 0
    for d1 in range(0, 2 * mu1max + 1):
        for d2 in range(d1 % 2, d1 + 1, 2):
            mu = Weight(d1, d2)
            summands = tensor_with_vector(mu)
            direct = single_step_decompose(mu, 1)
            if sorted(direct) != list(summands) or any(v != 1 for v in direct.values()):
                return _fail(name, f"mu={mu.text()}")
            if sum(dim_irrep(nu) for nu in summands) != 5 * dim_irrep(mu):
                return _fail(name, f"dimension at mu={mu.text()}")
            n += 1
    edge = tensor_with_vector(Weight(1, 1))
    if sorted(dim_irrep(w) for w in edge) != [4, 16]:
        return _fail(name, "edge (1/2,1/2)")
    return CheckResult(
        name,
        PASS,
        f"{n} dominant weights with first coordinate <= {mu1max}; edge "
        "(1/2,1/2) x vector = 4 + 16 dimensions",
    )


def check_polynomial_fits(pmax: int) -> CheckResult:
    """Multiplicities along the s=1..3 diagonals are polynomial in p: a
    window of recurrence samples certifies a polynomial whose predictions
    beyond the window again match the recurrence.

    The family (s,t) has degree s+t-1, and certifying a degree-d polynomial
    on the window 6..pmax+4 takes d+3 samples, so t is capped accordingly;
    below pmax=6 no family fits in the window and the check fails."""
    name = "diagonal-polynomial-fits"
    hi = pmax + 4
    window = hi - 5  # samples in 6..hi
    recs = recur_multiplicity("vector", hi + 3)
    nfits = npred = 0
    for s in (1, 2, 3):
        tmax = min(4, window - 3 - (s - 1))
        for t in range(tmax + 1):
            xs = list(range(6, hi + 1))
            ys = [recs[p](cf.diagonal_weight(s, t, p)) for p in xs]
            try:
                fit = cf.fit_polynomial(xs, ys)
            except cf.PolynomialityError:
                return _fail(name, f"s={s} t={t}: window not polynomial")
            for p in range(hi + 1, hi + 4):
                if fit(p) != recs[p](cf.diagonal_weight(s, t, p)):
                    return _fail(name, f"s={s} t={t} prediction p={p}")
                npred += 1
            nfits += 1
    if nfits == 0:
        return _fail(name, f"window 6..{hi} too small for any certified fit")
    return CheckResult(
        name,
        PASS,
        f"{nfits} fits on window 6..{hi}, {npred} out-of-window predictions match",
    )


def check_diagonal_zeros(pmax: int) -> CheckResult:
    """Every diagonal family vanishes at p = 2t+s-2: the linear front factor
    kills the formula and the weight reflects onto a wall."""
    name = "diagonal-zeros"
    bound = 3 * pmax
    n = 0
    for s in range(1, 7):
        for t in range(0, (bound - s + 2) // 2 + 1):
            p = 2 * t + s - 2
            if p < 1 or p > bound:
                continue
            if cf.diagonal_formula(s, t, p, corrected=(s == 5)) != 0:
                return _fail(name, f"formula s={s} t={t} p={p}")
            if m_extended("vector", p, cf.diagonal_weight(s, t, p)) != 0:
                return _fail(name, f"multiplicity s={s} t={t} p={p}")
            n += 1
    return CheckResult(name, PASS, f"{n} zeros at p = 2t+s-2 for all six families, p <= {bound}")


def check_bracket_factorization(pmax: int) -> CheckResult:
    """Where the bracket polynomials stop factoring: s=4 has rational roots
    only at t=0,1 (the t=2 discriminant is 1872, not a square), corrected
    s=5 likewise, s=6 only at t=0,1,2."""
    name = "bracket-factorization"
    got4 = [cf.bracket_factors_rationally(4, t) for t in range(6)]
    if got4 != [True, True, False, False, False, False]:
        return _fail(name, f"s=4 pattern {got4}")
    if cf.bracket_discriminant(4, 2) != 1872 or isqrt(1872) ** 2 == 1872:
        return _fail(name, "s=4 t=2 discriminant")
    got6 = [cf.bracket_factors_rationally(6, t) for t in range(6)]
    if got6 != [True, True, True, False, False, False]:
        return _fail(name, f"s=6 pattern {got6}")
    got5 = []
    for t in range(6):
        c0, c1, c2 = cf.diagonal_bracket_corrected(5, t)
        d = c1 * c1 - 4 * c2 * c0
        got5.append(d >= 0 and isqrt(d) ** 2 == d)
    if got5 != [True, True, False, False, False, False]:
        return _fail(name, f"corrected s=5 pattern {got5}")
    return CheckResult(
        name,
        PASS,
        "rational-root pattern: s=4 t<=1, corrected s=5 t<=1, s=6 t<=2; "
        "disc(s=4,t=2) = 1872 is not a square",
    )


# ---------------------------------------------------------------------------
# suites


SUITES = {
    "oracle-agreement": [check_four_routes],
    "dimension-identity": [check_dimension_sum],
    "paper-tables": [
        check_vector_table,
        check_spinor_table,
        check_diagonal_low,
        check_diagonal_high,
        check_diagonal_spinor_line,
        check_known_window,
    ],
    "closed-forms": [
        check_fan_closed_form,
        check_vector_singular_closed,
        check_spinor_singular_closed,
        check_diff_reports,
        check_line_structure,
    ],
    "fan-singular": [
        check_fan_identity,
        check_singular_contribution,
        check_character_product,
    ],
    "conjectures": [
        check_multiplicity_free,
        check_polynomial_fits,
        check_diagonal_zeros,
        check_bracket_factorization,
    ],
}

SUITE_ORDER = [
    "oracle-agreement",
    "dimension-identity",
    "paper-tables",
    "closed-forms",
    "fan-singular",
    "conjectures",
]


def run_suite(suite: str, pmax: int = 10) -> VerificationReport:
    if suite == "all":
        checks = [fn for s in SUITE_ORDER for fn in SUITES[s]]
    elif suite in SUITES:
        checks = SUITES[suite]
    else:
        raise KeyError(f"unknown suite {suite!r}")
    return VerificationReport(suite, pmax, [fn(pmax) for fn in checks])
