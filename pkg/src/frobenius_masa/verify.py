"""Machine-checked verification suites with a JSON/text report.

Each suite is a list of checks; a check is a callable returning
``(passed, detail)``.  Exceptions become failures carrying the error text.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .catalog import (
    DIM8_NONDEROG_LABELS,
    LOWDIM_LABELS,
    build,
    build_label,
    degraaf,
    dim8_table,
    lowdim_table,
    same_label,
    witnesses,
)
from .lie import (
    derivation_algebra,
    dual_basis_form,
    fingerprint,
    frobenius_decide,
    is_frobenius_functional,
    lower_central_series,
    nilradical,
    verify_isomorphism,
)
from .linalg import Matrix, normalizer_of_span
from .masa import canonical_A_n1, is_masa, kravchuk_signature, recognize_class2_mans
from .mpoly import MPoly
from .nonderog import (
    cartan_labels,
    circular_permutation,
    classify_G_phi,
    complex_block_companion,
    complex_block_transition,
    complex_jordan_block,
    complex_nilpotent_generator,
    corrected_q,
    detP_formula_check,
    polynomial_basis,
    published_q,
    real_block_companion,
    real_block_transition,
    real_jordan_block,
    symbolic_complex_det,
    symbolic_complex_transition,
    vandermonde_isomorphism,
)
from .scalars import QuadExt

SUITES = ("jordan", "classify", "masa", "catalog")
STATUSES = ("pass", "fail", "skip")


@dataclass
class Check:
    id: str
    description: str
    status: str
    detail: str = ""

    def to_json(self):
        return {"id": self.id, "description": self.description,
                "status": self.status, "detail": self.detail}


@dataclass
class VerifyReport:
    suite: str
    checks: list = field(default_factory=list)
    elapsed: float = 0.0  # milliseconds

    @property
    def ok(self):
        return all(c.status != "fail" for c in self.checks)

    @property
    def exit_code(self):
        return 0 if self.ok else 1

    def counts(self):
        return {s: sum(c.status == s for c in self.checks) for s in STATUSES}

    def to_json(self):
        return {
            "suite": self.suite,
            "ok": self.ok,
            "counts": self.counts(),
            "checks": [c.to_json() for c in self.checks],
            "elapsed": round(self.elapsed, 3),
        }


def emit_report(report: VerifyReport, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(report.to_json(), indent=2) + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    lines = [f"[{c.status.upper()}] {c.id} — {c.description}"
             + (f" ({c.detail})" if c.detail and c.status == "fail" else "")
             for c in report.checks]
    c = report.counts()
    lines.append(f"suite {report.suite}: {c['pass']} passed, {c['fail']} failed, "
                 f"{c['skip']} skipped in {report.elapsed:.0f} ms")
    return ("\n".join(lines) + "\n").encode()


def _run(cid, desc, fn):
    try:
        res = fn()
    except Exception as exc:  # a crashing check is a failing check
        return Check(cid, desc, "fail", f"{type(exc).__name__}: {exc}")
    if res is None:
        return Check(cid, desc, "skip", "")
    ok, detail = res if isinstance(res, tuple) else (bool(res), "")
    return Check(cid, desc, "pass" if ok else "fail", str(detail))


def _eq(got, want):
    return got == want, f"got {got}, expected {want}"


# ---------------------------------------------------------------------------
# jordan


def _s_poly():
    return MPoly.var(2, 1, ("r", "s"))


def _case_a(n, lam):
    def fn():
        P = real_block_transition(n, lam)
        sim = real_block_companion(n, lam) * P == P * real_jordan_block(n, lam)
        d = P.det()
        return sim and d == 1, f"similarity {sim}, det {d}"
    return fn


def _case_c_det(n, coeff, power):
    def fn():
        got = symbolic_complex_det(n)
        want = _s_poly() ** power * coeff
        return got == want, f"det = {got}"
    return fn


def _formula(n, p11, p12, corrected):
    def fn():
        c = detP_formula_check(n, Fraction(2), QuadExt(0, 1, 3), p11, p12, corrected=corrected)
        q = corrected_q(n) if corrected else published_q(n)
        return c.match, f"computed {c.computed}, formula {c.formula} (q = {q})"
    return fn


def _entries_n10():
    P = symbolic_complex_transition(10)
    r = MPoly.var(2, 0, ("r", "s"))
    s = MPoly.var(2, 1, ("r", "s"))
    want = {
        (1, 0): r * (-9),
        (2, 0): (r * r * 9 + s * s) * 4,
        (9, 9): -s * (r ** 4 * 5 - r * r * s * s * 10 + s ** 4),
    }
    bad = [(k, str(P[k[0]][k[1]])) for k, v in want.items() if P[k[0]][k[1]] != v]
    return not bad, f"mismatches {bad}" if bad else "p21, p31, p10,10 reproduced"


def _case_c_similarity(n, r, s):
    def fn():
        P = complex_block_transition(n, r, s)
        return complex_block_companion(n, r, s) * P == P * complex_jordan_block(n, r, s), ""
    return fn


def jordan_checks():
    out = []
    for n in range(2, 9):
        for lam in (Fraction(0), Fraction(1), Fraction(-3, 2)):
            out.append((f"jordan.caseA.n{n}.lambda={lam}",
                        f"binomial transition is a unit lower-triangular similarity, n={n}",
                        _case_a(n, lam)))
    for n, coeff, power in ((4, 4, 4), (6, -64, 9), (10, -1048576, 25)):
        out.append((f"jordan.caseC.det.n{n}", f"det P = {coeff} s^{power} for n={n}",
                    _case_c_det(n, coeff, power)))
    for n in (4, 6, 8, 10):
        for p11, p12 in ((1, 0), (2, -1)):
            out.append((f"jordan.caseC.formula.published.n{n}.p=({p11},{p12})",
                        f"det P = s^(n^2/4) (p11^2+p12^2)^(n/2) q_n with q_n=(-1)^(n/2)(n/2-1)^n, n={n}",
                        _formula(n, p11, p12, False)))
            out.append((f"jordan.caseC.formula.corrected.n{n}.p=({p11},{p12})",
                        f"same with q_n=(-1)^(n/2) 2^((n/2)(n/2-1)), n={n}",
                        _formula(n, p11, p12, True)))
    out.append(("jordan.caseC.entries.n10", "p21=-9r, p31=4(9r^2+s^2), p10,10=-s(5r^4-10r^2s^2+s^4)",
                _entries_n10))
    for n, r, s in ((2, Fraction(1), Fraction(2)), (4, Fraction(-1, 2), Fraction(3)),
                    (6, Fraction(2), QuadExt(0, 1, 2))):
        out.append((f"jordan.caseC.similarity.n{n}", f"M~_z P = P M_z for n={n}, r={r}, s={s}",
                    _case_c_similarity(n, r, s)))
    return out


# ---------------------------------------------------------------------------
# classify


_CIRCULAR = {2: "aff(R)+aff(R)", 3: "aff(R)+aff(C)", 4: "aff(R)+aff(R)+aff(C)",
             5: "aff(R)+aff(C)+aff(C)", 7: "aff(R)+aff(C)+aff(C)+aff(C)"}


def _der_dim(n, want):
    return lambda: _eq(derivation_algebra(build("D0", {"n": n}).algebra).dim, want)


def _norm_dim(n, want):
    return lambda: _eq(normalizer_of_span(build("D0", {"n": n}).matrix_generators).dim, want)


def _cartan_count(n):
    return lambda: _eq(len(cartan_labels(n)), n // 2 + 1)


def _vandermonde():
    d = vandermonde_isomorphism([1, 2, -3])
    return verify_isomorphism(d.psi, d.source, d.target), f"det N = {d.det}"


def _model_label(label):
    def fn():
        e = build_label(label)
        M = e.expected.get("nonderogatory_element")
        if M is None:
            mats = e.matrix_generators
            # a generic combination is nonderogatory for these polynomial algebras
            M = mats[0] * 0
            for k, A in enumerate(mats[1:], start=1):
                M = M + A * (k * k + 1)
        got = str(classify_G_phi(M))
        return same_label(got, e.expected["label"]), f"got {got}, expected {e.expected['label']}"
    return fn


def classify_checks():
    out = []
    for n, lab in _CIRCULAR.items():
        out.append((f"classify.circular.n{n}", f"circular permutation, n={n} -> {lab}",
                    lambda n=n, lab=lab: _eq(str(classify_G_phi(circular_permutation(n))), lab)))
    for n, want in ((2, 5), (3, 8), (4, 11), (5, 14), (6, 17)):
        out.append((f"classify.der.D0.n{n}", f"dim Der(D0({n})) = {want}", _der_dim(n, want)))
    for n, want in ((2, 3), (3, 5), (4, 7), (5, 9), (6, 11)):
        out.append((f"classify.normalizer.D0.n{n}", f"normalizer of R[M0] in gl({n}) has dim {want}",
                    _norm_dim(n, want)))
    out.append(("classify.normalizer.D01.n4", "normalizer of R[M01] in gl(4) has dim 6",
                lambda: _eq(normalizer_of_span(polynomial_basis(complex_nilpotent_generator(4))).dim, 6)))
    for n in range(1, 9):
        out.append((f"classify.cartan.count.n{n}", f"{n // 2 + 1} Cartan labels for n={n}",
                    _cartan_count(n)))
    out.append(("classify.vandermonde.n3", "Vandermonde map aff(R)^3 -> G_phi is an isomorphism",
                _vandermonde))
    for lab in DIM8_NONDEROG_LABELS:
        out.append((f"classify.dim8.{lab}", f"nonderogatory model {lab} classifies to itself",
                    _model_label(lab)))
    return out


# ---------------------------------------------------------------------------
# masa


def _random_invertible(n, rng):
    while True:
        M = Matrix([[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)])
        if M.is_invertible():
            return M


def _class2(n, seed):
    def fn():
        rng = random.Random(seed)
        Q = _random_invertible(n, rng)
        Qi = Q.inverse()
        S = [Q * A * Qi for A in canonical_A_n1(n)]
        P = recognize_class2_mans(S)
        sig = kravchuk_signature(S).as_tuple()
        return P is not None and sig == (n - 1, 0, 1), f"signature {sig}"
    return fn


def _masa_entry(label_or_args):
    def fn():
        e = build(*label_or_args) if isinstance(label_or_args, tuple) else build_label(label_or_args)
        return is_masa(e.matrix_generators, "gl"), ""
    return fn


def masa_checks():
    out = []
    for n in range(3, 7):
        for k in range(5):
            seed = 1000 * n + k
            out.append((f"masa.class2.n{n}.seed{seed}",
                        f"conjugate of A_({n},1) is recognized, signature ({n - 1},0,1)",
                        _class2(n, seed)))
    targets = [("G", {"n": n, "p": p}) for n in range(2, 6) for p in range(1, n)]
    targets += [("h", {"n": n, "p": p}) for n in (4, 5) for p in range(2, n)]
    targets += [("Gprime", {"n": n}) for n in (4, 5)]
    targets += [("D0", {"n": n}) for n in range(1, 6)] + [("D01", {"n": 4}), ("D01", {"n": 6})]
    targets += [("B", {"n": 3}), ("B", {"n": 4})]
    for name, p in targets:
        e = build(name, p)
        out.append((f"masa.gl.{e.label}", f"{e.label} generators form a MASA of gl",
                    _masa_entry((name, p))))
    for lab in LOWDIM_LABELS + DIM8_NONDEROG_LABELS + ("G(3,1)+aff(R)",):
        if "+" in lab:
            out.append((f"masa.gl.{lab}", f"block generators of {lab} form a MASA of gl",
                        _masa_entry(lab)))
    return out


# ---------------------------------------------------------------------------
# catalog


def _functional(name, params, k):
    def fn():
        g = build(name, params).algebra
        return is_frobenius_functional(g, dual_basis_form(g.dim, k)), f"e{k}^*"
    return fn


def _not_frobenius(name, params):
    def fn():
        v = frobenius_decide(build(name, params).algebra)
        return (not v.frobenius) and v.pfaffian.is_zero(), "Pfaffian identically zero" if not v.frobenius else \
            f"certificate {v.certificate}"
    return fn


def _witness(w):
    return lambda: (verify_isomorphism(w.psi, w.source, w.target), "")


def _g_nilradical(n, p):
    def fn():
        g = build("G", {"n": n, "p": p}).algebra
        N = nilradical(g)
        lcs = lower_central_series(g, N)
        derived = g.bracket_space(N, N).dim
        cls = len([x for x in lcs if x])
        return derived == p and cls == p + 1, f"[N,N] dim {derived}, class {cls}"
    return fn


def _gprime_derived(n):
    def fn():
        g = build("Gprime", {"n": n}).algebra
        N = nilradical(g)
        return _eq(g.bracket_space(N, N).dim, n - 1)
    return fn


def _dim8_fingerprints():
    fps = [fingerprint(e.algebra).key() for e in dim8_table()]
    clashes = [(i, j) for i, j in combinations(range(len(fps)), 2) if fps[i] == fps[j]]
    return not clashes, f"colliding pairs {clashes}" if clashes else "14 distinct fingerprints"


def _all_frobenius(table):
    def fn():
        bad = [e.label for e in table() if not frobenius_decide(e.algebra).frobenius]
        return not bad, f"not Frobenius: {bad}" if bad else ""
    return fn


def _y8_wrong():
    e = build("Y", {"i": 8, "corrected": False})
    return e.algebra is None and e.defect == "generators do not commute", e.defect or "commuting"


def _y8_right():
    e = build("Y", {"i": 8})
    lab = str(classify_G_phi(e.expected["nonderogatory_element"]))
    inspan = e.algebra is not None
    return inspan and lab == "D01(4)", f"label {lab}"


def _l2(i):
    def fn():
        e = build("L2", {"i": i})
        exp = e.expected
        v = frobenius_decide(e.algebra)
        if v.frobenius != exp["frobenius"]:
            return False, f"Frobenius verdict {v.frobenius}"
        if "nonderogatory_element" in exp:
            got = str(classify_G_phi(exp["nonderogatory_element"]))
            return same_label(got, exp["isomorphic_to"]), f"got {got}"
        if "identical_to" in exp:
            return e.algebra == build(*exp["identical_to"]).algebra, "identical bracket table"
        return True, ""
    return fn


def _degraaf():
    comm = {i: degraaf(i).is_commutative() for i in range(1, 7)}
    sign_pos = degraaf(3, 1).square_form_inertia()
    sign_neg = degraaf(3, -1).square_form_inertia()
    ok = (comm == {1: True, 2: True, 3: True, 4: False, 5: False, 6: True}
          and sign_pos != sign_neg)
    return ok, f"commutative {comm}, inertia s=1 {sign_pos}, s=-1 {sign_neg}"


def catalog_checks():
    out = []
    for n in range(2, 6):
        for p in range(1, n):
            out.append((f"catalog.frobenius.G({n},{p})", f"e{n + 1}^* is Frobenius on G({n},{p})",
                        _functional("G", {"n": n, "p": p}, n + 1)))
    for n in range(1, 7):
        out.append((f"catalog.frobenius.D0({n})", f"e{2 * n}^* is Frobenius on D0({n})",
                    _functional("D0", {"n": n}, 2 * n)))
    for n in (4, 6):
        out.append((f"catalog.frobenius.D01({n})", f"~e1^* is Frobenius on D01({n})",
                    _functional("D01", {"n": n}, n + 1)))
    for n in (4, 5):
        for p in range(2, n):
            out.append((f"catalog.frobenius.h({n},{p})", f"e{n + 1}^* is Frobenius on h({n},{p})",
                        _functional("h", {"n": n, "p": p}, n + 1)))
        out.append((f"catalog.frobenius.Gprime({n})", f"e{n + 1}^* is Frobenius on Gprime({n})",
                    _functional("Gprime", {"n": n}, n + 1)))
    for name, p, lab in (("B", {"n": 3}, "B(3)"), ("B", {"n": 4}, "B(4)"), ("L2", {"i": 4}, "L2,4"),
                         ("Y", {"i": 3}, "Y3"), ("Y", {"i": 4}, "Y4"), ("Y", {"i": 10}, "Y10")):
        out.append((f"catalog.notfrobenius.{lab}", f"{lab} algebra has identically zero Pfaffian",
                    _not_frobenius(name, p)))
    for w in witnesses():
        out.append((f"catalog.witness.{w.name}", f"{w.name} is a Lie algebra isomorphism", _witness(w)))
    for n in range(3, 7):
        for p in range(1, n):
            out.append((f"catalog.G({n},{p}).nilradical", f"[N,N] has dim {p}, N has class {p + 1}",
                        _g_nilradical(n, p)))
    for n in range(3, 7):
        out.append((f"catalog.Gprime({n}).nilradical", f"[N',N'] has dim {n - 1}", _gprime_derived(n)))
    for i in range(1, 7):
        out.append((f"catalog.L2,{i}", f"L2,{i} disposition", _l2(i)))
    out.append(("catalog.degraaf", "A3,4 and A3,5 not commutative; A3,3 split by sign of s", _degraaf))
    out.append(("catalog.Y8.erroneous", "uncorrected Y8 generators do not commute", _y8_wrong))
    out.append(("catalog.Y8.corrected", "corrected Y8 commutes and yields D01(4)", _y8_right))
    out.append(("lowdim.count=9", "dimension <= 6 table has 9 entries",
                lambda: _eq(len(lowdim_table()), 9)))
    out.append(("lowdim.frobenius", "every dimension <= 6 entry is Frobenius", _all_frobenius(lowdim_table)))
    out.append(("dim8.count=14", "dimension 8 table has 14 entries", lambda: _eq(len(dim8_table()), 14)))
    out.append(("dim8.frobenius", "every dimension 8 entry is Frobenius", _all_frobenius(dim8_table)))
    out.append(("dim8.fingerprints", "fingerprints separate the 14 dimension 8 entries",
                _dim8_fingerprints))
    return out


_SUITE_FUNCS = {"jordan": jordan_checks, "classify": classify_checks,
                "masa": masa_checks, "catalog": catalog_checks}


def run_suite(suite: str = "all", only=None) -> VerifyReport:
    names = SUITES if suite == "all" else (suite,)
    for s in names:
        if s not in _SUITE_FUNCS:
            raise ValueError(f"unknown suite {s!r}; choose from {', '.join(SUITES + ('all',))}")
    t0 = time.perf_counter()
    checks = []
    for s in names:
        for cid, desc, fn in _SUITE_FUNCS[s]():
            if only is not None and not only(cid):
                continue
            checks.append(_run(cid, desc, fn))
    checks.sort(key=lambda c: c.id)
    return VerifyReport(suite, checks, (time.perf_counter() - t0) * 1000)
