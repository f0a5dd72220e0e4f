"""Registered verification suite behind the ``reproduce`` CLI command.

Each check certifies one structural identity of the algebras built by
this package (multiplication rules of the smash product, inner and outer
derivation formulas, the bracket and p-map tables on first cohomology,
trigonalizability and toral rank, block decompositions, the trivial
extension of the Kronecker algebra).  Check ids are stable tokens used in
reports; a failing check carries a counterexample payload.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import algebras as alg
from . import gfp
from . import hochschild as hoch
from . import lie as lielib
from .gfp import INT, Subspace


class CheckFailure(Exception):
    def __init__(self, payload):
        self.payload = payload
        super().__init__(str(payload))


@dataclass
class CheckResult:
    check_id: str
    status: str  # pass | fail | skipped
    details: dict
    elapsed_ms: int

    def to_json_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "status": self.status,
            "details": self.details,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass
class SuiteContext:
    p: int
    seed: int = 0
    inject_fault: str | None = None
    _cache: dict = field(default_factory=dict)

    def smash(self, n, r):
        key = ("smash", self.p, n, r)
        if key not in self._cache:
            self._cache[key] = alg.smash_product(self.p, n, r)
        return self._cache[key]

    def faulty_smash(self, n, r):
        """Smash table with one structure constant flipped (negative control)."""
        a, desc = alg.smash_product(self.p, n, r)
        kmat, cmat = a.monomial_tables()
        kmat = kmat.copy()
        cmat = cmat.copy()
        i = desc.index(0, 1)
        j = desc.index(0, 0)
        cmat[i, j] = (cmat[i, j] + 1) % self.p
        bad = alg.Algebra(
            a.p,
            a.labels,
            {},
            a.unit,
            radical_gens=a.radical_gens,
            name=a.name + "+fault",
            descriptor=desc,
            presentation=a.presentation,
            validate=False,
            _monomial=(kmat, cmat),
        )
        return bad, desc

    def trunc(self, exps):
        key = ("trunc", self.p, tuple(exps))
        if key not in self._cache:
            self._cache[key] = alg.truncated_polynomial(self.p, exps)
        return self._cache[key]

    def hh1_of(self, key, builder):
        ck = ("hh1", key)
        if ck not in self._cache:
            self._cache[ck] = hoch.hh1(builder(), seed=self.seed)
        return self._cache[ck]

    def smash_hh1(self, n, r):
        return self.hh1_of((self.p, "smash", n, r), lambda: self.smash(n, r)[0])

    def kronecker(self):
        key = ("kr", self.p)
        if key not in self._cache:
            self._cache[key] = alg.quiver_algebra(alg.kronecker_quiver(), self.p)
        return self._cache[key]

    def tkr(self):
        key = ("tkr", self.p)
        if key not in self._cache:
            self._cache[key] = alg.trivial_extension(self.kronecker())
        return self._cache[key]


def _basis_vec(dim, idx):
    v = np.zeros(dim, dtype=INT)
    v[idx] = 1
    return v


# -- individual checks ------------------------------------------------------------


def check_lemma_2_1(ctx: SuiteContext) -> dict:
    """Commutators land in J^2 and a symmetric form exists, on local algebras."""
    cases = [("trunc", (1,)), ("trunc", (2,)), ("trunc", (1, 1))]
    detail = {}
    for _, exps in cases:
        a = ctx.trunc(exps)
        checks = alg.commutator_and_radical_checks(a)
        form = alg.symmetric_form_search(a, trials=64, seed=ctx.seed)
        name = a.name
        detail[name] = {
            "lemma21_holds": checks["lemma21_holds"],
            "form_found": form is not None,
        }
        if not checks["lemma21_holds"] or form is None:
            raise CheckFailure({"case": name, **detail[name]})
    dual = alg.trivial_extension(alg.split_semisimple(ctx.p, 1))
    checks = alg.commutator_and_radical_checks(dual)
    form = alg.symmetric_form_search(dual, trials=64, seed=ctx.seed)
    detail[dual.name] = {"lemma21_holds": checks["lemma21_holds"], "form_found": form is not None}
    if not checks["lemma21_holds"] or form is None:
        raise CheckFailure({"case": dual.name, **detail[dual.name]})
    return detail


def check_prop_2_2(ctx: SuiteContext) -> dict:
    """p-nilpotent ideal with Jacobson-Witt quotient for one truncated variable."""
    p = ctx.p
    wit = lielib.prop22_witness(p, (2,))
    detail = {
        "dim_hh1": wit.lie.dim,
        "dim_ideal": wit.n_ideal.dim,
        "quotient_dim": wit.quotient.dim,
    }
    if wit.lie.dim != p * p or wit.n_ideal.dim != p * p - p:
        raise CheckFailure(detail)
    torus_n = _torus_of_ideal(wit)
    detail["mu_ideal"] = torus_n
    if torus_n != 0:
        raise CheckFailure(detail)
    mu_l = lielib.greedy_maximal_torus(wit.lie, seed=ctx.seed)
    detail["mu_L"] = mu_l.dim
    detail["mu_L_status"] = mu_l.maximality_status
    if mu_l.dim != 1:
        raise CheckFailure(detail)
    return detail


def _torus_of_ideal(wit) -> int:
    """Maximal toral rank inside the witness ideal.

    p-nilpotency already forces 0 (a toral element is never p-nilpotent);
    enumeration corroborates when feasible.
    """
    L, ideal = wit.lie, wit.n_ideal
    sub = _sub_lie(L, ideal)
    if L.p**sub.dim <= lielib.ENUM_LIMIT_SLOW:
        torals = lielib._toral_elements_exhaustive(sub)
        if torals:
            return lielib._max_commuting_toral_dim(sub, torals)
    return 0 if all(lielib.is_p_nilpotent_element(L, v) for v in ideal.basis) else -1


def _sub_lie(L: lielib.RestrictedLie, sub: Subspace) -> lielib.RestrictedLie:
    """Restricted subalgebra on the subspace basis (must be closed)."""
    m = sub.dim
    bracket = np.zeros((m, m, m), dtype=INT)
    pmap = np.zeros((m, m), dtype=INT)
    for i in range(m):
        for j in range(m):
            bracket[i, j] = sub.coords(L.bracket_vec(sub.basis[i], sub.basis[j]))
        pmap[i] = sub.coords(lielib.jacobson_p_power(L, sub.basis[i]))
    return lielib.RestrictedLie(L.p, bracket, pmap)


def check_prop_2_3(ctx: SuiteContext) -> dict:
    """Simplicity of Der(B_n) for truncated exponents 1, non-simplicity beyond."""
    p = ctx.p
    detail = {}
    ns = (1, 2) if p == 3 else (1,)
    for n in ns:
        w = lielib.witt(p, n)
        simple = lielib.is_simple(w, seed=ctx.seed)
        detail[f"witt({p},{n})"] = {"dim": w.dim, "simple": simple}
        if w.dim != n * p**n or not simple:
            raise CheckFailure(detail)
    wit = lielib.prop22_witness(p, (2,))
    simple = lielib.is_simple(wit.lie, seed=ctx.seed)
    witness = lielib.adjoint_invariant_subspace(wit.lie, seed=ctx.seed)
    detail["mixed(2,)"] = {
        "simple": simple,
        "witness_ideal_dim": None if witness is None else witness.dim,
    }
    if simple or witness is None or not 0 < witness.dim < wit.lie.dim:
        raise CheckFailure(detail)
    return detail


def check_lemma_3_1(ctx: SuiteContext) -> dict:
    """u_lambda x u_mu = [lambda == mu+alpha] x u_mu and u_lambda x = x u_(lambda-alpha)."""
    p = ctx.p
    detail = {}
    for n in (1, 2):
        for r in (1, 2):
            if ctx.inject_fault == "lemma-3.1" and (n, r) == (1, 1):
                a, desc = ctx.faulty_smash(n, r)
            else:
                a, desc = ctx.smash(n, r)
            nc = desc.n_chars
            xvec = desc.x_vector()
            for lam in range(nc):
                ul = _basis_vec(a.dim, desc.index(lam, 0))
                ulx = a.mul_vec(ul, xvec)
                for mu in range(nc):
                    um = _basis_vec(a.dim, desc.index(mu, 0))
                    got = a.mul_vec(ulx, um)
                    want = (
                        a.mul_vec(xvec, um)
                        if (lam - mu - desc.alpha) % nc == 0
                        else np.zeros(a.dim, dtype=INT)
                    )
                    if not np.array_equal(got, want):
                        raise CheckFailure(
                            {
                                "params": {"p": p, "n": n, "r": r},
                                "lambda": lam,
                                "mu": mu,
                                "got": got.tolist(),
                                "want": want.tolist(),
                            }
                        )
                shifted = a.mul_vec(xvec, _basis_vec(a.dim, desc.index((lam - desc.alpha) % nc, 0)))
                if not np.array_equal(ulx, shifted):
                    raise CheckFailure({"params": {"p": p, "n": n, "r": r}, "lambda": lam})
            detail[f"(p={p},n={n},r={r})"] = "all pairs"
    return detail


def check_lemma_3_2(ctx: SuiteContext) -> dict:
    """ad(u_lambda x^j) formulas, exhaustively over the index ranges."""
    p = ctx.p
    detail = {}
    for n in (1, 2):
        for r in (1, 2):
            if p ** (n + r) > 256:
                detail[f"(p={p},n={n},r={r})"] = "skipped (dimension)"
                continue
            a, desc = ctx.smash(n, r)
            nc, xb = desc.n_chars, desc.x_bound
            xvec = desc.x_vector()
            for lam in range(nc):
                for j in range(xb):
                    d = hoch.named_inner(desc, lam, j, a)
                    # d(u_mu) = (delta_{mu+j*alpha,lam} - delta_{mu,lam}) u_lam x^j
                    for mu in range(nc):
                        got = d(_basis_vec(a.dim, desc.index(mu, 0)))
                        coef = (int((mu + j * desc.alpha - lam) % nc == 0) - int(mu == lam)) % p
                        want = coef * _basis_vec(a.dim, desc.index(lam, j)) % p
                        if not np.array_equal(got, want):
                            raise CheckFailure(
                                {"params": (p, n, r), "lambda": lam, "j": j, "mu": mu}
                            )
                        if j % (p**r) == 0 and got.any():
                            raise CheckFailure(
                                {"params": (p, n, r), "case": "p^r | j", "lambda": lam, "j": j}
                            )
                    # d(x) = (u_lam - u_(lam+alpha)) x^(j+1), zero iff j = p^n - 1
                    got = d(xvec)
                    want = np.zeros(a.dim, dtype=INT)
                    if j + 1 <= xb - 1:
                        want[desc.index(lam, j + 1)] = 1
                        want[desc.index((lam + desc.alpha) % nc, j + 1)] = p - 1
                    if not np.array_equal(got, want):
                        raise CheckFailure({"params": (p, n, r), "case": "d(x)", "lambda": lam, "j": j})
                    if (j == xb - 1) != (not got.any()):
                        raise CheckFailure(
                            {"params": (p, n, r), "case": "d(x)=0 iff j=p^n-1", "j": j}
                        )
            detail[f"(p={p},n={n},r={r})"] = "all indices"
    return detail


def _criterion3_params(p):
    return [(1, 1), (2, 1), (1, 2)] if p == 3 else [(1, 1), (2, 1)]


def check_lemma_3_3(ctx: SuiteContext) -> dict:
    """Every derivation is inner plus a combination of the weight derivations."""
    p = ctx.p
    detail = {}
    for n, r in _criterion3_params(p):
        a, desc = ctx.smash(n, r)
        h = ctx.smash_hh1(n, r)
        ider = Subspace(p, a.dim**2, np.vstack([f.vec() for f in h.ider_basis]))
        g_rows = np.vstack(
            [
                hoch.named_outer(desc, lam, j, a).vec()
                for lam in range(desc.n_chars)
                for j in desc.outer_exponents()
            ]
        )
        resid = ider.reduce_rows(g_rows)
        _, extra, _ = gfp.rref(resid, p)
        span_dim = ider.dim + extra
        detail[f"(p={p},n={n},r={r})"] = {"span_dim": span_dim, "dim_der": h.dim_der}
        if span_dim != h.dim_der:
            raise CheckFailure(detail)
    return detail


def check_lemma_3_4(ctx: SuiteContext) -> dict:
    """The weight derivations are well-defined derivations with the stated values."""
    p = ctx.p
    detail = {}
    for n, r in _criterion3_params(p):
        a, desc = ctx.smash(n, r)
        xvec = desc.x_vector()
        count = 0
        for lam in range(desc.n_chars):
            for j in desc.outer_exponents():
                g = hoch.named_outer(desc, lam, j, a)  # raises if Leibniz fails
                for mu in range(desc.n_chars):
                    if g(_basis_vec(a.dim, desc.index(mu, 0))).any():
                        raise CheckFailure({"params": (p, n, r), "case": "g(u)", "lambda": lam})
                want = _basis_vec(a.dim, desc.index(lam, j * p**r + 1))
                if not np.array_equal(g(xvec), want):
                    raise CheckFailure({"params": (p, n, r), "case": "g(x)", "lambda": lam, "j": j})
                count += 1
        detail[f"(p={p},n={n},r={r})"] = {"validated": count}
    return detail


def check_lemma_3_5(ctx: SuiteContext) -> dict:
    """H = {g_(0,j)} is a complement of IDer in Der, with the expected size."""
    p = ctx.p
    detail = {}
    for n, r in _criterion3_params(p):
        a, desc = ctx.smash(n, r)
        report = hoch.verify_complement(desc, algebra=a)
        expected_h = p ** (n - r) if n >= r else 1
        detail[f"(p={p},n={n},r={r})"] = report
        if not report["ok"] or report["h_size"] != expected_h:
            raise CheckFailure(report)
        if report["dim_der"] != report["dim_ider"] + report["h_size"]:
            raise CheckFailure(report)
    return detail


def check_lemma_3_6(ctx: SuiteContext) -> dict:
    """[g_(0,i), g_(0,j)] = (j - i) g_(0,i+j), zero past the index range."""
    p = ctx.p
    detail = {}
    for n, r in [(2, 1)] + ([(1, 1), (1, 2)] if p == 3 else [(1, 1)]):
        h = ctx.smash_hh1(n, r)
        hdim = h.dim
        for i in range(hdim):
            for j in range(hdim):
                want = np.zeros(hdim, dtype=INT)
                if i + j < hdim:
                    want[i + j] = (j - i) % p
                if not np.array_equal(h.bracket_table[i, j], want):
                    raise CheckFailure(
                        {
                            "params": (p, n, r),
                            "i": i,
                            "j": j,
                            "got": h.bracket_table[i, j].tolist(),
                            "want": want.tolist(),
                        }
                    )
        detail[f"(p={p},n={n},r={r})"] = f"table {hdim}x{hdim}"
    return detail


def check_lemma_3_7(ctx: SuiteContext) -> dict:
    """g_(0,0)^[p] = g_(0,0) and g_(0,j)^[p] = 0 for j != 0."""
    p = ctx.p
    detail = {}
    for n, r in [(2, 1)] + ([(1, 1), (1, 2)] if p == 3 else [(1, 1)]):
        h = ctx.smash_hh1(n, r)
        want = np.zeros((h.dim, h.dim), dtype=INT)
        if h.dim:
            want[0, 0] = 1
        if not np.array_equal(h.pmap_table, want):
            raise CheckFailure(
                {"params": (p, n, r), "got": h.pmap_table.tolist(), "want": want.tolist()}
            )
        detail[f"(p={p},n={n},r={r})"] = "p-map table"
    return detail


def check_thm_3_8(ctx: SuiteContext) -> dict:
    """L(A(n,r)) is trigonalizable with a one-dimensional certified torus at g_(0,0)."""
    p = ctx.p
    detail = {}
    for n, r in _criterion3_params(p):
        h = ctx.smash_hh1(n, r)
        L = lielib.from_hh1(h)
        trig = lielib.is_trigonalizable(L)
        torus = lielib.greedy_maximal_torus(L, seed=ctx.seed)
        g0 = np.zeros(L.dim, dtype=INT)
        g0[0] = 1
        torus_is_g0 = torus.dim == 1 and Subspace.from_vectors(
            [torus.basis[0]], p, L.dim
        ) == Subspace.from_vectors([g0], p, L.dim)
        detail[f"(p={p},n={n},r={r})"] = {
            "trigonalizable": trig,
            "mu": torus.dim,
            "status": torus.maximality_status,
            "torus_is_g00_class": torus_is_g0,
        }
        if not trig or torus.dim != 1 or torus.maximality_status != "exhaustively-certified":
            raise CheckFailure(detail)
        if not torus_is_g0:
            raise CheckFailure(detail)
    return detail


def check_lemma_3_9(ctx: SuiteContext) -> dict:
    """The quotient by the witness ideal is the one-variable Jacobson-Witt algebra."""
    p = ctx.p
    wit = lielib.prop22_witness(p, (2,))
    fq = lielib.fingerprint(wit.quotient, seed=ctx.seed)
    fw = lielib.fingerprint(lielib.witt(p, 1), seed=ctx.seed)
    detail = {"quotient": fq.to_json_dict(), "witt": fw.to_json_dict()}
    if fq != fw:
        raise CheckFailure(detail)
    return detail


def check_cor_3_10(ctx: SuiteContext) -> dict:
    """Solvability of the cohomology matches non-nilpotency of the input."""
    p = ctx.p
    ub = alg.u0_borel(p, 1)
    blocks = alg.block_decomposition(ub)
    detail = {"u0borel_blocks": len(blocks)}
    if len(blocks) != 1:
        raise CheckFailure(detail)
    lb = lielib.from_hh1(hoch.hh1(blocks[0][1], seed=ctx.seed))
    preds = lielib.series_and_predicates(lb)
    torus = lielib.greedy_maximal_torus(lb, seed=ctx.seed)
    detail["borel_case"] = {"solvable": preds["is_solvable"], "mu": torus.dim}
    if not preds["is_solvable"] or torus.dim != 1:
        raise CheckFailure(detail)
    wit = lielib.prop22_witness(p, (2,))
    predsn = lielib.series_and_predicates(wit.lie)
    torus_n = lielib.greedy_maximal_torus(wit.lie, seed=ctx.seed)
    detail["nilpotent_case"] = {
        "solvable": predsn["is_solvable"],
        "mu": torus_n.dim,
        "status": torus_n.maximality_status,
    }
    if predsn["is_solvable"] or torus_n.dim != 1:
        raise CheckFailure(detail)
    return detail


def check_blocks(ctx: SuiteContext) -> dict:
    """Block decompositions: idempotent laws, block counts, block cohomology."""
    p = ctx.p
    detail = {}
    ss = alg.split_semisimple(p, 3)
    blocks = alg.block_decomposition(ss)
    detail["split_semisimple"] = {"blocks": len(blocks), "dims": [b.dim for _, b in blocks]}
    if len(blocks) != 3 or any(b.dim != 1 for _, b in blocks):
        raise CheckFailure(detail)
    ub = alg.u0_borel(p, 1)
    ub_blocks = alg.block_decomposition(ub)
    detail["u0borel"] = {"blocks": len(ub_blocks)}
    if len(ub_blocks) != 1:
        raise CheckFailure(detail)
    for a, blks in ((ss, blocks), (ub, ub_blocks)):
        z = alg.center(a)
        total = np.zeros(a.dim, dtype=INT)
        for i, (e, _) in enumerate(blks):
            if not z.contains_vector(e):
                raise CheckFailure({"case": a.name, "issue": "idempotent not central"})
            if not np.array_equal(a.mul_vec(e, e), e):
                raise CheckFailure({"case": a.name, "issue": "not idempotent"})
            for j2, (e2, _) in enumerate(blks):
                if i != j2 and a.mul_vec(e, e2).any():
                    raise CheckFailure({"case": a.name, "issue": "not orthogonal"})
            total = (total + e) % p
        if not np.array_equal(total, a.unit):
            raise CheckFailure({"case": a.name, "issue": "idempotents do not sum to 1"})
    lb = lielib.from_hh1(hoch.hh1(ub_blocks[0][1], seed=ctx.seed))
    ls = lielib.from_hh1(ctx.smash_hh1(1, 1))
    same = lielib.fingerprint(lb, seed=ctx.seed) == lielib.fingerprint(ls, seed=ctx.seed)
    detail["u0borel_block_matches_smash"] = same
    if not same:
        raise CheckFailure(detail)
    return detail


def check_lemma_4_1(ctx: SuiteContext) -> dict:
    """Cohomology of the Kronecker trivial extension: gl2, torus of rank 2."""
    p = ctx.p
    te = ctx.tkr()
    h = hoch.hh1(te, seed=ctx.seed)
    L = lielib.from_hh1(h)
    detail = {"dim_hh1": L.dim}
    if L.dim != 4:
        raise CheckFailure(detail)
    preds = lielib.series_and_predicates(L)
    detail["center_dim"] = preds["center"].dim
    derived = preds["derived_series"][1]
    detail["derived_dim"] = derived.dim
    if preds["center"].dim != 1 or derived.dim != 3:
        raise CheckFailure(detail)
    dsub = _sub_lie(L, derived)
    detail["derived_simple"] = lielib.is_simple(dsub, seed=ctx.seed)
    if not detail["derived_simple"]:
        raise CheckFailure(detail)
    torus = lielib.greedy_maximal_torus(L, seed=ctx.seed)
    detail["mu"] = torus.dim
    detail["status"] = torus.maximality_status
    if torus.dim != 2 or torus.maximality_status != "exhaustively-certified":
        raise CheckFailure(detail)
    # the projection onto the dual half is an outer derivation with d^[p] = d
    d = te.dim // 2
    proj = np.zeros((te.dim, te.dim), dtype=INT)
    for i in range(d, te.dim):
        proj[i, i] = 1
    dproj = hoch.Derivation(te, proj, validate=True)
    cls = h.project(dproj)
    detail["projection_class_nonzero"] = bool(cls.any())
    pcls = lielib.jacobson_p_power(L, cls)
    detail["projection_toral"] = bool(np.array_equal(pcls, cls))
    if not cls.any() or not np.array_equal(pcls, cls):
        raise CheckFailure(detail)
    kr = ctx.kronecker()
    lk = lielib.from_hh1(hoch.hh1(kr, seed=ctx.seed))
    detail["kr_dim_hh1"] = lk.dim
    same = lielib.fingerprint(lk, seed=ctx.seed) == lielib.fingerprint(
        lielib.sl2(p), seed=ctx.seed
    )
    detail["kr_matches_sl2"] = same
    if lk.dim != 3 or not same:
        raise CheckFailure(detail)
    gl = lielib.gl2(p)
    detail["tkr_matches_gl2"] = lielib.fingerprint(L, seed=ctx.seed) == lielib.fingerprint(
        gl, seed=ctx.seed
    )
    if not detail["tkr_matches_gl2"]:
        raise CheckFailure(detail)
    return detail


def check_thm_4_2_mu(ctx: SuiteContext) -> dict:
    """Stored complexity constants equal the computed maximal toral ranks."""
    p = ctx.p
    expected = []
    for n, r in _criterion3_params(p):
        L = lielib.from_hh1(ctx.smash_hh1(n, r))
        expected.append((f"smash(p={p},n={n},r={r})", 1, lielib.greedy_maximal_torus(L, seed=ctx.seed).dim))
    wit = lielib.prop22_witness(p, (2,))
    expected.append(
        (f"trunc(p={p},exps=2)", 1, lielib.greedy_maximal_torus(wit.lie, seed=ctx.seed).dim)
    )
    te = ctx.tkr()
    Lt = lielib.from_hh1(hoch.hh1(te, seed=ctx.seed))
    expected.append(("tkr", 2, lielib.greedy_maximal_torus(Lt, seed=ctx.seed).dim))
    detail = {name: {"expected_cx": cx, "computed_mu": mu} for name, cx, mu in expected}
    bad = [name for name, cx, mu in expected if cx != mu]
    if bad:
        raise CheckFailure({"mismatches": bad, **detail})
    return detail


def check_properties(ctx: SuiteContext) -> dict:
    """Seeded property suites, 100 trials each."""
    p = ctx.p
    rng = np.random.default_rng(ctx.seed)
    sm, _ = ctx.smash(2, 1)
    h = ctx.smash_hh1(2, 1)
    ders = h.der_basis
    dmat = np.stack([f.matrix for f in ders])
    trials = 100
    d = sm.dim
    dflat = dmat.reshape(len(ders), d * d)
    # closure under bracket and p-th power, and [f, ad a] = ad f(a);
    # trials are drawn up front and validated as one batched stack
    c1 = rng.integers(0, p, size=(trials, len(ders)))
    c2 = rng.integers(0, p, size=(trials, len(ders)))
    fs = gfp.matmul(c1, dflat, p).reshape(trials, d, d).astype(np.float64)
    gs = gfp.matmul(c2, dflat, p).reshape(trials, d, d).astype(np.float64)
    brs = (np.matmul(fs, gs) - np.matmul(gs, fs)).astype(INT) % p
    powers = fs.copy()
    for _ in range(p - 1):
        powers = np.matmul(powers, fs) % p
    to_validate = np.vstack([brs, powers.astype(INT)])
    if gfp.matmul(to_validate, sm.unit, p).any():
        raise CheckFailure({"property": "closure (unit value)"})
    for gvec, rs in zip(sm.presentation.gen_vectors, sm.presentation_right_mats()):
        if hoch._gen_block_residual(sm, to_validate, gvec, rs).any():
            raise CheckFailure({"property": "closure under bracket / p-power"})
    for t in range(trials):
        avec = rng.integers(0, p, size=d)
        ada = ((sm.left_mult_matrix(avec) - sm.right_mult_matrix(avec)) % p).astype(np.float64)
        lhs = (fs[t] @ ada - ada @ fs[t]).astype(INT) % p
        fa = gfp.matmul(fs[t].astype(INT), avec, p)
        rhs = (sm.left_mult_matrix(fa) - sm.right_mult_matrix(fa)) % p
        if not np.array_equal(lhs, rhs):
            raise CheckFailure({"property": "[f, ad a] = ad f(a)"})
    # representative independence of the tables
    ider_flat = np.vstack([f.vec() for f in h.ider_basis])
    for _ in range(trials):
        coeffs = rng.integers(0, p, size=(h.dim, len(h.ider_basis)))
        shifts = gfp.matmul(coeffs, ider_flat, p).reshape(h.dim, d, d)
        reps = [
            hoch.Derivation(sm, (f.matrix + shift) % p)
            for f, shift in zip(h.complement_basis, shifts)
        ]
        btab, ptab = h._tables(reps)
        if not (np.array_equal(btab, h.bracket_table) and np.array_equal(ptab, h.pmap_table)):
            raise CheckFailure({"property": "representative independence"})
    # Jacobson p-map vs composition oracle on the cohomology of the smash
    L = lielib.from_hh1(h)
    comp_mats = np.stack([f.matrix for f in h.complement_basis])
    for _ in range(trials):
        x = rng.integers(0, p, size=L.dim)
        lift = np.tensordot(x, comp_mats, axes=(0, 0)) % p
        via_comp = h.project_matrix(gfp.mat_pow(lift, p, p))
        via_jac = lielib.jacobson_p_power(L, x)
        if not np.array_equal(via_comp, via_jac):
            raise CheckFailure({"property": "jacobson vs composition", "x": x.tolist()})
    # structural identities hold on every constructed Lie algebra: validation
    # runs in the RestrictedLie constructor; re-run explicitly here
    for Lx in (L, lielib.witt(p, 1), lielib.sl2(p), lielib.gl2(p)):
        Lx.validate()
    return {"trials": trials, "suites": 5}


CHECKS = [
    ("lemma-2.1", check_lemma_2_1),
    ("prop-2.2", check_prop_2_2),
    ("prop-2.3", check_prop_2_3),
    ("lemma-3.1", check_lemma_3_1),
    ("lemma-3.2", check_lemma_3_2),
    ("lemma-3.3", check_lemma_3_3),
    ("lemma-3.4", check_lemma_3_4),
    ("lemma-3.5", check_lemma_3_5),
    ("lemma-3.6", check_lemma_3_6),
    ("lemma-3.7", check_lemma_3_7),
    ("thm-3.8", check_thm_3_8),
    ("lemma-3.9", check_lemma_3_9),
    ("cor-3.10", check_cor_3_10),
    ("cor-3.10-blocks", check_blocks),
    ("lemma-4.1", check_lemma_4_1),
    ("thm-4.2-mu", check_thm_4_2_mu),
    ("properties-seeded", check_properties),
]


def run_suite(p: int = 3, seed: int = 0, inject_fault: str | None = None) -> list[CheckResult]:
    ctx = SuiteContext(p=p, seed=seed, inject_fault=inject_fault)
    results = []
    for check_id, fn in CHECKS:
        start = time.monotonic()
        try:
            details = fn(ctx)
            status = "pass"
        except CheckFailure as exc:
            details = {"counterexample": exc.payload}
            status = "fail"
        except Exception as exc:  # unexpected: report, never crash the suite
            details = {"error": f"{type(exc).__name__}: {exc}"}
            status = "fail"
        elapsed = int((time.monotonic() - start) * 1000)
        results.append(CheckResult(check_id, status, details, elapsed))
    return results


def render_markdown(results: list[CheckResult]) -> str:
    lines = ["| check | status | ms |", "|---|---|---|"]
    for r in results:
        lines.append(f"| {r.check_id} | {r.status} | {r.elapsed_ms} |")
    return "\n".join(lines) + "\n"
