"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion
lines.  Criterion 7's first clause is asserted exactly as stated; five of
its instances are arithmetically unattainable (the Turan graph itself
misses the strict branch-(b) degree threshold while the order threshold
forbids any smaller witness; the arithmetic is spelled out in that test's
docstring), so that one test fails by design rather than being weakened.
"""

import math
from fractions import Fraction

from oracles import brute_joint_size
from specturan.graph import (
    complete_graph,
    make_complete_multipartite,
    make_turan,
    make_turan_plus_edge,
    random_gnm,
    turan_part_sizes,
)
from specturan.harness import ExperimentConfig, run_exhaustive, run_experiment
from specturan.rng import SplitMix64
from specturan.spectral import (
    Verdict,
    compare_mu_to_turan,
    multipartite_mu_exact,
    spectral_radius,
)
from specturan.subgraph import (
    SearchStatus,
    book_size,
    count_cliques,
    find_kr_plus,
    joint_size,
    validate_embedding,
)
from specturan.theorems import (
    TheoremId,
    TriState,
    check_fact_tsize,
    check_stability,
    turan_edge_count,
)
from oracles import brute_book_size, brute_clique_count


def _line(num: int, title: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    print(f"CRITERION {num} [{title}]: {status}" + (f" ({detail})" if detail else ""))


def test_criterion_1_exhaustive_soundness():
    """n=7, r in {2,3}: zero counterexamples to Fact STT, Fact leNSMM, and
    the edge->spectral implication; tie log < 0.01% and fully resolved."""
    total = 1 << 21
    ok = True
    details = []
    for r in (2, 3):
        cfg = ExperimentConfig(
            mode="exhaustive",
            n_min=7,
            n_max=7,
            r=r,
            checks=("stt", "lenslmm", "edge-spectral"),
            tol=1e-10,
            stats=0,
        )
        rep = run_exhaustive(cfg)
        cx = len(rep.counterexamples)
        spectral_log = [e for e in rep.inconclusive_log if "check" not in e]
        lenslmm_log = [e for e in rep.inconclusive_log if e.get("check") == "lenslmm"]
        resolved = all("resolution" in e for e in rep.inconclusive_log)
        ok &= cx == 0
        ok &= len(spectral_log) < total * 0.0001
        ok &= len(lenslmm_log) < total * 0.0001
        ok &= resolved
        ok &= rep.instances_checked == 3 * total
        details.append(
            f"r={r}: cx={cx}, ties={len(spectral_log)} (<{total * 0.0001:.0f}), resolved={resolved}"
        )
    _line(1, "exhaustive soundness n=7", ok, "; ".join(details))
    assert ok, details


def test_criterion_2_tsize_exact():
    """8 r e(T_r(n)) >= 4(r-1)n^2 - r^2 in integers, 2<=r<=10, r<=n<=10000."""
    bad = []
    for r in range(2, 11):
        for n in range(r, 10001):
            e = turan_edge_count(n, r)
            if 8 * r * e < 4 * (r - 1) * n * n - r * r:
                bad.append((n, r))
    # the checker agrees with the raw integer loop on a sample
    for r, n in [(2, 2), (3, 7), (10, 10000), (7, 997)]:
        assert check_fact_tsize(n, r).conclusion is TriState.YES
    _line(2, "Fact tsize exact", not bad, f"{9 * 10000 - sum(range(2, 11))}+ instances")
    assert not bad, bad[:10]


def test_criterion_3_spectral_accuracy():
    """Iterative solver vs exact multipartite solver (>=500 random specs,
    total <= 60, r <= 6) and the K_n / K_{a,b} closed forms, all at 1e-8."""
    rng = SplitMix64(0xACCE55)
    worst = 0.0
    checked = 0
    while checked < 520:
        r = 1 + rng.below(6)
        sizes = tuple(1 + rng.below(60 // r) for _ in range(r))
        if sum(sizes) > 60:
            continue
        exact = multipartite_mu_exact(sizes)
        est = spectral_radius(make_complete_multipartite(sizes))
        assert est.converged, sizes
        worst = max(worst, abs(exact - est.value))
        checked += 1
    closed_worst = 0.0
    for n in range(1, 61):
        est = spectral_radius(complete_graph(n))
        closed_worst = max(closed_worst, abs(est.value - (n - 1)))
    for a in range(1, 31):
        for b in range(a, 31):
            est = spectral_radius(make_complete_multipartite((a, b)))
            closed_worst = max(closed_worst, abs(est.value - math.sqrt(a * b)))
    ok = worst < 1e-8 and closed_worst < 1e-8
    _line(
        3,
        "spectral solver accuracy",
        ok,
        f"{checked} random specs (worst {worst:.2e}), closed forms worst {closed_worst:.2e}",
    )
    assert ok


def test_criterion_4_theorem1_tight_families():
    """T_r(n) + intra-part edge: certified spectral hypothesis and exact
    rational joint conclusion for 2<=r<=4, r^2<=n<=200; brute joints n<=40."""
    failures = []
    brute_checked = 0
    for r in (2, 3, 4):
        for n in range(r * r, 201):
            g = make_turan_plus_edge(n, r)
            cmp = compare_mu_to_turan(g, r, tol=1e-10)
            if cmp.verdict is not Verdict.GREATER:
                failures.append(("hypothesis", r, n, cmp.verdict.value))
                continue
            rep = joint_size(g, r + 1)
            bound = Fraction(n ** (r - 1), r ** (2 * r + 4))
            if not Fraction(rep.size) > bound:
                failures.append(("conclusion", r, n, rep.size))
            if n <= 40:
                brute, _ = brute_joint_size(g, r + 1)
                if brute != rep.size:
                    failures.append(("brute", r, n, (rep.size, brute)))
                brute_checked += 1
    total = sum(201 - r * r for r in (2, 3, 4))
    _line(
        4,
        "Theorem 1 tight families",
        not failures,
        f"{total} instances, {brute_checked} brute-verified",
    )
    assert not failures, failures[:10]


def test_criterion_5_oracle_equivalence():
    """count/joint/book vs naive subset enumeration: 10^4 seeded random
    graphs with n <= 7, every r <= n."""
    rng = SplitMix64(0x09ACE5)  # fixed seed
    mismatches = []
    graphs = 0
    for i in range(10_000):
        n = 1 + (i % 7)
        m = rng.below(n * (n - 1) // 2 + 1)
        g = random_gnm(n, m, rng.next_u64())
        graphs += 1
        for r in range(1, n + 1):
            if count_cliques(g, r).count != brute_clique_count(g, r):
                mismatches.append(("count", i, r))
            if r >= 2:
                s, w = brute_joint_size(g, r)
                rep = joint_size(g, r)
                if (rep.size, rep.witness_edge) != (max(s, 0), w):
                    mismatches.append(("joint", i, r))
            bs, bw = brute_book_size(g, r)
            rep2 = book_size(g, r)
            if (rep2.size, rep2.base_clique) != (bs, bw):
                mismatches.append(("book", i, r))
    _line(5, "oracle equivalence", not mismatches, f"{graphs} graphs")
    assert not mismatches, mismatches[:10]


def test_criterion_6_finder_soundness():
    """find_kr_plus: FOUND on T_r(n)+e and exhaustively ABSENT on T_r(n)
    for spec (2,...,2), r in {2,3,4}, n = 3r..60; embeddings re-validated."""
    failures = []
    found = absent = 0
    for r in (2, 3, 4):
        spec = (2,) * r
        for n in range(3 * r, 61):
            res = find_kr_plus(make_turan_plus_edge(n, r), spec)
            if res.status is not SearchStatus.FOUND:
                failures.append(("found", r, n, res.status.value))
            else:
                validate_embedding(
                    make_turan_plus_edge(n, r), spec, res.embedding, True
                )
                found += 1
            res0 = find_kr_plus(make_turan(n, r), spec)
            if res0.status is not SearchStatus.ABSENT:
                failures.append(("absent", r, n, res0.status.value))
            else:
                absent += 1
    _line(6, "finder soundness", not failures, f"{found} found, {absent} absent")
    assert not failures, failures[:10]


def test_criterion_7_stability_turan_branch_b():
    """check_stability(T_r(n), r, b=1e-6) returns branch (b) with G_0 = G
    for r in {2,3}, n in [r, 100] -- asserted exactly as stated.

    Five instances are arithmetically false as stated, with b^(1/3) = 1e-2:
    branch (b) needs min degree strictly above (1 - 1/r - 0.07) n, but
    delta(T_r(n)) = n - ceil(n/r) misses it whenever ceil(n/r) - n/r >=
    0.07 n, i.e. at (r=2, n in {3,5,7}) and (r=3, n in {4,7}); e.g. n=7,
    r=2 gives delta = 3 <= 3.01.  The order floor (1 - 0.04) n exceeds
    n - 1 for n < 25, so no proper induced subgraph can substitute for the
    whole graph there.  This test therefore FAILS on exactly those five
    instances; it is kept faithful instead of being weakened.
    """
    failures = []
    for r in (2, 3):
        for n in range(r, 101):
            v = check_stability(make_turan(n, r), r, b=1e-6, which=TheoremId.T1_2)
            cert = v.certificate or {}
            if not (
                v.conclusion is TriState.YES
                and cert.get("branch") == "b"
                and cert.get("order") == n
            ):
                failures.append((r, n, v.detail.get("branch_b")))
    _line(
        7,
        "stability on T_r(n): branch (b) with G_0 = G",
        not failures,
        f"failing instances: {[(r, n) for r, n, _ in failures]}"
        + ("; arithmetically unattainable as stated, kept faithful" if failures else ""),
    )
    assert not failures, (
        "branch (b) with G_0 = G is arithmetically unattainable at these "
        f"(r, n, branch_b_outcome): {failures}; see this test's docstring"
    )


def test_criterion_7_stability_plus_edge_branch_a():
    """check_stability(T_r(n)+e) decides branch (a) with an exact rational
    margin recorded."""
    failures = []
    for r in (2, 3):
        for n in range(r + 1, 101):
            if turan_part_sizes(n, r)[0] < 2:
                continue
            v = check_stability(
                make_turan_plus_edge(n, r), r, b=1e-6, which=TheoremId.T1_2
            )
            cert = v.certificate or {}
            bound = Fraction(n ** (r - 1), r ** (2 * r + 5))
            margin_ok = (
                v.lhs is not None
                and v.rhs is not None
                and Fraction(v.lhs) > Fraction(v.rhs) == bound
            )
            if not (
                v.conclusion is TriState.YES
                and cert.get("branch") == "a"
                and margin_ok
            ):
                failures.append((r, n))
    _line(7, "stability on T_r(n)+e: branch (a), exact margin", not failures)
    assert not failures, failures[:10]


def test_criterion_7_stability_k5():
    """K_5 with r=2: hypothesis yes, witness not found, branch (a) decided
    by the brute-forced js_3(K_5) = 3."""
    v = check_stability(complete_graph(5), 2, b=1e-6, which=TheoremId.T1_2)
    brute_js, _ = brute_joint_size(complete_graph(5), 3)
    ok = (
        v.hypothesis is TriState.YES
        and v.detail["branch_b"] == "not_found"
        and v.certificate["branch"] == "a"
        and int(v.lhs) == 3 == brute_js
    )
    _line(7, "stability on K_5", ok)
    assert ok


def test_criterion_8_determinism():
    """Byte-identical report JSON for repeated runs of each mode."""
    ok = True
    details = []
    configs = [
        ExperimentConfig(
            mode="exhaustive", n_min=5, n_max=5, r=2,
            checks=("stt", "lenslmm", "edge-spectral", "tsize"),
        ),
        ExperimentConfig(
            mode="family_sweep", n_min=4, n_max=20, r=3,
            checks=("stt", "t1", "lenslmm"),
        ),
        ExperimentConfig(
            mode="random_hunt", n_min=12, n_max=14, r=2,
            checks=("stt", "lenslmm"), trials=10, seed=77,
        ),
        ExperimentConfig(
            mode="tightness", n_min=20, n_max=20, r=2,
            trials=4, epsilon=0.4, seed=77, budget=10**6,
        ),
    ]
    for cfg in configs:
        first = run_experiment(cfg).to_json_text()
        second = run_experiment(cfg).to_json_text()
        same = first == second
        ok &= same
        details.append(f"{cfg.mode}: {'identical' if same else 'DIFFERS'}")
    _line(8, "determinism", ok, "; ".join(details))
    assert ok, details
