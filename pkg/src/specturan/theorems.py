"""Hypothesis/conclusion checkers for the spectral saturation theorems.

Every checker returns a TheoremVerdict with tri-state hypothesis and
conclusion flags plus a machine-checkable certificate.  Inequality
conclusions (joint counts against n^{r-1}/r^k bounds, degree thresholds,
edge counts) are decided in exact rational arithmetic; floating point
enters only through eigenvalue estimates, which carry certified intervals,
so a YES is rigorous and a near-tie comes back INCONCLUSIVE instead of
being guessed.

A verdict with hypothesis YES and conclusion NO is a counterexample
record: it serializes the full graph so the claim can be re-checked
independently.  Regime flags (n > r^15 and friends) are advisory labels,
never gates; the asymptotic regimes are far beyond desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .graph import Graph, turan_part_sizes, write_edge_list
from .spectral import (
    DEFAULT_TOL,
    SpectralComparison,
    Verdict,
    compare_mu_to_threshold,
    compare_mu_to_turan,
    spectral_radius,
)
from .subgraph import (
    DEFAULT_BUDGET,
    DEFAULT_COLOR_CAP,
    Embedding,
    SearchStatus,
    book_size,
    clique_exists,
    count_cliques,
    find_kr_plus,
    is_r_partite,
    joint_size,
)


class TheoremId(Enum):
    T1 = "t1"
    T2 = "t2"
    T3 = "t3"
    T1_2 = "t1.2"
    T2_2 = "t2.2"
    T3_2 = "t3.2"
    FACT_STT = "stt"
    FACT_LENSLMM = "lenslmm"
    FACT_TSIZE = "tsize"
    FACT_LEKD = "lekd"
    FACT_THV4 = "thv4"
    EDGE_IMPLIES_SPECTRAL = "edge-spectral"
    BOOK_REMARK = "book"


class TriState(Enum):
    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class TheoremParams:
    """Parameter bundle; regime predicates are advisory, not gates."""

    r: int
    n: int
    c: float | None = None
    b: float | None = None

    def theorem2_regime(self) -> bool:
        if self.c is None or self.n < 2:
            return False
        upper = Fraction(1, self.r ** ((2 * self.r + 9) * (self.r + 1)))
        return self.c * math.log(self.n) >= 2.0 and Fraction(self.c) <= upper

    def theorem3_regime(self) -> bool:
        if self.c is None or self.c <= 0 or self.n < 1:
            return False
        return math.log(self.n) >= 2.0 / self.c

    def stability_regime(self) -> bool:
        if self.b is None:
            return False
        return 0 < Fraction(self.b) < Fraction(1, 1024 * self.r**6)

    def thv4_regime(self) -> bool:
        if self.c is None or self.n < 2:
            return False
        upper = Fraction(1, self.r ** ((self.r + 8) * self.r))
        return self.c * math.log(self.n) >= 2.0 and Fraction(self.c) <= upper


@dataclass
class TheoremVerdict:
    theorem_id: TheoremId
    n: int
    r: int
    params: dict
    hypothesis: TriState
    conclusion: TriState
    in_regime: bool
    vacuous: bool = False
    certificate: dict | None = None
    lhs: str | None = None
    rhs: str | None = None
    detail: dict = field(default_factory=dict)
    graph_edges: str | None = None

    @property
    def is_counterexample(self) -> bool:
        return self.hypothesis is TriState.YES and self.conclusion is TriState.NO

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem_id.value,
            "n": self.n,
            "r": self.r,
            "params": self.params,
            "hypothesis": self.hypothesis.value,
            "conclusion": self.conclusion.value,
            "in_regime": self.in_regime,
            "vacuous": self.vacuous,
            "certificate": self.certificate,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "detail": self.detail,
            "graph": self.graph_edges,
        }


def default_theorem3_c(r: int) -> float:
    """c = r^{-(2r+9)(r+1)}; underflows to 0.0 far above desk scale."""
    return float(Fraction(1, r ** ((2 * r + 9) * (r + 1))))


def _hyp_from(cmp: SpectralComparison) -> TriState:
    if cmp.verdict is Verdict.GREATER:
        return TriState.YES
    if cmp.verdict is Verdict.NOT_GREATER:
        return TriState.NO
    return TriState.INCONCLUSIVE


def _spectral_detail(cmp: SpectralComparison) -> dict:
    return {
        "mu_value": cmp.mu_g.value,
        "mu_residual": cmp.mu_g.residual,
        "mu_converged": cmp.mu_g.converged,
        "mu_reference": cmp.mu_turan,
    }


def _attach_graph(verdict: TheoremVerdict, g: Graph | None) -> TheoremVerdict:
    if g is not None and verdict.is_counterexample:
        verdict.graph_edges = write_edge_list(g)
    return verdict


def _verify_clique(g: Graph, vertices: Sequence[int]) -> None:
    for i, u in enumerate(vertices):
        for v in vertices[i + 1 :]:
            if not g.has_edge(u, v):
                raise AssertionError(f"claimed clique misses edge ({u},{v})")


def _verify_joint_witness(g: Graph, r: int, edge: tuple[int, int], size: int) -> None:
    u, v = edge
    from .subgraph import _count_cliques_in  # independent recount

    cn = g.neighbors_mask(u) & g.neighbors_mask(v)
    if _count_cliques_in(g._adj, cn, r - 2) != size:
        raise AssertionError("joint witness count does not re-validate")


def _floor_guarded(x: float, mp_value) -> int:
    """floor with a high-precision recompute when x sits on an integer edge."""
    if abs(x - round(x)) < 1e-9:
        import mpmath

        with mpmath.workdps(50):
            return int(mpmath.floor(mp_value()))
    return int(math.floor(x))


def _ceil_guarded(x: float, mp_value) -> int:
    if abs(x - round(x)) < 1e-9:
        import mpmath

        with mpmath.workdps(50):
            return int(mpmath.ceil(mp_value()))
    return int(math.ceil(x))


def floor_c_log_n(c: float, n: int) -> int:
    """floor(c * ln n), guarded against float boundary error."""
    if n <= 1 or c <= 0:
        return 0 if c >= 0 or n <= 1 else -1
    import mpmath

    return _floor_guarded(
        c * math.log(n), lambda: mpmath.mpf(c) * mpmath.log(n)
    )


def ceil_n_power(n: int, exponent: float) -> int:
    """ceil(n ** exponent), guarded against float boundary error."""
    if n == 0:
        return 0
    if n == 1:
        return 1
    import mpmath

    return _ceil_guarded(
        float(n) ** exponent, lambda: mpmath.mpf(n) ** mpmath.mpf(exponent)
    )


def turan_edge_count(n: int, r: int) -> int:
    """e(T_r(n)) from the partition, exact integer."""
    sizes = turan_part_sizes(n, r)
    return (n * n - sum(s * s for s in sizes)) // 2


# ---------------------------------------------------------------------------
# Fact checkers
# ---------------------------------------------------------------------------


def check_spectral_turan(g: Graph, r: int, tol: float = DEFAULT_TOL) -> TheoremVerdict:
    """mu(G) > mu(T_r(n))  =>  G contains K_{r+1}."""
    cmp = compare_mu_to_turan(g, r, tol)
    clique = clique_exists(g, r + 1)
    if clique is not None:
        _verify_clique(g, clique)
        conclusion = TriState.YES
        cert = {"type": "clique", "vertices": list(clique)}
    else:
        conclusion = TriState.NO
        cert = None
    v = TheoremVerdict(
        TheoremId.FACT_STT,
        g.n,
        r,
        {"tol": tol},
        _hyp_from(cmp),
        conclusion,
        in_regime=True,
        certificate=cert,
        detail=_spectral_detail(cmp),
    )
    return _attach_graph(v, g)


def check_theorem1(g: Graph, r: int, tol: float = DEFAULT_TOL) -> TheoremVerdict:
    """mu(G) > mu(T_r(n))  =>  js_{r+1}(G) > n^{r-1}/r^{2r+4}."""
    cmp = compare_mu_to_turan(g, r, tol)
    report = joint_size(g, r + 1)
    bound = Fraction(g.n ** (r - 1), r ** (2 * r + 4))
    holds = Fraction(report.size) > bound
    cert = None
    if report.witness_edge is not None:
        _verify_joint_witness(g, r + 1, report.witness_edge, report.size)
        cert = {
            "type": "joint",
            "witness_edge": list(report.witness_edge),
            "size": report.size,
        }
    v = TheoremVerdict(
        TheoremId.T1,
        g.n,
        r,
        {"tol": tol},
        _hyp_from(cmp),
        TriState.YES if holds else TriState.NO,
        in_regime=g.n > r**15,
        certificate=cert if holds else None,
        lhs=str(report.size),
        rhs=str(bound),
        detail={**_spectral_detail(cmp), "slack": float(Fraction(report.size) - bound)},
    )
    return _attach_graph(v, g)


def _embedding_cert(emb: Embedding) -> dict:
    return {
        "type": "embedding",
        "parts": [list(p) for p in emb.parts],
        "extra_edge": list(emb.extra_edge) if emb.extra_edge else None,
    }


def _kr_plus_conclusion(
    g: Graph, sizes: list[int], budget: int
) -> tuple[TriState, dict | None, dict]:
    result = find_kr_plus(g, sizes, budget=budget)
    detail = {"target_sizes": sizes, "nodes_expanded": result.nodes_expanded}
    if result.status is SearchStatus.FOUND:
        return TriState.YES, _embedding_cert(result.embedding), detail
    if result.status is SearchStatus.ABSENT:
        return TriState.NO, None, detail
    return TriState.INCONCLUSIVE, None, detail


def check_theorem2(
    g: Graph,
    r: int,
    c: float,
    tol: float = DEFAULT_TOL,
    budget: int = DEFAULT_BUDGET,
) -> TheoremVerdict:
    """mu(G) > mu(T_r(n))  =>  K_r^+(floor(c ln n), ..., ceil(n^{1-sqrt c}))."""
    cmp = compare_mu_to_turan(g, r, tol)
    n = g.n
    s = floor_c_log_n(c, n)
    params = TheoremParams(r=r, n=n, c=c)
    if s <= 0:
        v = TheoremVerdict(
            TheoremId.T2,
            n,
            r,
            {"c": c, "tol": tol, "budget": budget},
            _hyp_from(cmp),
            TriState.YES,
            in_regime=params.theorem2_regime(),
            vacuous=True,
            detail={**_spectral_detail(cmp), "floor_c_ln_n": s},
        )
        return _attach_graph(v, g)
    t = ceil_n_power(n, 1.0 - math.sqrt(c))
    sizes = [max(2, s)] + [s] * (r - 2) + [t]
    conclusion, cert, search_detail = _kr_plus_conclusion(g, sizes, budget)
    v = TheoremVerdict(
        TheoremId.T2,
        n,
        r,
        {"c": c, "tol": tol, "budget": budget},
        _hyp_from(cmp),
        conclusion,
        in_regime=params.theorem2_regime(),
        certificate=cert,
        detail={**_spectral_detail(cmp), **search_detail},
    )
    return _attach_graph(v, g)


def check_theorem3(
    g: Graph,
    r: int,
    tol: float = DEFAULT_TOL,
    budget: int = DEFAULT_BUDGET,
    c_override: float | None = None,
) -> TheoremVerdict:
    """Balanced variant: K_r^+(floor(c ln n), ..., floor(c ln n)) with the
    paper's fixed c = r^{-(2r+9)(r+1)} unless overridden."""
    c = default_theorem3_c(r) if c_override is None else c_override
    cmp = compare_mu_to_turan(g, r, tol)
    n = g.n
    s = floor_c_log_n(c, n)
    params = TheoremParams(r=r, n=n, c=c)
    if s <= 0:
        v = TheoremVerdict(
            TheoremId.T3,
            n,
            r,
            {"c": c, "tol": tol, "budget": budget},
            _hyp_from(cmp),
            TriState.YES,
            in_regime=params.theorem3_regime(),
            vacuous=True,
            detail={**_spectral_detail(cmp), "floor_c_ln_n": s},
        )
        return _attach_graph(v, g)
    sizes = [max(2, s)] + [s] * (r - 1)
    conclusion, cert, search_detail = _kr_plus_conclusion(g, sizes, budget)
    v = TheoremVerdict(
        TheoremId.T3,
        n,
        r,
        {"c": c, "tol": tol, "budget": budget},
        _hyp_from(cmp),
        conclusion,
        in_regime=params.theorem3_regime(),
        certificate=cert,
        detail={**_spectral_detail(cmp), **search_detail},
    )
    return _attach_graph(v, g)


def check_fact_lenslmm(g: Graph, r: int, tol: float = DEFAULT_TOL) -> TheoremVerdict:
    """k_r(G) >= (mu/n - 1 + 1/r) * r(r-1)/(r+1) * (n/r)^{r+1}, rigorous via
    the certified upper bound on mu."""
    if r < 2:
        raise ValueError("r must be at least 2")
    n = g.n
    kr = count_cliques(g, r).count
    if n == 0:
        return TheoremVerdict(
            TheoremId.FACT_LENSLMM,
            0,
            r,
            {"tol": tol},
            TriState.YES,
            TriState.YES,
            in_regime=True,
            lhs="0",
            rhs="0",
        )
    est = spectral_radius(g, tol)

    def rhs_at(mu: Fraction) -> Fraction:
        return (
            (mu / n - 1 + Fraction(1, r))
            * Fraction(r * (r - 1), r + 1)
            * Fraction(n, r) ** (r + 1)
        )

    detail = {
        "mu_value": est.value,
        "mu_residual": est.residual,
        "mu_converged": est.converged,
    }
    if not est.converged:
        conclusion = TriState.INCONCLUSIVE
        rhs_str = None
    else:
        rhs_hi = rhs_at(Fraction(est.value) + Fraction(est.residual))
        rhs_lo = rhs_at(Fraction(est.value) - Fraction(est.residual))
        if Fraction(kr) >= rhs_hi:
            conclusion = TriState.YES
        elif Fraction(kr) < rhs_lo:
            conclusion = TriState.NO
        else:
            conclusion = TriState.INCONCLUSIVE
        rhs_str = str(rhs_hi)
        detail["slack"] = float(Fraction(kr) - rhs_hi)
    v = TheoremVerdict(
        TheoremId.FACT_LENSLMM,
        n,
        r,
        {"tol": tol},
        TriState.YES,
        conclusion,
        in_regime=True,
        lhs=str(kr),
        rhs=rhs_str,
        detail=detail,
    )
    return _attach_graph(v, g)


def check_fact_tsize(n: int, r: int) -> TheoremVerdict:
    """2 e(T_r(n)) >= (1 - 1/r) n^2 - r/4, checked as
    8 r e >= 4 (r-1) n^2 - r^2 in integers."""
    if r < 1:
        raise ValueError("r must be at least 1")
    e = turan_edge_count(n, r)
    lhs = 8 * r * e
    rhs = 4 * (r - 1) * n * n - r * r
    return TheoremVerdict(
        TheoremId.FACT_TSIZE,
        n,
        r,
        {},
        TriState.YES,
        TriState.YES if lhs >= rhs else TriState.NO,
        in_regime=True,
        certificate={"type": "rational", "identity": f"8*{r}*{e} >= 4*({r}-1)*{n}^2 - {r}^2"},
        lhs=str(lhs),
        rhs=str(rhs),
        detail={"edges": e, "slack": lhs - rhs},
    )


def _lekd_hypothesis(g: Graph, r: int) -> tuple[TriState, dict | None, dict]:
    clique = clique_exists(g, r + 1)
    n = g.n
    delta = g.min_degree()
    # delta > (1 - 1/r - 1/r^4) n  <=>  r^4 delta > (r^4 - r^3 - 1) n
    degree_ok = r**4 * delta > (r**4 - r**3 - 1) * n
    detail = {"min_degree": delta, "has_clique": clique is not None}
    if clique is not None and degree_ok:
        _verify_clique(g, clique)
        return TriState.YES, {"type": "clique", "vertices": list(clique)}, detail
    return TriState.NO, None, detail


def check_fact_lekd(g: Graph, r: int) -> TheoremVerdict:
    """K_{r+1} present and delta > (1-1/r-1/r^4)n  =>
    js_{r+1} > n^{r-1}/r^{r+3}."""
    if r < 2:
        raise ValueError("r must be at least 2")
    hyp, hyp_cert, hyp_detail = _lekd_hypothesis(g, r)
    report = joint_size(g, r + 1)
    bound = Fraction(g.n ** (r - 1), r ** (r + 3))
    holds = Fraction(report.size) > bound
    cert = None
    if holds and report.witness_edge is not None:
        _verify_joint_witness(g, r + 1, report.witness_edge, report.size)
        cert = {
            "type": "joint",
            "witness_edge": list(report.witness_edge),
            "size": report.size,
        }
    v = TheoremVerdict(
        TheoremId.FACT_LEKD,
        g.n,
        r,
        {},
        hyp,
        TriState.YES if holds else TriState.NO,
        in_regime=True,
        certificate=cert,
        lhs=str(report.size),
        rhs=str(bound),
        detail={**hyp_detail, "hypothesis_clique": hyp_cert},
    )
    return _attach_graph(v, g)


def check_fact_thv4(
    g: Graph,
    r: int,
    c: float,
    budget: int = DEFAULT_BUDGET,
) -> TheoremVerdict:
    """K_{r+1} present and delta > (1-1/r-1/r^4)n  =>
    K_r^+(floor(c ln n), ..., ceil(n^{1-c r^3}))."""
    if r < 2:
        raise ValueError("r must be at least 2")
    hyp, hyp_cert, hyp_detail = _lekd_hypothesis(g, r)
    n = g.n
    s = floor_c_log_n(c, n)
    params = TheoremParams(r=r, n=n, c=c)
    if s <= 0:
        v = TheoremVerdict(
            TheoremId.FACT_THV4,
            n,
            r,
            {"c": c, "budget": budget},
            hyp,
            TriState.YES,
            in_regime=params.thv4_regime(),
            vacuous=True,
            detail={**hyp_detail, "floor_c_ln_n": s},
        )
        return _attach_graph(v, g)
    t = ceil_n_power(n, 1.0 - c * r**3)
    sizes = [max(2, s)] + [s] * (r - 2) + [t]
    conclusion, cert, search_detail = _kr_plus_conclusion(g, sizes, budget)
    v = TheoremVerdict(
        TheoremId.FACT_THV4,
        n,
        r,
        {"c": c, "budget": budget},
        hyp,
        conclusion,
        in_regime=params.thv4_regime(),
        certificate=cert,
        detail={**hyp_detail, **search_detail},
    )
    return _attach_graph(v, g)


def check_edge_implies_spectral(
    g: Graph, r: int, tol: float = DEFAULT_TOL
) -> TheoremVerdict:
    """e(G) > e(T_r(n))  =>  mu(G) > mu(T_r(n))."""
    if r < 2:
        raise ValueError("r must be at least 2")
    e_g = g.edge_count()
    e_t = turan_edge_count(g.n, r)
    cmp = compare_mu_to_turan(g, r, tol) if g.n >= 1 else None
    if cmp is None:
        conclusion = TriState.NO
        detail = {}
    else:
        conclusion = _hyp_from(cmp)  # conclusion IS the spectral comparison
        detail = _spectral_detail(cmp)
    v = TheoremVerdict(
        TheoremId.EDGE_IMPLIES_SPECTRAL,
        g.n,
        r,
        {"tol": tol},
        TriState.YES if e_g > e_t else TriState.NO,
        conclusion,
        in_regime=True,
        lhs=str(e_g),
        rhs=str(e_t),
        detail=detail,
    )
    return _attach_graph(v, g)


def check_book_remark(g: Graph, r: int, tol: float = DEFAULT_TOL) -> TheoremVerdict:
    """mu(G) > mu(T_r(n))  =>  many (r+1)-cliques share an r-clique; checked
    as existence, with the book size reported for the cn-scaling remark."""
    cmp = compare_mu_to_turan(g, r, tol)
    report = book_size(g, r)
    cert = None
    if report.base_clique is not None:
        _verify_clique(g, report.base_clique)
        cert = {
            "type": "book",
            "base_clique": list(report.base_clique),
            "size": report.size,
        }
    v = TheoremVerdict(
        TheoremId.BOOK_REMARK,
        g.n,
        r,
        {"tol": tol},
        _hyp_from(cmp),
        TriState.YES if report.size >= 1 else TriState.NO,
        in_regime=True,
        certificate=cert if report.size >= 1 else None,
        lhs=str(report.size),
        rhs="1",
        detail={
            **_spectral_detail(cmp),
            "size_over_n": report.size / g.n if g.n else 0.0,
        },
    )
    return _attach_graph(v, g)


# ---------------------------------------------------------------------------
# Stability theorems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StabilityWitness:
    vertices: tuple[int, ...]
    coloring: tuple[int, ...]  # color of vertices[i]


def _conflict_peel_order(g: Graph, members: list[int], r: int) -> int:
    """Vertex to evict: most monochromatic conflicts under a best-effort
    greedy r-coloring of the induced subgraph (ties lowest index)."""
    sub = g.induced_subgraph(members)
    order = sorted(range(sub.n), key=lambda v: (-sub.degree(v), v))
    colors = [-1] * sub.n
    for v in order:
        counts = [0] * r
        row = sub.neighbors_mask(v)
        for u in range(sub.n):
            if colors[u] != -1 and (row >> u) & 1:
                counts[colors[u]] += 1
        colors[v] = min(range(r), key=lambda c: (counts[c], c))
    conflicts = [0] * sub.n
    for v in range(sub.n):
        row = sub.neighbors_mask(v)
        for u in range(v + 1, sub.n):
            if (row >> u) & 1 and colors[u] == colors[v]:
                conflicts[u] += 1
                conflicts[v] += 1
    worst = max(range(sub.n), key=lambda v: (conflicts[v], -v))
    return members[worst]


def find_stability_witness(
    g: Graph,
    r: int,
    order_threshold: float,
    degree_threshold: float,
    color_cap: int = DEFAULT_COLOR_CAP,
) -> tuple[StabilityWitness | None, bool]:
    """Greedy peeling toward an induced r-partite subgraph meeting the
    order and (strict, vs whole-graph n) minimum-degree thresholds.

    Sound but incomplete: (witness, capped).  A None witness means "not
    found", never a refutation; capped=True flags a coloring-cap abort.
    """
    members = list(range(g.n))
    while True:
        if len(members) < order_threshold:
            return None, False
        sub = g.induced_subgraph(members)
        res = is_r_partite(sub, r, node_cap=color_cap)
        if res.status is SearchStatus.BUDGET:
            return None, True
        if res.status is SearchStatus.FOUND:
            coloring = res.coloring
            break
        evict = _conflict_peel_order(g, members, r)
        members.remove(evict)
    # Degree peel: smallest degree first, ties lowest vertex.
    while members:
        sub = g.induced_subgraph(members)
        degs = sub.degrees()
        low = [i for i in range(sub.n) if degs[i] <= degree_threshold]
        if not low:
            break
        victim = min(low, key=lambda i: (degs[i], members[i]))
        members.pop(victim)
    if not members or len(members) < order_threshold:
        return None, False
    sub = g.induced_subgraph(members)
    res = is_r_partite(sub, r, node_cap=color_cap)
    if res.status is SearchStatus.BUDGET:
        return None, True
    if res.status is not SearchStatus.FOUND:
        return None, False
    _verify_coloring(sub, res.coloring)
    return StabilityWitness(tuple(members), res.coloring), False


def _verify_coloring(g: Graph, coloring: Sequence[int]) -> None:
    for u, v in g.edges():
        if coloring[u] == coloring[v]:
            raise AssertionError(f"coloring not proper on edge ({u},{v})")


def check_stability(
    g: Graph,
    r: int,
    b: float,
    which: TheoremId = TheoremId.T1_2,
    tol: float = DEFAULT_TOL,
    budget: int = DEFAULT_BUDGET,
    c: float | None = None,
    order_coeff: float = 4.0,
    degree_coeff: float = 7.0,
) -> TheoremVerdict:
    """Stability theorems: mu(G) > (1-1/r-b)n forces branch (a) (a large
    joint or K_r^+) or branch (b) (a large induced r-partite subgraph with
    high minimum degree).

    Both branches are always evaluated; the certificate records branch (a)
    when it holds, else branch (b).  Branch (b)'s finder is incomplete, so
    its failure alone never yields conclusion NO.  order_coeff/degree_coeff
    expose the (4, 7) constants; (3, 6) reproduces the weaker companion
    statement whose printed form mixes b and c.
    """
    if which not in (TheoremId.T1_2, TheoremId.T2_2, TheoremId.T3_2):
        raise ValueError(f"not a stability theorem: {which}")
    if r < 2:
        raise ValueError("r must be at least 2")
    n = g.n
    threshold = (1 - Fraction(1, r) - Fraction(b)) * n
    cmp = compare_mu_to_threshold(g, threshold, tol)
    params_obj = TheoremParams(r=r, n=n, c=c, b=b)

    cbrt = b ** (1.0 / 3.0)
    order_threshold = (1.0 - order_coeff * cbrt) * n
    degree_threshold = (1.0 - 1.0 / r - degree_coeff * cbrt) * n

    # Branch (a)
    vacuous = False
    a_cert: dict | None = None
    a_lhs = a_rhs = None
    if which is TheoremId.T1_2:
        report = joint_size(g, r + 1)
        bound = Fraction(n ** (r - 1), r ** (2 * r + 5))
        a_state = TriState.YES if Fraction(report.size) > bound else TriState.NO
        a_lhs, a_rhs = str(report.size), str(bound)
        if a_state is TriState.YES and report.witness_edge is not None:
            _verify_joint_witness(g, r + 1, report.witness_edge, report.size)
            a_cert = {
                "type": "joint",
                "witness_edge": list(report.witness_edge),
                "size": report.size,
            }
    else:
        if c is None:
            c = default_theorem3_c(r) / 2.0
            params_obj = TheoremParams(r=r, n=n, c=c, b=b)
        s = floor_c_log_n(c, n)
        if s <= 0:
            a_state = TriState.YES
            vacuous = True
        else:
            if which is TheoremId.T2_2:
                t = ceil_n_power(n, 1.0 - 2.0 * math.sqrt(c))
                sizes = [max(2, s)] + [s] * (r - 2) + [t]
            else:
                sizes = [max(2, s)] + [s] * (r - 1)
            a_state, a_cert, _ = _kr_plus_conclusion(g, sizes, budget)

    # Branch (b)
    witness, capped = find_stability_witness(
        g, r, order_threshold, degree_threshold
    )
    if witness is not None:
        sub = g.induced_subgraph(list(witness.vertices))
        b_state = TriState.YES
        b_cert = {
            "type": "induced_r_partite",
            "vertices": list(witness.vertices),
            "coloring": list(witness.coloring),
            "order": len(witness.vertices),
            "min_degree": sub.min_degree(),
        }
    else:
        b_state = TriState.INCONCLUSIVE  # incomplete finder: not-found only
        b_cert = None

    if a_state is TriState.YES:
        conclusion = TriState.YES
        cert = {"branch": "a", **(a_cert or {"type": "vacuous"})}
    elif b_state is TriState.YES:
        conclusion = TriState.YES
        cert = {"branch": "b", **b_cert}
    else:
        conclusion = TriState.INCONCLUSIVE
        cert = None

    in_regime = params_obj.stability_regime()
    if which is TheoremId.T2_2:
        in_regime = in_regime and params_obj.theorem2_regime()
    elif which is TheoremId.T3_2:
        in_regime = in_regime and params_obj.theorem3_regime()

    v = TheoremVerdict(
        which,
        n,
        r,
        {"b": b, "c": c, "tol": tol, "budget": budget,
         "order_coeff": order_coeff, "degree_coeff": degree_coeff},
        _hyp_from(cmp),
        conclusion,
        in_regime=in_regime,
        vacuous=vacuous,
        certificate=cert,
        lhs=a_lhs,
        rhs=a_rhs,
        detail={
            **_spectral_detail(cmp),
            "hypothesis_threshold": float(threshold),
            "branch_a": a_state.value,
            "branch_b": "found" if witness is not None else ("capped" if capped else "not_found"),
            "order_threshold": order_threshold,
            "degree_threshold": degree_threshold,
        },
    )
    return _attach_graph(v, g)
