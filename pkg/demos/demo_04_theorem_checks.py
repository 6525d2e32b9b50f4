#!/usr/bin/env python3
"""Walkthrough: theorem and fact checkers.

Each checker evaluates a hypothesis and a conclusion independently and
returns tri-state flags plus a machine-checkable certificate.  Inequality
conclusions are decided in exact rational arithmetic; spectral hypotheses
carry certified intervals.  A (yes, no) verdict would be a counterexample
record and serializes the full graph.
"""

import json

from specturan import (
    check_edge_implies_spectral,
    check_fact_lekd,
    check_fact_lenslmm,
    check_fact_tsize,
    check_spectral_turan,
    check_stability,
    check_theorem1,
    check_theorem2,
    complete_graph,
    make_turan,
    make_turan_plus_edge,
)


def show(label, v):
    cert = v.certificate.get("type") if v.certificate else None
    extras = []
    if v.lhs is not None:
        extras.append(f"lhs={v.lhs} rhs={v.rhs}")
    if v.vacuous:
        extras.append("vacuous")
    if not v.in_regime:
        extras.append("out-of-regime")
    print(f"{label}: hypothesis={v.hypothesis.value} conclusion={v.conclusion.value}"
          f" cert={cert} {' '.join(extras)}")


g = make_turan_plus_edge(40, 2)
print("== One intra-part edge above T_2(40) ==")
show("spectral Turan  ", check_spectral_turan(g, 2))
show("joint theorem   ", check_theorem1(g, 2))
show("edge->spectral  ", check_edge_implies_spectral(g, 2))
show("clique lower bnd", check_fact_lenslmm(g, 2))
show("degree+clique   ", check_fact_lekd(g, 2))

print()
print("== Edge-count fact for the Turan graph (pure integers) ==")
show("tsize(7,3)      ", check_fact_tsize(7, 3))

print()
print("== The K_r^+ theorem needs an explicit density c at desk scale ==")
v = check_theorem2(make_turan_plus_edge(60, 3), 3, c=0.55)
show("theorem 2 c=0.55", v)
print("  target sizes were", v.detail["target_sizes"])
print("  the asymptotic regime 2/ln n <= c <= r^-(2r+9)(r+1) is empty below"
      " astronomical n, so in_regime stays false and is advisory only")

print()
print("== Stability: branch (a) joints or branch (b) induced r-partite ==")
show("T_2(20), b=1e-3 ", check_stability(make_turan(20, 2), 2, b=1e-3))
show("T_2(20)+e       ", check_stability(make_turan_plus_edge(20, 2), 2, b=1e-3))
show("K_5             ", check_stability(complete_graph(5), 2, b=1e-6))

print()
print("== A deliberate out-of-regime (yes, no) record serializes its graph ==")
v = check_theorem2(complete_graph(4), 2, c=10.0)
payload = v.to_json_dict()
print(f"counterexample record: {v.is_counterexample}; graph field:")
print(json.dumps(payload["graph"]))
