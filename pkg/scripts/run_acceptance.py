# scripts/run_acceptance.py
"""Desk-scale acceptance run: proposition suite, errata, Gallai, constant
weight, branch-and-bound oracle, extremal values, propagation, K_2r.

Usage: python scripts/run_acceptance.py [--quick] [--workers N]
Results are printed and saved to data/acceptance_results.json.
"""
import argparse
import json
import os
import sys
import time
from fractions import Fraction
from typing import Callable, Dict, List

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.catalog import catalog_entry
from app.direct import DOMINATING, check_alpha, maj_step, propagate
from app.graph import Lcg64, VertexSet, family_graphs, generate, random_gnp, serialize_edge_list
from app.harness import constant_weight_scan, gallai_scan, verify_characterization
from app.services import configured_workers
from app.solvers import bb_min_alliance, entry_predicate, predicate_for, solve_extremal

SUITE = [
    ("signed-dom", {"k": 1}),
    ("signed-dom", {"k": 2}),
    ("signed-dom", {"k": 3}),
    ("signed-total", {"k": 1}),
    ("signed-total", {"k": 2}),
    ("signed-total", {"k": 3}),
    ("minus", {"k": 1}),
    ("efficient", {"k": 1}),
    ("efficient", {"k": 2}),
    ("partial-monopoly", {}),
    ("monopoly", {}),
    ("half-dom", {}),
    ("half-ind", {}),
    ("positive-influence", {}),
    ("maj1", {}),
    ("robust", {}),
    ("sigma-rho", {"r": 2}),
    ("sigma-rho", {"r": 3}),
]

BB_SPECS = [
    ("defensive", {"r": 0}),
    ("defensive", {"r": 1}),
    ("offensive", {"r": 0}),
    ("offensive", {"r": 1}),
    ("powerful", {"r": 0}),
    ("signed-dominating", {"k": 1}),
]


def proposition_suite(n_max: int, workers: int) -> Dict:
    rows = []
    for prop_id, params in SUITE:
        family = "regular" if prop_id == "sigma-rho" else "all-min-degree-1"
        report = verify_characterization(prop_id, family, n_max, params, workers)
        rows.append({"proposition": report.proposition_id, "sets": report.sets_checked, "counterexamples": len(report.counterexamples)})
        print(f"  {report.proposition_id:<24} sets={report.sets_checked:<10} counterexamples={len(report.counterexamples)}")
    return {"passed": all(r["counterexamples"] == 0 for r in rows), "rows": rows}


def errata_reproduction(workers: int) -> Dict:
    c4 = serialize_edge_list(generate("cycle", [4]))
    k3 = serialize_edge_list(generate("complete", [3]))
    star = serialize_edge_list(generate("star", [2]))
    monopoly = verify_characterization("monopoly-paper", "all", 4, {}, workers)
    remark = verify_characterization("remark", "all", 4, {"r": 2}, workers)
    minus = verify_characterization("minus", "all-min-degree-1", 3, {"k": 2}, workers)
    found_monopoly = any(c.graph_edgelist == c4 and c.set == "{0,2}" and not c.direct and c.framework for c in monopoly.counterexamples)
    found_remark = any(c.graph_edgelist == k3 and c.set == "{0,1,2}" and c.direct and not c.framework for c in remark.counterexamples)
    found_minus = any(c.graph_edgelist == star and c.set == "{0,1}" and not c.direct and c.framework for c in minus.counterexamples)
    print(f"  monopoly-paper C4/{{0,2}}: {found_monopoly}; remark K3/V r=2: {found_remark}; minus(k=2) star/{{0,1}}: {found_minus}")
    return {"passed": found_monopoly and found_remark and found_minus}


def gallai(n_max: int, workers: int) -> Dict:
    report = gallai_scan(n_max, "all-min-degree-1", workers=workers)
    print(f"  graphs={report.graphs_checked} failures={len(report.failures)}")
    return {"passed": report.holds, "graphs": report.graphs_checked}


def constant_weight(sample: int) -> Dict:
    rng = Lcg64(2024)
    graphs = [random_gnp(2 + rng.next() % 7, 1, 2, rng.next()) for _ in range(sample)]
    graphs += list(family_graphs("cycles", 8, 3)) + list(family_graphs("paths", 8))
    report = constant_weight_scan(graphs)
    print(f"  graphs={report.graphs_checked} failures={len(report.failures)}")
    return {"passed": report.holds, "graphs": report.graphs_checked}


def bb_oracle(count: int) -> Dict:
    rng = Lcg64(7)
    disagreements = 0
    start = time.perf_counter()
    for i in range(count):
        n = 8 + rng.next() % 9
        g = random_gnp(n, 1 + rng.next() % 3, 4, rng.next())
        name, params = BB_SPECS[i % len(BB_SPECS)]
        entry = catalog_entry(name, params)
        bb = bb_min_alliance(g, entry.spec)
        ex = solve_extremal(g, entry_predicate(entry), "min")
        if bb.size != ex.size:
            disagreements += 1
            print(f"  MISMATCH {entry.name} n={n}: bb={bb.size} exhaustive={ex.size}")
    elapsed = time.perf_counter() - start
    print(f"  instances={count} disagreements={disagreements} elapsed={elapsed:.1f}s")
    return {"passed": disagreements == 0, "elapsed": round(elapsed, 1)}


def extremal_values() -> Dict:
    checks = [
        (generate("cycle", [5]), predicate_for("offensive", {"r": 0}), "min", 2),
        (generate("complete", [4]), predicate_for("defensive", {"r": 0}), "min", 3),
        (generate("cycle", [6]), predicate_for("powerful", {"r": 0}), "min", 4),
        (generate("cycle", [4]), predicate_for("robust-majority"), "max", 0),
    ]
    ok = all(solve_extremal(g, p, obj).size == want for g, p, obj, want in checks)
    print(f"  all four values match: {ok}")
    return {"passed": ok}


def propagation(instances: int) -> Dict:
    c4 = generate("cycle", [4])
    run = propagate(c4, VertexSet.of(4, [0]), None)
    two_rounds = run.rounds_used == 2 and len(run.final) == 4
    rng = Lcg64(99)
    monotone = True
    for _ in range(instances):
        n = 1 + rng.next() % 8
        g = random_gnp(n, 1, 2, rng.next())
        q = rng.next() % (1 << n)
        p = q & rng.next() % (1 << n)
        monotone &= maj_step(g, VertexSet(n, p)).issubset(maj_step(g, VertexSet(n, q)))
    print(f"  C4 from {{0}} in 2 rounds: {two_rounds}; monotone on {instances} instances: {monotone}")
    return {"passed": two_rounds and monotone}


def k2r_threshold() -> Dict:
    ok = True
    for r in (2, 3, 4):
        g = generate("complete", [2 * r])
        x = VertexSet.of(2 * r, range(r))
        bound = Fraction(r, 2 * r - 1)
        ok &= entry_predicate(catalog_entry("offensive", {"r": 1})).holds(g, x)
        ok &= check_alpha(g, x, bound, DOMINATING)
        ok &= not check_alpha(g, x, bound + Fraction(1, 100), DOMINATING)
    print(f"  K_2r threshold at r/(2r-1): {ok}")
    return {"passed": ok}


def main():
    parser = argparse.ArgumentParser(description="Run the acceptance checks")
    parser.add_argument("--quick", action="store_true", help="smaller orders and samples")
    parser.add_argument("--workers", type=int, default=None)
    args = parser.parse_args()
    workers = args.workers or configured_workers()

    steps: List[tuple[str, Callable[[], Dict]]] = [
        ("proposition suite", lambda: proposition_suite(4 if args.quick else 5, workers)),
        ("errata reproduction", lambda: errata_reproduction(workers)),
        ("gallai identity", lambda: gallai(5 if args.quick else 7, workers)),
        ("constant weight", lambda: constant_weight(20 if args.quick else 100)),
        ("bb oracle", lambda: bb_oracle(24 if args.quick else 200)),
        ("extremal values", extremal_values),
        ("propagation", lambda: propagation(100 if args.quick else 1000)),
        ("K_2r threshold", k2r_threshold),
    ]
    results = {}
    for name, step in steps:
        print(f"[{name}]")
        results[name] = step()
    passed = sum(1 for r in results.values() if r["passed"])
    print(f"{passed}/{len(results)} checks passed")

    os.makedirs("data", exist_ok=True)
    out_path = "data/acceptance_results.json"
    with open(out_path, "w", encoding="utf-8") as f:
        json.dump(results, f, ensure_ascii=False, indent=2)
    print(f"Saved detailed results to {out_path}")
    sys.exit(0 if passed == len(results) else 1)

if __name__ == "__main__":
    main()
