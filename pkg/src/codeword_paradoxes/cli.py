"""Batch command-line front end.

One subcommand per claim cluster, so a CI run can pinpoint which
construction regressed.  Exit codes: 0 the predicted verdict is reproduced,
1 it is falsified (a prominent report is emitted), 2 usage error, 3 a
bounded search ran out of budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from .codes import code_by_name, five_qubit_code, steane_code, CODE_NAMES
from .errors import BudgetExceededError
from .kochen_specker import (build_ks_set, build_orthogonality_graph,
                             canonical_contexts, enumerate_contexts,
                             ks_colorability)
from .paradoxes import (build_canonical_array, canonical_pentagon_instance,
                        check_array, check_parity_contradiction,
                        compatible_pairs, find_determinations,
                        pentagon_description, search_parity_contradictions)
from .report import (Report, VERDICT_CONTRADICTION, VERDICT_FAIL, VERDICT_PASS)
from .selftest import run_all
from .stabilizer import invariant_subgroup, knill_laflamme_check, verify_stabilizes
from .statevector import inner


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        report, exit_code = args.handler(args)
    except BudgetExceededError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    out = report.to_json() if args.format == "json" else report.to_text()
    sys.stdout.write(out)
    path = report.write_to_report_dir()
    if path and args.format == "text":
        print(f"report written to {path}")
    return exit_code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codeword-paradoxes",
        description="Exact verification of codeword stabilizers and the "
                    "local-realism contradictions built on them.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(handler=handler)
        return p

    p = add("verify-code", _cmd_verify_code,
            "stabilizer group, signs, invariant subgroup, error correction")
    p.add_argument("--code", choices=CODE_NAMES, required=True)

    p = add("reality", _cmd_reality,
            "element-of-reality determinations for one single-qubit target")
    p.add_argument("--code", choices=CODE_NAMES, required=True)
    p.add_argument("--site", type=int, required=True)
    p.add_argument("--letter", choices=("x", "y", "z"), required=True)
    p.add_argument("--state", type=int, choices=(0, 1), default=0)

    add("pentagon", _cmd_pentagon,
        "the six-operator parity contradiction, both codewords")

    add("array", _cmd_array,
        "the 6x13 operator array: row/column products and the impossibility flag")

    p = add("ks", _cmd_ks,
            "104-projector set, orthogonality graph, contexts, colorability")
    p.add_argument("--budget", type=int, default=1_000_000,
                   help="node budget for context enumeration")
    p.add_argument("--decision-budget", type=int, default=1_000_000,
                   help="decision budget for the coloring search")
    p.add_argument("--dump-set", metavar="PATH", default=None,
                   help="write vertex/edge/context tables as JSON")

    p = add("steane-search", _cmd_steane_search,
            "automated parity-contradiction search over the 7-qubit group")
    p.add_argument("--max", dest="max_subset", type=int, default=10)
    p.add_argument("--state", choices=("0", "1", "both"), default="both")
    p.add_argument("--budget", type=int, default=3_000_000)

    p = add("selftest", _cmd_selftest,
            "randomized property suites against the dense-matrix oracle")
    p.add_argument("--seed", type=int, default=0)

    return parser


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_verify_code(args) -> tuple[Report, int]:
    code = code_by_name(args.code)
    group = code.group()
    stab = verify_stabilizes(group, code.codeword0, code.codeword1)
    stable = invariant_subgroup(group)
    kl = knill_laflamme_check(code.codeword0, code.codeword1, code.correctable)
    must_fail_results = []
    for err in code.must_fail:
        probe = knill_laflamme_check(code.codeword0, code.codeword1,
                                     list(code.correctable) + [err])
        must_fail_results.append({"error": str(err), "fails_as_expected": not probe.ok})

    checks = {
        "group_order": {"expected": code.expected_group_order, "got": len(group)},
        "codewords_orthogonal": inner(code.codeword0, code.codeword1).is_zero(),
        "all_elements_stabilize": stab.ok,
        "invariant_subgroup_order": {"expected": code.expected_stable_order,
                                     "got": len(stable)},
        "error_correction_pairs": kl.pairs_checked,
        "error_correction_ok": kl.ok,
        "uncorrectable_errors": must_fail_results,
    }
    ok = (len(group) == code.expected_group_order
          and checks["codewords_orthogonal"]
          and stab.ok
          and len(stable) == code.expected_stable_order
          and kl.ok
          and all(r["fails_as_expected"] for r in must_fail_results))
    details = {
        "checks": checks,
        "group": group.as_lines(),
        "invariant_subgroup": [str(e.op) for e in stable],
        "violations": stab.violations,
        "error_correction_failures": kl.failures,
    }
    return Report("verify-code", VERDICT_PASS if ok else VERDICT_FAIL,
                  code=args.code, details=details), 0 if ok else 1


def _cmd_reality(args) -> tuple[Report, int]:
    code = code_by_name(args.code)
    group = code.group()
    if not 1 <= args.site <= code.n:
        print(f"error: --site must be in 1..{code.n} for code {args.code}",
              file=sys.stderr)
        raise SystemExit(2)
    determinations = find_determinations(group, args.site,
                                         args.letter.upper(), args.state)
    pairs = compatible_pairs(determinations)
    details = {
        "target": f"sigma_{args.site}{args.letter}",
        "state": args.state,
        "determinations": [
            {"witness": str(d.witness), "predicted_product": d.predicted_product}
            for d in determinations
        ],
        "determination_count": len(determinations),
        "compatible_pairs": [
            [str(a.witness), str(b.witness)] for a, b in pairs
        ],
        "compatible_pair_count": len(pairs),
    }
    return Report("reality", VERDICT_PASS, code=args.code, details=details), 0


def _cmd_pentagon(args) -> tuple[Report, int]:
    code = five_qubit_code()
    per_state = {}
    confirmed = True
    for ws in (0, 1):
        rep = check_parity_contradiction(canonical_pentagon_instance(code, ws))
        confirmed &= rep.contradiction
        per_state[f"codeword{ws}"] = {
            "operators": rep.operators,
            "symbol_multiplicities": rep.multiplicities,
            "all_multiplicities_even": rep.all_even,
            "eigenvalue_product": rep.eigenvalue_product,
            "operator_product": rep.matrix_product,
            "contradiction": rep.contradiction,
        }
    details = {"pentagon": pentagon_description(code), "instances": per_state}
    verdict = VERDICT_CONTRADICTION if confirmed else VERDICT_FAIL
    return Report("pentagon", verdict, code="five", details=details), 0 if confirmed else 1


def _cmd_array(args) -> tuple[Report, int]:
    arr = build_canonical_array()
    rep = check_array(arr)
    ok = (all(rep.row_commuting) and all(rep.col_commuting)
          and rep.row_signs_match and rep.col_signs_match and rep.impossibility)
    details = {
        "shape": list(arr.shape),
        "rows": [[str(op) for op in row] for row in arr.rows],
        "row_commuting": rep.row_commuting,
        "row_products": rep.row_products,
        "col_commuting": rep.col_commuting,
        "col_products": rep.col_products,
        "rowwise_total": rep.rowwise_total,
        "colwise_total": rep.colwise_total,
        "impossibility": rep.impossibility,
    }
    verdict = VERDICT_CONTRADICTION if ok else VERDICT_FAIL
    return Report("array", verdict, code="five", details=details), 0 if ok else 1


def _cmd_ks(args) -> tuple[Report, int]:
    vertices = build_ks_set()
    graph = build_orthogonality_graph(vertices)
    contexts = enumerate_contexts(graph, node_budget=args.budget)
    canon = canonical_contexts(graph)
    context_ids = {c.ids for c in contexts}
    canonical_found = all(c.ids in context_ids for c in canon)

    verdict_full = ks_colorability(graph, contexts,
                                   decision_budget=args.decision_budget)
    verdict_canon = ks_colorability(graph, canon,
                                    decision_budget=args.decision_budget)

    ranks = {1: sum(1 for v in vertices if v.rank == 1),
             4: sum(1 for v in vertices if v.rank == 4)}
    details = {
        "vertices": len(vertices),
        "rank_counts": ranks,
        "projectors_per_dimension": f"{len(vertices)}/32 = {len(vertices) / 32}",
        "edges": graph.edge_count,
        "contexts": len(contexts),
        "canonical_contexts_found": canonical_found,
        "colorability": {
            "satisfiable": verdict_full.satisfiable,
            "decisions": verdict_full.decisions,
            "propagations": verdict_full.propagations,
            "conflicts": verdict_full.conflicts,
        },
        "canonical_contexts_alone_satisfiable": verdict_canon.satisfiable,
    }
    if verdict_full.satisfiable:
        details["coloring"] = {
            graph.vertices[vid].label(): value
            for vid, value in sorted(verdict_full.coloring.items())
        }
    if args.dump_set:
        _dump_ks_set(args.dump_set, graph, contexts)
        details["dump"] = args.dump_set

    ok = (len(vertices) == 104 and canonical_found
          and not verdict_full.satisfiable)
    verdict = VERDICT_CONTRADICTION if ok else VERDICT_FAIL
    return Report("ks", verdict, code="five", details=details), 0 if ok else 1


def _dump_ks_set(path: str, graph, contexts) -> None:
    payload = {
        "vertices": [
            {
                "id": v.vid,
                "rank": v.rank,
                "kind": v.kind,
                "label": v.label(),
                "provenance": list(v.provenance),
                "spanning_vectors": [vec.to_pairs() for vec in v.projector.vectors],
            }
            for v in graph.vertices
        ],
        "edges": graph.edges(),
        "contexts": [list(c.ids) for c in contexts],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _cmd_steane_search(args) -> tuple[Report, int]:
    code = steane_code()
    group = code.group()
    states = (0, 1) if args.state == "both" else (int(args.state),)
    per_state = {}
    any_found = False
    for ws in states:
        res = search_parity_contradictions(group, ws, args.max_subset,
                                           code.codeword(ws),
                                           node_budget=args.budget)
        any_found |= res.found
        sizes = sorted(set(res.subset_sizes))
        per_state[f"codeword{ws}"] = {
            "contradictions_found": len(res.instances),
            "subset_sizes": sizes,
            "minimal_size": sizes[0] if sizes else None,
            "complete_to_size": res.complete_to_size,
            "examples": [
                inst.operator_texts() for inst in res.instances[:3]
            ],
        }
    details = {
        "group_order": len(group),
        "max_subset": args.max_subset,
        "results": per_state,
    }
    verdict = VERDICT_CONTRADICTION if any_found else VERDICT_FAIL
    return Report("steane-search", verdict, code="steane",
                  details=details), 0 if any_found else 1


def _cmd_selftest(args) -> tuple[Report, int]:
    results = run_all(seed=args.seed)
    ok = all(r.ok for r in results)
    details = {
        "seed": args.seed,
        "suites": [
            {"name": r.name, "trials": r.trials, "ok": r.ok, "detail": r.detail}
            for r in results
        ],
    }
    return Report("selftest", VERDICT_PASS if ok else VERDICT_FAIL,
                  details=details), 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
