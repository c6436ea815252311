"""``hoi`` command line: reproduce claim suites and print the desiderata table."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .claims import DEFAULT_SEED, DEFAULT_TOL, FIELDS, SUITES, ClaimReport, run_suite

# (desideratum, density-cube cell, QQT cell); a cell is (mark, claim ids, note)
CHECKLIST = [
    (
        "States",
        ("✓", ["DC-CV", "DC-CV-POS"], "a consistent fragment exists but the axioms leave it non-unique"),
        ("✓", ["QQT-STATE-MIXED", "QQT-STATE-PURE"], ""),
    ),
    (
        "Effects",
        ("✓", ["DC-ORTHO", "DC-PHYS-D"], ""),
        ("✓", ["QQT-EFFECT-N00", "QQT-EFFECT-ORACLE"], ""),
    ),
    (
        "Transformations",
        ("?", ["DC-TPRIME-AXIOMS", "DC-TPRIME-NONHERM"], "an axiom-compliant map sends a state to a cube with complex outcome weights"),
        ("✓", ["QQT-STATE-UNITARY-N2", "QQT-STATE-UNITARY-N3"], ""),
    ),
    (
        "Composite systems",
        ("×", [], "no composite construction is available"),
        ("?", ["QQT-SWAP"], "only workable if transformations are restricted to local ones; a global swap leaves the state space"),
    ),
    (
        "Higher-order interference",
        ("✓", ["DC-SPLIT-RHO1"], ""),
        ("?", ["QQT-I3", "QQT-I4", "QQT-IN-QUANTUM"], "nonzero at every order, but only through a non-unique choice of slit effects"),
    ),
    (
        "Hyperdecoherence",
        ("✓", ["DC-DE-ID", "DC-ADJOINT"], ""),
        ("✓", ["QQT-HYPERDECO", "QQT-HYPERDECO-POS"], ""),
    ),
]


def checklist_rows() -> list[dict]:
    rows = []
    for name, dcell, qcell in CHECKLIST:
        row = {"desideratum": name}
        for key, (mark, ids, note) in (("density_cubes", dcell), ("quartic_quantum_theory", qcell)):
            row[key] = {"mark": mark, "claims": ids, "note": note}
        rows.append(row)
    return rows


def render_checklist_markdown(rows) -> str:
    lines = ["| Desideratum | Density cubes | Quartic quantum theory |", "|---|---|---|"]
    notes: list[str] = []

    def cell(c):
        text = c["mark"]
        if c["note"]:
            notes.append(c["note"])
            text += f"[{len(notes)}]"
        if c["claims"]:
            text += " (" + ", ".join(c["claims"]) + ")"
        return text

    for r in rows:
        lines.append(
            f"| {r['desideratum']} | {cell(r['density_cubes'])} | {cell(r['quartic_quantum_theory'])} |"
        )
    lines.append("")
    lines += [f"[{k}] {note}" for k, note in enumerate(notes, 1)]
    return "\n".join(lines) + "\n"


def _md_value(v) -> str:
    return json.dumps(v).replace("|", "\\|")


def render_markdown(reports: list[ClaimReport]) -> str:
    lines = ["| " + " | ".join(FIELDS) + " |", "|" + "---|" * len(FIELDS)]
    for r in reports:
        d = r.to_dict()
        cells = [d[f] if isinstance(d[f], str) else _md_value(d[f]) for f in FIELDS]
        lines.append("| " + " | ".join(c.replace("|", "\\|") for c in cells) + " |")
    return "\n".join(lines) + "\n"


def render_json(reports: list[ClaimReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, ensure_ascii=False) + "\n"


def exit_code(reports: list[ClaimReport]) -> int:
    return 1 if any(r.status == "FAIL" for r in reports) else 0


def _default_seed() -> int:
    env = os.environ.get("HOI_SEED")
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise SystemExit(f"hoi: HOI_SEED must be an integer, got {env!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hoi", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("reproduce", help="run a claim suite")
    rep.add_argument("suite", choices=("all", *SUITES))
    rep.add_argument("--format", choices=("json", "markdown"), default="markdown")
    rep.add_argument("--seed", type=int, default=None, help="default: $HOI_SEED or 42")
    rep.add_argument("--tol", type=float, default=DEFAULT_TOL)

    chk = sub.add_parser("checklist", help="print the desiderata table")
    chk.add_argument("--format", choices=("json", "markdown"), default="markdown")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "checklist":
        rows = checklist_rows()
        if args.format == "json":
            sys.stdout.write(json.dumps(rows, indent=2, ensure_ascii=False) + "\n")
        else:
            sys.stdout.write(render_checklist_markdown(rows))
        return 0

    seed = _default_seed() if args.seed is None else args.seed
    reports = run_suite(args.suite, seed=seed, tol=args.tol)
    out = render_json(reports) if args.format == "json" else render_markdown(reports)
    sys.stdout.write(out)
    return exit_code(reports)


if __name__ == "__main__":
    raise SystemExit(main())
