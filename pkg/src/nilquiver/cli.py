"""Command-line surface: enumeration, translation, decomposition, rendering,
representation-type queries and a self-check suite.

Exit codes: 0 on success, 2 on invalid input, 1 on an internal assertion
failure or a failed self-check.  All output is byte-deterministic for a
fixed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .circle_diagrams import (
    FrobeniusCircleDiagram,
    diagram_from_json,
    frobenius_diagram_of_partition,
    from_dot,
    to_ascii,
    to_dot,
)
from .decomposer import decompose_enhanced
from .orbit_maps import (
    StripedBipartition,
    bipartition_to_label,
    enumerate_striped,
    label_to_bipartition,
    striped_from_label,
    striped_label,
)
from .partitions import (
    Multipartition,
    Partition,
    enumerate_bipartitions,
    enumerate_partitions,
)
from .rep_builder import QuiverRep, build_framed_jordan, build_striped
from .residues import (
    OrbitLabel,
    delta,
    ell_quotient_core,
    enumerate_orbit_labels,
    from_core_quotient,
)
from .rep_type import classify, tits_form, wildness_witness


def _read_payload(path: str) -> dict:
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"input is not valid JSON: {exc}") from exc


# ---------------------------------------------------------------------------
# enumerate-orbits
# ---------------------------------------------------------------------------


def _cmd_enumerate(args) -> int:
    if args.n < 0 or args.ell < 1 or (args.x is not None and args.x < 1):
        raise ValueError("need n >= 0, ell >= 1 and x >= 1")
    labels = enumerate_orbit_labels(args.n, args.ell)
    if args.x is not None:
        labels = [lbl for lbl in labels if lbl.lam.weight(args.ell) <= args.x]
    target = delta(args.ell, args.n)
    for lbl in labels:
        frob = frobenius_diagram_of_partition(lbl.lam, args.ell)
        marked = ",".join(f"(len={p},mark={o})" for p, o in frob.circles) or "-"
        plain = ",".join(
            f"({i},{length})" for i, comp in enumerate(lbl.nu) for length in comp
        ) or "-"
        dv = lbl.dimension_vector()
        check = "ok" if dv.main == target.main else "BAD"
        print(f"label={lbl}  marked=[{marked}]  plain=[{plain}]  dims={dv}  [{check}]")
    print(f"total: {len(labels)}")
    return 0


# ---------------------------------------------------------------------------
# translate
# ---------------------------------------------------------------------------


def _label_from_payload(fmt: str, payload: dict, ell: int | None) -> OrbitLabel:
    if fmt == "ah":
        mu = Partition(payload["mu"])
        nu = Partition(payload["nu"])
        eta, zeta = bipartition_to_label(mu, nu)
        return OrbitLabel(eta, Multipartition((zeta,)))
    if fmt == "johnson":
        if ell is None:
            raise ValueError("--ell is required for striped input")
        striped = StripedBipartition.from_json(payload, ell)
        return striped_label(striped)
    if fmt == "label":
        return OrbitLabel.from_json(payload)
    raise ValueError(f"unknown format {fmt!r}")


def _label_to_payload(fmt: str, label: OrbitLabel) -> dict:
    if fmt == "ah":
        if label.ell != 1:
            raise ValueError("the marked-Jordan bipartition form needs ell = 1")
        mu, nu = label_to_bipartition(label.lam, label.nu[0])
        return {"mu": list(mu.parts), "nu": list(nu.parts)}
    if fmt == "johnson":
        return striped_from_label(label).to_json()
    if fmt == "label":
        return label.to_json()
    raise ValueError(f"unknown format {fmt!r}")


def _cmd_translate(args) -> int:
    payload = _read_payload(args.input)
    label = _label_from_payload(args.source, payload, args.ell)
    print(json.dumps(_label_to_payload(args.target, label), sort_keys=True))
    return 0


# ---------------------------------------------------------------------------
# decompose
# ---------------------------------------------------------------------------


def _cmd_decompose(args) -> int:
    rep = QuiverRep.from_json(_read_payload(args.input))
    result = decompose_enhanced(rep)
    print(json.dumps(result.to_json(), sort_keys=True))
    if result.framed_part is not None and result.framed_part:
        print(f"framed summand: partition {result.framed_part}")
    elif result.framed_part is not None:
        print("framed summand: none (zero framing vector)")
    for i, comp in enumerate(result.plain_parts):
        for length in comp:
            print(f"chain summand: start {i}, length {length}")
    return 0


# ---------------------------------------------------------------------------
# render
# ---------------------------------------------------------------------------


def _young_cells(lam: Partition, ell: int | None) -> list[list[str]]:
    k = lam.diagonal_length()
    cells = []
    for i, part in enumerate(lam.parts, start=1):
        row = []
        for j in range(1, part + 1):
            if i == j and i <= k:
                row.append(f"s{i}")
            elif ell is not None:
                row.append(str((j - i) % ell))
            else:
                row.append("")
        cells.append(row)
    return cells


def _render_partition(lam: Partition, ell: int | None, fmt: str) -> str:
    if fmt == "ascii":
        if ell is None:
            return "\n".join("[]" * part for part in lam.parts)
        width = max(2, max((len(c) for row in _young_cells(lam, ell) for c in row), default=2))
        return "\n".join(
            "".join(f"[{c:>{width}}]" for c in row) for row in _young_cells(lam, ell)
        )
    if fmt == "latex-ytableau":
        rows = []
        for row in _young_cells(lam, ell):
            rows.append(" & ".join(c if c else "{}" for c in row) + r" \\")
        return "\\begin{ytableau}\n" + "\n".join(rows) + "\n\\end{ytableau}"
    if fmt == "dot":
        if ell is None:
            raise ValueError("dot output of a partition needs --ell (marked diagram)")
        return to_dot(frobenius_diagram_of_partition(lam, ell))
    raise ValueError(f"unknown render format {fmt!r}")


def _render_diagram(diagram, fmt: str) -> str:
    if fmt == "ascii":
        return to_ascii(diagram)
    if fmt == "dot":
        return to_dot(diagram)
    if fmt == "latex-ytableau":
        ell = diagram.ell
        if isinstance(diagram, FrobeniusCircleDiagram):
            chains = [((-o) % ell, p, o) for p, o in diagram.circles]
        else:
            chains = [(s, p, None) for s, p in diagram.circles]
        rows = []
        for start, length, mark in chains:
            cells = []
            for k in range(length - 1, -1, -1):
                label = str((start + k) % ell)
                if mark is not None and k == mark:
                    label = f"*(gray) {label}"
                cells.append(label)
            rows.append(" & ".join(cells) + r" \\")
        return "\\begin{ytableau}\n" + "\n".join(rows) + "\n\\end{ytableau}"
    raise ValueError(f"unknown render format {fmt!r}")


def _cmd_render(args) -> int:
    if (args.partition is None) == (args.diagram is None):
        raise ValueError("exactly one of --partition and --diagram is required")
    if args.partition is not None:
        lam = Partition.from_text(args.partition)
        print(_render_partition(lam, args.ell, args.format))
        return 0
    text = sys.stdin.read() if args.diagram == "-" else open(args.diagram, encoding="utf-8").read()
    stripped = text.lstrip()
    diagram = from_dot(text) if stripped.startswith("digraph") else diagram_from_json(json.loads(text))
    print(_render_diagram(diagram, args.format))
    return 0


# ---------------------------------------------------------------------------
# reptype
# ---------------------------------------------------------------------------


def _cmd_reptype(args) -> int:
    kind = classify(args.ell, args.x)
    print(f"(ell, x) = ({args.ell}, {args.x}): {kind.value}")
    witness = wildness_witness(args.ell, args.x)
    if witness is not None:
        window, main, framing = witness
        print(f"witness window: rows={window.rows}, framing rows={window.framing_rows}")
        print(f"main={main} framing={framing}")
        print(f"q = {tits_form(window, main, framing)}")
    return 0


# ---------------------------------------------------------------------------
# selfcheck
# ---------------------------------------------------------------------------


def _cmd_selfcheck(args) -> int:
    n, ell = args.n, args.ell
    if n < 0 or ell < 1:
        raise ValueError("need n >= 0 and ell >= 1")
    failures = 0

    def report(name: str, ok: bool, details: str = ""):
        nonlocal failures
        status = "PASS" if ok else "FAIL"
        suffix = f" ({details})" if details else ""
        print(f"{status} {name}{suffix}")
        if not ok:
            failures += 1

    size_cap = min(n * ell, 12)
    ok = True
    count = 0
    for m in range(size_cap + 1):
        for lam in enumerate_partitions(m):
            count += 1
            if lam.frobenius().partition() != lam:
                ok = False
    report("frobenius-roundtrip", ok, f"{count} partitions")

    ok = True
    for m in range(size_cap + 1):
        for lam in enumerate_partitions(m):
            diagram = frobenius_diagram_of_partition(lam, ell)
            if diagram.partition() != lam or diagram.weight() != lam.weight(ell):
                ok = False
    report("diagram-roundtrip", ok)

    ok = True
    for m in range(min(size_cap, 8) + 1):
        for lam in enumerate_partitions(m):
            core, quotient = ell_quotient_core(lam, ell)
            if from_core_quotient(core, quotient, ell) != lam:
                ok = False
    report("core-quotient-roundtrip", ok)

    labels = enumerate_orbit_labels(n, ell)
    striped = enumerate_striped(ell, delta(ell, n))
    report("label-count", len(labels) == len(striped), f"{len(labels)} labels")

    ok = True
    cases = 0
    if ell == 1:
        for m in range(n + 1):
            for bp in enumerate_bipartitions(m):
                rep = build_framed_jordan(bp.first, bp.second)
                eta, zeta = bipartition_to_label(bp.first, bp.second)
                got = decompose_enhanced(rep)
                if (got.framed_part, got.plain_parts[0]) != (eta, zeta):
                    ok = False
                cases += 1
    else:
        for s in striped:
            want = striped_label(s)
            got = decompose_enhanced(build_striped(s)).label()
            if got != want:
                ok = False
            cases += 1
    report("decomposition-oracle", ok, f"{cases} cases")

    return 1 if failures else 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilquiver",
        description="Orbit labels and exact decompositions for nilpotent framed cyclic quivers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate-orbits", help="list the orbit labels of a cone")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--x", type=int, default=None,
                   help="keep only labels whose partition weight is <= x")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("translate", help="translate between label formats")
    p.add_argument("--from", dest="source", choices=["ah", "johnson", "label"], required=True)
    p.add_argument("--to", dest="target", choices=["ah", "johnson", "label"], required=True)
    p.add_argument("--input", required=True, help="JSON file, or - for stdin")
    p.add_argument("--ell", type=int, default=None, help="cycle length for striped input")
    p.set_defaults(func=_cmd_translate)

    p = sub.add_parser("decompose", help="decompose a representation JSON file")
    p.add_argument("--input", required=True, help="JSON file, or - for stdin")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("render", help="render partitions and circle diagrams")
    p.add_argument("--partition", default=None, help='bracket form, e.g. "[6,4,4,2]"')
    p.add_argument("--diagram", default=None, help="diagram JSON or DOT file, or - for stdin")
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--format", choices=["ascii", "dot", "latex-ytableau"], default="ascii")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("reptype", help="representation type of the (ell, x) algebra")
    p.add_argument("ell", type=int)
    p.add_argument("x", type=int)
    p.set_defaults(func=_cmd_reptype)

    p = sub.add_parser("selfcheck", help="run the invariant suites at desk scale")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=_cmd_selfcheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
