"""Command-line interface tying the modules together.

All reports are JSON with stable key order; integers stay exact (the only
floats are optional timing fields, off by default so identical inputs give
byte-identical output).  Every error path exits non-zero with a
machine-parsable error object on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .bounds import connectivity_report, conjecture_probe
from .complexes import GENERATORS, generate
from .errors import MorsekitError
from .fileformat import emit_complex, input_digest, parse_complex, parse_omega
from .hasse import build_hasse, max_matching_size
from .homology import GF2, RATIONAL, homological_connectivity, reduced_betti
from .morse_complexes import (
    DEFAULT_SIMPLEX_BUDGET,
    generalized_morse_complex,
    morse_complex,
)
from .morse_theory import verify_descending_link_lemmas
from .vector_fields import DiscreteVectorField, make_pair, simple_cycles


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load(args) -> tuple:
    text = _read_text(args.input)
    K, omega = parse_complex(text)
    if getattr(args, "omega", None):
        omega = omega | parse_omega(_read_text(args.omega), K)
    return K, omega, text


def _report(args, payload: dict, text: str, timings: dict) -> str:
    doc = {
        "tool": "morsekit",
        "version": __version__,
        "input_digest": input_digest(text),
    }
    if args.timings:
        doc["timings_ms"] = timings
    doc.update(payload)
    return json.dumps(doc, indent=2) + "\n"


def _plot_dir(args) -> Path | None:
    if getattr(args, "plot_dir", None):
        p = Path(args.plot_dir)
        p.mkdir(parents=True, exist_ok=True)
        return p
    return None


# ---------------------------------------------------------------------------
# subcommands


def cmd_gen(args) -> int:
    params = tuple(args.params)
    K = generate(args.family, *params)
    _write_text(args.output, emit_complex(K))
    return 0


def cmd_hasse(args) -> int:
    t0 = time.perf_counter()
    K, omega, text = _load(args)
    H = build_hasse(K, omega)
    m = H.metrics
    payload = {
        "nodes": len(H.nodes),
        "edges": len(H.edges),
        "h": m.h,
        "d": m.d,
        "max_matching": max_matching_size(H),
    }
    if args.adjacency:
        payload["adjacency"] = {
            " ".join(map(str, n)): [" ".join(map(str, x)) for x in H.adjacency[n]]
            for n in H.nodes
        }
    timings = {"total_ms": (time.perf_counter() - t0) * 1000}
    sys.stdout.write(_report(args, payload, text, timings))
    if (d := _plot_dir(args)) is not None:
        from .plotting import plot_hasse_diagram

        plot_hasse_diagram(H, d / "hasse.png")
    return 0


def _cmd_matching_complex(args, builder, label: str) -> int:
    t0 = time.perf_counter()
    K, omega, text = _load(args)
    result = builder(K, omega, args.budget)
    _write_text(args.output, emit_complex(result.complex))
    sidecar = {
        "tool": "morsekit",
        "version": __version__,
        "input_digest": input_digest(text),
        "kind": label,
        "f_vector": list(result.complex.f_vector),
        "vertex_dictionary": {
            str(i): {"sigma": list(p[0]), "tau": list(p[1])}
            for i, p in enumerate(result.vertex_dictionary)
        },
    }
    if args.timings:
        sidecar["timings_ms"] = {"total_ms": (time.perf_counter() - t0) * 1000}
    out = json.dumps(sidecar, indent=2) + "\n"
    if args.sidecar:
        _write_text(args.sidecar, out)
    elif args.output not in (None, "-"):
        sys.stdout.write(out)
    return 0


def cmd_gm(args) -> int:
    return _cmd_matching_complex(args, generalized_morse_complex, "generalized-morse")


def cmd_morse(args) -> int:
    return _cmd_matching_complex(args, morse_complex, "morse")


def cmd_cycles(args) -> int:
    t0 = time.perf_counter()
    K, omega, text = _load(args)
    lines = [
        ln.strip()
        for ln in _read_text(args.matching).splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if len(lines) % 2:
        raise MorsekitError("matching file must contain pairs of simplex lines")
    pairs = []
    for i in range(0, len(lines), 2):
        sigma = tuple(int(t) for t in lines[i].split())
        tau = tuple(int(t) for t in lines[i + 1].split())
        pairs.append(make_pair(sigma, tau))
    V = DiscreteVectorField(pairs)
    for p in V.pairs:
        if p.sigma not in K.simplices or p.tau not in K.simplices:
            raise MorsekitError(f"matching pair {p} uses simplices outside the complex")
    cycles = simple_cycles(V, args.budget)
    payload = {
        "phi": len(cycles),
        "cycles": [
            {
                "sigmas": [list(s) for s in c.sigmas],
                "taus": [list(t) for t in c.taus],
            }
            for c in cycles
        ],
    }
    timings = {"total_ms": (time.perf_counter() - t0) * 1000}
    sys.stdout.write(_report(args, payload, text, timings))
    return 0


def cmd_betti(args) -> int:
    t0 = time.perf_counter()
    K, _omega, text = _load(args)
    fields = [GF2, RATIONAL] if args.field == "both" else [args.field]
    payload: dict = {}
    for f in fields:
        bv = reduced_betti(K, f, args.budget)
        payload[f"reduced_betti_{f}"] = list(bv.reduced)
    payload["field"] = args.field
    payload["euler"] = K.euler_characteristic()
    payload["homological_connectivity"] = homological_connectivity(K, args.budget)
    timings = {"total_ms": (time.perf_counter() - t0) * 1000}
    sys.stdout.write(_report(args, payload, text, timings))
    if (d := _plot_dir(args)) is not None:
        from .plotting import plot_betti, plot_f_vector

        plot_f_vector(K, d / "f_vector.png")
        for f in fields:
            plot_betti(tuple(payload[f"reduced_betti_{f}"]), f, d / f"betti_{f}.png")
    return 0


def cmd_bounds(args) -> int:
    t0 = time.perf_counter()
    K, omega, text = _load(args)
    report = connectivity_report(K, omega, complex_id=args.input)
    timings = {"total_ms": (time.perf_counter() - t0) * 1000}
    sys.stdout.write(_report(args, report.as_dict(), text, timings))
    if (d := _plot_dir(args)) is not None:
        from .plotting import plot_bound_thresholds, plot_hasse_diagram

        plot_hasse_diagram(build_hasse(K, omega), d / "hasse.png")
        plot_bound_thresholds(report.h, report.d, d / "thresholds.png")
    return 0


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    K, omega, text = _load(args)
    sweep = verify_descending_link_lemmas(
        K, omega, budget=args.budget, threads=args.threads
    )
    payload = {
        "vertices_swept": sweep.vertices_swept,
        "case1_count": sweep.case1_count,
        "case2_count": sweep.case2_count,
        "iso_checks": sweep.iso_checks,
        "failures": sweep.failures,
    }
    timings = {"total_ms": (time.perf_counter() - t0) * 1000}
    sys.stdout.write(_report(args, payload, text, timings))
    return 1 if sweep.failures else 0


def cmd_probe(args) -> int:
    t0 = time.perf_counter()
    K, _omega, text = _load(args)
    payload = conjecture_probe(K, args.m, budget=args.budget)
    timings = {"total_ms": (time.perf_counter() - t0) * 1000}
    sys.stdout.write(_report(args, payload, text, timings))
    return 0


# ---------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, omega: bool = True) -> None:
    p.add_argument("input", help="complex file (or - for stdin)")
    if omega:
        p.add_argument("--omega", help="extra exclusion simplices, one per line")
    p.add_argument(
        "--budget", type=int, default=DEFAULT_SIMPLEX_BUDGET,
        help="enumeration/matrix budget (fails loudly when exceeded)",
    )
    p.add_argument("--threads", type=int, default=1, help="worker count")
    p.add_argument("--timings", action="store_true", help="include timing fields")
    p.add_argument("--json", action="store_true", help="accepted for compatibility; output is always JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morsekit",
        description="Morse complexes, Hasse measurements, connectivity bounds, exact homology",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a generator-family complex")
    p.add_argument("family", choices=sorted(GENERATORS))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("hasse", help="Hasse diagram measurements")
    _add_common(p)
    p.add_argument("--adjacency", action="store_true", help="include adjacency lists")
    p.add_argument("--plot-dir", help="render figures into this directory")
    p.set_defaults(func=cmd_hasse)

    for name, help_text, fn in (
        ("gm", "generalized Morse complex", cmd_gm),
        ("morse", "Morse complex", cmd_morse),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_common(p)
        p.add_argument("-o", "--output", help="output complex file (default stdout)")
        p.add_argument("--sidecar", help="JSON sidecar path (vertex dictionary, f-vector)")
        p.set_defaults(func=fn)

    p = sub.add_parser("cycles", help="simple cycle count of a matching")
    _add_common(p)
    p.add_argument("--matching", required=True, help="pairs of simplex lines")
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("betti", help="reduced Betti numbers")
    _add_common(p, omega=False)
    p.add_argument("--field", choices=[GF2, RATIONAL, "both"], default=GF2)
    p.add_argument("--plot-dir", help="render figures into this directory")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("bounds", help="connectivity bound report")
    _add_common(p)
    p.add_argument("--plot-dir", help="render figures into this directory")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="descending-link lemma sweep")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("probe-conjecture", help="higher-connectivity probe (experimental)")
    _add_common(p)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_probe)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "budget"):
        args.budget = DEFAULT_SIMPLEX_BUDGET
    if not hasattr(args, "timings"):
        args.timings = False
    try:
        return args.func(args)
    except MorsekitError as exc:
        error = {"error": type(exc).__name__, "message": str(exc)}
        sys.stderr.write(json.dumps(error) + "\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
