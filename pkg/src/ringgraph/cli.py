"""Command-line surface: one command per invocation, reports on stdout.

Exit codes: 0 for a computed verdict, 2 for a refused precondition
(including session syntax errors and bad arguments), 1 for an internal
error.  Reports are byte-identical across runs for identical inputs —
timing is only attached when ``--timing`` is passed.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .complexes import faltings_harness
from .errors import PreconditionError, RingGraphError
from .gamma import (
    PrimeGraph,
    build_gamma,
    disconnection_exists,
    gamma_product,
    graph_from_text,
    hl_nonvanishing,
    is_connected,
    punctured_spectrum_connected,
)
from .ideals import Ideal, PresentedRing, contract, dimension, ring_map_kernel
from .minprimes import minimal_primes
from .polynomials import GREVLEX, LEX, MonomialOrder, elimination_order
from .reports import ReportDocument
from .s2 import conductor, s2_local_decision
from .session import SessionFile, parse_fraction, parse_session
from .groebner import buchberger

GRAPH_COMMANDS = ("gamma", "product-gamma")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        report, graph = _dispatch(args)
        if args.format == "dot":
            if graph is None:
                raise PreconditionError(
                    "--format dot is only available for graph commands: "
                    + ", ".join(GRAPH_COMMANDS)
                )
            sys.stdout.write(graph.to_dot(args.command.replace("-", "_")))
            return 0
        if args.timing:
            report.timing_ms = round((time.perf_counter() - started) * 1000.0, 3)
        sys.stdout.write(report.to_json() if args.format == "json" else report.to_text())
        return 0
    except RingGraphError as e:
        print(f"refused: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # noqa: BLE001 - the contract maps these to 1
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringgraph",
        description="Connectedness machinery for finitely presented rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, *, needs_session: bool, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--session", type=Path, required=needs_session, help="session file")
        p.add_argument(
            "--format",
            choices=("json", "text", "dot"),
            default="json",
            help="output format (default json)",
        )
        p.add_argument("--timing", action="store_true", help="attach wall-clock timing")
        return p

    p = add("gb", needs_session=True, help="reduced basis of an ideal")
    p.add_argument("ideal")
    p.add_argument("order", help="lex | grevlex | elim:<k>")

    p = add("dim", needs_session=True, help="dimension of a quotient by an ideal")
    p.add_argument("ideal")

    p = add("minprimes", needs_session=True, help="minimal primes over an ideal")
    p.add_argument("ideal")
    p.add_argument(
        "--strategy",
        choices=("auto", "monomial", "split", "asserted"),
        default="auto",
    )

    p = add("kernel", needs_session=True, help="kernel of a ring map")
    p.add_argument("map")

    p = add("contract", needs_session=True, help="contraction of an ideal along a map")
    p.add_argument("ideal")
    p.add_argument("map")

    p = add("gamma", needs_session=True, help="minimal-prime graph of a ring")
    p.add_argument("ring")

    p = add("connected", needs_session=True, help="connectivity of the minimal-prime graph")
    p.add_argument("ring")

    p = add("disconnection", needs_session=True, help="exhaustive disconnecting-partition search")
    p.add_argument("ring")

    p = add("punctured", needs_session=True, help="connectivity of the punctured spectrum mod an ideal")
    p.add_argument("ring")
    p.add_argument("ideal")

    p = add("hl", needs_session=True, help="top local cohomology nonvanishing at an ideal")
    p.add_argument("ring")
    p.add_argument("ideal")

    p = add("s2member", needs_session=True, help="membership of a fraction in the S2-ification")
    p.add_argument("ring")
    p.add_argument("fraction", help="u / v in the ring's variables")

    p = add("s2local", needs_session=True, help="is the S2-ification local?")
    p.add_argument("ring")

    p = add("faltings", needs_session=False, help="randomized punctured-connectedness harness")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-vertices", type=int, default=8)
    p.add_argument("--max-facet-size", type=int, default=5)

    p = add("product-gamma", needs_session=False, help="product of two stored graphs")
    p.add_argument("graph1", type=Path)
    p.add_argument("graph2", type=Path)

    return parser


def _load_session(args) -> SessionFile:
    if args.session is None:
        raise PreconditionError("this command needs --session")
    try:
        text = args.session.read_text(encoding="utf-8")
    except OSError as e:
        raise PreconditionError(f"cannot read session file: {e}") from e
    return parse_session(text)


def _ideal_inputs(name: str, a: Ideal) -> dict:
    return {
        "ideal": name,
        "ring": repr(a.ring),
        "generators": [str(g) for g in a.gens],
    }


def _ring_inputs(name: str, pres: PresentedRing) -> dict:
    return {
        "ring": name,
        "ambient": repr(pres.ambient),
        "defining": list(pres.defining.min_gen_strings()),
    }


def _parse_order(text: str, ring) -> MonomialOrder:
    if text == "lex":
        return LEX
    if text == "grevlex":
        return GREVLEX
    if text.startswith("elim:"):
        try:
            k = int(text.split(":", 1)[1])
        except ValueError:
            raise PreconditionError(f"bad elimination block in {text!r}")
        return elimination_order(k)
    raise PreconditionError(f"unknown order {text!r}; use lex, grevlex or elim:<k>")


def _connectivity_verdicts(report) -> tuple:
    verdicts = {"status": report.status, "connected": report.connected}
    witnesses = dict(report.witness or {})
    witnesses["components"] = [list(c) for c in report.components]
    witnesses["vertices"] = [list(l) for l in report.labels]
    return verdicts, witnesses


def _dispatch(args) -> tuple:
    command = args.command
    report = ReportDocument(command=command)
    graph = None

    if command == "gb":
        session = _load_session(args)
        a = session.ideal(args.ideal)
        order = _parse_order(args.order, a.ring)
        basis = buchberger(list(a.gens), order=order, ring=a.ring)
        report.inputs = _ideal_inputs(args.ideal, a)
        report.inputs["order"] = order.label()
        report.verdicts = {
            "basis": [str(g) for g in basis.generators],
            "is_unit": basis.is_unit(),
        }
        report.provenance = {"basis": "computed", "is_unit": "computed"}

    elif command == "dim":
        session = _load_session(args)
        a = session.ideal(args.ideal)
        report.inputs = _ideal_inputs(args.ideal, a)
        report.verdicts = {"dimension": dimension(a)}
        report.provenance = {"dimension": "computed"}

    elif command == "minprimes":
        session = _load_session(args)
        a = session.ideal(args.ideal)
        asserted = session.asserted_primes_for(a)
        if args.strategy == "asserted":
            if asserted is None:
                raise PreconditionError(
                    "no asserted minimal primes in the session for this ideal"
                )
            mps = asserted
        elif args.strategy == "auto" and asserted is not None:
            mps = asserted
        else:
            mps = minimal_primes(a, args.strategy)
        mps.verify()
        report.inputs = _ideal_inputs(args.ideal, a)
        report.inputs["strategy"] = args.strategy
        report.verdicts = {
            "count": len(mps.primes),
            "primes": [list(p.min_gen_strings()) for p in mps.ideals()],
        }
        report.provenance = {"primes": mps.provenance, "count": mps.provenance}

    elif command == "kernel":
        session = _load_session(args)
        phi = session.ring_map(args.map)
        k = ring_map_kernel(phi)
        report.inputs = {
            "map": args.map,
            "source": repr(phi.source),
            "target": repr(phi.target_ambient),
            "images": [str(g) for g in phi.images],
        }
        report.verdicts = {"kernel": list(k.min_gen_strings())}
        report.provenance = {"kernel": "computed"}

    elif command == "contract":
        session = _load_session(args)
        phi = session.ring_map(args.map)
        q = session.ideal(args.ideal)
        c = contract(q, phi)
        report.inputs = {
            "map": args.map,
            "ideal": args.ideal,
            "generators": [str(g) for g in q.gens],
        }
        report.verdicts = {"contraction": list(c.min_gen_strings())}
        report.provenance = {"contraction": "computed"}

    elif command == "gamma":
        session = _load_session(args)
        pres = session.presented(args.ring)
        graph = build_gamma(pres)
        report.inputs = _ring_inputs(args.ring, pres)
        report.verdicts = {
            "graph": graph.to_json_dict(),
            "vertex_count": graph.n,
            "edge_count": len(graph.edges),
        }
        prov = "asserted" if pres.min_primes.is_asserted() else "computed"
        report.provenance = {"graph": prov, "vertex_count": prov, "edge_count": prov}

    elif command == "connected":
        session = _load_session(args)
        pres = session.presented(args.ring)
        rep = is_connected(build_gamma(pres))
        report.inputs = _ring_inputs(args.ring, pres)
        verdicts, witnesses = _connectivity_verdicts(rep)
        prov = "asserted" if pres.min_primes.is_asserted() else rep.provenance
        report.verdicts = verdicts
        report.witnesses = witnesses
        report.provenance = {k: prov for k in verdicts}

    elif command == "disconnection":
        session = _load_session(args)
        pres = session.presented(args.ring)
        rep = disconnection_exists(pres)
        report.inputs = _ring_inputs(args.ring, pres)
        verdicts, witnesses = _connectivity_verdicts(rep)
        verdicts["disconnection_exists"] = rep.status == "disconnected"
        prov = "asserted" if pres.min_primes.is_asserted() else rep.provenance
        report.verdicts = verdicts
        report.witnesses = witnesses
        report.provenance = {k: prov for k in verdicts}

    elif command == "punctured":
        session = _load_session(args)
        pres = session.presented(args.ring)
        a = session.ideal(args.ideal)
        rep = punctured_spectrum_connected(pres, a)
        report.inputs = _ring_inputs(args.ring, pres)
        report.inputs["ideal"] = args.ideal
        report.inputs["generators"] = [str(g) for g in a.gens]
        verdicts, witnesses = _connectivity_verdicts(rep)
        report.verdicts = verdicts
        report.witnesses = witnesses
        report.provenance = {k: rep.provenance for k in verdicts}

    elif command == "hl":
        session = _load_session(args)
        pres = session.presented(args.ring)
        a = session.ideal(args.ideal)
        value = hl_nonvanishing(pres, a)
        report.inputs = _ring_inputs(args.ring, pres)
        report.inputs["ideal"] = args.ideal
        report.inputs["generators"] = [str(g) for g in a.gens]
        prov = "asserted" if pres.min_primes.is_asserted() else "computed"
        report.verdicts = {"nonvanishing": value}
        report.provenance = {"nonvanishing": prov}

    elif command == "s2member":
        session = _load_session(args)
        frac = parse_fraction(session, args.ring, args.fraction)
        res = conductor(frac)
        report.inputs = _ring_inputs(args.ring, frac.ring)
        report.inputs["fraction"] = str(frac)
        report.verdicts = {
            "member": res.member,
            "conductor": list(res.ideal.min_gen_strings()),
            "height": res.height_text(),
        }
        report.provenance = {k: res.provenance for k in report.verdicts}

    elif command == "s2local":
        session = _load_session(args)
        pres = session.presented(args.ring)
        rep = s2_local_decision(pres)
        report.inputs = _ring_inputs(args.ring, pres)
        verdicts = {"status": rep.status, "connected": rep.connected}
        provenance = {"status": rep.provenance, "connected": rep.provenance}
        for name, value, prov in rep.conditions:
            verdicts[name] = value
            provenance[name] = prov if rep.provenance == "computed" else "asserted"
        report.verdicts = verdicts
        report.witnesses = dict(rep.witness or {})
        report.provenance = provenance

    elif command == "faltings":
        if args.trials < 1:
            raise PreconditionError("--trials must be positive")
        harness = faltings_harness(
            trials=args.trials,
            seed=args.seed,
            max_vertices=args.max_vertices,
            max_facet_size=args.max_facet_size,
        )
        report.inputs = {
            "trials": args.trials,
            "seed": args.seed,
            "max_vertices": args.max_vertices,
            "max_facet_size": args.max_facet_size,
        }
        report.verdicts = {
            "ok": harness.ok,
            "passed": harness.passed,
            "failed": harness.failed,
        }
        report.witnesses = {
            "failures": harness.failures,
            "records": [r.to_json_dict() for r in harness.records],
        }
        report.provenance = {k: "computed" for k in report.verdicts}

    elif command == "product-gamma":
        g1 = _load_graph(args.graph1)
        g2 = _load_graph(args.graph2)
        graph = gamma_product(g1, g2)
        report.inputs = {
            "graph1": str(args.graph1),
            "graph2": str(args.graph2),
        }
        report.verdicts = {
            "graph": graph.to_json_dict(),
            "vertex_count": graph.n,
            "edge_count": len(graph.edges),
            "connected": is_connected(graph).connected,
        }
        report.provenance = {k: "computed" for k in report.verdicts}

    else:  # pragma: no cover - argparse enforces the choices
        raise PreconditionError(f"unknown command {command!r}")

    return report, graph


def _load_graph(path: Path) -> PrimeGraph:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise PreconditionError(f"cannot read graph file: {e}") from e
    return graph_from_text(text)


if __name__ == "__main__":
    sys.exit(main())
