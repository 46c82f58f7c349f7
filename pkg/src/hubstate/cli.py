"""
Command-line interface.

Exit codes: 0 success, 1 bad input (parse errors, unknown flags, invalid hub
sets), 2 a verification that ran and failed, 3 a capacity limit was hit.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .errors import CapacityError, HubStateError
from .expansion import build_state_via_hubs, expand_terms, reduction_report, verify_theorem
from .graph import Graph, parse_edge_list, star_graph
from .hubs import HubSet, select_hubs
from .pauli import ghz_generators, graph_generators
from .statevector import (
    DEFAULT_TOL,
    apply_h,
    build_graph_state,
    ghz_state,
    is_stabilized,
    states_equal,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY_FAILED = 2
EXIT_CAPACITY = 3


class VerificationFailed(Exception):
    pass


def load_graph(path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def parse_hub_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated vertex ids, got {text!r}") from None


def resolve_hubs(g: Graph, hubs: str | None, greedy: bool) -> HubSet:
    if hubs is not None:
        return HubSet.for_graph(g, parse_hub_list(hubs))
    return select_hubs(g, greedy=greedy)


def emit(data, as_json: bool, text: str) -> None:
    if as_json:
        click.echo(json.dumps(data, indent=2))
    else:
        click.echo(text)


graph_arg = click.argument("graph", type=click.Path(exists=True, dir_okay=False))
hubs_opt = click.option("--hubs", "hubs", default=None, help="Comma-separated hub vertices, e.g. 1,2.")
greedy_opt = click.option("--greedy", is_flag=True, help="Use the greedy cover instead of the exact one.")
json_opt = click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
tol_opt = click.option("--tol", type=float, default=DEFAULT_TOL, show_default=True)


@click.group()
def cli():
    """Graph states from hub cluster operators."""


@cli.command()
@graph_arg
@hubs_opt
@greedy_opt
@json_opt
def hubs(graph, hubs, greedy, as_json):
    """Select (or validate) a hub set."""
    g = load_graph(graph)
    h = resolve_hubs(g, hubs, greedy)
    emit(
        {"n": g.n, "hubs": list(h.hubs), "method": h.method, "size": len(h)},
        as_json,
        f"hubs: {','.join(map(str, h.hubs)) or '(none)'}  [{h.method}, size {len(h)}]",
    )


@cli.command()
@graph_arg
@json_opt
def stabilizers(graph, as_json):
    """Print the cluster-operator generators K_1..K_n."""
    gens = graph_generators(load_graph(graph))
    emit(gens.to_json(), as_json, "\n".join(gens.to_text()))


@cli.command()
@graph_arg
@hubs_opt
@greedy_opt
@json_opt
def expand(graph, hubs, greedy, as_json):
    """List the 2^|B| expansion terms for a hub set."""
    g = load_graph(graph)
    exp = expand_terms(g, resolve_hubs(g, hubs, greedy))
    lines = [f"hubs: {','.join(map(str, exp.hubs.hubs))}  terms: {len(exp)}  norm: {exp.norm:.15g}"]
    for t in exp.terms:
        label = "*".join(f"K{i}" for i in t.subset) or "I"
        lines.append(f"{label:<20} {t.op.to_text()}")
    emit(exp.to_json(), as_json, "\n".join(lines))


@cli.command()
@graph_arg
@click.option("--method", type=click.Choice(["cz", "hub"]), default="cz", show_default=True)
@hubs_opt
@greedy_opt
@json_opt
def state(graph, method, hubs, greedy, as_json):
    """Dump the graph state's amplitudes."""
    g = load_graph(graph)
    if method == "cz":
        s = build_graph_state(g)
    else:
        s = build_state_via_hubs(g, resolve_hubs(g, hubs, greedy))
    emit(s.to_json(), as_json, s.to_text())


def _verify_one(path, hubs, greedy, tol) -> dict:
    g = load_graph(path)
    report = verify_theorem(g, resolve_hubs(g, hubs, greedy), tol)
    data = report.to_json()
    data["file"] = str(path)
    return data


def _verify_line(d: dict) -> str:
    status = "PASS" if d["pass"] else "FAIL"
    hubs = ",".join(map(str, d["hubs"])) or "(none)"
    return (
        f"{status}  {d['file']}  hubs={hubs} [{d['method']}]  terms={d['term_count']}  "
        f"max_dev={d['max_dev']:.3e}  stabilizers {d['naive_stabilizers']} -> {d['hub_stabilizers']}"
    )


@cli.command()
@click.argument("graph", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--all", "all_dir", type=click.Path(exists=True, file_okay=False), default=None,
              help="Verify every *.edges file in a directory.")
@hubs_opt
@greedy_opt
@tol_opt
@json_opt
def verify(graph, all_dir, hubs, greedy, tol, as_json):
    """Check the hub construction against the CZ construction."""
    if (graph is None) == (all_dir is None):
        raise click.UsageError("give exactly one of GRAPH or --all DIR")
    if all_dir is not None:
        if hubs is not None:
            raise click.UsageError("--hubs cannot be combined with --all")
        paths = sorted(Path(all_dir).glob("*.edges"))
        results = [_verify_one(p, None, greedy, tol) for p in paths]
        emit(results, as_json, "\n".join(_verify_line(d) for d in results))
        ok = all(d["pass"] for d in results)
    else:
        d = _verify_one(graph, hubs, greedy, tol)
        emit(d, as_json, _verify_line(d))
        ok = d["pass"]
    if not ok:
        raise VerificationFailed()


@cli.command()
@graph_arg
@json_opt
def reduce(graph, as_json):
    """Stabilizer count with and without hubs (exact minimum cover)."""
    r = reduction_report(load_graph(graph))
    emit(
        r.to_json(),
        as_json,
        f"n={r.n}  naive: {r.naive_stabilizers}  hub: {r.hub_stabilizers}  hubs={','.join(map(str, r.hubs))}",
    )


@cli.command("ghz-check")
@click.option("--star-n", "star_n", type=int, required=True)
@tol_opt
@json_opt
def ghz_check(star_n, tol, as_json):
    """H on qubits 2..n of the star state must give GHZ_n."""
    g = star_graph(star_n)
    s = build_graph_state(g)
    for k in range(2, star_n + 1):
        s = apply_h(s, k)
    ghz = ghz_state(star_n)
    cmp = states_equal(s, ghz, tol)
    stabilized = all(is_stabilized(ghz, p, tol) for p in ghz_generators(star_n))
    ok = cmp.equal and stabilized
    emit(
        {"n": star_n, "max_dev": cmp.max_dev, "equal": cmp.equal,
         "ghz_stabilized": stabilized, "pass": ok},
        as_json,
        f"{'PASS' if ok else 'FAIL'}  star{star_n} -> GHZ{star_n}  max_dev={cmp.max_dev:.3e}  "
        f"stabilized={stabilized}",
    )
    if not ok:
        raise VerificationFailed()


def run(argv=None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        rv = cli.main(args=argv, prog_name="hubstate", standalone_mode=False)
    except VerificationFailed:
        return EXIT_VERIFY_FAILED
    except CapacityError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_CAPACITY
    except (HubStateError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_INPUT
    except click.exceptions.Abort:
        return EXIT_INPUT
    except click.ClickException as exc:
        exc.show()
        return EXIT_INPUT
    return rv if isinstance(rv, int) else EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
