"""Command-line front end.

Subcommands mirror the library: ``centrality`` runs the nonlinear
node/layer solver (optionally sweeping the node exponent), ``baseline``
computes any of the linear eigenvector measures, ``compare`` emits pairwise
Pearson/intersection-similarity/scatter data for a set of measures,
``bound`` prints the a priori iteration certificate, and ``info`` prints
connectivity diagnostics.

Exit codes: 0 on success, 2 on input or parameter errors, 3 when an
iteration fails to converge (outputs are still written).
"""

from __future__ import annotations

import json
from pathlib import Path

import click
import numpy as np

from . import __version__
from .baselines import (
    aggregate_degree_centrality,
    aggregate_eigenvector_centrality,
    global_heterogeneous_centrality,
    layerwise_eigenvector_centrality,
    local_heterogeneous_centrality,
    versatility_centrality,
)
from .errors import InputError
from .io import (
    SYMMETRIZE_POLICIES,
    parse_multiplex_edges,
    report_to_dict,
    to_network,
    write_scores,
)
from .network import InfluenceMatrix, connectivity
from .ranking import alpha_sweep, isim_curve, pearson, rank
from .solver import (
    NodeLayerScores,
    SolverParams,
    contraction_factor,
    iteration_bound,
    node_layer_centrality,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NO_CONVERGENCE = 3


def _load_network(path, nodes, layers, symmetrize):
    text = Path(path).read_text(encoding="utf-8")
    doc = parse_multiplex_edges(text)
    return to_network(doc, n=nodes, L=layers, symmetrize=symmetrize)


def _emit(output_dir, filename, text):
    if output_dir is None:
        click.echo(f"# {filename}")
        click.echo(text, nl=False)
    else:
        out = Path(output_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / filename).write_text(text, encoding="utf-8")


def _network_options(f):
    f = click.option("--symmetrize", type=click.Choice(SYMMETRIZE_POLICIES),
                     default="mirror", show_default=True,
                     help="How to reconcile edges listed in both directions.")(f)
    f = click.option("--layers", "layers_override", type=int, default=None,
                     help="Layer count override (>= largest layer index in the file).")(f)
    f = click.option("--nodes", "nodes_override", type=int, default=None,
                     help="Node count override (>= largest node index in the file).")(f)
    return f


def _solver_options(f):
    f = click.option("--unsafe-params", is_flag=True,
                     help="Allow exponents outside the uniqueness region 2/beta < alpha-1.")(f)
    f = click.option("--stopping-norm", type=click.Choice(["euclidean", "one", "max"]),
                     default="euclidean", show_default=True)(f)
    f = click.option("--max-iter", type=int, default=1000, show_default=True)(f)
    f = click.option("--tol", type=float, default=1e-6, show_default=True)(f)
    f = click.option("--beta", type=float, default=2.0, show_default=True,
                     help="Layer exponent.")(f)
    f = click.option("--alpha", type=float, default=2.1, show_default=True,
                     help="Node exponent.")(f)
    return f


def _output_options(f):
    f = click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
                     default="csv", show_default=True)(f)
    f = click.option("-o", "--output", "output_dir", type=click.Path(file_okay=False),
                     default=None, help="Directory for output files (default: stdout).")(f)
    return f


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(version=__version__, prog_name="multicent")
def main():
    """Node and layer centrality for undirected multiplex networks."""


@main.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@_network_options
@_solver_options
@click.option("--alpha-list", default=None,
              help="Comma-separated node exponents; runs the exponent sweep "
                   "instead of a single solve.")
@click.option("--random-start", is_flag=True,
              help="Start from a random positive pair instead of all ones.")
@click.option("--seed", type=int, default=None, help="Seed for --random-start.")
@_output_options
def centrality(input_path, nodes_override, layers_override, symmetrize,
               alpha, beta, tol, max_iter, stopping_norm, unsafe_params,
               alpha_list, random_start, seed, output_dir, fmt):
    """Nonlinear node/layer centrality of the multiplex in INPUT_PATH."""
    try:
        net = _load_network(input_path, nodes_override, layers_override, symmetrize)
        if alpha_list is not None:
            alphas = [float(a) for a in alpha_list.split(",") if a.strip()]
            result = alpha_sweep(net, alphas, beta, tol=tol, max_iter=max_iter,
                                 stopping_norm=stopping_norm,
                                 unsafe_params=unsafe_params)
            _write_sweep(result, output_dir)
            if not any(e.ok for e in result.entries):
                raise SystemExit(EXIT_INPUT)
            if any(e.ok and not e.report.converged for e in result.entries):
                raise SystemExit(EXIT_NO_CONVERGENCE)
            return
        params = SolverParams(alpha=alpha, beta=beta, tol=tol, max_iter=max_iter,
                              stopping_norm=stopping_norm, unsafe_params=unsafe_params)
        start = None
        if random_start:
            rng = np.random.default_rng(seed)
            start = NodeLayerScores(x=rng.uniform(0.1, 1.0, net.n),
                                    t=rng.uniform(0.1, 1.0, net.L))
        scores, report = node_layer_centrality(net, params, start=start)
    except InputError as exc:
        click.echo(f"error: {exc}", err=True)
        raise SystemExit(EXIT_INPUT)
    node_labels = net.node_labels
    layer_labels = net.layer_labels
    _emit(output_dir, f"nodes.{fmt}",
          write_scores(scores.x, rank(scores.x), fmt=fmt, labels=node_labels))
    _emit(output_dir, f"layers.{fmt}",
          write_scores(scores.t, rank(scores.t), fmt=fmt, labels=layer_labels))
    _emit(output_dir, "report.json",
          json.dumps(report_to_dict(report), indent=2) + "\n")
    if not report.converged:
        click.echo(f"warning: not converged after {report.iterations} iterations",
                   err=True)
        raise SystemExit(EXIT_NO_CONVERGENCE)


def _write_sweep(result, output_dir):
    lines = ["alpha,converged,iterations,error"]
    for e in result.entries:
        if e.ok:
            lines.append(f"{e.alpha!r},{e.report.converged},{e.report.iterations},")
        else:
            lines.append(f"{e.alpha!r},,,\"{e.error}\"")
    _emit(output_dir, "sweep_iterations.csv", "\n".join(lines) + "\n")
    for which, table in (("node", result.node_position_table()),
                         ("layer", result.layer_position_table())):
        alphas, pos = table
        header = "index," + ",".join(repr(a) for a in alphas)
        lines = [header]
        for i in range(pos.shape[0]):
            lines.append(f"{i + 1}," + ",".join(str(p + 1) for p in pos[i]))
        _emit(output_dir, f"sweep_{which}_positions.csv", "\n".join(lines) + "\n")


_BASELINES = ("eig_cen", "agg_eig", "agg_deg", "eig_ver", "local_het", "global_het")


def _influence_from(source, L):
    if source == "identity":
        return InfluenceMatrix.identity(L)
    if source == "ones":
        return InfluenceMatrix.uniform(L)
    return InfluenceMatrix(np.loadtxt(source, ndmin=2))


@main.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@_network_options
@click.option("--measure", type=click.Choice(_BASELINES), required=True)
@click.option("--omega", default=None,
              help="Comma-separated positive layer weights (default: all ones).")
@click.option("--influence", default="ones", show_default=True,
              help="Influence matrix for the heterogeneous measures: "
                   "'identity', 'ones', or a path to an LxL whitespace matrix.")
@_output_options
def baseline(input_path, nodes_override, layers_override, symmetrize,
             measure, omega, influence, output_dir, fmt):
    """One of the linear eigenvector-based centralities of INPUT_PATH."""
    try:
        net = _load_network(input_path, nodes_override, layers_override, symmetrize)
        w = None
        if omega is not None:
            w = np.array([float(v) for v in omega.split(",") if v.strip()])
        if measure in ("local_het", "global_het"):
            W = _influence_from(influence, net.L)
            fn = (local_heterogeneous_centrality if measure == "local_het"
                  else global_heterogeneous_centrality)
            cm = fn(net, W)
            if cm.degenerate_warning:
                click.echo(f"warning: {measure} scores are not uniquely determined "
                           "on this network", err=True)
            header = "index,label," + ",".join(
                str(net.layer_labels[l]) if net.layer_labels else f"layer{l + 1}"
                for l in range(net.L))
            lines = [header]
            labels = net.node_labels or [str(i + 1) for i in range(net.n)]
            for i in range(net.n):
                vals = ",".join(repr(float(v)) for v in cm.matrix[i])
                lines.append(f"{i + 1},{labels[i]},{vals}")
            _emit(output_dir, f"{measure}.csv", "\n".join(lines) + "\n")
            return
        if measure == "eig_cen":
            res = layerwise_eigenvector_centrality(net, w)
        elif measure == "agg_eig":
            res = aggregate_eigenvector_centrality(net, w)
        elif measure == "eig_ver":
            res = versatility_centrality(net, w)
        else:
            res = aggregate_degree_centrality(net)
    except InputError as exc:
        click.echo(f"error: {exc}", err=True)
        raise SystemExit(EXIT_INPUT)
    if res.degenerate_warning:
        click.echo(f"warning: {measure} scores are not uniquely determined "
                   "on this network", err=True)
    _emit(output_dir, f"{measure}.{fmt}",
          write_scores(res.scores, rank(res.scores), fmt=fmt, labels=net.node_labels))


_COMPARE_MEASURES = ("nonlinear", "eig_ver", "eig_cen", "agg_eig", "agg_deg")


@main.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@_network_options
@_solver_options
@click.option("--measures", default=",".join(_COMPARE_MEASURES), show_default=True,
              help="Comma-separated subset of: " + ", ".join(_COMPARE_MEASURES))
@click.option("--k", "top_k", type=int, default=None,
              help="Also emit the pairwise intersection similarity at this K.")
@_output_options
def compare(input_path, nodes_override, layers_override, symmetrize,
            alpha, beta, tol, max_iter, stopping_norm, unsafe_params,
            measures, top_k, output_dir, fmt):
    """Pairwise ranking comparison of several measures on INPUT_PATH."""
    exit_code = EXIT_OK
    try:
        net = _load_network(input_path, nodes_override, layers_override, symmetrize)
        names = [m.strip() for m in measures.split(",") if m.strip()]
        unknown = [m for m in names if m not in _COMPARE_MEASURES]
        if unknown:
            raise click.ClickException(f"unknown measures: {', '.join(unknown)}")
        vectors = {}
        for name in names:
            if name == "nonlinear":
                params = SolverParams(alpha=alpha, beta=beta, tol=tol,
                                      max_iter=max_iter, stopping_norm=stopping_norm,
                                      unsafe_params=unsafe_params)
                scores, report = node_layer_centrality(net, params)
                if not report.converged:
                    click.echo("warning: nonlinear solve did not converge", err=True)
                    exit_code = EXIT_NO_CONVERGENCE
                vectors[name] = scores.x
            elif name == "eig_ver":
                vectors[name] = _warned(versatility_centrality(net), name)
            elif name == "eig_cen":
                vectors[name] = _warned(layerwise_eigenvector_centrality(net), name)
            elif name == "agg_eig":
                vectors[name] = _warned(aggregate_eigenvector_centrality(net), name)
            elif name == "agg_deg":
                vectors[name] = aggregate_degree_centrality(net).scores
    except InputError as exc:
        click.echo(f"error: {exc}", err=True)
        raise SystemExit(EXIT_INPUT)

    labels = net.node_labels or [str(i + 1) for i in range(net.n)]
    lines = ["index,label," + ",".join(names)]
    for i in range(net.n):
        vals = ",".join(repr(float(vectors[m][i])) for m in names)
        lines.append(f"{i + 1},{labels[i]},{vals}")
    _emit(output_dir, "measures.csv", "\n".join(lines) + "\n")

    lines = ["measure_a,measure_b,pearson"]
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            lines.append(f"{a},{b},{pearson(vectors[a], vectors[b])!r}")
    _emit(output_dir, "pearson.csv", "\n".join(lines) + "\n")

    rankings = {m: rank(vectors[m]) for m in names}
    lines = ["measure_a,measure_b,k,isim"]
    at_k = {}
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            curve = isim_curve(rankings[a], rankings[b])
            for k, val in enumerate(curve, start=1):
                lines.append(f"{a},{b},{k},{float(val)!r}")
            if top_k is not None:
                at_k[(a, b)] = float(curve[min(top_k, len(curve)) - 1])
    _emit(output_dir, "isim.csv", "\n".join(lines) + "\n")
    if top_k is not None:
        lines = ["measure_a,measure_b,k,isim"]
        for (a, b), val in at_k.items():
            lines.append(f"{a},{b},{top_k},{val!r}")
        _emit(output_dir, "isim_at_k.csv", "\n".join(lines) + "\n")
    if exit_code != EXIT_OK:
        raise SystemExit(exit_code)


def _warned(res, name):
    if res.degenerate_warning:
        click.echo(f"warning: {name} scores are not uniquely determined "
                   "on this network", err=True)
    return res.scores


@main.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@_network_options
@click.option("--alpha", type=float, default=2.1, show_default=True)
@click.option("--beta", type=float, default=2.0, show_default=True)
@click.option("--epsilon", type=float, default=1e-6, show_default=True,
              help="Target max-norm accuracy of the certificate.")
def bound(input_path, nodes_override, layers_override, symmetrize,
          alpha, beta, epsilon):
    """A priori iteration-count certificate for the uniform start."""
    try:
        net = _load_network(input_path, nodes_override, layers_override, symmetrize)
        cdata = contraction_factor(alpha, beta)
        b = iteration_bound(net, alpha, beta, epsilon)
    except InputError as exc:
        click.echo(f"error: {exc}", err=True)
        raise SystemExit(EXIT_INPUT)
    click.echo(f"contraction factor rho = {cdata.rho!r}")
    click.echo(f"certificate constant C = {b.C!r}")
    click.echo(f"iterations for max-norm error <= {epsilon!r}: k = {b.k}")
    if b.uniform_start_exact:
        click.echo("note: node and layer strength profiles are uniform; the "
                   "normalized all-ones pair is already the fixed point")


@main.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@_network_options
def info(input_path, nodes_override, layers_override, symmetrize):
    """Size and connectivity summary of the multiplex in INPUT_PATH."""
    try:
        net = _load_network(input_path, nodes_override, layers_override, symmetrize)
        diag = connectivity(net)
    except InputError as exc:
        click.echo(f"error: {exc}", err=True)
        raise SystemExit(EXIT_INPUT)
    click.echo(f"nodes: {net.n}")
    click.echo(f"layers: {net.L}")
    click.echo(f"undirected edges: {net.edge_count()}")
    click.echo(f"isolated nodes: {len(diag.isolated_nodes)}")
    click.echo(f"empty layers: {len(diag.empty_layers)}")
    n_conn = sum(diag.layer_connected)
    click.echo(f"connected layers: {n_conn} of {net.L}")
    state = "connected" if diag.aggregate_connected else "disconnected"
    click.echo(f"aggregate: {state}")


if __name__ == "__main__":
    main()
