"""Dataset-dependent checks; every test skips unless the public edge files
have been fetched (scripts/fetch_datasets.py).

Reference values are reproduced only where the underlying quantity is
uniquely determined. On the airline multiplex every layer and the aggregate
are disconnected, so the linear eigenvector measures are start-dependent
there; those comparisons are encoded as non-strict expected failures rather
than hard assertions.
"""

import numpy as np
import pytest
from click.testing import CliRunner

from multicent import (
    SolverParams,
    aggregate_degree_centrality,
    aggregate_eigenvector_centrality,
    connectivity,
    layer_eigenvectors,
    layerwise_eigenvector_centrality,
    node_layer_centrality,
    parse_multiplex_edges,
    pearson,
    rank,
    to_network,
    versatility_centrality,
)
from multicent.cli import main

from conftest import assert_top_matches, require_dataset

EUAIR_TOP10 = {
    "cf": (50, 12, 38, 40, 2, 108, 252, 166, 15, 57),
    "eig_ver": (50, 15, 40, 38, 83, 2, 166, 7, 64, 34),
    "eig_cen": (40, 50, 15, 83, 22, 64, 14, 7, 38, 2),
    "agg_eig": (15, 50, 83, 64, 40, 38, 7, 2, 166, 66),
    "agg_deg": (15, 50, 38, 40, 2, 252, 64, 83, 7, 12),
}

LONDON_TOP10 = {
    "cf": (69, 68, 28, 181, 182, 35, 46, 29, 214, 9),
    "eig_ver": (69, 68, 214, 29, 215, 207, 28, 282, 121, 181),
    "eig_cen": (4, 13, 291, 325, 69, 68, 214, 339, 261, 225),
    "agg_eig": (4, 225, 226, 259, 306, 305, 260, 264, 339, 3),
    "agg_deg": (4, 28, 182, 220, 2, 35, 46, 50, 68, 69),
}


@pytest.fixture(scope="module")
def euair():
    path = require_dataset("euair")
    return to_network(parse_multiplex_edges(path.read_text(encoding="utf-8")),
                      n=450, L=37)


@pytest.fixture(scope="module")
def london():
    path = require_dataset("london")
    return to_network(parse_multiplex_edges(path.read_text(encoding="utf-8")),
                      n=369, L=3)


@pytest.fixture(scope="module")
def euair_solution(euair):
    return node_layer_centrality(euair, SolverParams(2.1, 2.0, tol=1e-6))


@pytest.fixture(scope="module")
def london_solution(london):
    return node_layer_centrality(london, SolverParams(2.1, 2.0, tol=1e-6))


class TestEUAirStructure:
    def test_counts(self, euair):
        assert euair.n == 450 and euair.L == 37

    def test_thirty_three_isolated_nodes(self, euair):
        diag = connectivity(euair)
        assert len(diag.isolated_nodes) == 33

    def test_no_empty_layers_but_nothing_connected(self, euair):
        diag = connectivity(euair)
        assert diag.empty_layers == ()
        assert not any(diag.layer_connected)
        assert not diag.aggregate_connected

    def test_all_layer_columns_flagged(self, euair):
        Q = layer_eigenvectors(euair, max_iter=2000)
        assert all(Q.column_degenerate)

    def test_info_command(self):
        path = require_dataset("euair")
        res = CliRunner().invoke(main, ["info", str(path),
                                        "--nodes", "450", "--layers", "37"])
        assert res.exit_code == 0
        assert "nodes: 450" in res.output
        assert "layers: 37" in res.output
        assert "isolated nodes: 33" in res.output
        assert "aggregate: disconnected" in res.output


class TestEUAirNonlinear:
    def test_convergence_profile(self, euair_solution):
        _, report = euair_solution
        assert report.converged
        assert abs(report.iterations - 22) <= 3
        assert abs((report.node_converged_at - report.layer_converged_at) - 1) <= 1

    def test_isolated_nodes_scored_zero(self, euair, euair_solution):
        scores, _ = euair_solution
        diag = connectivity(euair)
        for i in diag.isolated_nodes:
            assert scores.x[i] == 0.0
        assert np.count_nonzero(scores.x == 0.0) == 33

    def test_top10(self, euair_solution):
        scores, _ = euair_solution
        assert_top_matches(rank(scores.x), EUAIR_TOP10["cf"])

    def test_pearson_with_aggregate_degree(self, euair, euair_solution):
        scores, _ = euair_solution
        agg = aggregate_degree_centrality(euair).scores
        assert abs(pearson(scores.x, agg) - 0.88) <= 0.01


class TestEUAirSweep:
    def test_rank_stability_across_exponents(self, euair):
        from multicent import alpha_sweep

        result = alpha_sweep(euair, [2.1, 2.5, 2.7, 3.0, 4.0, 5.0, 10.0],
                             beta=2.0, tol=1e-6)
        assert all(e.ok and e.report.converged for e in result.entries)
        # near-horizontal spaghetti lines: conservative encoding is a large
        # top-10 overlap between every exponent's ranking and the first one
        base_top = set(result.entries[0].node_ranking.order[:10].tolist())
        for entry in result.entries[1:]:
            overlap = len(base_top & set(entry.node_ranking.order[:10].tolist()))
            assert overlap >= 6


class TestEUAirBaselines:
    def test_agg_deg_top10(self, euair):
        res = aggregate_degree_centrality(euair)
        assert_top_matches(rank(res.scores), EUAIR_TOP10["agg_deg"])

    def test_linear_measures_flagged(self, euair):
        assert versatility_centrality(euair, max_iter=2000).degenerate_warning
        assert aggregate_eigenvector_centrality(euair, max_iter=2000).degenerate_warning

    @pytest.mark.xfail(strict=False,
                       reason="start-dependent on disconnected data")
    def test_eig_ver_top10_as_published(self, euair):
        res = versatility_centrality(euair)
        assert_top_matches(rank(res.scores), EUAIR_TOP10["eig_ver"])

    @pytest.mark.xfail(strict=False,
                       reason="start-dependent on disconnected data")
    def test_eig_cen_top10_as_published(self, euair):
        res = layerwise_eigenvector_centrality(euair)
        assert_top_matches(rank(res.scores), EUAIR_TOP10["eig_cen"])

    @pytest.mark.xfail(strict=False,
                       reason="start-dependent on disconnected data")
    def test_agg_eig_top10_as_published(self, euair):
        res = aggregate_eigenvector_centrality(euair)
        assert_top_matches(rank(res.scores), EUAIR_TOP10["agg_eig"])

    @pytest.mark.xfail(strict=False,
                       reason="start-dependent on disconnected data")
    def test_pearson_cf_eig_ver_as_published(self, euair, euair_solution):
        scores, _ = euair_solution
        ver = versatility_centrality(euair).scores
        assert abs(pearson(scores.x, ver) - 0.89) <= 0.01


class TestLondonStructure:
    def test_counts(self, london):
        assert london.n == 369 and london.L == 3

    def test_aggregate_connected_layers_not(self, london):
        diag = connectivity(london)
        assert diag.aggregate_connected
        assert not any(diag.layer_connected)
        assert diag.empty_layers == ()
        assert diag.isolated_nodes == ()


class TestLondonNonlinear:
    def test_convergence_profile(self, london_solution):
        _, report = london_solution
        assert report.converged
        assert abs(report.iterations - 24) <= 3

    def test_scores_strictly_positive(self, london_solution):
        scores, _ = london_solution
        assert np.all(scores.x > 0)
        assert np.all(scores.t > 0)

    def test_top10(self, london_solution):
        scores, _ = london_solution
        assert_top_matches(rank(scores.x), LONDON_TOP10["cf"])


class TestLondonBaselines:
    def test_agg_deg_top10(self, london):
        res = aggregate_degree_centrality(london)
        assert_top_matches(rank(res.scores), LONDON_TOP10["agg_deg"])

    def test_agg_eig_top10(self, london):
        res = aggregate_eigenvector_centrality(london, tol=1e-12)
        assert not res.degenerate_warning
        assert_top_matches(rank(res.scores), LONDON_TOP10["agg_eig"])

    def test_eig_ver_top10(self, london):
        res = versatility_centrality(london, tol=1e-12)
        assert not res.degenerate_warning
        assert_top_matches(rank(res.scores), LONDON_TOP10["eig_ver"])

    @pytest.mark.xfail(strict=False,
                       reason="start-dependent: the individual layers are disconnected")
    def test_eig_cen_top10_as_published(self, london):
        res = layerwise_eigenvector_centrality(london)
        assert_top_matches(rank(res.scores), LONDON_TOP10["eig_cen"])

    def test_pearson_table_well_defined_rows(self, london, london_solution):
        scores, _ = london_solution
        ver = versatility_centrality(london, tol=1e-12).scores
        agg = aggregate_eigenvector_centrality(london, tol=1e-12).scores
        deg = aggregate_degree_centrality(london).scores
        assert abs(pearson(scores.x, ver) - 0.55) <= 0.01
        assert abs(pearson(scores.x, agg) - 0.10) <= 0.01
        assert abs(pearson(scores.x, deg) - 0.60) <= 0.01
        assert abs(pearson(ver, agg) - (-0.06)) <= 0.01
        assert abs(pearson(ver, deg) - 0.44) <= 0.01
        assert abs(pearson(agg, deg) - 0.31) <= 0.01
