"""Assembles the full analysis report from the individual analyses.

Each report section is produced by one builder so the partial CLI
subcommands and the full ``analyze`` run share code paths and agree
section for section. Random seeds are derived per section from the
configured base seed, never drawn sequentially, so a section's content is
independent of which other sections were computed.
"""

from __future__ import annotations

from typing import Sequence

from . import __version__
from .communities import CommunityReport, reduced_network_partition
from .config import PipelineConfig
from .graph import DiGraph
from .metrics import (
    RichClub,
    centrality_scores,
    degree_profile,
    density,
    phi_table,
    rich_club_members,
    top_cited,
    top_citing,
)
from .nullmodels import Assessment, club_cohesion, concentrated_world_assessment
from .report import SCHEMA_VERSION, AnalysisReport
from .seeding import derive_seed


def build_graph_summary(g: DiGraph) -> dict:
    ug = g.undirected_projection()
    return {
        "n": g.node_count,
        "arcs": g.arc_count,
        "undirected_edges": ug.edge_count,
        "density": density(g),
        "weight_total": g.weight_total,
    }


def build_roles_section(g: DiGraph) -> dict:
    return {
        g.slug(stats.node): {
            "in_degree": stats.in_degree,
            "out_degree": stats.out_degree,
            "total_degree": stats.total_degree,
            "role": stats.role.value,
        }
        for stats in degree_profile(g)
    }


def build_rankings_section(g: DiGraph, config: PipelineConfig) -> dict:
    citing = top_citing(g, config.k_citing)
    cited = top_cited(g, config.k_cited)
    return {
        "top_citing": {
            "k": config.k_citing,
            "slugs": [g.slug(v) for v in citing.nodes],
            "out_degrees": [g.out_degree(v) for v in citing.nodes],
            "truncated_tie": citing.truncated_tie,
        },
        "top_cited": {
            "k": config.k_cited,
            "slugs": [g.slug(v) for v in cited.nodes],
            "in_degrees": [g.in_degree(v) for v in cited.nodes],
            "truncated_tie": cited.truncated_tie,
        },
    }


def build_rich_club_section(g: DiGraph, config: PipelineConfig) -> tuple[dict, RichClub]:
    club = rich_club_members(g, config.k_citing, config.k_cited)
    ug = g.undirected_projection()
    table = {str(k): phi for k, phi in phi_table(ug).items()}
    validated, k_min, norm = club_cohesion(
        g,
        ug,
        club,
        config.null_samples,
        derive_seed(config.seed, "phi-norm"),
        config.rewire_budget_factor,
    )
    normalized = None
    if norm is not None:
        normalized = {
            "k": k_min,
            "phi": norm.phi,
            "phi_null_mean": norm.phi_null_mean,
            "phi_norm": norm.phi_norm,
            "sample_stddev": norm.sample_stddev,
            "samples": config.null_samples,
        }
    section = {
        "members": sorted(g.slug(v) for v in club.members),
        "top_citing": [g.slug(v) for v in club.top_citing],
        "top_cited": [g.slug(v) for v in club.top_cited],
        "overlap": sorted(g.slug(v) for v in club.overlap),
        "internal_arcs": club.internal_arcs,
        "internal_density": club.internal_density,
        "quotation_capture": club.quotation_capture,
        "quotation_capture_weighted": club.quotation_capture_weighted,
        "phi": table,
        "phi_normalized": normalized,
        "cohesion_validated": validated,
    }
    return section, club


def build_centrality_section(g: DiGraph) -> dict:
    section = {}
    for kind in ("degree", "betweenness", "closeness"):
        scores = centrality_scores(g, kind)
        section[kind] = {g.slug(v): scores.values[v] for v in g.node_ids()}
    return section


def build_communities_section(
    g: DiGraph, club: RichClub, config: PipelineConfig
) -> tuple[dict, CommunityReport]:
    report = reduced_network_partition(g, club.members, config.min_community_size)
    section = {
        "q": report.partition.q,
        "assignment": report.assignment_by_slug(),
        "main": [
            {"index": c.index, "size": c.size, "members": list(c.members)}
            for c in report.main_communities
        ],
        "residual": list(report.residual),
        "min_size": report.min_size,
        "removed": sorted(g.slug(v) for v in club.members),
    }
    return section, report


def run_assessment(g: DiGraph, club: RichClub, config: PipelineConfig) -> Assessment:
    return concentrated_world_assessment(
        g,
        club,
        config.null_samples,
        config.seed,
        config.thresholds(),
        config.ws_p,
        config.rewire_budget_factor,
    )


def build_baseline_sections(g: DiGraph, club: RichClub, config: PipelineConfig) -> tuple[list, dict]:
    assessment = run_assessment(g, club, config)
    baselines = [
        {
            "model": stats.model,
            "samples": stats.samples,
            "seed": stats.seed,
            "params": dict(stats.params),
            "density_mean": stats.density_mean,
            "clustering_mean": stats.clustering_mean,
            "clustering_stddev": stats.clustering_stddev,
            "path_length_mean": stats.path_length_mean,
            "path_length_stddev": stats.path_length_stddev,
        }
        for stats in assessment.baselines
    ]
    assessment_section = {
        "observed": {
            "density": assessment.observed_density,
            "transitivity": assessment.observed_transitivity,
            "path_length": assessment.observed_path_length,
            "mean_total_degree": assessment.observed_mean_total_degree,
        },
        "density_ratio_vs_er": assessment.density_ratio_vs_er,
        "clustering_ratio_vs_er": assessment.clustering_ratio_vs_er,
        "rich_club_present": assessment.rich_club_present,
        "verdict": assessment.verdict,
    }
    return baselines, assessment_section


def build_provenance(config: PipelineConfig, inputs: Sequence[str], run_id: str) -> dict:
    return {
        "inputs": list(inputs),
        "config": config.to_mapping(),
        "config_digest": config.digest(),
        "seed": config.seed,
        "tool_version": __version__,
        "run_id": run_id,
    }


def analyze_graph(
    g: DiGraph,
    config: PipelineConfig,
    inputs: Sequence[str] = (),
    run_id: str = "",
) -> AnalysisReport:
    """Run every analysis and assemble the full report."""
    rich_club_section, club = build_rich_club_section(g, config)
    communities_section, _ = build_communities_section(g, club, config)
    baselines, assessment_section = build_baseline_sections(g, club, config)
    return AnalysisReport(
        schema_version=SCHEMA_VERSION,
        graph_summary=build_graph_summary(g),
        roles=build_roles_section(g),
        rankings=build_rankings_section(g, config),
        rich_club=rich_club_section,
        centrality=build_centrality_section(g),
        communities=communities_section,
        baselines=baselines,
        assessment=assessment_section,
        provenance=build_provenance(config, inputs, run_id),
    )
