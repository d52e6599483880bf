"""
Diffusion Infrastructure - Simulation output files.

- activations.csv: node_id, time
- curve.csv: time, active_fraction
- summary.json: params, plan, seed, prevalence mean/std, runs
"""

from pathlib import Path

from src.shared.infrastructure.repositories import OutputWriter
from src.diffusion.domain.value_objects import DiffusionParams, MonteCarloSummary, SimulationResult
from src.interventions.domain.value_objects import InterventionPlan
from src.graph.domain.entities import DirectedGraph


class SimulationOutputRepository:
    """
    Repository writing simulation results through an OutputWriter.
    """

    def __init__(self, writer: OutputWriter):
        self._writer = writer

    def save_single(
        self,
        graph: DirectedGraph,
        params: DiffusionParams,
        plan: InterventionPlan,
        result: SimulationResult,
        rng_seed: int,
    ) -> list[Path]:
        """
        Write the activation table, the curve and the summary of one run.

        Returns:
            list[Path]: Written files.
        """
        summary = {
            "params": params.to_dict(),
            "plan": plan.to_dict(),
            "seed_node": graph.id_map.to_external(result.seed_node),
            "rng_seed": rng_seed,
            "ctx_time": result.ctx_time,
            "runs": 1,
            "active_count": result.active_count,
            "node_count": result.node_count,
            "mean_prevalence": result.final_prevalence,
            "prevalence_std": 0.0,
        }
        return [
            self._writer.write_csv("activations.csv", result.activation_frame(graph.id_map.external_ids)),
            self._writer.write_csv("curve.csv", result.curve_frame()),
            self._writer.write_json("summary.json", summary),
        ]

    def save_monte_carlo(
        self,
        graph: DirectedGraph,
        params: DiffusionParams,
        plan: InterventionPlan,
        seed_node: int,
        summary: MonteCarloSummary,
        master_seed: int,
    ) -> list[Path]:
        """
        Write the mean curve and the summary of a batch.

        Returns:
            list[Path]: Written files.
        """
        payload = {
            "params": params.to_dict(),
            "plan": plan.to_dict(),
            "seed_node": graph.id_map.to_external(seed_node),
            "master_seed": master_seed,
            **summary.to_dict(),
        }
        return [
            self._writer.write_csv("curve.csv", summary.curve_frame()),
            self._writer.write_json("summary.json", payload),
        ]
