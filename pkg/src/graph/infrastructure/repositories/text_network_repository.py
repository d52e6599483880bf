"""
Graph Infrastructure - Whitespace-separated text file repositories.

File formats (UTF-8, "#"-prefixed comment lines ignored):
- Edge list: "SOURCE<ws>TARGET"
- Susceptibility: "NODE_ID<ws>VALUE"
- Id map: "EXTERNAL_ID<ws>INTERNAL_INDEX"
"""

from pathlib import Path

import numpy as np
import pandas as pd

from src.shared.domain.exceptions import GraphFormatError
from src.shared.infrastructure import get_logger
from src.shared.infrastructure.repositories import CSVRepository
from src.graph.domain.entities import DirectedGraph, clean_edges
from src.graph.domain.value_objects import EdgeListLoadReport, NodeIdMap, SusceptibilityLoadReport

logger = get_logger(__name__)


def _first_bad_line(path: Path, expected_fields: int) -> int | None:
    """Locate the first non-comment line whose field count differs from expected."""
    with open(path, encoding="utf-8") as handle:
        for number, line in enumerate(handle, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if len(stripped.split()) != expected_fields:
                return number
    return None


def _line_of_record(path: Path, record_position: int) -> int | None:
    """Map a 0-based record position (comments and blanks skipped) to its file line number."""
    position = -1
    with open(path, encoding="utf-8") as handle:
        for number, line in enumerate(handle, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            position += 1
            if position == record_position:
                return number
    return None


class TextFileRepository(CSVRepository):
    """
    Base class for the two-column whitespace-separated text formats.
    """

    def _load_columns(self, names: list[str]) -> pd.DataFrame:
        """
        Read the file as two string columns.

        Returns:
            pd.DataFrame: One row per non-comment line (empty frame for an empty file).

        Raises:
            GraphFormatError: If a line does not hold exactly two fields.
        """
        try:
            df = self._load_csv(
                sep=r"\s+",
                header=None,
                comment="#",
                dtype=str,
                skip_blank_lines=True,
                encoding="utf-8",
            )
        except pd.errors.EmptyDataError:
            return pd.DataFrame({name: pd.Series(dtype=str) for name in names})
        except pd.errors.ParserError as error:
            line = _first_bad_line(self._file_path, expected_fields=len(names))
            raise GraphFormatError(f"expected {len(names)} whitespace-separated fields", line_number=line) from error

        if df.shape[1] != len(names):
            line = _first_bad_line(self._file_path, expected_fields=len(names))
            raise GraphFormatError(f"expected {len(names)} whitespace-separated fields", line_number=line)
        df.columns = names

        missing = df[names].isna().any(axis=1).to_numpy()
        if missing.any():
            line = _line_of_record(self._file_path, int(np.flatnonzero(missing)[0]))
            raise GraphFormatError(f"expected {len(names)} whitespace-separated fields", line_number=line)
        return df


class EdgeListRepository(TextFileRepository):
    """
    Repository reading a directed edge list into a DirectedGraph.
    """

    def load(self) -> tuple[DirectedGraph, EdgeListLoadReport]:
        """
        Read the edge list.

        External ids receive dense internal indices in order of first
        appearance. Self-loops are dropped and parallel edges collapsed, both
        counted in the report.

        Returns:
            Tuple of (graph with zero susceptibility, load report).

        Raises:
            FileNotFoundError: If the file does not exist.
            GraphFormatError: On a malformed line (with its line number).
        """
        df = self._load_columns(["source", "target"])

        interleaved = np.column_stack([df["source"].to_numpy(dtype=object), df["target"].to_numpy(dtype=object)])
        codes, labels = pd.factorize(interleaved.ravel())
        codes = codes.reshape(-1, 2) if len(codes) else np.zeros((0, 2), dtype=np.int64)

        sources, targets, self_loops, duplicates = clean_edges(codes[:, 0], codes[:, 1])
        if self_loops:
            logger.warning("%s: dropped %d self-loop(s).", self._file_path, self_loops)
        if duplicates:
            logger.warning("%s: collapsed %d parallel edge(s).", self._file_path, duplicates)

        id_map = NodeIdMap(tuple(str(label) for label in labels))
        graph = DirectedGraph.from_edges(len(id_map), sources, targets, id_map=id_map)
        report = EdgeListLoadReport(
            lines_read=len(df),
            self_loops_dropped=self_loops,
            duplicates_collapsed=duplicates,
            node_count=graph.node_count,
            edge_count=graph.edge_count,
        )
        return graph, report


class SusceptibilityRepository(TextFileRepository):
    """
    Repository reading per-node susceptibility values.
    """

    def load_into(self, graph: DirectedGraph) -> tuple[DirectedGraph, SusceptibilityLoadReport]:
        """
        Attach the listed susceptibilities to a graph.

        Unlisted nodes keep 0 and unknown ids are skipped; both are counted and logged.

        Args:
            graph: Graph whose id map resolves the node ids.

        Returns:
            Tuple of (annotated graph, load report).

        Raises:
            GraphFormatError: On a malformed line, a non-numeric or out-of-range value, or a repeated node id.
        """
        df = self._load_columns(["node", "value"])
        values = pd.to_numeric(df["value"], errors="coerce").to_numpy(dtype=float)

        not_numeric = np.isnan(values)
        if not_numeric.any():
            position = int(np.flatnonzero(not_numeric)[0])
            raise GraphFormatError(
                f"susceptibility of node '{df['node'].iloc[position]}' is not a number: '{df['value'].iloc[position]}'",
                line_number=_line_of_record(self._file_path, position),
            )

        out_of_range = (values < 0.0) | (values > 1.0)
        if out_of_range.any():
            position = int(np.flatnonzero(out_of_range)[0])
            raise GraphFormatError(
                f"susceptibility of node '{df['node'].iloc[position]}' outside [0, 1]: {df['value'].iloc[position]}",
                line_number=_line_of_record(self._file_path, position),
            )

        repeated = df["node"].duplicated().to_numpy()
        if repeated.any():
            position = int(np.flatnonzero(repeated)[0])
            raise GraphFormatError(
                f"node '{df['node'].iloc[position]}' listed more than once",
                line_number=_line_of_record(self._file_path, position),
            )

        susceptibility = np.zeros(graph.node_count)
        assigned = np.zeros(graph.node_count, dtype=bool)
        unknown = 0
        for node, value in zip(df["node"], values, strict=True):
            if node not in graph.id_map:
                unknown += 1
                continue
            internal = graph.id_map.to_internal(node)
            susceptibility[internal] = value
            assigned[internal] = True

        report = SusceptibilityLoadReport(
            assigned=int(assigned.sum()),
            unlisted=int(graph.node_count - assigned.sum()),
            unknown_ids=unknown,
            source=str(self._file_path),
        )
        if len(df) == 0:
            logger.warning("%s: empty susceptibility file, every node keeps susceptibility 0.", self._file_path)
        if report.unlisted:
            logger.warning("%s: %d node(s) without a value keep susceptibility 0.", self._file_path, report.unlisted)
        if unknown:
            logger.warning("%s: skipped %d unknown node id(s).", self._file_path, unknown)

        return graph.with_susceptibility(susceptibility), report

    def load_values(self) -> np.ndarray:
        """
        Read only the value column (the empirical distribution for bootstrap assignment).

        Returns:
            np.ndarray: Values in file order.
        """
        df = self._load_columns(["node", "value"])
        values = pd.to_numeric(df["value"], errors="coerce").to_numpy(dtype=float)
        if np.isnan(values).any():
            position = int(np.flatnonzero(np.isnan(values))[0])
            raise GraphFormatError("value is not a number", line_number=_line_of_record(self._file_path, position))
        return values


class IdMapRepository(CSVRepository):
    """
    Repository persisting the external-to-internal id map.
    """

    def save(self, id_map: NodeIdMap) -> Path:
        """
        Write "EXTERNAL_ID<tab>INTERNAL_INDEX" lines.

        Args:
            id_map: Map to persist.

        Returns:
            Path: Written file.
        """
        self._file_path.parent.mkdir(parents=True, exist_ok=True)
        df = pd.DataFrame({"external_id": list(id_map.external_ids), "internal_index": np.arange(len(id_map))})
        df.to_csv(self._file_path, sep="\t", header=False, index=False)
        return self._file_path

    def load(self) -> NodeIdMap:
        """
        Read a persisted id map.

        Returns:
            NodeIdMap: Map ordered by internal index.
        """
        df = self._load_csv(
            sep=r"\s+",
            header=None,
            names=["external_id", "internal_index"],
            dtype={"external_id": str},
        )
        df = df.sort_values("internal_index")
        if not np.array_equal(df["internal_index"].to_numpy(), np.arange(len(df))):
            raise GraphFormatError(f"{self._file_path}: internal indices are not dense 0..N-1")
        return NodeIdMap(tuple(df["external_id"].astype(str)))
