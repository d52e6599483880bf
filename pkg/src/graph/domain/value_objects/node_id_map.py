"""
Graph Domain Value Object - Node Id Map.
"""

from collections.abc import Iterable
from dataclasses import dataclass, field

from src.shared.domain.exceptions import InvalidParameterError


@dataclass(frozen=True)
class NodeIdMap:
    """
    Bijection between external node ids (arbitrary strings) and dense internal indices.

    Internal index i carries external id `external_ids[i]`.
    """

    external_ids: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        """
        Validate uniqueness and build the reverse lookup.
        """
        object.__setattr__(self, "external_ids", tuple(str(label) for label in self.external_ids))
        index = {label: position for position, label in enumerate(self.external_ids)}
        if len(index) != len(self.external_ids):
            raise InvalidParameterError("External node ids must be unique.")
        object.__setattr__(self, "_index", index)

    @staticmethod
    def identity(node_count: int) -> "NodeIdMap":
        """
        Map where the external id of node i is str(i).

        Args:
            node_count: Number of nodes.

        Returns:
            NodeIdMap: Identity map.
        """
        return NodeIdMap(tuple(str(position) for position in range(node_count)))

    def __len__(self) -> int:
        return len(self.external_ids)

    def __contains__(self, external_id: object) -> bool:
        return str(external_id) in self._index

    def to_internal(self, external_id: str) -> int:
        """
        Internal index of an external id.

        Raises:
            KeyError: If the id is unknown.
        """
        return self._index[str(external_id)]

    def to_external(self, internal_id: int) -> str:
        """External id of an internal index."""
        return self.external_ids[int(internal_id)]

    def subset(self, kept: Iterable[int]) -> "NodeIdMap":
        """
        Map restricted to the kept internal indices, reindexed in ascending order.

        Args:
            kept: Internal indices to keep (ascending).

        Returns:
            NodeIdMap: Reindexed map.
        """
        return NodeIdMap(tuple(self.external_ids[int(position)] for position in kept))
