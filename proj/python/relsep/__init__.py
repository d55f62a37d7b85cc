"""d-separation on finite directed graphs, decided by binary relations.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from relsep._core import (
    Graph,
    active_reach,
    crosscheck,
    d_connected_reach,
    d_separated,
    d_separated_sets,
    enumerate_undirected_paths,
    exists_active_path,
    morally_blocked,
    plain_separation,
    relation_matrix,
    witness,
)

__all__ = [
    "Graph",
    "active_reach",
    "crosscheck",
    "d_connected_reach",
    "d_separated",
    "d_separated_sets",
    "enumerate_undirected_paths",
    "exists_active_path",
    "morally_blocked",
    "plain_separation",
    "relation_matrix",
    "witness",
]
