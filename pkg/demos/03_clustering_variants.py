"""The six spectral-clustering variants on the karate-club graph.

Plain variants embed the edge adjacency (raw, normalized-Laplacian, or
regularized-Laplacian transformed); the higher-order ones embed the
edge matrix plus the observed triangle-motif matrix.  All six row-
normalize the eigenvector embedding before k-means.
"""

from motifspectra import (
    METHOD_NAMES,
    CommunityAssignment,
    cluster,
    misclustered_count,
    named_method,
)
from motifspectra.experiments import bundled_dataset, graph_from_dataset


def main():
    ds = bundled_dataset("karate")
    g = graph_from_dataset(ds)
    truth = CommunityAssignment(ds.labels, ds.k)
    print(f"karate club: n={ds.n}, edges={len(ds.edges)}, k={ds.k}")
    print("\nbest misclustered count over 5 seeds (20 k-means restarts each):")
    for name in METHOD_NAMES:
        method = named_method(name)
        best = min(
            misclustered_count(truth, cluster(g, method, truth.k, seed))
            for seed in range(5)
        )
        tag = " <- the one variant that misses a vertex" if best else ""
        print(f"  {name:7s} {best}{tag}")


if __name__ == "__main__":
    main()
