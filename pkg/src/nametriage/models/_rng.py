"""Counter-based splitmix64 streams shared by both tree backends.

Every random quantity in forest training (bootstrap draws, per-node feature
order) is a pure function of (seed, tree index, node index, counter), so
trees can be built in any order, serially or in parallel, with identical
results. The Cython kernel re-implements ``mix64`` in C; the tests assert
both sides agree.
"""

from __future__ import annotations

import numpy as np

M64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
BOOTSTRAP_SALT = 0xD1B54A32D192ED03
# feature indices are packed into the low bits of the sort key
FEATURE_BITS = 20
FEATURE_MASK = (1 << FEATURE_BITS) - 1
MAX_FEATURES_SUPPORTED = 1 << FEATURE_BITS


def mix64(z: int) -> int:
    z &= M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M64
    return z ^ (z >> 31)


def tree_seed(seed: int, tree_index: int) -> int:
    return mix64(mix64(seed & M64) + (tree_index + 1) * GAMMA)


def node_seed(tseed: int, node_index: int) -> int:
    return mix64(tseed ^ mix64((node_index + 1) * GAMMA))


def _mix64_vec(z: np.ndarray) -> np.ndarray:
    z = z ^ (z >> np.uint64(30))
    z = z * np.uint64(0xBF58476D1CE4E5B9)
    z = z ^ (z >> np.uint64(27))
    z = z * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def stream(state: int, n: int) -> np.ndarray:
    """First ``n`` outputs of the splitmix64 stream seeded at ``state``."""
    counters = (
        np.uint64(state & M64)
        + (np.arange(1, n + 1, dtype=np.uint64)) * np.uint64(GAMMA)
    )
    return _mix64_vec(counters)


def bootstrap_indices(tseed: int, n_samples: int) -> np.ndarray:
    """``n_samples`` draws with replacement from [0, n_samples)."""
    draws = stream(mix64(tseed ^ BOOTSTRAP_SALT), n_samples)
    return (draws % np.uint64(n_samples)).astype(np.int64)


def feature_order(nseed: int, n_features: int) -> np.ndarray:
    """Random feature visit order for one node.

    The order is the sort of per-feature random keys with the feature id
    packed into the low bits, which both backends can reproduce with a
    plain uint64 sort.
    """
    keys = stream(nseed, n_features)
    packed = ((keys >> np.uint64(FEATURE_BITS)) << np.uint64(FEATURE_BITS)) | np.arange(
        n_features, dtype=np.uint64
    )
    packed.sort()
    return (packed & np.uint64(FEATURE_MASK)).astype(np.int64)
