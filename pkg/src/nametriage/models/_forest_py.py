"""Pure-Python (NumPy) decision tree kernel.

This is the fallback for the compiled kernel in ``_forest_core``. Both
implement the *same* algorithm with the same RNG streams and must produce
bit-identical trees:

- nodes are created in preorder (left subtree before right);
- at each node, features are visited in the ``_rng.feature_order`` order;
  every visited feature spends budget, but the search keeps going past
  ``max_features`` until at least one non-constant feature was evaluated;
- candidate thresholds are midpoints between consecutive distinct values,
  scanned in ascending order;
- split quality is the Gini proxy ``sqL/mL + sqR/mR`` compared *exactly*
  with integer cross-multiplication, so float rounding can never make the
  backends disagree on ties. First strictly-better candidate wins.

Leaves carry integer class counts. Leaf nodes use feature -1 and
threshold -2.0.
"""

from __future__ import annotations

import numpy as np

from ._rng import feature_order, node_seed

LEAF = -1
LEAF_THRESHOLD = -2.0


def grow_tree(X, y, n_classes, boot, max_features, tseed):
    """Grow one CART tree on the bootstrap sample ``boot``.

    Returns (feature, threshold, left, right, counts) arrays; node 0 is the
    root.
    """
    n_features = X.shape[1]
    arena = np.asarray(boot, dtype=np.int64).copy()

    features: list[int] = []
    thresholds: list[float] = []
    lefts: list[int] = []
    rights: list[int] = []
    counts_rows: list[np.ndarray] = []

    # (start, end, parent, is_left); pushing right before left yields
    # preorder node numbering
    stack: list[tuple[int, int, int, bool]] = [(0, len(arena), -1, False)]
    while stack:
        start, end, parent, is_left = stack.pop()
        nid = len(features)
        if parent >= 0:
            if is_left:
                lefts[parent] = nid
            else:
                rights[parent] = nid
        idx = arena[start:end]
        ysub = y[idx]
        counts = np.bincount(ysub, minlength=n_classes).astype(np.int64)
        features.append(LEAF)
        thresholds.append(LEAF_THRESHOLD)
        lefts.append(LEAF)
        rights.append(LEAF)
        counts_rows.append(counts)

        m = end - start
        if m < 2 or np.count_nonzero(counts) <= 1:
            continue
        best = _best_split(X, idx, ysub, n_classes, max_features, node_seed(tseed, nid))
        if best is None:
            continue
        bf, bthr = best
        mask = X[idx, bf] <= bthr
        n_left = int(mask.sum())
        left_part = idx[mask]
        right_part = idx[~mask]
        arena[start : start + n_left] = left_part
        arena[start + n_left : end] = right_part
        features[nid] = bf
        thresholds[nid] = bthr
        stack.append((start + n_left, end, nid, False))
        stack.append((start, start + n_left, nid, True))

    return (
        np.array(features, dtype=np.int32),
        np.array(thresholds, dtype=np.float64),
        np.array(lefts, dtype=np.int32),
        np.array(rights, dtype=np.int32),
        np.vstack(counts_rows),
    )


def _best_split(X, idx, ysub, n_classes, max_features, nseed):
    n_features = X.shape[1]
    Xsub = X[idx]
    col_min = Xsub.min(axis=0)
    col_max = Xsub.max(axis=0)
    nonconst = col_min != col_max

    order = feature_order(nseed, n_features)
    nc_positions = np.flatnonzero(nonconst[order])
    if nc_positions.size == 0:
        return None
    visit = max(max_features, int(nc_positions[0]) + 1)
    visited = order[:visit]
    candidates = visited[nonconst[visited]]

    m = len(idx)
    y64 = ysub.astype(np.int64)
    best_num = -1
    best_den = 0  # -1/0 sentinel: any valid split beats it
    best_feature = -1
    best_threshold = LEAF_THRESHOLD
    for f in candidates:
        col = Xsub[:, f].astype(np.int64)
        vmax = int(col_max[f])
        hist = np.bincount(col * n_classes + y64, minlength=(vmax + 1) * n_classes)
        hist = hist.reshape(vmax + 1, n_classes)
        present = np.flatnonzero(hist.any(axis=1))
        cum = np.cumsum(hist[present], axis=0)
        total = cum[-1]
        m_lefts = cum.sum(axis=1)
        sq_lefts = (cum**2).sum(axis=1)
        sq_rights = ((total - cum) ** 2).sum(axis=1)
        for i in range(len(present) - 1):
            m_left = int(m_lefts[i])
            m_right = m - m_left
            num = int(sq_lefts[i]) * m_right + int(sq_rights[i]) * m_left
            den = m_left * m_right
            # exact fraction comparison: num/den > best_num/best_den
            if num * best_den > best_num * den:
                best_num = num
                best_den = den
                best_feature = int(f)
                best_threshold = (int(present[i]) + int(present[i + 1])) / 2.0
    if best_feature < 0:
        return None
    return best_feature, best_threshold


def predict_counts(tree_arrays, X):
    """Mean normalized leaf distribution over the forest for each row of X.

    ``tree_arrays`` is the flattened forest: (feature, threshold, left,
    right, leaf_probs, roots) with node ids offset per tree.
    """
    feature, threshold, left, right, probs, roots = tree_arrays
    n, _ = X.shape
    n_classes = probs.shape[1]
    out = np.zeros((n, n_classes), dtype=np.float64)
    for i in range(n):
        row = X[i]
        for root in roots:
            node = root
            while feature[node] >= 0:
                if row[feature[node]] <= threshold[node]:
                    node = left[node]
                else:
                    node = right[node]
            out[i] += probs[node]
    out /= len(roots)
    return out
