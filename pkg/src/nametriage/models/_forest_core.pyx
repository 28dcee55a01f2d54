# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled decision tree kernel.

Mirror of ``_forest_py``: same RNG streams, same preorder construction,
same exact integer split comparison, so the two backends grow
bit-identical trees. See that module's docstring for the algorithm.
"""

import numpy as np

cimport numpy as cnp
from libc.stdlib cimport free, malloc
from libc.string cimport memset

cnp.import_array()

ctypedef unsigned long long u64
ctypedef long long i64

cdef u64 GAMMA = 0x9E3779B97F4A7C15ULL
cdef int FEATURE_BITS = 20
cdef u64 FEATURE_MASK = (1ULL << 20) - 1ULL


cdef inline u64 mix64(u64 z) nogil:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef inline u64 node_seed(u64 tseed, i64 node_index) nogil:
    return mix64(tseed ^ mix64((<u64> (node_index + 1)) * GAMMA))


cdef void fill_feature_order(u64 nseed, i64 n_features, u64* packed) nogil:
    cdef i64 j
    for j in range(n_features):
        packed[j] = ((mix64(nseed + (<u64> (j + 1)) * GAMMA) >> FEATURE_BITS)
                     << FEATURE_BITS) | (<u64> j)
    sort_u64(packed, 0, n_features - 1)


cdef void sort_u64(u64* a, i64 lo, i64 hi) nogil:
    # quicksort with insertion sort for small runs; keys are unique
    cdef i64 i, j
    cdef u64 pivot, tmp
    while lo < hi:
        if hi - lo < 16:
            for i in range(lo + 1, hi + 1):
                tmp = a[i]
                j = i - 1
                while j >= lo and a[j] > tmp:
                    a[j + 1] = a[j]
                    j -= 1
                a[j + 1] = tmp
            return
        pivot = a[lo + ((hi - lo) >> 1)]
        i = lo
        j = hi
        while i <= j:
            while a[i] < pivot:
                i += 1
            while a[j] > pivot:
                j -= 1
            if i <= j:
                tmp = a[i]
                a[i] = a[j]
                a[j] = tmp
                i += 1
                j -= 1
        if j - lo < hi - i:
            sort_u64(a, lo, j)
            lo = i
        else:
            sort_u64(a, i, hi)
            hi = j


def rng_feature_order(tseed, node_index, n_features):
    """Feature visit order for one node (exposed for backend cross-checks)."""
    cdef i64 V = n_features
    cdef u64* packed = <u64*> malloc(V * sizeof(u64))
    if packed == NULL:
        raise MemoryError()
    cdef u64 nseed = node_seed(<u64> tseed, <i64> node_index)
    out = np.empty(V, dtype=np.int64)
    cdef i64[::1] out_v = out
    cdef i64 j
    with nogil:
        fill_feature_order(nseed, V, packed)
        for j in range(V):
            out_v[j] = <i64> (packed[j] & FEATURE_MASK)
    free(packed)
    return out


def grow_tree(cnp.int32_t[:, ::1] X, cnp.int32_t[::1] y, int n_classes,
              cnp.int64_t[::1] boot, int max_features, tseed):
    cdef i64 n_features = X.shape[1]
    cdef i64 B = boot.shape[0]
    cdef u64 tseed_u = <u64> tseed
    cdef i64 max_nodes = 2 * B + 1

    feature_arr = np.empty(max_nodes, dtype=np.int32)
    threshold_arr = np.full(max_nodes, -2.0, dtype=np.float64)
    left_arr = np.full(max_nodes, -1, dtype=np.int32)
    right_arr = np.full(max_nodes, -1, dtype=np.int32)
    counts_arr = np.zeros((max_nodes, n_classes), dtype=np.int64)
    arena_arr = np.asarray(boot).copy()

    cdef cnp.int32_t[::1] feat_v = feature_arr
    cdef cnp.float64_t[::1] thr_v = threshold_arr
    cdef cnp.int32_t[::1] left_v = left_arr
    cdef cnp.int32_t[::1] right_v = right_arr
    cdef cnp.int64_t[:, ::1] counts_v = counts_arr
    cdef cnp.int64_t[::1] arena = arena_arr

    # find the largest feature value to size the split histogram
    cdef i64 i, j
    cdef cnp.int32_t gmax = 0
    with nogil:
        for i in range(X.shape[0]):
            for j in range(n_features):
                if X[i, j] > gmax:
                    gmax = X[i, j]

    cdef i64 hist_rows = gmax + 1
    cdef i64* hist = <i64*> malloc(hist_rows * n_classes * sizeof(i64))
    cdef u64* order = <u64*> malloc(n_features * sizeof(u64))
    cdef i64* scratch = <i64*> malloc(B * sizeof(i64))
    cdef i64* cum = <i64*> malloc(n_classes * sizeof(i64))
    # stack of (start, end, parent, is_left)
    cdef i64* st_start = <i64*> malloc(max_nodes * sizeof(i64))
    cdef i64* st_end = <i64*> malloc(max_nodes * sizeof(i64))
    cdef i64* st_parent = <i64*> malloc(max_nodes * sizeof(i64))
    cdef char* st_left = <char*> malloc(max_nodes * sizeof(char))
    if (hist == NULL or order == NULL or scratch == NULL or cum == NULL or
            st_start == NULL or st_end == NULL or st_parent == NULL or st_left == NULL):
        free(hist); free(order); free(scratch); free(cum)
        free(st_start); free(st_end); free(st_parent); free(st_left)
        raise MemoryError()
    memset(hist, 0, hist_rows * n_classes * sizeof(i64))

    cdef i64 n_nodes = 0
    cdef i64 top = 0
    cdef i64 start, end, parent, nid, m, m_left
    cdef char is_left
    cdef i64 n_present, visited, pos, f, vmin, vmax, v, last_present
    cdef i64 row_total, c, mL, mR, sqL, sqR, num, den
    cdef i64 best_num, best_den, best_feature
    cdef double best_threshold
    cdef cnp.int32_t val
    cdef bint found
    cdef u64 nseed

    st_start[0] = 0
    st_end[0] = B
    st_parent[0] = -1
    st_left[0] = 0
    top = 1
    with nogil:
        while top > 0:
            top -= 1
            start = st_start[top]
            end = st_end[top]
            parent = st_parent[top]
            is_left = st_left[top]
            nid = n_nodes
            n_nodes += 1
            if parent >= 0:
                if is_left:
                    left_v[parent] = <cnp.int32_t> nid
                else:
                    right_v[parent] = <cnp.int32_t> nid
            feat_v[nid] = -1
            thr_v[nid] = -2.0
            m = end - start
            for i in range(start, end):
                counts_v[nid, y[arena[i]]] += 1
            row_total = 0
            for c in range(n_classes):
                if counts_v[nid, c] > 0:
                    row_total += 1
            if m < 2 or row_total <= 1:
                continue

            # ---- split search ----
            nseed = node_seed(tseed_u, nid)
            fill_feature_order(nseed, n_features, order)
            best_num = -1
            best_den = 0
            best_feature = -1
            best_threshold = -2.0
            visited = 0
            found = 0
            pos = 0
            while pos < n_features and (visited < max_features or not found):
                f = <i64> (order[pos] & FEATURE_MASK)
                pos += 1
                visited += 1
                vmin = X[arena[start], f]
                vmax = vmin
                for i in range(start + 1, end):
                    val = X[arena[i], f]
                    if val < vmin:
                        vmin = val
                    elif val > vmax:
                        vmax = val
                if vmin == vmax:
                    continue
                found = 1
                for i in range(start, end):
                    hist[(<i64> X[arena[i], f]) * n_classes + y[arena[i]]] += 1
                for c in range(n_classes):
                    cum[c] = 0
                mL = 0
                last_present = -1
                for v in range(vmin, vmax + 1):
                    row_total = 0
                    for c in range(n_classes):
                        row_total += hist[v * n_classes + c]
                    if row_total == 0:
                        continue
                    if last_present >= 0:
                        mR = m - mL
                        sqL = 0
                        sqR = 0
                        for c in range(n_classes):
                            sqL += cum[c] * cum[c]
                            sqR += ((counts_v[nid, c] - cum[c])
                                    * (counts_v[nid, c] - cum[c]))
                        num = sqL * mR + sqR * mL
                        den = mL * mR
                        if num * best_den > best_num * den:
                            best_num = num
                            best_den = den
                            best_feature = f
                            best_threshold = (last_present + v) / 2.0
                    for c in range(n_classes):
                        cum[c] += hist[v * n_classes + c]
                    mL += row_total
                    last_present = v
                # re-zero only the touched span
                memset(hist + vmin * n_classes, 0,
                       (vmax - vmin + 1) * n_classes * sizeof(i64))

            if best_feature < 0:
                continue

            # stable partition of arena[start:end] via scratch buffer
            m_left = 0
            for i in range(start, end):
                if X[arena[i], best_feature] <= best_threshold:
                    scratch[m_left] = arena[i]
                    m_left += 1
            j = m_left
            for i in range(start, end):
                if not (X[arena[i], best_feature] <= best_threshold):
                    scratch[j] = arena[i]
                    j += 1
            for i in range(m):
                arena[start + i] = scratch[i]

            feat_v[nid] = <cnp.int32_t> best_feature
            thr_v[nid] = best_threshold
            st_start[top] = start + m_left
            st_end[top] = end
            st_parent[top] = nid
            st_left[top] = 0
            top += 1
            st_start[top] = start
            st_end[top] = start + m_left
            st_parent[top] = nid
            st_left[top] = 1
            top += 1

    free(hist); free(order); free(scratch); free(cum)
    free(st_start); free(st_end); free(st_parent); free(st_left)
    return (
        feature_arr[:n_nodes].copy(),
        threshold_arr[:n_nodes].copy(),
        left_arr[:n_nodes].copy(),
        right_arr[:n_nodes].copy(),
        counts_arr[:n_nodes].copy(),
    )


def predict_counts(cnp.int32_t[::1] feature, cnp.float64_t[::1] threshold,
                   cnp.int32_t[::1] left, cnp.int32_t[::1] right,
                   cnp.float64_t[:, ::1] probs, cnp.int64_t[::1] roots,
                   cnp.int32_t[:, ::1] X):
    """Mean normalized leaf distribution over all trees, per row of X."""
    cdef i64 n = X.shape[0]
    cdef i64 n_classes = probs.shape[1]
    cdef i64 n_trees = roots.shape[0]
    out = np.zeros((n, n_classes), dtype=np.float64)
    cdef cnp.float64_t[:, ::1] out_v = out
    cdef i64 i, t, c
    cdef cnp.int32_t node
    with nogil:
        for i in range(n):
            for t in range(n_trees):
                node = <cnp.int32_t> roots[t]
                while feature[node] >= 0:
                    if X[i, feature[node]] <= threshold[node]:
                        node = left[node]
                    else:
                        node = right[node]
                for c in range(n_classes):
                    out_v[i, c] += probs[node, c]
            for c in range(n_classes):
                out_v[i, c] /= n_trees
    return out
