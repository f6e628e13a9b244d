"""Maximum bipartite matching by deterministic augmenting-path search, plus
extraction of a Hall-condition violator when the left side is unsaturated."""

from __future__ import annotations

from collections import deque


def max_matching(n_left: int, adj) -> tuple[int, list[int], dict[int, int]]:
    """Maximum matching of a bipartite graph given as left-side adjacency.

    adj[i] lists the right-side vertices reachable from left vertex i; right
    vertices may be arbitrary hashable labels. Left vertices are processed in
    index order and candidate lists in given order, so the result is
    deterministic.

    Returns (size, match_left, match_right) where match_left[i] is the right
    partner of i (or None) and match_right maps right labels back to left
    indices.
    """
    match_left: list = [None] * n_left
    match_right: dict = {}

    def try_augment(i, seen) -> bool:
        for r in adj[i]:
            if r in seen:
                continue
            seen.add(r)
            j = match_right.get(r)
            if j is None or try_augment(j, seen):
                match_left[i] = r
                match_right[r] = i
                return True
        return False

    size = 0
    for i in range(n_left):
        if try_augment(i, set()):
            size += 1
    return size, match_left, match_right


def hall_violator(n_left: int, adj, match_left, match_right) -> tuple[list[int], list]:
    """Deficiency witness for an unsaturated maximum matching.

    Returns (X, N(X)) with X a list of left indices whose joint neighborhood
    N(X) is strictly smaller, obtained from the alternating-path forest rooted
    at every unmatched left vertex. Requires the matching to be maximum and
    the left side unsaturated.
    """
    roots = [i for i in range(n_left) if match_left[i] is None]
    if not roots:
        raise ValueError("matching saturates the left side; no violator exists")
    left_seen = set(roots)
    right_seen = set()
    queue = deque(roots)
    while queue:
        i = queue.popleft()
        for r in adj[i]:
            if r in right_seen:
                continue
            right_seen.add(r)
            # r must be matched, else an augmenting path would exist
            j = match_right[r]
            if j not in left_seen:
                left_seen.add(j)
                queue.append(j)
    x = sorted(left_seen)
    nx = sorted(right_seen)
    assert len(nx) < len(x)
    return x, nx
