"""Edit-distance primitives used by scoring and result diagnostics.

Distances are computed on whatever strings the caller passes; the search
pipeline always passes canonical normalized strings, spaces included, so
multi-word marks are compared in full.
"""


def levenshtein(a: str, b: str) -> int:
    """Unit-cost Levenshtein distance (insert, delete, substitute)."""
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    lb = len(b)
    if lb == 0:
        return len(a)
    prev = list(range(lb + 1))
    cur = [0] * (lb + 1)
    for i, ca in enumerate(a, start=1):
        cur[0] = i
        for j in range(1, lb + 1):
            cur[j] = min(
                prev[j] + 1,  # delete from a
                cur[j - 1] + 1,  # insert into a
                prev[j - 1] + (ca != b[j - 1]),
            )
        prev, cur = cur, prev
    return prev[lb]


def damerau_levenshtein(a: str, b: str) -> int:
    """Optimal-string-alignment distance: Levenshtein plus adjacent
    transposition at cost 1 (each substring rearranged at most once)."""
    if a == b:
        return 0
    la, lb = len(a), len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    prev2 = [0] * (lb + 1)
    prev = list(range(lb + 1))
    cur = [0] * (lb + 1)
    for i in range(1, la + 1):
        cur[0] = i
        ca = a[i - 1]
        for j in range(1, lb + 1):
            cost = min(
                prev[j] + 1,
                cur[j - 1] + 1,
                prev[j - 1] + (ca != b[j - 1]),
            )
            if i > 1 and j > 1 and ca == b[j - 2] and a[i - 2] == b[j - 1]:
                cost = min(cost, prev2[j - 2] + 1)
            cur[j] = cost
        prev2, prev, cur = prev, cur, prev2
    return prev[lb]


def edit_similarity(a: str, b: str) -> float:
    """Levenshtein distance rescaled to [0, 1]; 1.0 means identical.

    Defined as 1 - d / max(len(a), len(b)), and as 1.0 when both strings
    are empty.
    """
    longest = max(len(a), len(b))
    if longest == 0:
        return 1.0
    return 1.0 - levenshtein(a, b) / longest
