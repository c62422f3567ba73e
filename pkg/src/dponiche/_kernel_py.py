"""Pure-Python relation kernel (twin of the compiled dponiche._kernel).

Coordinates arrive as plain integers (callers pre-scale each axis by the
lcm of its denominators), so every comparison below is exact.  Adjacency
rows are returned as per-vertex bitmasks: bit j of row i is set iff the
pair {i, j} is related.
"""


def relation_rows(x1: list[int], x2: list[int]) -> tuple[list[int], list[int]]:
    """Competition and common-enemy bit-rows of a dominance digraph.

    Two vertices compete iff their prey sets intersect; they share an enemy
    iff their predator sets intersect.  Prey/predator sets are computed as
    bitmasks in O(n^2), then intersected pairwise.
    """
    n = len(x1)
    prey = [0] * n
    pred = [0] * n
    for i in range(n):
        a, b = x1[i], x2[i]
        pm = 0
        qm = 0
        bit = 1
        for j in range(n):
            if x1[j] < a and x2[j] < b:
                pm |= bit
            elif a < x1[j] and b < x2[j]:
                qm |= bit
            bit <<= 1
        prey[i] = pm
        pred[i] = qm

    comp = [0] * n
    enemy = [0] * n
    for i in range(n):
        pi = prey[i]
        qi = pred[i]
        ibit = 1 << i
        for j in range(i + 1, n):
            if pi & prey[j]:
                comp[i] |= 1 << j
                comp[j] |= ibit
            if qi & pred[j]:
                enemy[i] |= 1 << j
                enemy[j] |= ibit
    return comp, enemy
