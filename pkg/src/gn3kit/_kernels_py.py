"""Pure-Python kernels.  ``_ckernels.pyx`` mirrors this file line for line.

G_n^3 letters are bitmasks with three bits set (bit i for index i).
Rule codes: 1 = a^2 = 1, 2 = far commutation, 3 = tetrahedron.
Direction: +1 forward (LHS -> RHS), -1 backward.
"""

BACKEND = "python"


def occurrence_indices(codes, watch):
    """Prefix-parity indices of every occurrence of code 0.

    ``codes[p]`` is 0 for the target letter, ``1..W`` for watched letters
    and -1 for letters that do not matter.  ``watch`` is a flat sequence of
    4 codes per complement index l: the first component is the parity of
    ``watch[4t] + watch[4t+1]``, the second of ``watch[4t+2] + watch[4t+3]``.
    Returns ``[(position, bytes)]`` with byte value ``2*first + second``.
    """
    nwatch = max(codes, default=0) + 1
    parity = [0] * max(nwatch, max(watch, default=0) + 1)
    L = len(watch) // 4
    out = []
    for p in range(len(codes)):
        c = codes[p]
        if c == 0:
            row = bytearray(L)
            for t in range(L):
                x = parity[watch[4 * t]] ^ parity[watch[4 * t + 1]]
                y = parity[watch[4 * t + 2]] ^ parity[watch[4 * t + 3]]
                row[t] = 2 * x + y
            out.append((p, bytes(row)))
        elif c > 0:
            parity[c] ^= 1
    return out


def reduce_involutions(seq):
    """Free reduction in a free product of Z2's: cancel adjacent equals."""
    stack = []
    for x in seq:
        if stack and stack[-1] == x:
            stack.pop()
        else:
            stack.append(x)
    return stack


def _popcount(x):
    return bin(x).count("1")


def _omitted(union, mask):
    return (union & ~mask).bit_length() - 1


def gn3_successors(word, alphabet, insertions):
    """All single relation applications to a G_n^3 word of bitmasks.

    Emission order: position ascending, then rule, then forward before
    backward, insertions following ``alphabet`` order.  Returns
    ``[(position, rule, direction, result_tuple)]``.
    """
    w = tuple(word)
    n = len(w)
    out = []
    for p in range(n + 1):
        if p + 1 < n and w[p] == w[p + 1]:
            out.append((p, 1, 1, w[:p] + w[p + 2:]))
        if insertions:
            for x in alphabet:
                out.append((p, 1, -1, w[:p] + (x, x) + w[p:]))
        if p + 1 < n:
            x, y = w[p], w[p + 1]
            if _popcount(x & y) < 2:
                out.append((p, 2, 1 if x < y else -1, w[:p] + (y, x) + w[p + 2:]))
        if p + 3 < n:
            a0, a1, a2, a3 = w[p], w[p + 1], w[p + 2], w[p + 3]
            u = a0 | a1 | a2 | a3
            if (_popcount(u) == 4 and a0 != a1 and a0 != a2 and a0 != a3
                    and a1 != a2 and a1 != a3 and a2 != a3):
                d = 1 if _omitted(u, a0) > _omitted(u, a3) else -1
                out.append((p, 3, d, w[:p] + (a3, a2, a1, a0) + w[p + 4:]))
    return out


def gn3_bfs(start, goal, alphabet, insertions, max_length, max_states, max_depth):
    """Breadth-first search between two G_n^3 words of bitmasks.

    Returns ``(found, parents, explored, depth_reached, truncated)`` where
    ``parents`` maps every visited state to ``(prev_state, position, rule,
    direction)`` (``None`` for the start).  Insertions are only tried on
    words of length <= max_length - 2.
    """
    start = tuple(start)
    goal = tuple(goal)
    parents = {start: None}
    if start == goal:
        return True, parents, 1, 0, False
    frontier = [start]
    depth = 0
    truncated = False
    while frontier and depth < max_depth:
        depth += 1
        nxt = []
        for w in frontier:
            ins = insertions and len(w) <= max_length - 2
            for pos, rule, d, res in gn3_successors(w, alphabet, ins):
                if len(res) > max_length or res in parents:
                    continue
                if len(parents) >= max_states:
                    truncated = True
                    continue
                parents[res] = (w, pos, rule, d)
                if res == goal:
                    return True, parents, len(parents), depth, truncated
                nxt.append(res)
        frontier = nxt
    if frontier and depth >= max_depth:
        truncated = True
    # deepest level that actually holds a state
    reached = depth if frontier else max(depth - 1, 0)
    return False, parents, len(parents), reached, truncated
