"""Pure-Python diagram kernels.  Mirrors ``_ckernels.pyx`` exactly."""


def compose_matchings(fp, s, t, gp, u):
    """Stack matching ``gp`` (t -> u) on top of ``fp`` (s -> t).

    ``fp`` is a partner list over ``s + t`` points (bottom first), ``gp`` over
    ``t + u`` points.  Returns the partner tuple over the ``s + u`` outer
    points of the composite and the number of closed loops formed entirely in
    the middle layer.
    """
    n = s + u
    out = [-1] * n
    seen = [False] * t
    for start in range(n):
        if out[start] >= 0:
            continue
        # walk from an outer point until another outer point is reached
        if start < s:
            q = fp[start]
            in_f = True
        else:
            q = gp[t + start - s]
            in_f = False
        while True:
            if in_f:
                if q < s:
                    end = q
                    break
                mid = q - s
                seen[mid] = True
                q = gp[mid]
                in_f = False
            else:
                if q >= t:
                    end = s + q - t
                    break
                seen[q] = True
                q = fp[s + q]
                in_f = True
        out[start] = end
        out[end] = start
    loops = 0
    for k in range(t):
        if seen[k]:
            continue
        loops += 1
        j = k
        while True:
            seen[j] = True
            j = gp[j]          # middle -> middle through g
            seen[j] = True
            j = fp[s + j] - s  # middle -> middle through f
            if j == k:
                break
    return tuple(out), loops


def permutation_sign(perm):
    """Sign of a permutation given as a sequence of distinct comparable keys
    (its sort order defines the identity)."""
    perm = list(perm)
    order = sorted(range(len(perm)), key=perm.__getitem__)
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
