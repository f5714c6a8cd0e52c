"""Pure-Python kernels.

Mirror of ``_ckernels.pyx``; same names, same arguments, same results.  All
set arguments are integer masks; ``closed`` sequences hold the members of a
Moore family in canonical order (popcount ascending), so the first member
containing a mask is its closure.  Scans return the first failing witness in
scan order, or -1 (or a pair of -1) when nothing fails.
"""

from array import array

NAME = "python"


def closure_mask(closed, a):
    for f in closed:
        if a & ~f == 0:
            return f
    raise ValueError("family has no member containing the mask; universe missing")


def closure_table(closed, n):
    return array("Q", [closure_mask(closed, a) for a in range(1 << n)])


def table_scan(t, n):
    """Scan a closure table; returns (ext, mono_a, mono_b, idem, comp_a, comp_b)."""
    size = 1 << n
    ext = idem = -1
    mono_a = mono_b = comp_a = comp_b = -1
    for a in range(size):
        ca = t[a]
        if ext < 0 and a & ~ca:
            ext = a
        if idem < 0 and t[ca] != ca:
            idem = a
        if mono_a < 0:
            rest = ~a & (size - 1)
            while rest:
                bit = rest & -rest
                rest ^= bit
                if ca & ~t[a | bit]:
                    mono_a, mono_b = a, a | bit
                    break
    # compact axiom: A <= [[A]] <= [B] for every A <= B
    for b in range(size):
        cb = t[b]
        sub = b
        while True:
            cca = t[t[sub]]
            if sub & ~cca or cca & ~cb:
                comp_a, comp_b = sub, b
                break
            if sub == 0:
                break
            sub = (sub - 1) & b
        if comp_a >= 0:
            break
    return ext, mono_a, mono_b, idem, comp_a, comp_b


def fixed_points(t):
    return [a for a in range(len(t)) if t[a] == a]


def image_mask(img, a):
    out = 0
    x = 0
    while a:
        if a & 1:
            out |= 1 << img[x]
        a >>= 1
        x += 1
    return out


def preimage_mask(img, b):
    out = 0
    for x, y in enumerate(img):
        if b >> y & 1:
            out |= 1 << x
    return out


def intersection_scan(members):
    """First pair (i, j), i < j, whose intersection is not a member."""
    present = set(members)
    m = len(members)
    for i in range(m):
        fi = members[i]
        for j in range(i + 1, m):
            if fi & members[j] not in present:
                return i, j
    return -1, -1


def continuity_scan(img, closed_src, closed_dst):
    """Index of the first closed set of the target whose preimage is not closed."""
    for j, f in enumerate(closed_dst):
        pre = preimage_mask(img, f)
        if closure_mask(closed_src, pre) != pre:
            return j
    return -1


def continuity_image_scan(img, closed_src, closed_dst, n_src):
    """First A with f([A]) not contained in [f(A)]."""
    for a in range(1 << n_src):
        lhs = image_mask(img, closure_mask(closed_src, a))
        rhs = closure_mask(closed_dst, image_mask(img, a))
        if lhs & ~rhs:
            return a
    return -1


def qoset_galois_scan(phi, psi, up_p, up_pp):
    """First (x, x') where phi(x) <= x' and x <= psi(x') disagree."""
    for x, fx in enumerate(phi):
        lhs = up_pp[fx]
        rhs = preimage_mask(psi, up_p[x])
        diff = lhs ^ rhs
        if diff:
            return x, (diff & -diff).bit_length() - 1
    return -1, -1


def direct_scan(phi, psi, closed_e, closed_ep, n_prime):
    """First A' with phi^-1([A']) != [psi(A')]."""
    for ap in range(1 << n_prime):
        lhs = preimage_mask(phi, closure_mask(closed_ep, ap))
        rhs = closure_mask(closed_e, image_mask(psi, ap))
        if lhs != rhs:
            return ap
    return -1


def induced_scan(phi, psi, closed_e, closed_ep):
    """First (i, j) with phi^-1(F'_j) <= F_i and F'_j <= psi^-1(F_i) disagreeing."""
    pre_phi = [preimage_mask(phi, g) for g in closed_ep]
    pre_psi = [preimage_mask(psi, f) for f in closed_e]
    for i, f in enumerate(closed_e):
        back = pre_psi[i]
        for j, g in enumerate(closed_ep):
            if (pre_phi[j] & ~f == 0) != (g & ~back == 0):
                return i, j
    return -1, -1
