"""Independent brute-force oracles, deliberately slow and literal.

Each oracle re-derives a value by scanning all candidates, so the fast
implementations can be checked against something that shares no code path
with them.
"""

import math


def h_oracle(entries):
    """Try every candidate h from N down to 0."""
    n = len(entries)
    ordered = sorted(entries, reverse=True)
    for h in range(n, 0, -1):
        if all(ordered[i] >= h for i in range(h)):
            return h
    return 0


def c_oracle(entries):
    total = 0.0
    for c in entries:
        total += c
    return total


def mu_oracle(entries):
    if not entries:
        return 0.0
    return c_oracle(entries) / len(entries)


def g_oracle(entries):
    ordered = sorted(entries, reverse=True)
    n = len(ordered)
    for g in range(n, 0, -1):
        if sum(ordered[:g]) >= g * g:
            return g
    return 0


def o_oracle(entries):
    if not entries:
        return 0.0
    return math.sqrt(h_oracle(entries) * max(entries))


def median_oracle(values):
    ordered = sorted(values)
    n = len(ordered)
    if n % 2 == 1:
        return ordered[n // 2]
    return (ordered[n // 2 - 1] + ordered[n // 2]) / 2


def m_oracle(entries):
    h = h_oracle(entries)
    if h == 0:
        return 0.0
    ordered = sorted(entries, reverse=True)
    return median_oracle(ordered[:h])


def h_i_oracle(pairs):
    """pairs: (citations, authors), any order."""
    ordered = sorted(pairs, key=lambda t: -t[0])
    h = h_oracle([c for c, _ in ordered])
    if h == 0:
        return 0.0
    core_authors = [a for _, a in ordered[:h]]
    return h / (sum(core_authors) / h)


def h_p_oracle(pairs):
    ordered = sorted(pairs, key=lambda t: -t[0])
    h = h_oracle([c for c, _ in ordered])
    if h == 0:
        return 0.0
    core_authors = [a for _, a in ordered[:h]]
    return h / math.sqrt(sum(core_authors) / h)


def h_ap_oracle(pairs):
    normalized = sorted((c / math.sqrt(a) for c, a in pairs), reverse=True)
    return float(h_oracle(normalized))


def h_m_oracle(pairs):
    ordered = sorted(pairs, key=lambda t: -t[0])
    best = 0.0
    r = 0.0
    for c, a in ordered:
        r += 1.0 / a
        if c >= r:
            best = r
    return best


def frac_entries(pairs):
    return sorted((c / a for c, a in pairs), reverse=True)


def pair_counts_oracle(a, b):
    """Literal double loop over all pairs."""
    n = len(a)
    concordant = discordant = ties_a = ties_b = ties_both = 0
    for i in range(n):
        for j in range(i + 1, n):
            da = (a[i] > a[j]) - (a[i] < a[j])
            db = (b[i] > b[j]) - (b[i] < b[j])
            if da == 0 and db == 0:
                ties_both += 1
            elif da == 0:
                ties_a += 1
            elif db == 0:
                ties_b += 1
            elif da == db:
                concordant += 1
            else:
                discordant += 1
    return concordant, discordant, ties_a, ties_b, ties_both


def tau_b_oracle(a, b):
    c, d, ta, tb, _ = pair_counts_oracle(a, b)
    return (c - d) / math.sqrt((c + d + ta) * (c + d + tb))


def tau_a_oracle(a, b):
    c, d, _, _, _ = pair_counts_oracle(a, b)
    n = len(a)
    return (c - d) / (n * (n - 1) / 2)


def somers_d_oracle(measure, awards):
    return tau_a_oracle(measure, awards) / tau_a_oracle(awards, awards)


def gamma_oracle(a, b):
    c, d, _, _, _ = pair_counts_oracle(a, b)
    return (c - d) / (c + d)


def fractional_ranks(values):
    """Tie-averaged ranks, assigned by a two-pass scan."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j < len(order) and values[order[j]] == values[order[i]]:
            j += 1
        avg_rank = (i + 1 + j) / 2  # mean of ranks i+1 .. j
        for k in range(i, j):
            ranks[order[k]] = avg_rank
        i = j
    return ranks


def spearman_oracle(a, b):
    """Rank-assign then covariance, all by hand."""
    ra = fractional_ranks(a)
    rb = fractional_ranks(b)
    n = len(ra)
    mean_a = sum(ra) / n
    mean_b = sum(rb) / n
    cov = sum((x - mean_a) * (y - mean_b) for x, y in zip(ra, rb)) / n
    var_a = sum((x - mean_a) ** 2 for x in ra) / n
    var_b = sum((y - mean_b) ** 2 for y in rb) / n
    return cov / math.sqrt(var_a * var_b)
