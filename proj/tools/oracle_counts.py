#!/usr/bin/env python3
"""Independent oracle for the sequence values and per-norm term counts.

Everything here is recomputed from scratch (recurrences, closed forms via
math.comb, and a direct DP over terms) so the C++ results can be checked
against a second implementation. Values printed by this script are frozen
into the C++ test files.
"""
import math
from fractions import Fraction

CLASSES = {
    # name: (arities, offsets)
    "fibonacci": ((1, 1), (1, 2)),
    "motzkin": ((1, 2), (1, 1)),
    "schroeder": ((1, 2), (1, 0)),
    "fuss_catalan": ((3,), (0,)),
}


def fib(p, n_max):
    v = [0, p]
    while len(v) <= n_max:
        v.append(v[-1] + v[-2])
    return v[: n_max + 1]


def motzkin(p, n_max):
    v = [p, p]
    for n in range(2, n_max + 1):
        v.append(v[n - 1] + sum(v[k] * v[n - 2 - k] for k in range(n - 1)))
    return v[: n_max + 1]


def schroeder(p, n_max):
    v = [p]
    for n in range(1, n_max + 1):
        v.append(v[n - 1] + sum(v[k] * v[n - 1 - k] for k in range(n)))
    return v


def fuss(p, n_max):
    v = [p]
    for n in range(1, n_max + 1):
        v.append(sum(v[i] * v[j] * v[n - 1 - i - j]
                     for i in range(n) for j in range(n - i)))
    return v


def catalan(p, n_max):
    v = [p]
    for n in range(1, n_max + 1):
        v.append(sum(v[i] * v[n - 1 - i] for i in range(n)))
    return v


def catalan_closed(p, n):
    if n == 0:
        return p
    return p ** (n + 1) * math.comb(2 * n, n) // (n + 1)


def closed(name, p, n):
    if name == "fib":
        if n == 0:
            return 0
        return p * sum(math.comb(n - k - 1, k) for k in range(0, (n - 1) // 2 + 1))
    if name == "motzkin":
        return sum(math.comb(n, 2 * k) * catalan_closed(p, k) for k in range(n // 2 + 1))
    if name == "schroeder":
        return sum(math.comb(2 * n - k, k) * catalan_closed(p, n - k) for k in range(n + 1))
    if name == "fuss":
        val = Fraction(p ** (2 * n + 1) * math.comb(3 * n + 1, n), 3 * n + 1)
        assert val.denominator == 1
        return val.numerator
    if name == "catalan":
        return catalan_closed(p, n)
    raise ValueError(name)


def term_counts(arities, offsets, p, max_norm):
    """counts[n-1] = number of terms of norm n over p norm-1 generators."""
    counts = [0] * (max_norm + 1)
    if max_norm >= 1:
        counts[1] = p
    for n in range(1, max_norm + 1):
        extra = 0
        for arity, kappa in zip(arities, offsets):
            s = n - kappa
            if s < arity:
                continue
            # sum over compositions of s into `arity` positive parts
            def ways(idx, rem):
                if idx == arity - 1:
                    return counts[rem] if 1 <= rem <= max_norm else 0
                return sum(counts[v] * ways(idx + 1, rem - v)
                           for v in range(1, rem - (arity - 1 - idx) + 1))
            extra += ways(0, s)
        counts[n] += extra
    return counts[1:]


def main():
    recs = {"fib": fib, "motzkin": motzkin, "schroeder": schroeder,
            "fuss": fuss, "catalan": catalan}
    for name, fn in recs.items():
        for p in (1, 2, 3):
            seq = fn(p, 20)
            cls = [closed(name, p, n) for n in range(21)]
            assert seq == cls, (name, p, seq, cls)
            print(f"{name} p={p}: {seq[:11]}")
    print()
    for cname, (arities, offsets) in CLASSES.items():
        for p in (1, 2, 3):
            print(f"terms {cname} p={p}: {term_counts(arities, offsets, p, 13)}")
    print()
    # the class counting identities: term counts with the class offsets
    for p in (1, 2, 3):
        tc = term_counts(*CLASSES["fibonacci"], p, 12)
        assert tc == fib(p, 12)[1:], (p, tc)
        tc = term_counts(*CLASSES["motzkin"], p, 10)
        assert tc == motzkin(p, 9), (p, tc)
        tc = term_counts(*CLASSES["schroeder"], p, 8)
        assert tc == schroeder(p, 7), (p, tc)
        tc = term_counts(*CLASSES["fuss_catalan"], p, 13)
        expect = []
        fp = fuss(p, 6)
        for n in range(1, 14):
            expect.append(fp[(n - 1) // 2] if n % 2 == 1 else 0)
        assert tc == expect, (p, tc, expect)
    print("all oracle identities hold")


if __name__ == "__main__":
    main()
