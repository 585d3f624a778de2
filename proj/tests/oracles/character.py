# Weight multiplicities of the Fock module by brute-force enumeration: lattice
# points eta with (eta,eta)/2 <= d, times the number of rank-colored partitions
# of d - (eta,eta)/2 (enumerated, not taken from a generating function).
#
#   python3 character.py A 1 6
import itertools
import sys


def partitions(n, maxp=None):
    if maxp is None:
        maxp = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxp), 0, -1):
        for r in partitions(n - k, k):
            yield (k,) + r


def colored_count(colors, n):
    if colors == 0:
        return 1 if n == 0 else 0
    return sum(sum(1 for _ in partitions(a)) * colored_count(colors - 1, n - a) for a in range(n + 1))


def cartan(t, n):
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        A[i][i] = 2
    edges = [(i, i + 1) for i in range(n - 1)] if t == 'A' else [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    for a, b in edges:
        A[a][b] = A[b][a] = -1
    return A


t, n, depth = sys.argv[1], int(sys.argv[2]), int(sys.argv[3])
A = cartan(t, n)
bound = depth + 2
totals = [0] * (depth + 1)
for eta in itertools.product(range(-bound, bound + 1), repeat=n):
    half = sum(eta[i] * eta[j] * A[i][j] for i in range(n) for j in range(n)) // 2
    for d in range(half, depth + 1):
        m = colored_count(n, d - half)
        print(list(eta), d, m)
        totals[d] += m
print('totals', totals)
