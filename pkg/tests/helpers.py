"""Shared test utilities: independent oracles and instance generators."""

import itertools

from cubiquity import BasisMatrix, Subset


def cofactor_det(rows):
    """Determinant by cofactor expansion; independent of the library path."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def det_splits(d, parts):
    """All ordered factorisations of d into `parts` positive factors."""
    if parts == 1:
        yield (d,)
        return
    for first in range(1, d + 1):
        if d % first == 0:
            for rest in det_splits(d // first, parts - 1):
                yield (first,) + rest


def hnf_matrices(n, dets):
    """Every lower-triangular column-HNF basis with determinant in dets."""
    out = []
    positions = [(i, j) for i in range(n) for j in range(i)]
    for d in dets:
        for diag in det_splits(d, n):
            ranges = [range(diag[i]) for i, _ in positions]
            for fill in itertools.product(*ranges):
                rows = [[0] * n for _ in range(n)]
                for i in range(n):
                    rows[i][i] = diag[i]
                for (i, j), v in zip(positions, fill):
                    rows[i][j] = v
                out.append(BasisMatrix(rows))
    return out


def random_hnf(n, d, rng):
    """One random HNF basis with determinant d."""
    diag = []
    rem = d
    for _ in range(n - 1):
        k = rng.choice([k for k in range(1, rem + 1) if rem % k == 0])
        diag.append(k)
        rem //= k
    diag.append(rem)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = diag[i]
        for j in range(i):
            rows[i][j] = rng.randrange(diag[i])
    return BasisMatrix(rows)


def signed_permutation(vectors, rng, shuffle_vectors=True):
    """Random signed coordinate permutation of a list of vectors."""
    n = len(vectors[0]) if vectors else 0
    perm = list(range(n))
    rng.shuffle(perm)
    signs = [rng.choice((-1, 1)) for _ in range(n)]
    out = []
    for v in vectors:
        w = [0] * n
        for j, x in enumerate(v):
            w[perm[j]] = signs[perm[j]] * x
        out.append(tuple(w))
    if shuffle_vectors:
        rng.shuffle(out)
    return out


# Orthogonal building blocks, each a list of vectors in its own coordinates.
BLOCK_LIBRARY = {
    "unit": [(1,)],
    "double": [(2,)],
    "triple": [(3,)],
    "five": [(5,)],
    "hyper": [(1, 1), (1, -1)],
    "anti3": [(0, 3), (3, 0)],
    "norm25": [(3, 4), (4, -3)],
}


def assemble_blocks(names):
    """Direct sum of library blocks as a list of vectors."""
    dims = [len(BLOCK_LIBRARY[nm][0]) for nm in names]
    total = sum(dims)
    vectors = []
    offset = 0
    for nm, d in zip(names, dims):
        for v in BLOCK_LIBRARY[nm]:
            vectors.append((0,) * offset + tuple(v)
                           + (0,) * (total - offset - d))
        offset += d
    return vectors


def subset_from_columns(columns):
    return Subset(tuple(c) for c in columns)
