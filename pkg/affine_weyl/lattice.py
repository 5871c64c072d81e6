"""
Lattice Arithmetic
Small exact helpers for integer vectors and matrices stored as tuples
"""

from typing import Sequence, Tuple

Vector = Tuple[int, ...]
Matrix = Tuple[Tuple[int, ...], ...]


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def vec_add(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c: int, a: Sequence[int]) -> Vector:
    return tuple(c * x for x in a)


def vec_neg(a: Sequence[int]) -> Vector:
    return tuple(-x for x in a)


def zero_vector(m: int) -> Vector:
    return (0,) * m


def unit_vector(m: int, i: int) -> Vector:
    return tuple(int(j == i) for j in range(m))


def identity_matrix(m: int) -> Matrix:
    return tuple(unit_vector(m, i) for i in range(m))


def mat_vec(A: Matrix, v: Sequence[int]) -> Vector:
    return tuple(dot(row, v) for row in A)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    columns = tuple(zip(*B))
    return tuple(tuple(dot(row, col) for col in columns) for row in A)


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A)) if A else ()


def transpose_vec(A: Matrix, v: Sequence[int]) -> Vector:
    """A^T v without materializing the transpose"""
    if not A:
        return ()
    m = len(A[0])
    return tuple(sum(A[r][c] * v[r] for r in range(len(A))) for c in range(m))


def reflection_matrix(root: Sequence[int], coroot: Sequence[int]) -> Matrix:
    """Matrix of x -> x - <x, coroot> root on the lattice carrying root"""
    m = len(root)
    return tuple(
        tuple(int(r == c) - root[r] * coroot[c] for c in range(m)) for r in range(m)
    )
