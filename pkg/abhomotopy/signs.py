#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Degree bookkeeping and Koszul signs.

Every sign produced anywhere in the package is computed here. Degrees are
plain integers, only their parity feeds a sign.
"""

import logging
from itertools import combinations
from typing import List, Sequence

from .exceptions import ContractViolation

logger = logging.getLogger(__name__)


def parity(degree: int) -> int:
    return degree & 1


def sign_of(exponent: int) -> int:
    """(-1)^exponent"""
    return -1 if exponent & 1 else 1


# The four gradings of the construction, as shifts of the unshifted degree |.|

def lie_degree(degree: int) -> int:
    """dg on G[1] for a Gerstenhaber algebra: |alpha| - 1"""
    return degree - 1


def shifted_degree(degree: int, a: int) -> int:
    """dg on A[-a+1]: |alpha| + a - 1"""
    return degree + a - 1


def prime_degree(dg: int, a: int, b: int) -> int:
    """dg' on H[a-b-1]: dg - a + b + 1"""
    return dg - a + b + 1


def double_prime_degree(dg: int, a: int, b: int) -> int:
    """dg'' on H[a-b]: dg - a + b"""
    return dg - a + b


class Permutation:
    """
    A bijection of {1..n}, stored by its images: images[i - 1] = sigma(i).
    """

    __slots__ = ('images',)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ContractViolation(f'not a permutation of 1..{len(images)}: {images}')
        self.images = images

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(range(1, n + 1))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> 'Permutation':
        inv = [0] * self.size
        for i, image in enumerate(self.images, start=1):
            inv[image - 1] = i
        return Permutation(inv)

    def compose(self, other: 'Permutation') -> 'Permutation':
        """self o other"""
        if self.size != other.size:
            raise ContractViolation(f'cannot compose permutations of size {self.size} and {other.size}')
        return Permutation(self(other(i)) for i in range(1, self.size + 1))

    def arrangement(self) -> List[int]:
        """The source indices in target order: [sigma^-1(1), ..., sigma^-1(n)]."""
        return list(self.inverse().images)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f'Permutation{self.images}'


def koszul_sign(degrees: Sequence[int], sigma: Permutation) -> int:
    """
    Sign produced by reordering homogeneous factors a_1...a_n into
    a_{sigma^-1(1)}...a_{sigma^-1(n)}: the parity of the inversions of sigma
    between pairs of odd-degree entries.
    :param degrees: degrees of a_1..a_n
    :param sigma: permutation of size n
    :return: +1 or -1
    """
    if len(degrees) != sigma.size:
        raise ContractViolation(f'{len(degrees)} degrees for a permutation of size {sigma.size}')
    odd = [i for i, d in enumerate(degrees) if d & 1]
    images = sigma.images
    inversions = 0
    for k, i in enumerate(odd):
        for j in odd[k + 1:]:
            if images[i] > images[j]:
                inversions += 1
    return sign_of(inversions)


def koszul_sign_by_transpositions(degrees: Sequence[int], sigma: Permutation) -> int:
    """
    Same sign as koszul_sign, computed by sorting the target arrangement back
    with adjacent transpositions, each contributing (-1)^{d_i d_j}.
    """
    if len(degrees) != sigma.size:
        raise ContractViolation(f'{len(degrees)} degrees for a permutation of size {sigma.size}')
    current = [i - 1 for i in sigma.arrangement()]
    sign = 1
    swapped = True
    while swapped:
        swapped = False
        for k in range(len(current) - 1):
            if current[k] > current[k + 1]:
                sign *= sign_of(degrees[current[k]] * degrees[current[k + 1]])
                current[k], current[k + 1] = current[k + 1], current[k]
                swapped = True
    return sign


def block_sign(block_degrees: Sequence[int], block_permutation: Permutation) -> int:
    """
    Koszul sign for permuting whole homogeneous blocks, each block counted as
    one letter of its total degree.
    """
    return koszul_sign(block_degrees, block_permutation)


def reorder_sign(degrees: Sequence[int], order: Sequence[int]) -> int:
    """
    Koszul sign for listing the factors in the given order.
    :param degrees: degrees of the factors in their current order
    :param order: 0-based indices of the factors, in the new order
    :return: +1 or -1
    """
    odd = [i for i in order if degrees[i] & 1]
    inversions = 0
    for k, i in enumerate(odd):
        for j in odd[k + 1:]:
            if i > j:
                inversions += 1
    return sign_of(inversions)


def enumerate_shuffles(p: int, q: int) -> List[Permutation]:
    """
    The (p,q)-shuffles, increasing on 1..p and on p+1..p+q, in lexicographic
    order of the image of the first block.
    """
    if p < 1 or q < 1:
        raise ContractViolation(f'shuffles need p, q >= 1, got ({p}, {q})')
    n = p + q
    shuffles = []
    for first in combinations(range(1, n + 1), p):
        chosen = set(first)
        rest = [k for k in range(1, n + 1) if k not in chosen]
        shuffles.append(Permutation(list(first) + rest))
    return shuffles
