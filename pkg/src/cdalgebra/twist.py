"""Structure constants of the doubling basis, and their sign tables.

A product of two basis elements is a signed parameter monomial times the
basis element whose index is the XOR of the factor indices.  This module
computes that coefficient symbolically by recursing on the top index bit,
materializes full tables by quadrant doubling, partitions sign tables into
the five 2x2 block patterns, and checks the published product-table claim
for rows indexed by powers of two.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from .algebra import AlgebraSignature, Convention, Element, Rational

MAX_TABLE_DEPTH = 12


class BlockClassificationError(Exception):
    """A 2x2 tile of a sign table matched none of the allowed patterns."""


@dataclass(frozen=True)
class TwistCoefficient:
    """Sign times a product of stage parameters, one bit per stage.

    Bit ``i - 1`` of ``gamma_mask`` selects the stage-``i`` parameter.
    """

    sign: int
    gamma_mask: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.gamma_mask < 0:
            raise ValueError("gamma_mask must be nonnegative")

    def value(self, gammas: Sequence[Rational]) -> Rational:
        """Evaluate against concrete stage parameters."""
        v: Rational = self.sign
        for i, g in enumerate(gammas):
            if self.gamma_mask >> i & 1:
                v = v * g
        return v

    def sign_all_minus_one(self) -> int:
        """Collapsed sign when every stage parameter is -1."""
        return self.sign if self.gamma_mask.bit_count() % 2 == 0 else -self.sign


def _coefficient(p: int, q: int, t: int, right_conj: bool) -> Tuple[int, int]:
    """(sign, gamma_mask) of the basis product, by descent on the top bit.

    Each case is one line of the doubling product applied to unit
    vectors: a swapped recursion where the product order reverses, a
    sign flip where a conjugated pure basis vector appears, and the
    stage bit where the doubling parameter enters.
    """
    sign = 1
    mask = 0
    while t > 0:
        t -= 1
        half = 1 << t
        ph, qh = p >> t & 1, q >> t & 1
        p &= half - 1
        q &= half - 1
        if ph == 0 and qh == 0:
            continue
        if right_conj:
            if ph == 0:  # low * high: recurse on (q, p)
                p, q = q, p
            elif qh == 0:  # high * low: right factor is conjugated
                if q != 0:
                    sign = -sign
            else:  # high * high: conjugated right factor, swapped, parameter
                if q != 0:
                    sign = -sign
                mask |= half
                p, q = q, p
        else:
            if ph == 0:  # low * high: left factor is conjugated
                if p != 0:
                    sign = -sign
            elif qh == 0:  # high * low: recurse on (q, p)
                p, q = q, p
            else:  # high * high: conjugated left factor, swapped, parameter
                if p != 0:
                    sign = -sign
                mask |= half
                p, q = q, p
    return sign, mask


def basis_product(p: int, q: int, sig: AlgebraSignature) -> Tuple[TwistCoefficient, int]:
    """Coefficient and index of the product of basis elements p and q."""
    n = sig.dimension
    if not (0 <= p < n and 0 <= q < n):
        raise ValueError(f"basis indices ({p}, {q}) out of range for dimension {n}")
    sign, mask = _coefficient(p, q, sig.t,
                              sig.convention is Convention.CONJUGATE_RIGHT)
    return TwistCoefficient(sign, mask), p ^ q


def basis_product_element(p: int, q: int, sig: AlgebraSignature) -> Element:
    """The product as an element, evaluated against the signature's parameters."""
    coeff, index = basis_product(p, q, sig)
    return coeff.value(sig.gammas) * sig.basis(index)


def twist_sign(p: int, q: int, t: int,
               convention: Convention = Convention.CONJUGATE_RIGHT) -> int:
    """Sign of the basis product when every stage parameter is -1."""
    if not (0 <= p < 1 << t and 0 <= q < 1 << t):
        raise ValueError(f"basis indices ({p}, {q}) out of range for depth {t}")
    sign, mask = _coefficient(p, q, t, convention is Convention.CONJUGATE_RIGHT)
    return sign if mask.bit_count() % 2 == 0 else -sign


class TwistTable:
    """Dense table of structure coefficients for one depth and convention.

    ``base_signs[p, q]`` and ``gamma_masks[p, q]`` carry the symbolic
    coefficient; ``sign_table()`` collapses it under all-(-1) parameters.
    Tables are immutable once built.
    """

    __slots__ = ("t", "convention", "base_signs", "gamma_masks")

    def __init__(self, t: int, convention: Convention,
                 base_signs: np.ndarray, gamma_masks: np.ndarray):
        n = 1 << t
        if base_signs.shape != (n, n) or gamma_masks.shape != (n, n):
            raise ValueError("table arrays do not match the stated depth")
        base_signs.setflags(write=False)
        gamma_masks.setflags(write=False)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "convention", Convention(convention))
        object.__setattr__(self, "base_signs", base_signs)
        object.__setattr__(self, "gamma_masks", gamma_masks)

    def __setattr__(self, name, value):
        raise AttributeError("TwistTable is immutable")

    @property
    def dimension(self) -> int:
        return 1 << self.t

    def entry(self, p: int, q: int) -> TwistCoefficient:
        return TwistCoefficient(int(self.base_signs[p, q]), int(self.gamma_masks[p, q]))

    def sign_table(self) -> np.ndarray:
        """Collapsed signs under all-(-1) parameters, as an int8 matrix."""
        parity = np.zeros_like(self.gamma_masks)
        for b in range(self.t):
            parity ^= self.gamma_masks >> b & 1
        signs = self.base_signs.copy()
        signs[parity == 1] *= -1
        return signs

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwistTable):
            return NotImplemented
        return (self.t == other.t and self.convention is other.convention
                and np.array_equal(self.base_signs, other.base_signs)
                and np.array_equal(self.gamma_masks, other.gamma_masks))

    def __repr__(self) -> str:
        return f"TwistTable(t={self.t}, convention={self.convention.value})"


def build_table(t: int, convention: Convention = Convention.CONJUGATE_RIGHT,
                max_depth: int = MAX_TABLE_DEPTH) -> TwistTable:
    """Materialize the full coefficient table by quadrant doubling.

    The size-2**t table is assembled from the size-2**(t-1) table with
    the same quadrant rules the elementwise recursion uses, so the two
    routes can be checked against each other.
    """
    if t < 1:
        raise ValueError("table depth must be >= 1")
    if t > max_depth:
        raise ValueError(f"depth {t} exceeds the resource guard ({max_depth}); "
                         "use twist_sign for pointwise queries")
    convention = Convention(convention)
    signs = np.array([[1, 1], [1, 1]], dtype=np.int8)
    masks = np.array([[0, 0], [0, 1]], dtype=np.uint16)
    for stage in range(2, t + 1):
        h = 1 << (stage - 1)
        s = np.empty((2 * h, 2 * h), dtype=np.int8)
        m = np.empty((2 * h, 2 * h), dtype=np.uint16)
        st = signs.T
        mt = masks.T
        col_flip = np.ones(h, dtype=np.int8)
        col_flip[1:] = -1
        s[:h, :h] = signs
        m[:h, :h] = masks
        if convention is Convention.CONJUGATE_RIGHT:
            # (p, q+h) <- (q, p); (p+h, q) <- (p, q) negated on q != 0;
            # (p+h, q+h) <- (q, p) negated on q != 0, with the stage bit.
            s[:h, h:] = st
            m[:h, h:] = mt
            s[h:, :h] = signs * col_flip[np.newaxis, :]
            m[h:, :h] = masks
            s[h:, h:] = st * col_flip[np.newaxis, :]
            m[h:, h:] = mt | np.uint16(h)
        else:
            # (p, q+h) <- (p, q) negated on p != 0; (p+h, q) <- (q, p);
            # (p+h, q+h) <- (q, p) negated on p != 0, with the stage bit.
            s[:h, h:] = signs * col_flip[:, np.newaxis]
            m[:h, h:] = masks
            s[h:, :h] = st
            m[h:, :h] = mt
            s[h:, h:] = st * col_flip[:, np.newaxis]
            m[h:, h:] = mt | np.uint16(h)
        signs, masks = s, m
    return TwistTable(t, convention, signs, masks)


class BlockKind(IntEnum):
    """2x2 tile patterns of a collapsed sign table in tree order.

    A, B, C and the negated B and C are the published tile alphabet;
    the left-conjugating table uses exactly those.  The right-conjugating
    table is the opposite product (its sign table is the transpose), so
    its B-family tiles appear transposed and are reported as distinct
    kinds rather than silently folded in.
    """

    A = 0
    B = 1
    C = 2
    NEG_B = 3
    NEG_C = 4
    B_TRANSPOSED = 5
    NEG_B_TRANSPOSED = 6
    A_CORNER = 7

    def pattern(self) -> np.ndarray:
        return _BLOCK_PATTERNS[0 if self is BlockKind.A_CORNER else self]

    def label(self) -> str:
        return _BLOCK_LABELS[self]


PUBLISHED_KINDS = frozenset(
    {BlockKind.A, BlockKind.B, BlockKind.C, BlockKind.NEG_B, BlockKind.NEG_C,
     BlockKind.A_CORNER})

_BLOCK_PATTERNS = np.array(
    [
        [[1, 1], [1, -1]],    # A
        [[1, -1], [1, 1]],    # B
        [[1, -1], [-1, -1]],  # C
        [[-1, 1], [-1, -1]],  # -B
        [[-1, 1], [1, 1]],    # -C
        [[1, 1], [-1, 1]],    # B transposed
        [[-1, -1], [1, -1]],  # -B transposed
    ],
    dtype=np.int8,
)

_BLOCK_LABELS = {
    BlockKind.A: "A",
    BlockKind.B: "B",
    BlockKind.C: "C",
    BlockKind.NEG_B: "-B",
    BlockKind.NEG_C: "-C",
    BlockKind.B_TRANSPOSED: "Bt",
    BlockKind.NEG_B_TRANSPOSED: "-Bt",
    BlockKind.A_CORNER: "A0",
}


def bit_reversal_permutation(t: int) -> np.ndarray:
    """Index permutation between XOR order and doubling-tree order."""
    return np.array([int(format(p, f"0{t}b")[::-1], 2) for p in range(1 << t)])


def partition_blocks(table: TwistTable, strict: bool = False) -> np.ndarray:
    """Classify every aligned 2x2 tile of the sign table in tree order.

    The tile partition theorem holds in the enumeration where sibling
    basis indices differ in their lowest bit of the doubling tree, which
    is the bit reversal of the XOR-friendly indexing used everywhere
    else in this package.  Tile (i, j) therefore covers the four sign
    entries with row indices {p, p + n/2} and column indices
    {q, q + n/2} for p, q the bit reversals of 2i, 2j.

    Returns a matrix of BlockKind codes, one per tile.  The origin tile
    holds the unit row and column and is reported as A_CORNER after
    being checked against pattern A.  An unmatched tile raises
    BlockClassificationError; with ``strict=True`` so does any tile
    outside the five published patterns (the transposed-B kinds that the
    right-conjugating table produces).
    """
    signs = table.sign_table()
    rev = bit_reversal_permutation(table.t)
    signs = signs[np.ix_(rev, rev)]
    nb = table.dimension // 2
    tiles = signs.reshape(nb, 2, nb, 2).transpose(0, 2, 1, 3)
    kinds = np.full((nb, nb), -1, dtype=np.int8)
    for kind_value, pattern in enumerate(_BLOCK_PATTERNS):
        hit = (tiles == pattern).all(axis=(2, 3))
        kinds[hit] = kind_value
    if (kinds < 0).any():
        i, j = np.argwhere(kinds < 0)[0]
        raise BlockClassificationError(
            f"tile ({i}, {j}) matches no allowed pattern: {tiles[i, j].tolist()}")
    if strict:
        bad = np.isin(kinds, (BlockKind.B_TRANSPOSED, BlockKind.NEG_B_TRANSPOSED))
        if bad.any():
            i, j = np.argwhere(bad)[0]
            raise BlockClassificationError(
                f"tile ({i}, {j}) is a transposed-B pattern, outside the "
                f"published alphabet: {tiles[i, j].tolist()}")
    if kinds[0, 0] != BlockKind.A:
        raise BlockClassificationError(
            f"unit-corner tile is not pattern A: {tiles[0, 0].tolist()}")
    kinds[0, 0] = BlockKind.A_CORNER
    return kinds


def shuffle(p: int, q: int, t: int) -> List[Tuple[int, int]]:
    """Interleave the t-bit expansions of p and q, most significant first.

    Yields one (p_bit, q_bit) pair per stage, the order in which the
    walk on the tile patterns consumes them.
    """
    if not (0 <= p < 1 << t and 0 <= q < 1 << t):
        raise ValueError(f"indices ({p}, {q}) out of range for depth {t}")
    return [(p >> b & 1, q >> b & 1) for b in range(t - 1, -1, -1)]


def shuffle_string(p: int, q: int, t: int) -> str:
    return " ".join(f"{pb}{qb}" for pb, qb in shuffle(p, q, t))


# ---- power-of-two row check -------------------------------------------------

@dataclass(frozen=True)
class ProductCell:
    """One of the four products in the 2x2 claim, with its oracle verdict."""

    row: int
    col: int
    claimed_sign: int
    actual_sign: int
    actual_index: int

    @property
    def sign_matches(self) -> bool:
        return self.claimed_sign == self.actual_sign


@dataclass(frozen=True)
class PowerRowReport:
    """Oracle verdict on the claimed 2x2 product table for one (r, k, i).

    The claim concerns the row pair starting at 2**(k-r+1) against the
    column pair starting at the index with bit i and bits r..k set.  Two
    readings of the claimed result index are in circulation (one stated
    with 2**k, one computed with 2**(k-r+1)); the report records which
    one the actual product indices support.

    Signs are evaluated in two coordinate readings.  ``cells`` takes the
    operands literally in XOR indexing with +1 siblings.  ``tree_cells``
    takes them in doubling-tree enumeration (bit-reversed indices, so a
    +1 sibling is a top-bit flip); in that reading the four products
    always form a C tile up to one global sign, which is compared
    against both published exponents, (-1)**(r+2) from the table and
    (-1)**(k-r+1) from the supporting walk.
    """

    r: int
    k: int
    i: int
    t: int
    row_base: int
    col_base: int
    m_stated: int
    m_computed: int
    supported_index_reading: str
    cells: Tuple[ProductCell, ...]
    literal_signs_match_claim: bool
    tree_cells: Tuple[int, int, int, int]
    tree_forms_c_tile: bool
    tree_corner_sign: int
    tree_matches_table_sign: bool
    tree_matches_walk_sign: bool

    def to_dict(self) -> dict:
        return {
            "r": self.r, "k": self.k, "i": self.i, "t": self.t,
            "row_base": self.row_base, "col_base": self.col_base,
            "m_stated": self.m_stated, "m_computed": self.m_computed,
            "supported_index_reading": self.supported_index_reading,
            "literal_signs_match_claim": self.literal_signs_match_claim,
            "tree_cells": list(self.tree_cells),
            "tree_forms_c_tile": self.tree_forms_c_tile,
            "tree_corner_sign": self.tree_corner_sign,
            "tree_matches_table_sign": self.tree_matches_table_sign,
            "tree_matches_walk_sign": self.tree_matches_walk_sign,
            "cells": [
                {"row": c.row, "col": c.col, "claimed_sign": c.claimed_sign,
                 "actual_sign": c.actual_sign, "actual_index": c.actual_index,
                 "sign_matches": c.sign_matches}
                for c in self.cells
            ],
        }

    def summary(self) -> str:
        tree = "C-tile" if self.tree_forms_c_tile else "not a C-tile"
        return (f"r={self.r} k={self.k} i={self.i}: index reading "
                f"{self.supported_index_reading}; tree cells {tree} with corner "
                f"{self.tree_corner_sign:+d} (table claim "
                f"{(-1) ** (self.r + 2):+d}, walk claim "
                f"{(-1) ** (self.k - self.r + 1):+d})")


def power_row_operands(r: int, k: int, i: int, t: int) -> Tuple[int, int]:
    """Row and column base indices for the claim's (r, k, i) triple."""
    if not (r >= 1 and r < k <= i < t):
        raise ValueError(f"require 1 <= r < k <= i < t, got r={r} k={k} i={i} t={t}")
    row = 1 << (k - r + 1)
    col = (1 << i) | (((1 << (k + 1)) - 1) ^ ((1 << r) - 1))  # bit i plus bits r..k
    return row, col


def _bit_reverse(x: int, t: int) -> int:
    return int(format(x, f"0{t}b")[::-1], 2)


def check_power_row_claim(r: int, k: int, i: int, t: int,
                 convention: Convention = Convention.CONJUGATE_LEFT) -> PowerRowReport:
    """Evaluate the four claimed products via the sign oracle.

    The claim is stated for the left-conjugating convention with all
    parameters -1, which is the default here.
    """
    row, col = power_row_operands(r, k, i, t)
    base_sign = (-1) ** (r + 2)
    claim = {(0, 0): base_sign, (0, 1): -base_sign,
             (1, 0): -base_sign, (1, 1): -base_sign}
    cells = []
    tree_cells = []
    half = 1 << (t - 1)
    rrow, rcol = _bit_reverse(row, t), _bit_reverse(col, t)
    for dr in (0, 1):
        for dc in (0, 1):
            p, q = row + dr, col + dc
            cells.append(ProductCell(
                row=p, col=q,
                claimed_sign=claim[(dr, dc)],
                actual_sign=twist_sign(p, q, t, convention),
                actual_index=p ^ q,
            ))
            tree_cells.append(
                twist_sign(rrow ^ (dr * half), rcol ^ (dc * half), t, convention))
    m_stated = (1 << k) ^ col
    m_computed = row ^ col
    actual = tuple(c.actual_index for c in cells)
    fits_computed = actual == (m_computed, m_computed + 1, m_computed + 1, m_computed)
    fits_stated = actual == (m_stated, m_stated + 1, m_stated + 1, m_stated)
    if fits_computed and fits_stated:
        reading = "both"
    elif fits_computed:
        reading = "computed"
    elif fits_stated:
        reading = "stated"
    else:
        reading = "neither"
    corner = tree_cells[0]
    forms_c = tuple(tree_cells) == (corner, -corner, -corner, -corner)
    return PowerRowReport(
        r=r, k=k, i=i, t=t, row_base=row, col_base=col,
        m_stated=m_stated, m_computed=m_computed,
        supported_index_reading=reading,
        cells=tuple(cells),
        literal_signs_match_claim=all(c.sign_matches for c in cells),
        tree_cells=tuple(tree_cells),
        tree_forms_c_tile=forms_c,
        tree_corner_sign=corner if forms_c else 0,
        tree_matches_table_sign=forms_c and corner == base_sign,
        tree_matches_walk_sign=forms_c and corner == (-1) ** (k - r + 1),
    )


def admissible_triples(t: int) -> Iterator[Tuple[int, int, int]]:
    """All (r, k, i) with 1 <= r < k <= i < t."""
    for r in range(1, t):
        for k in range(r + 1, t):
            for i in range(k, t):
                yield r, k, i


def sweep_power_row_claims(t: int,
                 convention: Convention = Convention.CONJUGATE_LEFT) -> List[PowerRowReport]:
    return [check_power_row_claim(r, k, i, t, convention) for r, k, i in admissible_triples(t)]
