import re
from collections import Counter
from typing import Iterable, Iterator, List, Tuple

from .config import SEQUENCE_LENGTH_LIMIT
from .errors import InvalidParameter, NotASubsequence, ParseError
from .group import Group

# A sequence over a group is a multiset of element indices, kept as an ascending tuple.
Seq = Tuple[int, ...]

EMPTY: Seq = ()

_TEXT = re.compile(r'^\[\s*(\d+(\s*,\s*\d+)*)?\s*\]$')


def canonical(elements: Iterable[int]) -> Seq:
    return tuple(sorted(elements))


def concat(S: Seq, T: Seq) -> Seq:
    """
    The product S·T in the free abelian monoid over G.

    Args:
        S (Seq): A sequence.
        T (Seq): A sequence.

    Returns:
        Seq: The multiset union, |S| + |T| terms.
    """
    return tuple(sorted(S + T))


def remove(S: Seq, T: Seq) -> Seq:
    """
    The quotient S·T^[-1].

    Args:
        S (Seq): A sequence.
        T (Seq): A subsequence of S.

    Returns:
        Seq: The multiset difference.

    Raises:
        NotASubsequence: If T does not divide S.
    """
    counts = Counter(S)
    counts.subtract(T)
    if any(v < 0 for v in counts.values()):
        raise NotASubsequence(f"{to_text(T)} does not divide {to_text(S)}")
    return tuple(sorted(counts.elements()))


def remove_one(S: Seq, g: int) -> Seq:
    """S·g^[-1] for a term g of S."""
    position = S.index(g)
    return S[:position] + S[position + 1:]


def support(S: Seq) -> List[int]:
    """Distinct terms of S, ascending."""
    return sorted(set(S))


def multiplicity(S: Seq, g: int) -> int:
    return S.count(g)


def sub_multisets(S: Seq, size: int) -> Iterator[Seq]:
    """
    All sub-multisets of a given size, each exactly once, in lexicographic order.

    Iterates over multiplicity vectors instead of subsets of positions, so repeated terms do not repeat results.

    Args:
        S (Seq): A sequence.
        size (int): Number of terms of each sub-multiset.

    Yields:
        Seq: Sub-multisets in canonical form.
    """
    counts = sorted(Counter(S).items())
    if size < 0 or size > len(S):
        return
    remaining_after = [0] * (len(counts) + 1)
    for position in range(len(counts) - 1, -1, -1):
        remaining_after[position] = remaining_after[position + 1] + counts[position][1]
    chosen: List[int] = []

    def walk(position: int, needed: int):
        if needed == 0:
            yield tuple(chosen)
            return
        if remaining_after[position] < needed:
            return
        element, available = counts[position]
        for take in range(min(available, needed), -1, -1):
            chosen.extend([element] * take)
            yield from walk(position + 1, needed - take)
            del chosen[len(chosen) - take:]

    yield from walk(0, size)


def proper_sub_multisets(S: Seq) -> Iterator[Seq]:
    """Non-empty proper sub-multisets, shortest first."""
    for size in range(1, len(S)):
        yield from sub_multisets(S, size)


def validate(G: Group, S: Seq) -> Seq:
    """
    Check a sequence against a group and return its canonical form.

    Raises:
        InvalidParameter: If a term is not an element index of G or the sequence is too long.
    """
    if len(S) > SEQUENCE_LENGTH_LIMIT:
        raise InvalidParameter(f"sequences are limited to {SEQUENCE_LENGTH_LIMIT} terms")
    if any(not 0 <= g < G.order for g in S):
        raise InvalidParameter(f"{list(S)} has terms outside 0..{G.order - 1}")
    return canonical(S)


def to_text(S: Seq) -> str:
    """Canonical text form '[i1,i2,...]'."""
    return "[" + ",".join(str(g) for g in S) + "]"


def from_text(text: str) -> Seq:
    """
    Parse the text form of a sequence.

    Args:
        text (str): A bracketed comma separated list of element indices.

    Returns:
        Seq: The sequence in canonical form.

    Raises:
        ParseError: If the text is not a bracketed list of non-negative integers.
    """
    stripped = text.strip()
    if not _TEXT.match(stripped):
        raise ParseError(0, f"expected a list like [1,2,3], got {text!r}")
    body = stripped[1:-1].strip()
    return canonical(int(part) for part in body.split(',')) if body else EMPTY
