"""Core domain types: reviews, the indexed dataset, and candidate groups.

All types are frozen after construction and safe to share across threads.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    EmptyInputError,
    RatingOutOfScaleError,
    UnknownProductError,
    UnknownReviewerError,
)

logger = logging.getLogger(__name__)

DEFAULT_RATING_SCALE: tuple[int, int] = (1, 5)


@dataclass(frozen=True, order=True)
class Review:
    """One review: who, what, how many stars, when (integer days), what text."""

    reviewer_id: str
    product_id: str
    rating: int
    day: int
    text: str = ""


class ProvenanceKind(enum.Enum):
    ISOLATED_NODE = "isolated_node"
    MERGED_EDGE_SET = "merged_edge_set"
    EDGE_DIFFERENCE = "edge_difference"
    CONNECTED_COMPONENT = "connected_component"


@dataclass(frozen=True)
class GroupProvenance:
    kind: ProvenanceKind
    iteration: int


@dataclass(frozen=True)
class CandidateGroup:
    """A candidate fraud group: reviewer members plus the products they target.

    ``targets`` is the co-reviewed scope the group was built around; for
    groups extracted from the review graph that is the product set of the
    generating structure, for ad-hoc groups it defaults to everything the
    members reviewed (see :func:`make_group`).
    """

    members: frozenset[str]
    targets: frozenset[str]
    provenance: GroupProvenance | None = None

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def n_targets(self) -> int:
        return len(self.targets)


@dataclass(frozen=True)
class Dataset:
    """Immutable indexed review corpus.

    ``reviewer_index`` maps reviewer -> products reviewed, ``product_index``
    maps product -> reviewers; both are exact inverses of ``reviews``.
    """

    reviews: tuple[Review, ...]
    reviewer_index: Mapping[str, frozenset[str]]
    product_index: Mapping[str, frozenset[str]]
    rating_scale: tuple[int, int]
    labels: Mapping[str, bool] | None = None
    duplicates_dropped: int = field(default=0, compare=False)
    # (reviewer, product) -> Review; at most one review per pair
    _by_pair: Mapping[tuple[str, str], Review] = field(default_factory=dict, repr=False, compare=False)

    @property
    def n_reviews(self) -> int:
        return len(self.reviews)

    @property
    def n_reviewers(self) -> int:
        return len(self.reviewer_index)

    @property
    def n_products(self) -> int:
        return len(self.product_index)

    def products_of(self, reviewer_id: str) -> frozenset[str]:
        try:
            return self.reviewer_index[reviewer_id]
        except KeyError:
            raise UnknownReviewerError(reviewer_id) from None

    def reviewers_of(self, product_id: str) -> frozenset[str]:
        try:
            return self.product_index[product_id]
        except KeyError:
            raise UnknownProductError(product_id) from None

    def review(self, reviewer_id: str, product_id: str) -> Review | None:
        """The unique review of ``product_id`` by ``reviewer_id``, or None."""
        return self._by_pair.get((reviewer_id, product_id))


def build_dataset(
    reviews: Sequence[Review] | Iterable[Review],
    rating_scale: tuple[int, int] = DEFAULT_RATING_SCALE,
    labels: Mapping[str, bool] | None = None,
) -> Dataset:
    """Index a review collection into a :class:`Dataset`.

    Duplicate (reviewer, product) pairs keep the earliest-timestamped review
    (first seen wins ties); the dropped count is logged and recorded on the
    dataset. Ratings outside ``rating_scale`` raise
    :class:`RatingOutOfScaleError`.
    """
    reviews = list(reviews)
    if not reviews:
        raise EmptyInputError("no reviews to build a dataset from")
    lo, hi = rating_scale
    if lo > hi:
        raise ValueError(f"invalid rating scale [{lo}, {hi}]")

    by_pair: dict[tuple[str, str], Review] = {}
    duplicates = 0
    for r in reviews:
        if not (lo <= r.rating <= hi):
            raise RatingOutOfScaleError(r.reviewer_id, r.product_id, r.rating, rating_scale)
        key = (r.reviewer_id, r.product_id)
        kept = by_pair.get(key)
        if kept is None:
            by_pair[key] = r
        else:
            duplicates += 1
            if r.day < kept.day:
                by_pair[key] = r
    if duplicates:
        logger.warning("dropped %d duplicate (reviewer, product) review(s)", duplicates)

    reviewer_index: dict[str, set[str]] = {}
    product_index: dict[str, set[str]] = {}
    for (reviewer_id, product_id) in by_pair:
        reviewer_index.setdefault(reviewer_id, set()).add(product_id)
        product_index.setdefault(product_id, set()).add(reviewer_id)

    return Dataset(
        reviews=tuple(by_pair.values()),
        reviewer_index={k: frozenset(v) for k, v in reviewer_index.items()},
        product_index={k: frozenset(v) for k, v in product_index.items()},
        rating_scale=rating_scale,
        labels=dict(labels) if labels is not None else None,
        duplicates_dropped=duplicates,
        _by_pair=by_pair,
    )


def make_group(
    members: Iterable[str],
    dataset: Dataset,
    targets: Iterable[str] | None = None,
    provenance: GroupProvenance | None = None,
) -> CandidateGroup:
    """Build a :class:`CandidateGroup`, defaulting targets to every product
    the members reviewed."""
    members = frozenset(members)
    if targets is None:
        targets = frozenset().union(*(dataset.products_of(m) for m in members)) if members else frozenset()
    return CandidateGroup(members=members, targets=frozenset(targets), provenance=provenance)
