"""Exception types raised across the package.

Every error carries enough context to be actionable (ids, paths, line
numbers) so CLI diagnostics never need to re-derive it.
"""

from __future__ import annotations


class FraudGroupsError(Exception):
    """Base class for all package errors."""


class EmptyInputError(FraudGroupsError):
    """An operation received no usable rows/items."""


class RatingOutOfScaleError(FraudGroupsError):
    def __init__(self, reviewer_id: str, product_id: str, rating: int, scale: tuple[int, int]):
        self.reviewer_id = reviewer_id
        self.product_id = product_id
        self.rating = rating
        self.scale = scale
        super().__init__(
            f"rating {rating} by {reviewer_id!r} on {product_id!r} "
            f"outside declared scale [{scale[0]}, {scale[1]}]"
        )


class MalformedRowError(FraudGroupsError):
    def __init__(self, line_no: int, reason: str):
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"line {line_no}: {reason}")


class TooManyRejectionsError(FraudGroupsError):
    """More than the tolerated fraction of rows failed to parse."""

    def __init__(self, path: str, rejected: int, total: int):
        self.path = path
        self.rejected = rejected
        self.total = total
        super().__init__(
            f"{path}: {rejected} of {total} rows rejected (>10%); "
            "schema likely does not match the file"
        )


class ConflictingLabelError(FraudGroupsError):
    def __init__(self, reviewer_id: str):
        self.reviewer_id = reviewer_id
        super().__init__(f"reviewer {reviewer_id!r} labeled both fraud and genuine")


class GroupTooSmallError(FraudGroupsError):
    """Group does not meet the minimum 2-reviewer / 1-product shape."""

    def __init__(self, n_members: int, n_targets: int):
        self.n_members = n_members
        self.n_targets = n_targets
        super().__init__(
            f"group with {n_members} member(s) and {n_targets} target(s) cannot be scored"
        )


class NoEdgesError(FraudGroupsError):
    """Line graph requested for a graph without edges."""


class UnknownProductError(FraudGroupsError):
    def __init__(self, product_id: str):
        self.product_id = product_id
        super().__init__(f"product {product_id!r} not present in dataset")


class UnknownReviewerError(FraudGroupsError):
    def __init__(self, reviewer_id: str):
        self.reviewer_id = reviewer_id
        super().__init__(f"reviewer {reviewer_id!r} not present in dataset")


class NotCoReviewersError(FraudGroupsError):
    def __init__(self, i: str, j: str, product_id: str):
        super().__init__(f"{i!r} and {j!r} did not both review {product_id!r}")


class EmptyGraphError(FraudGroupsError):
    """Embedding requested for a graph with no nodes."""


class MissingEmbeddingError(FraudGroupsError):
    def __init__(self, reviewer_id: str):
        self.reviewer_id = reviewer_id
        super().__init__(f"no embedding vector for reviewer {reviewer_id!r}")


class InsufficientPairsError(FraudGroupsError):
    """Not enough reviewer pairs to run the coherence test."""


class NoLabelsError(FraudGroupsError):
    """Ground-truth labels required but not available."""


class SpecInvalidError(FraudGroupsError):
    """Synthetic campaign spec fails validation."""
