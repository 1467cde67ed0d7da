"""Annotation backend: durable store plus the HTTP service."""

from .store import (
    AlreadyJudged,
    AnnotationError,
    AnnotationStore,
    DuplicateAnnotator,
    DuplicateVote,
    InsufficientRecords,
    InvalidLabel,
    NotAssigned,
    PoolExhausted,
    UnknownPool,
    UnknownTask,
)

__all__ = [
    "AlreadyJudged",
    "AnnotationError",
    "AnnotationStore",
    "DuplicateAnnotator",
    "DuplicateVote",
    "InsufficientRecords",
    "InvalidLabel",
    "NotAssigned",
    "PoolExhausted",
    "UnknownPool",
    "UnknownTask",
]
