"""Request/response bodies for the annotation HTTP API."""

from __future__ import annotations

from pydantic import BaseModel, Field


class PoolCreateRequest(BaseModel):
    n_correct: int = Field(default=650, ge=0)
    n_wrong: int = Field(default=1850, ge=0)
    seed: int = 0


class PoolView(BaseModel):
    pool_id: str
    size: int
    n_correct: int
    n_wrong: int
    remaining: int


class AssignRequest(BaseModel):
    annotator_id: str = Field(min_length=1)
    k: int = Field(default=50, ge=1)


class AssignmentView(BaseModel):
    pool_id: str
    annotator_id: str
    record_ids: list[str]
    size: int


class Choice(BaseModel):
    id: str
    display: str


class CurrentSentence(BaseModel):
    record_id: str
    text: str


class Progress(BaseModel):
    judged: int
    total: int


class NextView(BaseModel):
    annotator_id: str
    pool_id: str
    mode: str = "classify"
    progress: Progress
    current: CurrentSentence | None
    choices: list[Choice]
    done: bool


class JudgmentRequest(BaseModel):
    annotator_id: str = Field(min_length=1)
    record_id: str = Field(min_length=1)
    label: str = Field(min_length=1)


class JudgmentAck(BaseModel):
    status: str  # "recorded" | "duplicate"
    progress: Progress


class VoteRequest(BaseModel):
    voter_id: str = Field(min_length=1)
    accept: bool


class TaskView(BaseModel):
    task: str
    wrong_text: str
    claimed_class: str
    claimed_display: str
    n_votes: int
    verdict: str


class VoteAck(BaseModel):
    task: str
    n_votes: int
    accepts: int
    verdict: str


class ErrorBody(BaseModel):
    error: str
    message: str
    detail: dict = {}
