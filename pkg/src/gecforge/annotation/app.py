"""HTTP service for annotation and validation workflows.

Serves sentences blind (never the gold label), reserves assignments
atomically, and exposes the stored human judgments as macro-F1 reports.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from ..metrics import human_report
from ..taxonomy import DISPLAY_NAMES, FinerClass, TaskLevel
from .schemas import (
    AssignRequest,
    AssignmentView,
    Choice,
    CurrentSentence,
    JudgmentAck,
    JudgmentRequest,
    NextView,
    PoolCreateRequest,
    PoolView,
    Progress,
    TaskView,
    VoteAck,
    VoteRequest,
)
from .store import (
    AlreadyJudged,
    AnnotationError,
    AnnotationStore,
    DuplicateAnnotator,
    DuplicateVote,
    NotAssigned,
    UnknownPool,
    UnknownTask,
)

_STATUS = {
    UnknownPool: 404,
    UnknownTask: 404,
    NotAssigned: 404,
    DuplicateAnnotator: 409,
    AlreadyJudged: 409,
    DuplicateVote: 409,
}

_CHOICES = [
    Choice(id=cls.value, display=DISPLAY_NAMES[cls]) for cls in FinerClass
]


def create_app(store: AnnotationStore) -> FastAPI:
    app = FastAPI(title="annotation server")
    app.state.store = store

    @app.exception_handler(AnnotationError)
    async def _annotation_error(request: Request, exc: AnnotationError):
        return JSONResponse(
            status_code=_STATUS.get(type(exc), 400),
            content={
                "error": exc.name,
                "message": str(exc),
                "detail": exc.payload(),
            },
        )

    @app.post("/pools", response_model=PoolView)
    def create_pool(body: PoolCreateRequest) -> PoolView:
        pool = store.create_pool(body.n_correct, body.n_wrong, body.seed)
        return PoolView(
            pool_id=pool.pool_id,
            size=len(pool.record_ids),
            n_correct=pool.n_correct,
            n_wrong=pool.n_wrong,
            remaining=pool.remaining,
        )

    @app.post("/pools/{pool_id}/assignments", response_model=AssignmentView)
    def assign(pool_id: str, body: AssignRequest) -> AssignmentView:
        a = store.assign(pool_id, body.annotator_id, body.k)
        pool = store.get_pool(pool_id)
        return AssignmentView(
            pool_id=pool.pool_id,
            annotator_id=a.annotator_id,
            record_ids=list(a.record_ids),
            size=len(a.record_ids),
        )

    @app.get("/assignments/{annotator_id}", response_model=NextView)
    def next_pending(annotator_id: str) -> NextView:
        pool, a = store.find_assignment(annotator_id)
        pending = a.pending
        current = None
        if pending:
            record = store.records[pending[0]]
            current = CurrentSentence(record_id=record.id, text=record.wrong_text)
        return NextView(
            annotator_id=annotator_id,
            pool_id=pool.pool_id,
            progress=Progress(judged=len(a.judgments), total=len(a.record_ids)),
            current=current,
            choices=_CHOICES,
            done=not pending,
        )

    @app.post("/judgments", response_model=JudgmentAck)
    def judge(body: JudgmentRequest) -> JudgmentAck:
        a, stored = store.record_judgment(
            body.annotator_id, body.record_id, body.label
        )
        return JudgmentAck(
            status="recorded" if stored else "duplicate",
            progress=Progress(judged=len(a.judgments), total=len(a.record_ids)),
        )

    @app.get("/validation/tasks", response_model=list[TaskView])
    def validation_tasks(voter_id: str | None = None) -> list[TaskView]:
        out = []
        for task in store.pending_tasks():
            if voter_id is not None and voter_id in task.votes:
                continue
            record = store.records[task.record_id]
            out.append(
                TaskView(
                    task=task.record_id,
                    wrong_text=record.wrong_text,
                    claimed_class=record.finer.value,
                    claimed_display=DISPLAY_NAMES[record.finer],
                    n_votes=len(task.votes),
                    verdict=task.verdict,
                )
            )
        return out

    @app.post("/validation/{task_id}/votes", response_model=VoteAck)
    def vote(task_id: str, body: VoteRequest) -> VoteAck:
        task = store.vote(task_id, body.voter_id, body.accept)
        return VoteAck(
            task=task.record_id,
            n_votes=len(task.votes),
            accepts=task.accepts,
            verdict=task.verdict,
        )

    @app.get("/reports/human")
    def reports_human(level: str = "finer") -> JSONResponse:
        try:
            lvl = TaskLevel(level)
        except ValueError:
            return JSONResponse(
                status_code=400,
                content={
                    "error": "InvalidLabel",
                    "message": f"unknown level {level!r}",
                    "detail": {},
                },
            )
        full = human_report(store.judgment_maps(), store.records.values())
        return JSONResponse(
            content={
                "level": lvl.value,
                "summary": full["summary"][lvl.value],
                "annotators": {
                    a: reports[lvl.value] for a, reports in full["annotators"].items()
                },
            }
        )

    ui_dir = Path(__file__).parent / "ui"
    if ui_dir.is_dir():
        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
