"""Durable annotation state: pools, assignments, judgments, votes.

Every mutation appends one JSON line to ``events.jsonl`` before touching
in-memory state, so replaying the log rebuilds the store exactly.  An
optional snapshot accelerates startup; events recorded after the snapshot
are replayed on top of it.  All mutations run under one lock, which makes
assignment reservation and vote recording linearizable.
"""

from __future__ import annotations

import json
import random
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from ..pipeline import CorpusRecord, import_jsonl
from ..taxonomy import FinerClass

DEFAULT_ASSIGNMENT_SIZE = 50
DEFAULT_QUORUM = 3


class AnnotationError(Exception):
    """Base class; ``name`` is the stable error identifier for clients."""

    name = "AnnotationError"

    def payload(self) -> dict:
        return {}


class InsufficientRecords(AnnotationError):
    name = "InsufficientRecords"

    def __init__(self, stratum: str, have: int, want: int):
        super().__init__(f"stratum {stratum}: have {have}, want {want}")
        self.stratum, self.have, self.want = stratum, have, want

    def payload(self) -> dict:
        return {"stratum": self.stratum, "have": self.have, "want": self.want}


class PoolExhausted(AnnotationError):
    name = "PoolExhausted"

    def __init__(self, remaining: int):
        super().__init__(f"pool exhausted, {remaining} ids remaining")
        self.remaining = remaining

    def payload(self) -> dict:
        return {"remaining": self.remaining}


class DuplicateAnnotator(AnnotationError):
    name = "DuplicateAnnotator"


class NotAssigned(AnnotationError):
    name = "NotAssigned"


class AlreadyJudged(AnnotationError):
    name = "AlreadyJudged"


class InvalidLabel(AnnotationError):
    name = "InvalidLabel"


class DuplicateVote(AnnotationError):
    name = "DuplicateVote"


class UnknownTask(AnnotationError):
    name = "UnknownTask"


class UnknownPool(AnnotationError):
    name = "UnknownPool"


@dataclass
class AssignmentState:
    annotator_id: str
    record_ids: list[str]
    judgments: dict[str, str] = field(default_factory=dict)

    @property
    def pending(self) -> list[str]:
        return [rid for rid in self.record_ids if rid not in self.judgments]


@dataclass
class PoolState:
    pool_id: str
    record_ids: list[str]
    n_correct: int
    n_wrong: int
    cursor: int = 0  # ids before the cursor are reserved
    assignments: dict[str, AssignmentState] = field(default_factory=dict)

    @property
    def remaining(self) -> int:
        return len(self.record_ids) - self.cursor


@dataclass
class TaskState:
    record_id: str
    quorum: int
    votes: dict[str, bool] = field(default_factory=dict)

    @property
    def accepts(self) -> int:
        return sum(1 for v in self.votes.values() if v)

    @property
    def verdict(self) -> str:
        if len(self.votes) < self.quorum:
            return "pending"
        return "approved" if self.accepts > self.quorum / 2 else "rejected"


class AnnotationStore:
    """State machine over the corpus; persists via an event log + snapshot."""

    def __init__(
        self,
        data_dir: str | Path,
        records: Sequence[CorpusRecord],
        quorum: int = DEFAULT_QUORUM,
    ):
        self._dir = Path(data_dir)
        self._dir.mkdir(parents=True, exist_ok=True)
        self._events_path = self._dir / "events.jsonl"
        self._snapshot_path = self._dir / "snapshot.json"
        self.records: dict[str, CorpusRecord] = {r.id: r for r in records}
        self.quorum = quorum
        self.pools: dict[str, PoolState] = {}
        self.tasks: dict[str, TaskState] = {
            r.id: TaskState(r.id, quorum)
            for r in records
            if r.needs_validation
        }
        self._lock = threading.RLock()
        self._event_count = 0
        self._load()
        self._events_file = open(self._events_path, "a", encoding="utf-8")

    @classmethod
    def open_corpus(
        cls, data_dir: str | Path, corpus_path: str | Path, quorum: int = DEFAULT_QUORUM
    ) -> "AnnotationStore":
        return cls(data_dir, import_jsonl(corpus_path), quorum)

    def close(self) -> None:
        self._events_file.close()

    # ------------------------------------------------------------ persistence

    def _load(self) -> None:
        start = 0
        if self._snapshot_path.exists():
            snap = json.loads(self._snapshot_path.read_text(encoding="utf-8"))
            start = snap["event_count"]
            self._restore_snapshot(snap)
            self._event_count = start
        if self._events_path.exists():
            with open(self._events_path, encoding="utf-8") as fh:
                for i, line in enumerate(fh):
                    if i < start or not line.strip():
                        continue
                    self._apply(json.loads(line))
                    self._event_count += 1

    def _append(self, event: dict) -> None:
        self._events_file.write(json.dumps(event, ensure_ascii=False) + "\n")
        self._events_file.flush()
        self._event_count += 1

    def snapshot(self) -> None:
        with self._lock:
            state = {
                "event_count": self._event_count,
                "quorum": self.quorum,
                "pools": [
                    {
                        "pool_id": p.pool_id,
                        "record_ids": p.record_ids,
                        "n_correct": p.n_correct,
                        "n_wrong": p.n_wrong,
                        "cursor": p.cursor,
                        "assignments": [
                            {
                                "annotator_id": a.annotator_id,
                                "record_ids": a.record_ids,
                                "judgments": a.judgments,
                            }
                            for a in p.assignments.values()
                        ],
                    }
                    for p in self.pools.values()
                ],
                "votes": {
                    task_id: t.votes
                    for task_id, t in self.tasks.items()
                    if t.votes
                },
            }
            self._snapshot_path.write_text(
                json.dumps(state, ensure_ascii=False), encoding="utf-8"
            )

    def _restore_snapshot(self, snap: dict) -> None:
        for p in snap["pools"]:
            pool = PoolState(
                pool_id=p["pool_id"],
                record_ids=list(p["record_ids"]),
                n_correct=p["n_correct"],
                n_wrong=p["n_wrong"],
                cursor=p["cursor"],
            )
            for a in p["assignments"]:
                pool.assignments[a["annotator_id"]] = AssignmentState(
                    a["annotator_id"], list(a["record_ids"]), dict(a["judgments"])
                )
            self.pools[pool.pool_id] = pool
        for task_id, votes in snap.get("votes", {}).items():
            if task_id in self.tasks:
                self.tasks[task_id].votes = dict(votes)

    def _apply(self, event: dict) -> None:
        kind = event["type"]
        if kind == "pool":
            pool = PoolState(
                pool_id=event["pool_id"],
                record_ids=list(event["record_ids"]),
                n_correct=event["n_correct"],
                n_wrong=event["n_wrong"],
            )
            self.pools[pool.pool_id] = pool
        elif kind == "assign":
            pool = self.pools[event["pool_id"]]
            ids = list(event["record_ids"])
            pool.assignments[event["annotator_id"]] = AssignmentState(
                event["annotator_id"], ids
            )
            pool.cursor += len(ids)
        elif kind == "judgment":
            for pool in self.pools.values():
                a = pool.assignments.get(event["annotator_id"])
                if a and event["record_id"] in a.record_ids:
                    a.judgments[event["record_id"]] = event["label"]
                    break
        elif kind == "vote":
            self.tasks[event["task"]].votes[event["voter"]] = event["accept"]
        else:
            raise ValueError(f"unknown event type {kind!r}")

    # ------------------------------------------------------------ operations

    def create_pool(self, n_correct: int, n_wrong: int, seed: int) -> PoolState:
        with self._lock:
            correct_ids = sorted(
                r.id for r in self.records.values() if r.finer is FinerClass.CORRECT
            )
            wrong_ids = sorted(
                r.id for r in self.records.values() if r.finer is not FinerClass.CORRECT
            )
            if len(correct_ids) < n_correct:
                raise InsufficientRecords("correct", len(correct_ids), n_correct)
            if len(wrong_ids) < n_wrong:
                raise InsufficientRecords("wrong", len(wrong_ids), n_wrong)
            rng = random.Random(seed)
            chosen = rng.sample(correct_ids, n_correct) + rng.sample(wrong_ids, n_wrong)
            rng.shuffle(chosen)
            pool_id = f"p{len(self.pools) + 1}"
            event = {
                "type": "pool",
                "pool_id": pool_id,
                "record_ids": chosen,
                "n_correct": n_correct,
                "n_wrong": n_wrong,
                "seed": seed,
            }
            self._append(event)
            self._apply(event)
            return self.pools[pool_id]

    def get_pool(self, pool_id: str) -> PoolState:
        pool = self.pools.get(pool_id)
        if pool is None:
            raise UnknownPool(pool_id)
        return pool

    def assign(
        self, pool_id: str, annotator_id: str, k: int = DEFAULT_ASSIGNMENT_SIZE
    ) -> AssignmentState:
        with self._lock:
            pool = self.get_pool(pool_id)
            if annotator_id in pool.assignments:
                raise DuplicateAnnotator(annotator_id)
            if pool.remaining == 0:
                raise PoolExhausted(0)
            ids = pool.record_ids[pool.cursor : pool.cursor + k]
            event = {
                "type": "assign",
                "pool_id": pool_id,
                "annotator_id": annotator_id,
                "record_ids": ids,
            }
            self._append(event)
            self._apply(event)
            return pool.assignments[annotator_id]

    def find_assignment(self, annotator_id: str) -> tuple[PoolState, AssignmentState]:
        with self._lock:
            found = None
            for pool in self.pools.values():
                a = pool.assignments.get(annotator_id)
                if a is not None:
                    found = (pool, a)
                    if a.pending:
                        return found
            if found is None:
                raise NotAssigned(annotator_id)
            return found

    def record_judgment(
        self, annotator_id: str, record_id: str, label: str
    ) -> tuple[AssignmentState, bool]:
        """Returns (assignment, stored); stored=False for idempotent repeats."""
        with self._lock:
            try:
                FinerClass.from_label(label)
            except KeyError:
                raise InvalidLabel(label) from None
            assignment = None
            for pool in self.pools.values():
                a = pool.assignments.get(annotator_id)
                if a and record_id in a.record_ids:
                    assignment = a
                    break
            if assignment is None:
                raise NotAssigned(f"{annotator_id}/{record_id}")
            existing = assignment.judgments.get(record_id)
            if existing is not None:
                if existing == label:
                    return assignment, False
                raise AlreadyJudged(f"{record_id} already labeled {existing!r}")
            event = {
                "type": "judgment",
                "annotator_id": annotator_id,
                "record_id": record_id,
                "label": label,
                "ts": time.time(),
            }
            self._append(event)
            self._apply(event)
            return assignment, True

    def vote(self, task_id: str, voter_id: str, accept: bool) -> TaskState:
        with self._lock:
            task = self.tasks.get(task_id)
            if task is None:
                raise UnknownTask(task_id)
            if voter_id in task.votes:
                raise DuplicateVote(voter_id)
            event = {
                "type": "vote",
                "task": task_id,
                "voter": voter_id,
                "accept": accept,
            }
            self._append(event)
            self._apply(event)
            return task

    def pending_tasks(self) -> list[TaskState]:
        with self._lock:
            return [t for t in self.tasks.values() if t.verdict == "pending"]

    def judgment_maps(self) -> dict[str, dict[str, str]]:
        """annotator id → (record id → finer label), over all pools."""
        with self._lock:
            out: dict[str, dict[str, str]] = {}
            for pool in self.pools.values():
                for a in pool.assignments.values():
                    if a.judgments:
                        out.setdefault(a.annotator_id, {}).update(a.judgments)
            return out

    def export_records(self) -> list[CorpusRecord]:
        """Corpus with needs_validation cleared on vote-approved records."""
        with self._lock:
            out = []
            for r in sorted(self.records.values(), key=lambda r: r.id):
                task = self.tasks.get(r.id)
                if task is not None and task.verdict == "approved":
                    out.append(
                        CorpusRecord(
                            id=r.id,
                            source_id=r.source_id,
                            wrong_text=r.wrong_text,
                            correct_text=r.correct_text,
                            finer=r.finer,
                            broad=r.broad,
                            span=r.span,
                            injector=r.injector,
                            needs_validation=False,
                        )
                    )
                else:
                    out.append(r)
            return out
