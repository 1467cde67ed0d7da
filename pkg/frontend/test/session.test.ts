import { describe, expect, it } from "vitest";

import {
  ApiError,
  Choice,
  HumanReport,
  JudgmentAck,
  Level,
  NextView,
  TaskView,
  VoteAck,
} from "../src/api";
import {
  AnnotationApi,
  ClassifySession,
  ValidateSession,
  fetchResults,
} from "../src/session";

const CHOICES: Choice[] = [
  { id: "spelling_non_dictionary", display: "Spelling: non-dictionary word" },
  { id: "spelling_dictionary", display: "Spelling: wrong dictionary word" },
  { id: "tense", display: "Wrong tense" },
  { id: "person", display: "Wrong person" },
  { id: "number", display: "Wrong number" },
  { id: "gender", display: "Wrong gender" },
  { id: "case", display: "Wrong case" },
  { id: "pos", display: "Wrong part of speech" },
  { id: "missing_word", display: "Missing word" },
  { id: "gurucandali", display: "Mixed registers" },
  { id: "punctuation", display: "Punctuation error" },
  { id: "semantic", display: "Semantically impossible" },
  { id: "correct", display: "Correct sentence" },
];

function deferred(): { promise: Promise<void>; resolve: () => void } {
  let resolve!: () => void;
  const promise = new Promise<void>((r) => {
    resolve = r;
  });
  return { promise, resolve };
}

class FakeApi implements AnnotationApi {
  labels = new Map<string, string>();
  tasks: TaskView[] = [];
  votesByTask = new Map<string, Set<string>>();
  judgeGate: Promise<void> | null = null;

  constructor(readonly recordIds: string[] = ["r1", "r2", "r3"]) {}

  async next(annotatorId: string): Promise<NextView> {
    const pendingId = this.recordIds.find((rid) => !this.labels.has(rid));
    return {
      annotator_id: annotatorId,
      pool_id: "p1",
      mode: "classify",
      progress: { judged: this.labels.size, total: this.recordIds.length },
      current: pendingId ? { record_id: pendingId, text: `বাক্য ${pendingId}` } : null,
      choices: CHOICES as NextView["choices"],
      done: pendingId === undefined,
    };
  }

  async judge(_a: string, recordId: string, label: string): Promise<JudgmentAck> {
    if (this.judgeGate) await this.judgeGate;
    const existing = this.labels.get(recordId);
    if (existing !== undefined && existing !== label) {
      throw new ApiError("AlreadyJudged", `${recordId} already labeled`);
    }
    const status = existing === label ? "duplicate" : "recorded";
    this.labels.set(recordId, label);
    return {
      status,
      progress: { judged: this.labels.size, total: this.recordIds.length },
    };
  }

  async validationTasks(voterId?: string): Promise<TaskView[]> {
    return this.tasks.filter(
      (t) => !voterId || !this.votesByTask.get(t.task)?.has(voterId),
    );
  }

  async vote(taskId: string, voterId: string, accept: boolean): Promise<VoteAck> {
    const voters = this.votesByTask.get(taskId) ?? new Set<string>();
    if (voters.has(voterId)) {
      throw new ApiError("DuplicateVote", `${voterId} already voted`);
    }
    voters.add(voterId);
    this.votesByTask.set(taskId, voters);
    return {
      task: taskId,
      n_votes: voters.size,
      accepts: accept ? 1 : 0,
      verdict: "pending",
    };
  }

  async humanReport(level: Level): Promise<HumanReport> {
    return { level, summary: { mean: 0.5, max: 0.5 }, annotators: {} };
  }
}

describe("ClassifySession", () => {
  it("walks an assignment to completion", async () => {
    const api = new FakeApi();
    const session = new ClassifySession(api, "ann1");
    let view = await session.refresh();
    expect(view.progress).toEqual({ judged: 0, total: 3 });
    expect(view.current?.record_id).toBe("r1");

    for (const expected of ["r2", "r3", null]) {
      const outcome = await session.submit("tense");
      expect(outcome.kind).toBe("advanced");
      if (outcome.kind !== "advanced") throw new Error("unreachable");
      expect(outcome.status).toBe("recorded");
      view = outcome.view;
      expect(view.current?.record_id ?? null).toBe(expected);
    }
    expect(view.done).toBe(true);
    expect(api.labels.size).toBe(3);
  });

  it("ignores a second submit while one is in flight", async () => {
    const api = new FakeApi();
    const gate = deferred();
    api.judgeGate = gate.promise;
    const session = new ClassifySession(api, "ann1");
    await session.refresh();

    const first = session.submit("tense");
    const second = await session.submit("tense");
    expect(second).toEqual({ kind: "busy" });

    gate.resolve();
    const outcome = await first;
    expect(outcome.kind).toBe("advanced");
    expect(api.labels.size).toBe(1);
  });

  it("resyncs on AlreadyJudged instead of failing", async () => {
    const api = new FakeApi();
    api.labels.set("r1", "person");
    const session = new ClassifySession(api, "ann1");
    // a stale view still showing r1
    session.view = {
      ...(await api.next("ann1")),
      current: { record_id: "r1", text: "x" },
      done: false,
    };
    const outcome = await session.submit("tense");
    expect(outcome.kind).toBe("notice");
    if (outcome.kind !== "notice") throw new Error("unreachable");
    expect(outcome.view.current?.record_id).toBe("r2");
    expect(api.labels.get("r1")).toBe("person");
  });

  it("refuses to submit when done", async () => {
    const api = new FakeApi([]);
    const session = new ClassifySession(api, "ann1");
    await session.refresh();
    expect(await session.submit("tense")).toEqual({ kind: "busy" });
  });

  it("maps keys onto the served choice list", async () => {
    const session = new ClassifySession(new FakeApi(), "ann1");
    await session.refresh();
    expect(session.choiceForKey("1")?.id).toBe("spelling_non_dictionary");
    expect(session.choiceForKey("0")?.id).toBe("gurucandali");
    expect(session.choiceForKey("e")?.id).toBe("correct");
    expect(session.choiceForKey("z")).toBeNull();
  });
});

function task(id: string): TaskView {
  return {
    task: id,
    wrong_text: `ভুল ${id}`,
    claimed_class: "case",
    claimed_display: "Wrong case",
    n_votes: 0,
    verdict: "pending",
  };
}

describe("ValidateSession", () => {
  it("advances through the queue as votes land", async () => {
    const api = new FakeApi();
    api.tasks = [task("t1"), task("t2")];
    const session = new ValidateSession(api, "v1");
    await session.refresh();
    expect(session.current?.task).toBe("t1");

    const outcome = await session.vote(true);
    expect(outcome.kind).toBe("voted");
    expect(session.current?.task).toBe("t2");
    expect(api.votesByTask.get("t1")?.has("v1")).toBe(true);
  });

  it("turns a duplicate vote into a notice and refetches", async () => {
    const api = new FakeApi();
    api.tasks = [task("t1")];
    api.votesByTask.set("t1", new Set(["v1"]));
    const session = new ValidateSession(api, "v1");
    session.tasks = [task("t1")]; // stale queue
    const outcome = await session.vote(false);
    expect(outcome.kind).toBe("notice");
    expect(session.tasks).toEqual([]);
  });
});

describe("fetchResults", () => {
  it("fetches one report per level", async () => {
    const reports = await fetchResults(new FakeApi());
    expect(reports.map((r) => r.level)).toEqual(["binary", "broad", "finer"]);
  });
});
