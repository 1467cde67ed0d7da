/**
 * Client-side session flows, kept free of DOM concerns so they can be
 * tested directly. All state lives on the server; these classes only cache
 * the latest fetched view, and every mutation refetches.
 */

import {
  ApiError,
  Choice,
  HumanReport,
  JudgmentAck,
  Level,
  LEVELS,
  NextView,
  TaskView,
  VoteAck,
} from "./api";
import { choiceIndexForKey } from "./keymap";

/** The slice of the HTTP client the sessions depend on. */
export interface AnnotationApi {
  next(annotatorId: string): Promise<NextView>;
  judge(annotatorId: string, recordId: string, label: string): Promise<JudgmentAck>;
  validationTasks(voterId?: string): Promise<TaskView[]>;
  vote(taskId: string, voterId: string, accept: boolean): Promise<VoteAck>;
  humanReport(level: Level): Promise<HumanReport>;
}

export type SubmitOutcome =
  | { kind: "advanced"; status: "recorded" | "duplicate"; view: NextView }
  | { kind: "notice"; message: string; view: NextView }
  | { kind: "busy" };

export class ClassifySession {
  view: NextView | null = null;
  private submitting = false;

  constructor(
    private readonly api: AnnotationApi,
    readonly annotator: string,
  ) {}

  async refresh(): Promise<NextView> {
    this.view = await this.api.next(this.annotator);
    return this.view;
  }

  choiceForKey(key: string): Choice | null {
    if (!this.view) return null;
    const index = choiceIndexForKey(key);
    if (index === null || index >= this.view.choices.length) return null;
    return this.view.choices[index] ?? null;
  }

  /**
   * Submit a judgment for the sentence on screen and advance.
   *
   * A second call while one is in flight is ignored ("busy"), which makes
   * double clicks harmless; the server treats an identical resubmission as
   * a duplicate anyway. AlreadyJudged and NotAssigned mean the client is
   * stale, so both resync instead of failing.
   */
  async submit(label: string): Promise<SubmitOutcome> {
    const view = this.view;
    if (this.submitting) return { kind: "busy" };
    if (!view || view.done || !view.current) return { kind: "busy" };
    this.submitting = true;
    try {
      const ack = await this.api.judge(this.annotator, view.current.record_id, label);
      const next = await this.refresh();
      return { kind: "advanced", status: ack.status, view: next };
    } catch (err) {
      if (
        err instanceof ApiError &&
        (err.code === "AlreadyJudged" || err.code === "NotAssigned")
      ) {
        const next = await this.refresh();
        return { kind: "notice", message: err.message, view: next };
      }
      throw err;
    } finally {
      this.submitting = false;
    }
  }
}

export type VoteOutcome =
  | { kind: "voted"; verdict: string; remaining: number }
  | { kind: "notice"; message: string; remaining: number }
  | { kind: "busy" };

export class ValidateSession {
  tasks: TaskView[] = [];
  private voting = false;

  constructor(
    private readonly api: AnnotationApi,
    readonly voter: string,
  ) {}

  async refresh(): Promise<TaskView[]> {
    this.tasks = await this.api.validationTasks(this.voter);
    return this.tasks;
  }

  get current(): TaskView | null {
    return this.tasks[0] ?? null;
  }

  async vote(accept: boolean): Promise<VoteOutcome> {
    const task = this.current;
    if (this.voting || !task) return { kind: "busy" };
    this.voting = true;
    try {
      const ack = await this.api.vote(task.task, this.voter, accept);
      await this.refresh();
      return { kind: "voted", verdict: ack.verdict, remaining: this.tasks.length };
    } catch (err) {
      if (err instanceof ApiError && err.code === "DuplicateVote") {
        await this.refresh();
        return { kind: "notice", message: err.message, remaining: this.tasks.length };
      }
      throw err;
    } finally {
      this.voting = false;
    }
  }
}

/** One report per task level, straight from the server. */
export async function fetchResults(api: AnnotationApi): Promise<HumanReport[]> {
  return Promise.all(LEVELS.map((level) => api.humanReport(level)));
}
