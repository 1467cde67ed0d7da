/**
 * Typed client for the annotation HTTP API.
 *
 * Every response is validated against a zod schema, so the rest of the
 * client can rely on the declared shapes. The server is the only source
 * of taxonomy data: class ids and display strings always come from it.
 * The tree-shakable zod/mini build keeps the bundle small.
 */

import * as z from "zod/mini";

export const ChoiceSchema = z.object({ id: z.string(), display: z.string() });
export const ProgressSchema = z.object({
  judged: z.int(),
  total: z.int(),
});

export const PoolViewSchema = z.object({
  pool_id: z.string(),
  size: z.int(),
  n_correct: z.int(),
  n_wrong: z.int(),
  remaining: z.int(),
});

export const AssignmentViewSchema = z.object({
  pool_id: z.string(),
  annotator_id: z.string(),
  record_ids: z.array(z.string()),
  size: z.int(),
});

export const NextViewSchema = z.object({
  annotator_id: z.string(),
  pool_id: z.string(),
  mode: z.literal("classify"),
  progress: ProgressSchema,
  current: z.nullable(z.object({ record_id: z.string(), text: z.string() })),
  choices: z.array(ChoiceSchema).check(z.minLength(1)),
  done: z.boolean(),
});

export const JudgmentAckSchema = z.object({
  status: z.enum(["recorded", "duplicate"]),
  progress: ProgressSchema,
});

export const TaskViewSchema = z.object({
  task: z.string(),
  wrong_text: z.string(),
  claimed_class: z.string(),
  claimed_display: z.string(),
  n_votes: z.int(),
  verdict: z.string(),
});

export const VoteAckSchema = z.object({
  task: z.string(),
  n_votes: z.int(),
  accepts: z.int(),
  verdict: z.string(),
});

export const ClassScoresSchema = z.object({
  p: z.number(),
  r: z.number(),
  f1: z.number(),
  support: z.int(),
});

export const AnnotatorReportSchema = z.object({
  level: z.string(),
  run_tag: z.string(),
  macro_f1: z.number(),
  per_class: z.record(z.string(), ClassScoresSchema),
  confusion: z.record(z.string(), z.record(z.string(), z.number())),
});

export const HumanReportSchema = z.object({
  level: z.string(),
  summary: z.object({ mean: z.number(), max: z.number() }),
  annotators: z.record(z.string(), AnnotatorReportSchema),
});

const ErrorBodySchema = z.object({
  error: z.string(),
  message: z.string(),
  detail: z._default(z.record(z.string(), z.unknown()), {}),
});

export type Choice = z.infer<typeof ChoiceSchema>;
export type Progress = z.infer<typeof ProgressSchema>;
export type PoolView = z.infer<typeof PoolViewSchema>;
export type AssignmentView = z.infer<typeof AssignmentViewSchema>;
export type NextView = z.infer<typeof NextViewSchema>;
export type JudgmentAck = z.infer<typeof JudgmentAckSchema>;
export type TaskView = z.infer<typeof TaskViewSchema>;
export type VoteAck = z.infer<typeof VoteAckSchema>;
export type HumanReport = z.infer<typeof HumanReportSchema>;

export const LEVELS = ["binary", "broad", "finer"] as const;
export type Level = (typeof LEVELS)[number];

/** Error enum name plus payload, as sent by the server. */
export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly detail: Record<string, unknown> = {},
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export class Api {
  constructor(private readonly base: string = "") {}

  private async request<T>(
    schema: z.ZodMiniType<T>,
    path: string,
    init?: RequestInit,
  ): Promise<T> {
    let res: Response;
    try {
      res = await fetch(this.base + path, init);
    } catch (err) {
      throw new ApiError("Unreachable", `server unreachable: ${String(err)}`);
    }
    const body = await res.json().catch(() => null);
    if (!res.ok) {
      const parsed = z.safeParse(ErrorBodySchema, body);
      if (parsed.success) {
        throw new ApiError(parsed.data.error, parsed.data.message, parsed.data.detail);
      }
      throw new ApiError("HttpError", `unexpected HTTP ${res.status}`);
    }
    return z.parse(schema, body);
  }

  private post<T>(schema: z.ZodMiniType<T>, path: string, payload: unknown): Promise<T> {
    return this.request(schema, path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  createPool(nCorrect: number, nWrong: number, seed: number): Promise<PoolView> {
    return this.post(PoolViewSchema, "/pools", {
      n_correct: nCorrect,
      n_wrong: nWrong,
      seed,
    });
  }

  assign(poolId: string, annotatorId: string, k = 50): Promise<AssignmentView> {
    return this.post(AssignmentViewSchema, `/pools/${poolId}/assignments`, {
      annotator_id: annotatorId,
      k,
    });
  }

  next(annotatorId: string): Promise<NextView> {
    return this.request(NextViewSchema, `/assignments/${encodeURIComponent(annotatorId)}`);
  }

  judge(annotatorId: string, recordId: string, label: string): Promise<JudgmentAck> {
    return this.post(JudgmentAckSchema, "/judgments", {
      annotator_id: annotatorId,
      record_id: recordId,
      label,
    });
  }

  validationTasks(voterId?: string): Promise<TaskView[]> {
    const query = voterId ? `?voter_id=${encodeURIComponent(voterId)}` : "";
    return this.request(z.array(TaskViewSchema), `/validation/tasks${query}`);
  }

  vote(taskId: string, voterId: string, accept: boolean): Promise<VoteAck> {
    return this.post(VoteAckSchema, `/validation/${taskId}/votes`, {
      voter_id: voterId,
      accept,
    });
  }

  humanReport(level: Level): Promise<HumanReport> {
    return this.request(HumanReportSchema, `/reports/human?level=${level}`);
  }
}
