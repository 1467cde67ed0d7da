/**
 * Application shell. The mode and token come from the URL:
 *
 *   /ui/?annotator=TOKEN         classify sentences
 *   /ui/?voter=TOKEN             validate generated sentences
 *   /ui/?results                 per-annotator score report
 *
 * Server state is the only state; reloading the page resumes exactly where
 * the server says the session is.
 */

import { Api, Choice } from "./api";
import {
  AnnotationApi,
  ClassifySession,
  ValidateSession,
  fetchResults,
} from "./session";
import {
  renderClassify,
  renderError,
  renderNotice,
  renderResults,
  renderValidate,
} from "./render";

export class App {
  /** Last in-flight operation; tests await this to settle the UI. */
  pending: Promise<void> = Promise.resolve();
  private classify: ClassifySession | null = null;
  private validate: ValidateSession | null = null;
  private keydownBound = false;

  constructor(
    readonly root: HTMLElement,
    readonly api: AnnotationApi,
    readonly params: URLSearchParams,
  ) {}

  async start(): Promise<void> {
    const annotator = this.params.get("annotator");
    const voter = this.params.get("voter");
    if (annotator) {
      this.classify = new ClassifySession(this.api, annotator);
      this.bindKeys();
      await this.guard(async () => {
        const view = await this.classify!.refresh();
        renderClassify(this.root, view, (choice) => this.queueChoice(choice));
      });
    } else if (voter) {
      this.validate = new ValidateSession(this.api, voter);
      await this.guard(async () => {
        const tasks = await this.validate!.refresh();
        renderValidate(this.root, tasks, (accept) => this.queueVote(accept));
      });
    } else {
      await this.guard(async () => {
        renderResults(this.root, await fetchResults(this.api));
      });
    }
  }

  private bindKeys(): void {
    if (this.keydownBound) return;
    this.keydownBound = true;
    const doc = this.root.ownerDocument;
    doc.addEventListener("keydown", (event) => {
      const choice = this.classify?.choiceForKey(event.key);
      if (choice) this.queueChoice(choice);
    });
  }

  queueChoice(choice: Choice): void {
    this.pending = this.guard(() => this.choose(choice));
  }

  private async choose(choice: Choice): Promise<void> {
    const session = this.classify;
    if (!session) return;
    const outcome = await session.submit(choice.id);
    if (outcome.kind === "busy") return;
    renderClassify(this.root, outcome.view, (c) => this.queueChoice(c));
    if (outcome.kind === "notice") {
      renderNotice(this.root, outcome.message);
    }
  }

  queueVote(accept: boolean): void {
    this.pending = this.guard(() => this.castVote(accept));
  }

  private async castVote(accept: boolean): Promise<void> {
    const session = this.validate;
    if (!session) return;
    const outcome = await session.vote(accept);
    if (outcome.kind === "busy") return;
    renderValidate(this.root, session.tasks, (a) => this.queueVote(a));
    if (outcome.kind === "notice") {
      renderNotice(this.root, outcome.message);
    }
  }

  /** Render failures as a retry banner instead of losing the session. */
  private async guard(op: () => Promise<void>): Promise<void> {
    try {
      await op();
    } catch (err) {
      const message = err instanceof Error ? err.message : String(err);
      renderError(this.root, message, () => {
        this.pending = this.start();
      });
    }
  }
}

function boot(): void {
  const root = document.getElementById("root");
  if (!root) return;
  const app = new App(root, new Api(""), new URLSearchParams(location.search));
  app.pending = app.start();
}

if (typeof document !== "undefined" && document.getElementById("root")) {
  boot();
}
