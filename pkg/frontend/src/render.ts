/**
 * DOM rendering. Each screen is rebuilt from the latest server state;
 * nothing here computes scores or knows the taxonomy.
 */

import { Choice, HumanReport, NextView, TaskView } from "./api";
import { keyForChoiceIndex } from "./keymap";

type Child = Node | string;

export function el(
  tag: string,
  attrs: Record<string, string> = {},
  ...children: Child[]
): HTMLElement {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  for (const child of children) {
    node.append(child);
  }
  return node;
}

function clear(root: HTMLElement): void {
  while (root.firstChild) root.removeChild(root.firstChild);
}

export function renderNotice(root: HTMLElement, message: string): void {
  const host = root.querySelector(".notice");
  if (host) host.textContent = message;
}

export function renderError(
  root: HTMLElement,
  message: string,
  onRetry: () => void,
): void {
  clear(root);
  const button = el("button", { class: "retry" }, "Retry");
  button.addEventListener("click", onRetry);
  root.append(
    el("div", { class: "error-banner" }, el("p", {}, message), button),
  );
}

export function renderClassify(
  root: HTMLElement,
  view: NextView,
  onChoose: (choice: Choice) => void,
): void {
  clear(root);
  const progress = el(
    "div",
    { class: "progress", "data-judged": String(view.progress.judged) },
    `${view.progress.judged} / ${view.progress.total}`,
  );
  if (view.done || !view.current) {
    root.append(
      el(
        "div",
        { class: "screen done-screen" },
        el("h1", {}, "Assignment complete"),
        el("p", {}, `All ${view.progress.total} sentences are judged. Thank you.`),
        progress,
      ),
    );
    return;
  }
  const sentence = el(
    "blockquote",
    { class: "sentence", lang: "bn", "data-record": view.current.record_id },
    view.current.text,
  );
  const list = el("ol", { class: "choices" });
  view.choices.forEach((choice, index) => {
    const key = keyForChoiceIndex(index);
    const button = el(
      "button",
      { class: "choice", "data-choice": choice.id },
      el("kbd", {}, key ?? ""),
      " ",
      choice.display,
    );
    button.addEventListener("click", () => onChoose(choice));
    list.append(el("li", {}, button));
  });
  root.append(
    el(
      "div",
      { class: "screen classify-screen" },
      progress,
      sentence,
      list,
      el("p", { class: "notice" }),
      el("p", { class: "hint" }, "Keys 1-9, 0, q, w, e pick a class."),
    ),
  );
}

export function renderValidate(
  root: HTMLElement,
  tasks: TaskView[],
  onVote: (accept: boolean) => void,
): void {
  clear(root);
  const task = tasks[0];
  if (!task) {
    root.append(
      el(
        "div",
        { class: "screen idle-screen" },
        el("h1", {}, "Validation queue empty"),
        el("p", {}, "No pending sentences right now."),
      ),
    );
    return;
  }
  const accept = el("button", { class: "vote-accept" }, "Accept");
  const reject = el("button", { class: "vote-reject" }, "Reject");
  accept.addEventListener("click", () => onVote(true));
  reject.addEventListener("click", () => onVote(false));
  root.append(
    el(
      "div",
      { class: "screen validate-screen" },
      el("div", { class: "queue-size" }, `${tasks.length} pending`),
      el(
        "blockquote",
        { class: "sentence", lang: "bn", "data-task": task.task },
        task.wrong_text,
      ),
      el(
        "p",
        { class: "claimed", "data-class": task.claimed_class },
        `Claimed error: ${task.claimed_display}`,
      ),
      el("div", { class: "votes" }, accept, reject),
      el("p", { class: "notice" }),
    ),
  );
}

export function renderResults(root: HTMLElement, reports: HumanReport[]): void {
  clear(root);
  const screen = el("div", { class: "screen results-screen" });
  screen.append(el("h1", {}, "Annotator scores"));
  for (const report of reports) {
    const section = el("section", { class: "level", "data-level": report.level });
    section.append(el("h2", {}, `Level: ${report.level}`));
    const summary = el("p", { class: "summary" });
    summary.append(
      "mean macro-F1 ",
      el(
        "span",
        { class: "mean", "data-value": String(report.summary.mean) },
        report.summary.mean.toFixed(4),
      ),
      ", best ",
      el(
        "span",
        { class: "max", "data-value": String(report.summary.max) },
        report.summary.max.toFixed(4),
      ),
    );
    section.append(summary);
    const table = el("table", { class: "annotators" });
    for (const name of Object.keys(report.annotators).sort()) {
      const entry = report.annotators[name];
      if (!entry) continue;
      table.append(
        el(
          "tr",
          { "data-annotator": name },
          el("td", {}, name),
          el(
            "td",
            { class: "score", "data-value": String(entry.macro_f1) },
            entry.macro_f1.toFixed(4),
          ),
        ),
      );
    }
    section.append(table);
    screen.append(section);
  }
  root.append(screen);
}
