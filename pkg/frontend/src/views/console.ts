/** PQL console: run SELECT statements, highlight parse-error spans. */

import type { ApiClient } from "../api";
import { ApiError } from "../api";
import { clear, el, errorBanner } from "../dom";
import type { ResultSet } from "../types";

export interface ConsoleViewDeps {
  api: ApiClient;
  pql: string;
  onPqlChange: (pql: string) => void;
  onOpenDetail: (id: string) => void;
}

/** The query text with the offending span wrapped in <mark>, plus a
 * caret line pointing at the span (monospace, so columns align). */
export function renderErrorSpan(text: string, span: [number, number]): HTMLElement {
  const [start, rawEnd] = span;
  const end = Math.max(rawEnd, start + 1);
  const highlighted = text.slice(start, end) || " "; // keep zero-width spans visible
  const block = el("pre", { class: "pql-error-span" });
  block.append(
    document.createTextNode(text.slice(0, start)),
    el("mark", { class: "span-highlight" }, [highlighted]),
    document.createTextNode(text.slice(end)),
    document.createTextNode("\n" + " ".repeat(start) + "^" + "~".repeat(end - start - 1)),
  );
  return block;
}

function resultTable(result: ResultSet, onOpen: (id: string) => void): HTMLElement {
  if (!result.rows.length) {
    return el("p", { class: "empty" }, ["No rows."]);
  }
  const columns = Object.keys(result.rows[0].values);
  const head = el("tr", {}, [el("th", {}, ["id"]), ...columns.map((c) => el("th", {}, [c]))]);
  const body = el("tbody");
  for (const row of result.rows) {
    const cells = columns.map((column) => {
      const value = row.values[column];
      const text = Array.isArray(value) ? value.join(", ") : value ?? "";
      return el("td", {}, [text]);
    });
    const tr = el("tr", { class: "result-row", "data-id": row.id }, [
      el("td", { class: "row-id" }, [row.id]),
      ...cells,
    ]);
    tr.addEventListener("click", () => onOpen(row.id));
    body.append(tr);
  }
  return el("table", { class: "results-table" }, [el("thead", {}, [head]), body]);
}

export function renderConsoleView(container: HTMLElement, deps: ConsoleViewDeps): void {
  clear(container);

  const input = el("textarea", {
    class: "pql-input",
    rows: "3",
    placeholder: "SELECT scientific_name FROM plants WHERE ailment = 'WI'",
  }) as HTMLTextAreaElement;
  input.value = deps.pql;

  const run = el("button", { type: "button", class: "run-pql" }, ["Run"]);
  const output = el("div", { class: "console-output" });
  const footer = el("p", { class: "result-count" });

  let requestSeq = 0;
  const execute = async () => {
    const text = input.value;
    const seq = ++requestSeq;
    deps.onPqlChange(text);
    clear(output);
    footer.textContent = "";
    try {
      const result = await deps.api.runQuery(text);
      if (seq !== requestSeq) return; // superseded by a newer run
      output.append(resultTable(result, deps.onOpenDetail));
      footer.textContent = `${result.rows.length} of ${result.total} match(es)`;
    } catch (error) {
      if (seq !== requestSeq) return;
      if (error instanceof ApiError && error.span) {
        output.append(errorBanner(`${error.code}: ${error.message}`));
        output.append(renderErrorSpan(text, error.span));
      } else {
        output.append(errorBanner(error instanceof Error ? error.message : String(error)));
      }
    }
  };

  run.addEventListener("click", () => void execute());
  input.addEventListener("keydown", (event) => {
    if (event.key === "Enter" && (event.ctrlKey || event.metaKey)) {
      event.preventDefault();
      void execute();
    }
  });

  container.append(
    el("h2", {}, ["Query console"]),
    el("div", { class: "console-input" }, [input, run]),
    output,
    footer,
  );

  if (deps.pql.trim()) void execute();
}
