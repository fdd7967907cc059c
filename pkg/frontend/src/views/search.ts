/** Search view: multi-criteria form over GET /plants. */

import type { ApiClient } from "../api";
import { clear, el, errorBanner } from "../dom";
import type { PlantSummary } from "../types";

export const SEARCH_FIELDS = [
  "name",
  "ailment",
  "family",
  "part_used",
  "area_of_origin",
  "status",
] as const;

export interface SearchViewDeps {
  api: ApiClient;
  criteria: Record<string, string>;
  onCriteriaChange: (criteria: Record<string, string>) => void;
  onOpenDetail: (id: string) => void;
}

function summaryRow(summary: PlantSummary, onOpen: (id: string) => void): HTMLElement {
  const row = el("tr", { class: "result-row", "data-id": summary.id });
  row.append(
    el("td", {}, [summary.scientific_name]),
    el("td", {}, [summary.family]),
    el("td", {}, [summary.ailments.join(", ")]),
  );
  row.addEventListener("click", () => onOpen(summary.id));
  return row;
}

export function renderSearchView(container: HTMLElement, deps: SearchViewDeps): void {
  clear(container);

  const inputs = new Map<string, HTMLInputElement>();
  const form = el("form", { class: "search-form" });
  for (const field of SEARCH_FIELDS) {
    const input = el("input", {
      type: "text",
      name: field,
      placeholder: field.replace(/_/g, " "),
      value: deps.criteria[field] ?? "",
    });
    inputs.set(field, input);
    form.append(el("label", { class: "criterion" }, [`${field.replace(/_/g, " ")}: `, input]));
  }
  const submit = el("button", { type: "submit" }, ["Search"]) as HTMLButtonElement;
  form.append(submit);

  const messages = el("div", { class: "messages" });
  const results = el("div", { class: "search-results" });
  container.append(el("h2", {}, ["Search"]), form, messages, results);

  const currentCriteria = (): Record<string, string> => {
    const criteria: Record<string, string> = {};
    for (const [field, input] of inputs) {
      if (input.value.trim()) criteria[field] = input.value.trim();
    }
    return criteria;
  };

  const refreshSubmit = () => {
    // searching with no criterion at all is not meaningful
    submit.disabled = Object.keys(currentCriteria()).length === 0;
  };
  for (const input of inputs.values()) {
    input.addEventListener("input", refreshSubmit);
  }
  refreshSubmit();

  const renderResults = (summaries: PlantSummary[]) => {
    clear(results);
    if (!summaries.length) {
      results.append(el("p", { class: "empty" }, ["No plants matched."]));
      return;
    }
    const body = el("tbody");
    for (const summary of summaries) {
      body.append(summaryRow(summary, deps.onOpenDetail));
    }
    results.append(
      el("table", { class: "results-table" }, [
        el("thead", {}, [
          el("tr", {}, [
            el("th", {}, ["Scientific name"]),
            el("th", {}, ["Family"]),
            el("th", {}, ["Ailments"]),
          ]),
        ]),
        body,
      ]),
    );
  };

  let requestSeq = 0;
  const runSearch = async (criteria: Record<string, string>) => {
    const seq = ++requestSeq;
    clear(messages);
    try {
      const summaries = await deps.api.searchPlants(criteria);
      if (seq !== requestSeq) return; // a newer search superseded this one
      renderResults(summaries);
    } catch (error) {
      if (seq !== requestSeq) return;
      // the form keeps its values so the user can retry
      messages.append(errorBanner(error instanceof Error ? error.message : String(error)));
    }
  };

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const criteria = currentCriteria();
    if (!Object.keys(criteria).length) return;
    deps.onCriteriaChange(criteria);
    void runSearch(criteria);
  });

  if (Object.keys(deps.criteria).length) {
    void runSearch(deps.criteria);
  }
}
