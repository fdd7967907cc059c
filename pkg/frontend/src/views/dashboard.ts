/** Dashboard: corpus-level conservation status counts. */

import type { ApiClient } from "../api";
import { clear, el, errorBanner } from "../dom";

export interface DashboardViewDeps {
  api: ApiClient;
}

export async function renderDashboardView(
  container: HTMLElement,
  deps: DashboardViewDeps,
): Promise<void> {
  clear(container);
  container.append(el("h2", {}, ["Conservation status"]));
  try {
    const report = await deps.api.statusReport();
    const body = el("tbody");
    for (const [status, count] of Object.entries(report.counts)) {
      body.append(
        el("tr", { "data-status": status }, [
          el("td", {}, [status]),
          el("td", { class: "count" }, [String(count)]),
        ]),
      );
    }
    container.append(
      el("table", { class: "status-table" }, [
        el("thead", {}, [el("tr", {}, [el("th", {}, ["Status"]), el("th", {}, ["Records"])])]),
        body,
      ]),
      el("p", { class: "totals" }, [
        `${report.total_assessed} assessed, ${report.unassessed} unassessed`,
      ]),
    );
  } catch (error) {
    container.append(errorBanner(error instanceof Error ? error.message : String(error)));
  }
}
