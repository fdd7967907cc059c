/** Application shell: navigation, URL sync, view dispatch.
 *
 * Every navigation swaps in a fresh view container, so responses that
 * land after a view has been superseded render into a detached node
 * and are effectively discarded.
 */

import type { ApiClient } from "./api";
import { el } from "./dom";
import { DEFAULT_STATE, ExplorerState, stateFromHash, stateToHash, ViewName } from "./state";
import { renderConsoleView } from "./views/console";
import { renderDashboardView } from "./views/dashboard";
import { renderDetailView } from "./views/detail";
import { renderSearchView } from "./views/search";

const NAV_ITEMS: Array<[ViewName, string]> = [
  ["search", "Search"],
  ["console", "Query console"],
  ["dashboard", "Dashboard"],
];

export class App {
  private state: ExplorerState = { ...DEFAULT_STATE };
  private viewContainer: HTMLElement;
  private readonly nav: HTMLElement;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly win: Window = window,
  ) {
    this.nav = el("nav", { class: "top-nav" });
    this.viewContainer = el("main", { class: "view" });
    const title = el("h1", {}, ["Medicinal Plants Explorer"]);
    this.root.append(el("header", {}, [title, this.nav]), this.viewContainer);
    this.buildNav();
  }

  start(): void {
    this.win.addEventListener("hashchange", () => {
      this.state = stateFromHash(this.win.location.hash);
      this.render();
    });
    this.state = stateFromHash(this.win.location.hash);
    this.render();
  }

  /** Push a new state into the URL; hashchange drives the render. */
  navigate(state: ExplorerState): void {
    const hash = stateToHash(state);
    if (this.win.location.hash === hash) {
      this.state = state;
      this.render();
    } else {
      this.state = state;
      this.win.location.hash = hash;
    }
  }

  /** Update the URL without re-rendering (in-view state changes). */
  private syncUrl(): void {
    this.win.history.replaceState(null, "", stateToHash(this.state));
  }

  private buildNav(): void {
    for (const [view, label] of NAV_ITEMS) {
      const link = el("a", { href: "#", "data-view": view }, [label]);
      link.addEventListener("click", (event) => {
        event.preventDefault();
        this.navigate({ ...DEFAULT_STATE, view });
      });
      this.nav.append(link);
    }
  }

  private render(): void {
    const fresh = el("main", { class: "view", "data-view": this.state.view });
    this.viewContainer.replaceWith(fresh);
    this.viewContainer = fresh;

    for (const link of Array.from(this.nav.querySelectorAll("a"))) {
      link.classList.toggle("active", link.dataset.view === this.state.view);
    }

    switch (this.state.view) {
      case "search":
        renderSearchView(fresh, {
          api: this.api,
          criteria: this.state.criteria,
          onCriteriaChange: (criteria) => {
            this.state = { ...this.state, criteria };
            this.syncUrl();
          },
          onOpenDetail: (id) => this.openDetail(id),
        });
        break;
      case "detail":
        if (!this.state.selectedId) {
          this.navigate({ ...DEFAULT_STATE, view: "search" });
          return;
        }
        void renderDetailView(fresh, {
          api: this.api,
          id: this.state.selectedId,
          language: this.state.language,
          onLanguageChange: (language) => {
            this.state = { ...this.state, language };
            this.syncUrl();
          },
        });
        break;
      case "console":
        renderConsoleView(fresh, {
          api: this.api,
          pql: this.state.pql,
          onPqlChange: (pql) => {
            this.state = { ...this.state, pql };
            this.syncUrl();
          },
          onOpenDetail: (id) => this.openDetail(id),
        });
        break;
      case "dashboard":
        void renderDashboardView(fresh, { api: this.api });
        break;
    }
  }

  private openDetail(id: string): void {
    this.navigate({
      ...this.state,
      view: "detail",
      selectedId: id,
    });
  }
}
