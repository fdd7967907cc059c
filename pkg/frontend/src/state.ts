/** Explorer state and its round trip through the URL hash.
 *
 * Copying the address of any Search or Detail view reproduces that
 * view's state: the active view is the hash path, criteria and language
 * travel in the hash's query string.
 */

export type ViewName = "search" | "detail" | "console" | "dashboard";

export interface ExplorerState {
  view: ViewName;
  criteria: Record<string, string>;
  selectedId: string | null;
  language: string;
  pql: string;
}

export const DEFAULT_STATE: ExplorerState = {
  view: "search",
  criteria: {},
  selectedId: null,
  language: "en",
  pql: "",
};

export function stateToHash(state: ExplorerState): string {
  const params = new URLSearchParams();
  if (state.view === "search") {
    for (const [key, value] of Object.entries(state.criteria)) params.set(key, value);
  }
  if (state.view === "detail" && state.language !== "en") {
    params.set("lang", state.language);
  }
  if (state.view === "console" && state.pql) params.set("q", state.pql);
  const query = params.toString();
  const path =
    state.view === "detail" && state.selectedId
      ? `/detail/${encodeURIComponent(state.selectedId)}`
      : `/${state.view}`;
  return `#${path}${query ? `?${query}` : ""}`;
}

export function stateFromHash(hash: string): ExplorerState {
  const cleaned = hash.replace(/^#/, "");
  if (!cleaned || cleaned === "/") return { ...DEFAULT_STATE };
  const [path, query = ""] = cleaned.split("?", 2);
  const params = new URLSearchParams(query);
  const segments = path.replace(/^\//, "").split("/");

  if (segments[0] === "detail" && segments[1]) {
    return {
      ...DEFAULT_STATE,
      view: "detail",
      selectedId: decodeURIComponent(segments[1]),
      language: params.get("lang") ?? "en",
    };
  }
  if (segments[0] === "console") {
    return { ...DEFAULT_STATE, view: "console", pql: params.get("q") ?? "" };
  }
  if (segments[0] === "dashboard") {
    return { ...DEFAULT_STATE, view: "dashboard" };
  }
  const criteria: Record<string, string> = {};
  params.forEach((value, key) => {
    criteria[key] = value;
  });
  return { ...DEFAULT_STATE, view: "search", criteria };
}
