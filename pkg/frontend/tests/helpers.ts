/** Test plumbing: an ApiClient backed by recorded API fixtures.
 *
 * Fixtures were captured from a live service loaded with the merged
 * fixture corpus (8 plant profiles + 17 extra opinion rows). Setting
 * PHYTOBASE_LIVE_API re-points every test at a running service with
 * that same corpus instead of the recordings.
 */

import { readFileSync } from "node:fs";
import { resolve } from "node:path";
import { ApiClient, FetchLike } from "../src/api";

// vitest runs with the frontend directory as cwd; import.meta.url is
// rebased under jsdom, so resolve fixtures from the project root
function fixture(name: string): string {
  return readFileSync(resolve(process.cwd(), "tests/fixtures", name), "utf-8");
}

interface Route {
  method: string;
  path: string;
  body?: string;
  status: number;
  contentType: string;
  payload: string;
}

const ROUTES: Route[] = [
  { method: "GET", path: "/plants?ailment=WI", status: 200, contentType: "application/json", payload: fixture("plants_ailment_wi.json") },
  { method: "GET", path: "/plants?ailment=INF&part_used=Leaves", status: 200, contentType: "application/json", payload: fixture("plants_inf_leaves.json") },
  { method: "GET", path: "/plants", status: 200, contentType: "application/json", payload: fixture("plants_all.json") },
  { method: "GET", path: "/plants?bogus=1", status: 400, contentType: "application/json", payload: fixture("plants_unknown_field.json") },
  { method: "GET", path: "/plants/zingiber-officinale", status: 200, contentType: "application/json", payload: fixture("record_zingiber.json") },
  { method: "GET", path: "/plants/no-such-plant", status: 404, contentType: "application/json", payload: fixture("record_not_found.json") },
  { method: "GET", path: "/plants/zingiber-officinale/media", status: 200, contentType: "application/json", payload: fixture("media_zingiber.json") },
  { method: "GET", path: "/plants/zingiber-officinale/narration?lang=en", status: 200, contentType: "text/plain; charset=utf-8", payload: fixture("narration_zingiber_en.txt") },
  { method: "GET", path: "/plants/zingiber-officinale/narration?lang=yo", status: 200, contentType: "text/plain; charset=utf-8", payload: fixture("narration_zingiber_yo.txt") },
  { method: "GET", path: "/report/status", status: 200, contentType: "application/json", payload: fixture("report_status.json") },
  { method: "GET", path: "/meta/codes", status: 200, contentType: "application/json", payload: fixture("meta_codes.json") },
  { method: "POST", path: "/query", body: "SELECT scientific_name, ailment FROM plants WHERE ailment = 'INF'", status: 200, contentType: "application/json", payload: fixture("query_inf.json") },
  { method: "POST", path: "/query", body: "SELECT scientific_name FROM plants LIMIT 5", status: 200, contentType: "application/json", payload: fixture("query_limit5.json") },
  { method: "POST", path: "/query", body: "SELECT * FROM plants WHERE x = 'unterminated", status: 400, contentType: "application/json", payload: fixture("query_parse_error.json") },
];

export function recordedFetch(): FetchLike {
  return async (url: string, init?: RequestInit): Promise<Response> => {
    const method = init?.method ?? "GET";
    const body = typeof init?.body === "string" ? init.body : undefined;
    const path = url.replace(/^https?:\/\/[^/]+/, "");
    const route = ROUTES.find(
      (r) => r.method === method && r.path === path && (r.body === undefined || r.body === body),
    );
    if (!route) {
      throw new Error(`no recorded fixture for ${method} ${path} ${body ?? ""}`);
    }
    return new Response(route.payload, {
      status: route.status,
      headers: { "content-type": route.contentType },
    });
  };
}

export function failingFetch(): FetchLike {
  return async () => {
    throw new TypeError("NetworkError: connection refused");
  };
}

export function makeClient(): ApiClient {
  const live = typeof process !== "undefined" ? process.env.PHYTOBASE_LIVE_API : undefined;
  if (live) {
    return new ApiClient(live, globalThis.fetch?.bind(globalThis));
  }
  return new ApiClient("http://api.test", recordedFetch());
}

/** Let queued promise callbacks and jsdom tasks run. */
export async function flushAsync(rounds = 4): Promise<void> {
  for (let i = 0; i < rounds; i++) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}

export function mount(): HTMLElement {
  document.body.innerHTML = "";
  const container = document.createElement("div");
  document.body.append(container);
  return container;
}
