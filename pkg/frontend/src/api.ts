/** Thin typed client over the public phytobase API. */

import type {
  ApiErrorPayload,
  MediaItem,
  PlantRecord,
  PlantSummary,
  ResultSet,
  StatusReport,
} from "./types";

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;
  readonly span: [number, number] | null;

  constructor(status: number, payload: ApiErrorPayload) {
    super(payload.message);
    this.code = payload.code;
    this.status = status;
    this.span = payload.span ?? null;
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;

  constructor(base = "", fetchImpl?: FetchLike) {
    this.base = base.replace(/\/$/, "");
    const impl = fetchImpl ?? globalThis.fetch;
    if (!impl) throw new Error("no fetch implementation available");
    this.fetchImpl = impl.bind(globalThis);
  }

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const response = await this.fetchImpl(this.base + path, init);
    if (!response.ok) {
      let payload: ApiErrorPayload;
      try {
        payload = (await response.json()) as ApiErrorPayload;
      } catch {
        payload = { code: "INTERNAL", message: `HTTP ${response.status}` };
      }
      throw new ApiError(response.status, payload);
    }
    return response;
  }

  async searchPlants(criteria: Record<string, string>): Promise<PlantSummary[]> {
    const params = new URLSearchParams(criteria);
    const suffix = params.toString() ? `?${params.toString()}` : "";
    const response = await this.request(`/plants${suffix}`);
    return (await response.json()) as PlantSummary[];
  }

  async getPlant(id: string): Promise<PlantRecord> {
    const response = await this.request(`/plants/${encodeURIComponent(id)}`);
    return (await response.json()) as PlantRecord;
  }

  async runQuery(pql: string): Promise<ResultSet> {
    const response = await this.request("/query", { method: "POST", body: pql });
    return (await response.json()) as ResultSet;
  }

  async statusReport(): Promise<StatusReport> {
    const response = await this.request("/report/status");
    return (await response.json()) as StatusReport;
  }

  async narration(id: string, lang: string): Promise<string> {
    const response = await this.request(
      `/plants/${encodeURIComponent(id)}/narration?lang=${encodeURIComponent(lang)}`,
    );
    return await response.text();
  }

  async media(id: string): Promise<MediaItem[]> {
    const response = await this.request(`/plants/${encodeURIComponent(id)}/media`);
    const payload = (await response.json()) as { items: MediaItem[] };
    return payload.items;
  }
}
