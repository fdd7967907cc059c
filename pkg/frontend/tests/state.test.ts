// Explorer state round trips through the URL hash.

import { describe, expect, it } from "vitest";
import { DEFAULT_STATE, stateFromHash, stateToHash } from "../src/state";

describe("state <-> URL", () => {
  it("search criteria round trip", () => {
    const state = {
      ...DEFAULT_STATE,
      view: "search" as const,
      criteria: { ailment: "WI", part_used: "Leaves" },
    };
    const hash = stateToHash(state);
    expect(hash).toContain("#/search?");
    expect(stateFromHash(hash)).toEqual(state);
  });

  it("detail view round trips id and language", () => {
    const state = {
      ...DEFAULT_STATE,
      view: "detail" as const,
      selectedId: "zingiber-officinale",
      language: "yo",
    };
    const hash = stateToHash(state);
    expect(hash).toBe("#/detail/zingiber-officinale?lang=yo");
    expect(stateFromHash(hash)).toEqual(state);
  });

  it("console query text round trips", () => {
    const state = {
      ...DEFAULT_STATE,
      view: "console" as const,
      pql: "SELECT * FROM plants WHERE ailment = 'WI'",
    };
    expect(stateFromHash(stateToHash(state))).toEqual(state);
  });

  it("dashboard round trips", () => {
    const state = { ...DEFAULT_STATE, view: "dashboard" as const };
    expect(stateFromHash(stateToHash(state))).toEqual(state);
  });

  it("empty hash falls back to the search view", () => {
    expect(stateFromHash("")).toEqual(DEFAULT_STATE);
    expect(stateFromHash("#/")).toEqual(DEFAULT_STATE);
  });

  it("criteria with reserved characters survive the trip", () => {
    const state = {
      ...DEFAULT_STATE,
      view: "search" as const,
      criteria: { name: "Ewé ìta & co?" },
    };
    expect(stateFromHash(stateToHash(state))).toEqual(state);
  });
});
