import { describe, expect, it } from "vitest";

import { ServiceError, fetchRecord, searchMarks, searchUrl } from "../src/api.js";
import type { SearchResponse } from "../src/types.js";

const RESPONSE: SearchResponse = {
  query: "CLOSET ENVY",
  normalized: "CLOSET ENVY",
  total: 1,
  truncated: false,
  results: [
    {
      serial: "86295022",
      mark: "CLOSET ENVY",
      status: "LIVE",
      classes: [43],
      owner: "Marriott International, Inc.",
      score: 1.0,
      band: "VERY_HIGH",
      exact_match: true,
      phonetic_match: true,
      levenshtein: 0,
      rank: 1,
    },
  ],
};

function fakeFetch(status: number, body: unknown): typeof fetch {
  return async () =>
    new Response(JSON.stringify(body), {
      status,
      headers: { "content-type": "application/json" },
    });
}

describe("searchUrl", () => {
  it("builds the minimal query", () => {
    expect(searchUrl("", "CLOSET ENVY")).toBe("/api/v1/search?q=CLOSET+ENVY");
  });

  it("includes every option when set", () => {
    const url = searchUrl("http://host:1", "X", {
      limit: 5,
      classes: "25,43",
      includeDead: true,
      minScore: 0.4,
    });
    const parsed = new URL(url);
    expect(parsed.pathname).toBe("/api/v1/search");
    expect(parsed.searchParams.get("q")).toBe("X");
    expect(parsed.searchParams.get("limit")).toBe("5");
    expect(parsed.searchParams.get("classes")).toBe("25,43");
    expect(parsed.searchParams.get("include_dead")).toBe("true");
    expect(parsed.searchParams.get("min_score")).toBe("0.4");
  });

  it("omits defaults", () => {
    const url = searchUrl("", "X", { includeDead: false, minScore: 0 });
    expect(url).toBe("/api/v1/search?q=X");
  });
});

describe("searchMarks", () => {
  it("returns the decoded response", async () => {
    const body = await searchMarks("", "CLOSET ENVY", {}, fakeFetch(200, RESPONSE));
    expect(body).toEqual(RESPONSE);
  });

  it("surfaces the service error code", async () => {
    const failing = fakeFetch(400, { error: "EMPTY_QUERY", message: "query is empty" });
    await expect(searchMarks("", "x", {}, failing)).rejects.toMatchObject({
      code: "EMPTY_QUERY",
      status: 400,
    });
  });

  it("wraps network failures", async () => {
    const down: typeof fetch = async () => {
      throw new TypeError("connection refused");
    };
    const err = await searchMarks("", "x", {}, down).catch((e) => e);
    expect(err).toBeInstanceOf(ServiceError);
    expect(err.code).toBe("NETWORK");
  });
});

describe("fetchRecord", () => {
  it("encodes the serial into the path", async () => {
    let seen = "";
    const spy: typeof fetch = async (input) => {
      seen = String(input);
      return new Response(JSON.stringify({ serial: "86295022" }), { status: 200 });
    };
    await fetchRecord("http://h", "86295022", spy);
    expect(seen).toBe("http://h/api/v1/records/86295022");
  });

  it("maps 404 to NOT_FOUND", async () => {
    const missing = fakeFetch(404, { error: "NOT_FOUND", message: "no record" });
    await expect(fetchRecord("", "0", missing)).rejects.toMatchObject({ code: "NOT_FOUND" });
  });
});
