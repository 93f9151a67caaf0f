// Typed client for the three service endpoints. The UI never computes
// scores or re-sorts; everything shown comes from these responses.

import type { HealthResponse, SearchResponse, TrademarkRecord } from "./types.js";

export interface SearchQueryOptions {
  limit?: number;
  classes?: string; // comma-separated, passed through verbatim
  includeDead?: boolean;
  minScore?: number;
}

export class ServiceError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
    this.name = "ServiceError";
  }
}

export function searchUrl(base: string, query: string, opts: SearchQueryOptions = {}): string {
  const params = new URLSearchParams({ q: query });
  if (opts.limit !== undefined) params.set("limit", String(opts.limit));
  if (opts.classes) params.set("classes", opts.classes);
  if (opts.includeDead) params.set("include_dead", "true");
  if (opts.minScore !== undefined && opts.minScore > 0) params.set("min_score", String(opts.minScore));
  return `${base}/api/v1/search?${params.toString()}`;
}

async function request<T>(url: string, fetchImpl: typeof fetch): Promise<T> {
  let resp: Response;
  try {
    resp = await fetchImpl(url);
  } catch (err) {
    throw new ServiceError("NETWORK", err instanceof Error ? err.message : String(err), 0);
  }
  let body: unknown = null;
  try {
    body = await resp.json();
  } catch {
    // fall through; non-JSON bodies become a generic error below
  }
  if (!resp.ok) {
    const errBody = body as { error?: string; message?: string } | null;
    throw new ServiceError(
      errBody?.error ?? `HTTP_${resp.status}`,
      errBody?.message ?? resp.statusText,
      resp.status,
    );
  }
  return body as T;
}

export function searchMarks(
  base: string,
  query: string,
  opts: SearchQueryOptions = {},
  fetchImpl: typeof fetch = fetch,
): Promise<SearchResponse> {
  return request<SearchResponse>(searchUrl(base, query, opts), fetchImpl);
}

export function fetchRecord(
  base: string,
  serial: string,
  fetchImpl: typeof fetch = fetch,
): Promise<TrademarkRecord> {
  return request<TrademarkRecord>(`${base}/api/v1/records/${encodeURIComponent(serial)}`, fetchImpl);
}

export function fetchHealth(base: string, fetchImpl: typeof fetch = fetch): Promise<HealthResponse> {
  return request<HealthResponse>(`${base}/api/v1/healthz`, fetchImpl);
}
