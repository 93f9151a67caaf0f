// Search form state lives in the URL query string and nowhere else, so
// any search is shareable by copying the address bar.

export interface SearchFormState {
  query: string;
  limit: number;
  classes: string;
  includeDead: boolean;
  minScore: number;
}

export const DEFAULT_STATE: SearchFormState = {
  query: "",
  limit: 25,
  classes: "",
  includeDead: false,
  minScore: 0,
};

export function stateToParams(state: SearchFormState): URLSearchParams {
  const params = new URLSearchParams();
  if (state.query) params.set("q", state.query);
  if (state.limit !== DEFAULT_STATE.limit) params.set("limit", String(state.limit));
  if (state.classes) params.set("classes", state.classes);
  if (state.includeDead) params.set("include_dead", "true");
  if (state.minScore > 0) params.set("min_score", String(state.minScore));
  return params;
}

function intOr(fallback: number, raw: string | null): number {
  if (raw === null) return fallback;
  const value = Number.parseInt(raw, 10);
  return Number.isFinite(value) && value >= 1 ? value : fallback;
}

function floatOr(fallback: number, raw: string | null): number {
  if (raw === null) return fallback;
  const value = Number.parseFloat(raw);
  return Number.isFinite(value) && value >= 0 && value <= 1 ? value : fallback;
}

export function stateFromParams(params: URLSearchParams): SearchFormState {
  return {
    query: params.get("q") ?? "",
    limit: intOr(DEFAULT_STATE.limit, params.get("limit")),
    classes: params.get("classes") ?? "",
    includeDead: params.get("include_dead") === "true",
    minScore: floatOr(DEFAULT_STATE.minScore, params.get("min_score")),
  };
}
