// Search terminal: query box with debounced search-as-you-type plus an
// explicit submit, option controls bound to URL query params, band
// filter toggles, and a ranked, color-banded results table.

import type { SearchQueryOptions } from "./api.js";
import { ALL_BANDS } from "./bands.js";
import { debounce } from "./debounce.js";
import { SearchPane } from "./pane.js";
import { DEFAULT_STATE, stateFromParams, stateToParams, type SearchFormState } from "./params.js";
import type { Band } from "./types.js";

const DEBOUNCE_MS = 300;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function optionsOf(state: SearchFormState): SearchQueryOptions {
  return {
    limit: state.limit,
    classes: state.classes || undefined,
    includeDead: state.includeDead,
    minScore: state.minScore,
  };
}

export function mountSearchPage(): void {
  const params = new URLSearchParams(window.location.search);
  const state = stateFromParams(params);
  const base = params.get("base") ?? "";

  const queryInput = el<HTMLInputElement>("query");
  const limitInput = el<HTMLInputElement>("limit");
  const classesInput = el<HTMLInputElement>("classes");
  const includeDeadInput = el<HTMLInputElement>("include-dead");
  const minScoreInput = el<HTMLInputElement>("min-score");
  const form = el<HTMLFormElement>("search-form");

  queryInput.value = state.query;
  limitInput.value = String(state.limit);
  classesInput.value = state.classes;
  includeDeadInput.checked = state.includeDead;
  minScoreInput.value = state.minScore ? String(state.minScore) : "0";

  const pane = new SearchPane({
    doc: document,
    resultsSlot: el("results"),
    statusSlot: el("status"),
    base,
  });

  const bandBoxes = el("band-filters");
  for (const band of ALL_BANDS) {
    const label = document.createElement("label");
    const box = document.createElement("input");
    box.type = "checkbox";
    box.checked = true;
    box.dataset.band = band;
    box.addEventListener("change", () => pane.setBandHidden(band as Band, !box.checked));
    label.appendChild(box);
    label.appendChild(document.createTextNode(band.replace("_", " ")));
    bandBoxes.appendChild(label);
  }

  function readState(): SearchFormState {
    const limit = Number.parseInt(limitInput.value, 10);
    const minScore = Number.parseFloat(minScoreInput.value);
    return {
      query: queryInput.value,
      limit: Number.isFinite(limit) && limit >= 1 ? limit : DEFAULT_STATE.limit,
      classes: classesInput.value.trim(),
      includeDead: includeDeadInput.checked,
      minScore: Number.isFinite(minScore) && minScore > 0 && minScore <= 1 ? minScore : 0,
    };
  }

  function syncUrl(current: SearchFormState): void {
    const next = stateToParams(current);
    if (base) next.set("base", base);
    const qs = next.toString();
    window.history.replaceState(null, "", qs ? `?${qs}` : window.location.pathname);
  }

  function runSearch(): void {
    const current = readState();
    syncUrl(current);
    void pane.run(current.query, optionsOf(current));
  }

  const debouncedSearch = debounce(runSearch, DEBOUNCE_MS);
  queryInput.addEventListener("input", debouncedSearch);
  for (const control of [limitInput, classesInput, includeDeadInput, minScoreInput]) {
    control.addEventListener("change", runSearch);
  }
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    runSearch();
  });

  if (state.query) runSearch();
}

mountSearchPage();
