// Side-by-side what-if: two candidate names, shared options, one
// headline per pane counting very-high/high risk hits so the safer name
// is obvious at a glance.

import type { SearchQueryOptions } from "./api.js";
import { debounce } from "./debounce.js";
import { SearchPane } from "./pane.js";

const DEBOUNCE_MS = 300;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

export function mountComparePage(): void {
  const params = new URLSearchParams(window.location.search);
  const base = params.get("base") ?? "";

  const inputA = el<HTMLInputElement>("query-a");
  const inputB = el<HTMLInputElement>("query-b");
  const limitInput = el<HTMLInputElement>("limit");
  const includeDeadInput = el<HTMLInputElement>("include-dead");
  const form = el<HTMLFormElement>("compare-form");

  inputA.value = params.get("qa") ?? "";
  inputB.value = params.get("qb") ?? "";
  const limitParam = Number.parseInt(params.get("limit") ?? "", 10);
  if (Number.isFinite(limitParam) && limitParam >= 1) limitInput.value = String(limitParam);
  includeDeadInput.checked = params.get("include_dead") === "true";

  const paneA = new SearchPane({
    doc: document,
    resultsSlot: el("results-a"),
    statusSlot: el("status-a"),
    headlineSlot: el("headline-a"),
    base,
  });
  const paneB = new SearchPane({
    doc: document,
    resultsSlot: el("results-b"),
    statusSlot: el("status-b"),
    headlineSlot: el("headline-b"),
    base,
  });

  function sharedOptions(): SearchQueryOptions {
    const limit = Number.parseInt(limitInput.value, 10);
    return {
      limit: Number.isFinite(limit) && limit >= 1 ? limit : 25,
      includeDead: includeDeadInput.checked,
    };
  }

  function syncUrl(): void {
    const next = new URLSearchParams();
    if (inputA.value) next.set("qa", inputA.value);
    if (inputB.value) next.set("qb", inputB.value);
    const opts = sharedOptions();
    if (opts.limit !== 25) next.set("limit", String(opts.limit));
    if (opts.includeDead) next.set("include_dead", "true");
    if (base) next.set("base", base);
    const qs = next.toString();
    window.history.replaceState(null, "", qs ? `?${qs}` : window.location.pathname);
  }

  function runBoth(): void {
    syncUrl();
    const opts = sharedOptions();
    void paneA.run(inputA.value, opts);
    void paneB.run(inputB.value, opts);
  }

  const debounced = debounce(runBoth, DEBOUNCE_MS);
  inputA.addEventListener("input", debounced);
  inputB.addEventListener("input", debounced);
  limitInput.addEventListener("change", runBoth);
  includeDeadInput.addEventListener("change", runBoth);
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    runBoth();
  });

  if (inputA.value || inputB.value) runBoth();
}

mountComparePage();
