// One search pane: debounce-friendly runner with a latest-wins guard,
// band filtering, an error banner, and a results table. The search page
// uses one pane; the compare page mounts two side by side.

import { ServiceError, searchMarks, type SearchQueryOptions } from "./api.js";
import { LatestWins } from "./seq.js";
import { applyBandFilter, headlineCount, renderBanner, renderResultsTable, renderSummary } from "./table.js";
import type { Band, SearchResponse } from "./types.js";

export interface PaneHost {
  doc: Document;
  resultsSlot: HTMLElement;
  statusSlot: HTMLElement;
  headlineSlot?: HTMLElement;
  base: string;
  fetchImpl?: typeof fetch;
  onSettled?: (pane: SearchPane) => void;
}

export class SearchPane {
  readonly hiddenBands = new Set<Band>();
  lastResponse: SearchResponse | null = null;
  private readonly guard = new LatestWins();
  private table: HTMLTableElement | null = null;

  constructor(private readonly host: PaneHost) {}

  /** Run one search; empty queries render an inline note without a request. */
  async run(query: string, options: SearchQueryOptions): Promise<void> {
    const doc = this.host.doc;
    const trimmed = query.trim();
    if (!trimmed) {
      this.guard.next(); // anything in flight is now stale
      this.lastResponse = null;
      this.table = null;
      this.host.resultsSlot.replaceChildren();
      this.host.statusSlot.replaceChildren(
        renderBanner(doc, "EMPTY_QUERY", "type a mark to search"),
      );
      this.updateHeadline();
      this.host.onSettled?.(this);
      return;
    }

    const token = this.guard.next();
    this.host.statusSlot.replaceChildren(doc.createTextNode("searching…"));
    try {
      const response = await searchMarks(this.host.base, trimmed, options, this.host.fetchImpl ?? fetch);
      if (!this.guard.isCurrent(token)) return; // superseded; discard
      this.lastResponse = response;
      this.table = renderResultsTable(doc, response);
      applyBandFilter(this.table, this.hiddenBands);
      this.host.resultsSlot.replaceChildren(this.table);
      this.host.statusSlot.replaceChildren(renderSummary(doc, response));
    } catch (err) {
      if (!this.guard.isCurrent(token)) return;
      // Non-blocking: previous results stay on screen under the banner.
      const code = err instanceof ServiceError ? err.code : "ERROR";
      const message = err instanceof Error ? err.message : String(err);
      this.host.statusSlot.replaceChildren(renderBanner(doc, code, message));
    }
    this.updateHeadline();
    this.host.onSettled?.(this);
  }

  setBandHidden(band: Band, hidden: boolean): void {
    if (hidden) {
      this.hiddenBands.add(band);
    } else {
      this.hiddenBands.delete(band);
    }
    if (this.table) applyBandFilter(this.table, this.hiddenBands);
  }

  private updateHeadline(): void {
    const slot = this.host.headlineSlot;
    if (!slot) return;
    if (!this.lastResponse) {
      slot.textContent = "";
      return;
    }
    const risky = headlineCount(this.lastResponse.results);
    slot.textContent = `${risky} very-high/high risk`;
    slot.dataset.count = String(risky);
  }
}
