// Latest-wins guard: at most one in-flight search counts per pane.
// Responses that come back after a newer request started are discarded.
export class LatestWins {
  private seq = 0;

  next(): number {
    return ++this.seq;
  }

  isCurrent(token: number): boolean {
    return token === this.seq;
  }
}
