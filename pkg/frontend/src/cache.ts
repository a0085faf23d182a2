// In-memory verdict cache with TTL eviction. Keys are normalized URLs
// (fragment dropped, lowercase scheme/host) so trivial variations of one
// address share an entry. Last write wins; stale entries are never served.

export type VerdictCacheEntry = {
  normalizedUrl: string;
  verdict: string;
  probability: number;
  fetchedAt: number; // epoch ms
};

export function normalizeForCache(url: string): string {
  try {
    const parsed = new URL(url);
    parsed.hash = "";
    return parsed.toString();
  } catch {
    return url;
  }
}

export class VerdictCache {
  private entries = new Map<string, VerdictCacheEntry>();

  constructor(
    private readonly ttlSeconds: number,
    private readonly now: () => number = Date.now,
  ) {}

  get(url: string): VerdictCacheEntry | undefined {
    const key = normalizeForCache(url);
    const entry = this.entries.get(key);
    if (!entry) return undefined;
    if (this.now() - entry.fetchedAt > this.ttlSeconds * 1000) {
      this.entries.delete(key);
      return undefined;
    }
    return entry;
  }

  put(url: string, verdict: string, probability: number): void {
    const key = normalizeForCache(url);
    this.entries.set(key, {
      normalizedUrl: key,
      verdict,
      probability,
      fetchedAt: this.now(),
    });
  }

  clear(): void {
    this.entries.clear();
  }
}
