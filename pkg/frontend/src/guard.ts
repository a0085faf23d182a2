// Navigation decision core: pure logic, dependency-injected, unit-tested.
// Fail-open by policy: a broken or slow verdict service must never brick
// browsing, it only costs the warning badge.

import type { Verdict } from "./api.js";
import { VerdictCache } from "./cache.js";

export const PHISHING = "Phishing";
export const LEGITIMATE = "Legitimate";

export type NavigationDecision =
  | { action: "allow"; warning: boolean }
  | { action: "block"; redirectUrl: string };

export type GuardContext = {
  enabled: boolean;
  cache: VerdictCache;
  fetchVerdict: (url: string) => Promise<Verdict>;
  blockPageUrl: (blockedUrl: string, probability: number) => string;
};

function isGuardableUrl(url: string): boolean {
  try {
    const parsed = new URL(url);
    return parsed.protocol === "http:" || parsed.protocol === "https:";
  } catch {
    return false;
  }
}

export async function decideNavigation(
  url: string,
  ctx: GuardContext,
): Promise<NavigationDecision> {
  if (!ctx.enabled || !isGuardableUrl(url)) {
    return { action: "allow", warning: false };
  }

  const cached = ctx.cache.get(url);
  let verdict: string;
  let probability: number;
  if (cached) {
    verdict = cached.verdict;
    probability = cached.probability;
  } else {
    let fresh: Verdict;
    try {
      fresh = await ctx.fetchVerdict(url);
    } catch {
      return { action: "allow", warning: true };
    }
    verdict = fresh.verdict;
    probability = fresh.probability;
    ctx.cache.put(url, verdict, probability);
  }

  // Blocking keys on the exact contract string; any other value, casing or
  // shape falls through to allow.
  if (verdict === PHISHING) {
    return { action: "block", redirectUrl: ctx.blockPageUrl(url, probability) };
  }
  return { action: "allow", warning: false };
}

export function buildBlockPageUrl(
  blockPageBase: string,
  blockedUrl: string,
  probability: number,
): string {
  const params = new URLSearchParams({
    url: blockedUrl,
    p: probability.toFixed(4),
  });
  return `${blockPageBase}?${params.toString()}`;
}
