// Block page: shown instead of a navigation the service called phishing.
// Never auto-forwards. Proceeding requires typing the blocked hostname.

export type BlockedPageParams = { blockedUrl: string; probability: string };

export function parseBlockedParams(search: string): BlockedPageParams {
  const params = new URLSearchParams(search);
  return {
    blockedUrl: params.get("url") ?? "",
    probability: params.get("p") ?? "",
  };
}

export function hostnameOf(url: string): string {
  try {
    return new URL(url).hostname;
  } catch {
    return "";
  }
}

/** The typed confirmation must match the blocked hostname exactly. */
export function confirmationMatches(typed: string, blockedUrl: string): boolean {
  const host = hostnameOf(blockedUrl);
  return host !== "" && typed.trim().toLowerCase() === host;
}

function byId<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

export function initBlockedPage(): void {
  const { blockedUrl, probability } = parseBlockedParams(window.location.search);
  byId<HTMLElement>("blocked-url").textContent = blockedUrl || "(unknown URL)";
  if (probability) {
    byId<HTMLElement>("probability").textContent =
      `model phishing probability ${probability}`;
  }

  byId<HTMLButtonElement>("go-back").addEventListener("click", () => {
    if (history.length > 1) {
      history.back();
    } else {
      window.location.href = "about:blank";
    }
  });

  byId<HTMLButtonElement>("report-wrong").addEventListener("click", async () => {
    // No server-side false-positive endpoint exists; keep a local dispute
    // log so the user has a record to act on (e.g. retraining the model).
    const stored = await chrome.storage.local.get("disputedVerdicts");
    const disputes: string[] = Array.isArray(stored.disputedVerdicts)
      ? stored.disputedVerdicts
      : [];
    disputes.push(blockedUrl);
    await chrome.storage.local.set({ disputedVerdicts: disputes });
    byId<HTMLElement>("status").textContent =
      "Noted locally. You can proceed below by typing the site's hostname.";
  });

  const input = byId<HTMLInputElement>("confirm-input");
  const proceed = byId<HTMLButtonElement>("proceed");
  proceed.disabled = true;
  input.addEventListener("input", () => {
    proceed.disabled = !confirmationMatches(input.value, blockedUrl);
  });
  proceed.addEventListener("click", async () => {
    if (!confirmationMatches(input.value, blockedUrl)) return;
    await chrome.runtime.sendMessage({ type: "ALLOW_ONCE", url: blockedUrl });
    window.location.href = blockedUrl;
  });
}

if (typeof document !== "undefined" && document.getElementById("blocked-url")) {
  initBlockedPage();
}
