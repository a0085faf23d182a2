// Event handlers behind the background service worker, factored so tests
// can drive them with a stubbed browser facade instead of real chrome.*.

import { ServiceUnreachable, VerdictClient } from "./api.js";
import { VerdictCache, normalizeForCache } from "./cache.js";
import { buildBlockPageUrl, decideNavigation } from "./guard.js";
import { ExtensionSettings } from "./settings.js";

export type NavigationEvent = { tabId: number; frameId: number; url: string };

export type ReportMessage =
  | { type: "REPORT_CURRENT_SITE"; reason?: string }
  | { type: "ALLOW_ONCE"; url: string };

export type BrowserFacade = {
  updateTab(tabId: number, url: string): Promise<void>;
  activeTabUrl(): Promise<string | undefined>;
  setBadge(tabId: number | undefined, text: string, title: string): Promise<void>;
  clearBadge(tabId: number | undefined): Promise<void>;
  blockPageBase(): string;
};

export class GuardRuntime {
  readonly cache: VerdictCache;
  private client: VerdictClient;
  private bypass = new Set<string>();

  constructor(
    public settings: ExtensionSettings,
    private readonly browser: BrowserFacade,
    clientFactory: (baseUrl: string) => VerdictClient = (base) => new VerdictClient(base),
    now: () => number = Date.now,
  ) {
    this.cache = new VerdictCache(settings.cacheTtlSeconds, now);
    this.client = clientFactory(settings.apiBaseUrl);
    this.clientFactory = clientFactory;
  }

  private clientFactory: (baseUrl: string) => VerdictClient;

  applySettings(settings: ExtensionSettings): void {
    this.settings = settings;
    this.client = this.clientFactory(settings.apiBaseUrl);
    this.cache.clear();
  }

  /** One-shot pass for a URL the user explicitly confirmed on the block page. */
  allowOnce(url: string): void {
    this.bypass.add(normalizeForCache(url));
  }

  async onNavigation(event: NavigationEvent): Promise<void> {
    if (event.frameId !== 0) return; // main-frame navigations only
    const key = normalizeForCache(event.url);
    if (this.bypass.delete(key)) return;

    const decision = await decideNavigation(event.url, {
      enabled: this.settings.enabled,
      cache: this.cache,
      fetchVerdict: (url) => this.client.predict(url),
      blockPageUrl: (url, p) => buildBlockPageUrl(this.browser.blockPageBase(), url, p),
    });

    if (decision.action === "block") {
      await this.browser.updateTab(event.tabId, decision.redirectUrl);
      return;
    }
    if (decision.warning) {
      await this.browser.setBadge(event.tabId, "!", "Verdict service unreachable; navigation allowed unchecked");
    } else {
      await this.browser.clearBadge(event.tabId);
    }
  }

  async onMessage(message: ReportMessage): Promise<{ ok: boolean; detail?: string }> {
    if (message.type === "ALLOW_ONCE") {
      this.allowOnce(message.url);
      return { ok: true };
    }
    if (message.type === "REPORT_CURRENT_SITE") {
      const url = await this.browser.activeTabUrl();
      if (!url) {
        return { ok: false, detail: "no active tab" };
      }
      try {
        await this.client.report(url, message.reason);
      } catch (err) {
        const detail = err instanceof ServiceUnreachable ? err.message : String(err);
        return { ok: false, detail };
      }
      return { ok: true };
    }
    return { ok: false, detail: "unknown message" };
  }
}
