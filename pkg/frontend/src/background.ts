// MV3 service worker: wires browser events into the GuardRuntime.

import { GuardRuntime } from "./runtime.js";
import { BrowserFacade } from "./runtime.js";
import { DEFAULT_SETTINGS, loadSettings } from "./settings.js";

const facade: BrowserFacade = {
  async updateTab(tabId, url) {
    await chrome.tabs.update(tabId, { url });
  },
  async activeTabUrl() {
    const [tab] = await chrome.tabs.query({ active: true, currentWindow: true });
    return tab?.url ?? undefined;
  },
  async setBadge(tabId, text, title) {
    await chrome.action.setBadgeText(tabId !== undefined ? { tabId, text } : { text });
    await chrome.action.setTitle(tabId !== undefined ? { tabId, title } : { title });
  },
  async clearBadge(tabId) {
    await chrome.action.setBadgeText(tabId !== undefined ? { tabId, text: "" } : { text: "" });
  },
  blockPageBase() {
    return chrome.runtime.getURL("blocked.html");
  },
};

const runtime = new GuardRuntime(DEFAULT_SETTINGS, facade);
const ready = loadSettings().then((s) => runtime.applySettings(s));

chrome.storage.onChanged.addListener((_changes, area) => {
  if (area === "sync") {
    loadSettings().then((s) => runtime.applySettings(s));
  }
});

chrome.webNavigation.onBeforeNavigate.addListener((details) => {
  void ready.then(() =>
    runtime.onNavigation({
      tabId: details.tabId,
      frameId: details.frameId,
      url: details.url,
    }),
  );
});

chrome.runtime.onMessage.addListener((message, _sender, sendResponse) => {
  void ready
    .then(() => runtime.onMessage(message))
    .then(sendResponse)
    .catch((err) => sendResponse({ ok: false, detail: String(err) }));
  return true; // keep the channel open for the async response
});
