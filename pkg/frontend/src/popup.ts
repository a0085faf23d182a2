// Toolbar popup: report the current site, toggle protection.

import { loadSettings, saveSettings } from "./settings.js";

function byId<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

async function init(): Promise<void> {
  const [tab] = await chrome.tabs.query({ active: true, currentWindow: true });
  byId<HTMLElement>("current-url").textContent = tab?.url ?? "(no active tab)";

  const settings = await loadSettings();
  const toggle = byId<HTMLInputElement>("enabled-toggle");
  toggle.checked = settings.enabled;
  toggle.addEventListener("change", async () => {
    await saveSettings({ ...settings, enabled: toggle.checked });
  });

  byId<HTMLButtonElement>("report").addEventListener("click", async () => {
    const status = byId<HTMLElement>("status");
    status.textContent = "Reporting…";
    const response = await chrome.runtime.sendMessage({
      type: "REPORT_CURRENT_SITE",
    });
    status.textContent = response?.ok
      ? "Reported. This site is now blocked."
      : `Report failed: ${response?.detail ?? "unknown error"}`;
  });

  byId<HTMLAnchorElement>("open-options").addEventListener("click", (e) => {
    e.preventDefault();
    void chrome.runtime.openOptionsPage();
  });
}

if (typeof document !== "undefined" && document.getElementById("report")) {
  void init();
}
