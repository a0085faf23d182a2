// Options page: verdict-service address, cache TTL, enable switch.

import { isValidBaseUrl, loadSettings, saveSettings } from "./settings.js";

function byId<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

async function init(): Promise<void> {
  const settings = await loadSettings();
  const urlInput = byId<HTMLInputElement>("api-base-url");
  const ttlInput = byId<HTMLInputElement>("cache-ttl");
  const enabledInput = byId<HTMLInputElement>("enabled");
  urlInput.value = settings.apiBaseUrl;
  ttlInput.value = String(settings.cacheTtlSeconds);
  enabledInput.checked = settings.enabled;

  byId<HTMLButtonElement>("save").addEventListener("click", async () => {
    const status = byId<HTMLElement>("status");
    if (!isValidBaseUrl(urlInput.value)) {
      status.textContent = "Service address must be an absolute http(s) URL.";
      return;
    }
    await saveSettings({
      apiBaseUrl: urlInput.value,
      cacheTtlSeconds: Number(ttlInput.value),
      enabled: enabledInput.checked,
    });
    status.textContent = "Saved.";
  });
}

if (typeof document !== "undefined" && document.getElementById("save")) {
  void init();
}
