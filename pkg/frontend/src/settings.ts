// Extension settings, persisted in chrome.storage.sync.

export type ExtensionSettings = {
  apiBaseUrl: string;
  cacheTtlSeconds: number;
  enabled: boolean;
};

export const DEFAULT_SETTINGS: ExtensionSettings = {
  apiBaseUrl: "http://127.0.0.1:8080",
  cacheTtlSeconds: 300,
  enabled: true,
};

export function isValidBaseUrl(value: string): boolean {
  try {
    const parsed = new URL(value);
    return parsed.protocol === "http:" || parsed.protocol === "https:";
  } catch {
    return false;
  }
}

export function normalizeSettings(raw: Partial<ExtensionSettings> | undefined): ExtensionSettings {
  const out = { ...DEFAULT_SETTINGS, ...(raw ?? {}) };
  if (!isValidBaseUrl(out.apiBaseUrl)) {
    out.apiBaseUrl = DEFAULT_SETTINGS.apiBaseUrl;
  }
  out.apiBaseUrl = out.apiBaseUrl.replace(/\/+$/, "");
  if (!Number.isFinite(out.cacheTtlSeconds) || out.cacheTtlSeconds < 0) {
    out.cacheTtlSeconds = DEFAULT_SETTINGS.cacheTtlSeconds;
  }
  return out;
}

export async function loadSettings(): Promise<ExtensionSettings> {
  const stored = await chrome.storage.sync.get(Object.keys(DEFAULT_SETTINGS));
  return normalizeSettings(stored as Partial<ExtensionSettings>);
}

export async function saveSettings(settings: ExtensionSettings): Promise<void> {
  await chrome.storage.sync.set(normalizeSettings(settings));
}
