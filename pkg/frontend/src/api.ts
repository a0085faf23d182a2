// HTTP client for the urlsentry verdict service (see the service's
// docs/api.md). The extension only ever trusts the exact verdict strings
// "Phishing" and "Legitimate"; anything else is treated as non-blocking.

export type Verdict = {
  verdict: string;
  probability: number;
  source: string;
};

export const VERDICT_TIMEOUT_MS = 1500;

export class ServiceUnreachable extends Error {}

export class VerdictClient {
  constructor(
    private readonly baseUrl: string,
    private readonly timeoutMs: number = VERDICT_TIMEOUT_MS,
  ) {}

  private async post(path: string, body: unknown): Promise<Response> {
    const controller = new AbortController();
    const timer = setTimeout(() => controller.abort(), this.timeoutMs);
    try {
      return await fetch(`${this.baseUrl}${path}`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
        signal: controller.signal,
      });
    } catch (err) {
      throw new ServiceUnreachable(String(err));
    } finally {
      clearTimeout(timer);
    }
  }

  async predict(url: string): Promise<Verdict> {
    const response = await this.post("/predict", { url });
    if (!response.ok) {
      throw new ServiceUnreachable(`predict returned ${response.status}`);
    }
    const body = (await response.json()) as Verdict;
    if (typeof body.verdict !== "string") {
      throw new ServiceUnreachable("malformed predict response");
    }
    return body;
  }

  async report(url: string, reason?: string): Promise<void> {
    const response = await this.post("/report", reason ? { url, reason } : { url });
    if (response.status !== 201) {
      throw new ServiceUnreachable(`report returned ${response.status}`);
    }
  }
}
