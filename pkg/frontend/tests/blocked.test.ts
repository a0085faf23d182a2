import { describe, expect, it } from "vitest";

import { confirmationMatches, hostnameOf, parseBlockedParams } from "../src/blocked.js";
import { buildBlockPageUrl } from "../src/guard.js";

describe("block page parameters", () => {
  it("round-trips the offending URL through the redirect", () => {
    const redirect = buildBlockPageUrl(
      "chrome-extension://abc/blocked.html",
      "http://evil.example/login?next=1&x=2",
      0.93,
    );
    const search = new URL(redirect).search;
    const params = parseBlockedParams(search);
    expect(params.blockedUrl).toBe("http://evil.example/login?next=1&x=2");
    expect(params.probability).toBe("0.9300");
  });

  it("handles missing parameters", () => {
    expect(parseBlockedParams("")).toEqual({ blockedUrl: "", probability: "" });
  });
});

describe("typed proceed confirmation", () => {
  it("requires the exact hostname", () => {
    const blocked = "http://evil.example/login";
    expect(confirmationMatches("evil.example", blocked)).toBe(true);
    expect(confirmationMatches("  EVIL.EXAMPLE  ", blocked)).toBe(true);
    expect(confirmationMatches("evil", blocked)).toBe(false);
    expect(confirmationMatches("", blocked)).toBe(false);
    expect(confirmationMatches("other.example", blocked)).toBe(false);
  });

  it("never matches when the blocked URL is unparsable", () => {
    expect(hostnameOf("::::")).toBe("");
    expect(confirmationMatches("", "::::")).toBe(false);
  });
});
