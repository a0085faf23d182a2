#!/usr/bin/env python3
"""Regenerate the bundled desk corpus (data/desk_corpus.csv).

The corpus is a frozen, deterministic 2,000-URL fixture: 1,040 legitimate
URLs built over well-known registered domains, and 960 phishing URLs
following the shapes that dominate public phishing feeds (free-host
subdomains, brand-impersonation domains on cheap TLDs, bare IP hosts,
credential paths planted on compromised sites, shorteners). Seed URL
material comes from public top-site and phishing-feed snapshots; the
generator only recombines those shapes so the fixture can be rebuilt
offline, bit for bit.

Run from the repo root:  python3 tools/build_desk_corpus.py
"""

from __future__ import annotations

import csv
import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from urlsentry.features import extract_features  # noqa: E402
from urlsentry.rng import SplitMix64  # noqa: E402

GENERATOR_SEED = 20240515
N_LEGITIMATE = 1040
N_PHISHING = 960

OUT_CSV = os.path.join(os.path.dirname(__file__), "..", "data", "desk_corpus.csv")
OUT_MANIFEST = os.path.join(
    os.path.dirname(__file__), "..", "data", "desk_corpus_manifest.json"
)

LEGIT_DOMAINS = [
    "google.com", "youtube.com", "facebook.com", "wikipedia.org", "twitter.com",
    "instagram.com", "reddit.com", "amazon.com", "yahoo.com", "whatsapp.com",
    "bing.com", "linkedin.com", "pinterest.com", "duckduckgo.com", "microsoft.com",
    "live.com", "netflix.com", "office.com", "twitch.tv", "ebay.com",
    "cnn.com", "nytimes.com", "bbc.co.uk", "theguardian.com", "forbes.com",
    "bloomberg.com", "reuters.com", "wsj.com", "washingtonpost.com", "npr.org",
    "apple.com", "adobe.com", "salesforce.com", "oracle.com", "ibm.com",
    "intel.com", "nvidia.com", "amd.com", "dell.com", "hp.com",
    "github.com", "gitlab.com", "stackoverflow.com", "stackexchange.com",
    "python.org", "nodejs.org", "rust-lang.org", "golang.org", "ruby-lang.org",
    "php.net", "postgresql.org", "mysql.com", "mongodb.com", "redis.io",
    "docker.com", "kubernetes.io", "apache.org", "nginx.org", "debian.org",
    "ubuntu.com", "fedoraproject.org", "archlinux.org", "kernel.org", "gnu.org",
    "mozilla.org", "w3.org", "ietf.org", "icann.org", "iana.org",
    "cloudflare.com", "akamai.com", "fastly.com", "digitalocean.com", "linode.com",
    "heroku.com", "vercel.com", "netlify.com", "aws.amazon.com", "azure.microsoft.com",
    "dropbox.com", "box.com", "onedrive.live.com", "drive.google.com", "icloud.com",
    "zoom.us", "slack.com", "discord.com", "telegram.org", "signal.org",
    "spotify.com", "soundcloud.com", "pandora.com", "bandcamp.com", "vimeo.com",
    "dailymotion.com", "hulu.com", "disneyplus.com", "hbomax.com", "paramountplus.com",
    "paypal.com", "stripe.com", "squareup.com", "venmo.com", "wise.com",
    "chase.com", "bankofamerica.com", "wellsfargo.com", "citibank.com", "hsbc.com",
    "barclays.co.uk", "lloydsbank.com", "natwest.com", "santander.co.uk", "monzo.com",
    "fidelity.com", "vanguard.com", "schwab.com", "robinhood.com", "coinbase.com",
    "walmart.com", "target.com", "costco.com", "bestbuy.com", "homedepot.com",
    "lowes.com", "ikea.com", "wayfair.com", "etsy.com", "aliexpress.com",
    "alibaba.com", "rakuten.co.jp", "mercadolibre.com.ar", "flipkart.com", "shopify.com",
    "booking.com", "airbnb.com", "expedia.com", "tripadvisor.com", "kayak.com",
    "uber.com", "lyft.com", "doordash.com", "grubhub.com", "instacart.com",
    "fedex.com", "ups.com", "usps.com", "dhl.com", "royalmail.com",
    "weather.com", "accuweather.com", "wunderground.com", "noaa.gov", "nasa.gov",
    "nih.gov", "cdc.gov", "who.int", "un.org", "europa.eu",
    "irs.gov", "ssa.gov", "usa.gov", "gov.uk", "canada.ca",
    "harvard.edu", "mit.edu", "stanford.edu", "berkeley.edu", "ox.ac.uk",
    "cam.ac.uk", "ethz.ch", "utoronto.ca", "anu.edu.au", "titech.ac.jp",
    "coursera.org", "edx.org", "khanacademy.org", "udemy.com", "duolingo.com",
    "medium.com", "substack.com", "wordpress.org", "blogger.com", "tumblr.com",
    "quora.com", "goodreads.com", "imdb.com", "rottentomatoes.com", "metacritic.com",
    "espn.com", "nba.com", "nfl.com", "mlb.com", "fifa.com",
    "olympics.com", "skysports.com", "bbc.com", "cbc.ca", "abc.net.au",
    "lemonde.fr", "spiegel.de", "elpais.com", "corriere.it", "asahi.com",
    "yandex.ru", "mail.ru", "baidu.com", "qq.com", "naver.com",
    "weibo.com", "bilibili.com", "nicovideo.jp", "vk.com",
    "mayoclinic.org", "webmd.com", "healthline.com", "clevelandclinic.org",
    "arxiv.org", "nature.com", "sciencemag.org", "ieee.org", "acm.org",
    "springer.com", "elsevier.com", "jstor.org", "plos.org", "pubmed.ncbi.nlm.nih.gov",
    "archive.org", "gutenberg.org", "openlibrary.org", "loc.gov", "britannica.com",
    "merriam-webster.com", "dictionary.com", "thesaurus.com", "wiktionary.org",
    "atlassian.com", "jira.com", "trello.com", "notion.so", "airtable.com",
    "figma.com", "canva.com", "behance.net", "dribbble.com", "unsplash.com",
    "pexels.com", "shutterstock.com", "gettyimages.com", "flickr.com", "500px.com",
    "steamcommunity.com", "steampowered.com", "epicgames.com", "roblox.com",
    "minecraft.net", "nintendo.com", "playstation.com", "xbox.com", "ea.com",
    "cnet.com", "techcrunch.com", "theverge.com", "wired.com", "arstechnica.com",
    "engadget.com", "zdnet.com", "tomshardware.com", "anandtech.com", "hackernews.com",
    "ycombinator.com", "producthunt.com", "glassdoor.com", "indeed.com", "monster.com",
    "zillow.com", "redfin.com", "realtor.com", "craigslist.org", "autotrader.com",
]

LEGIT_PATH_WORDS = [
    "about", "contact", "products", "services", "blog", "news", "docs",
    "help", "support", "careers", "pricing", "features", "team", "press",
    "events", "community", "learn", "tutorials", "guide", "reference",
    "articles", "research", "library", "gallery", "portfolio", "projects",
    "category", "archive", "search", "tags", "topics", "reviews", "deals",
    "store", "catalog", "collections", "resources", "downloads", "faq",
]

LEGIT_ARTICLE_WORDS = [
    "technology", "science", "health", "business", "markets", "climate",
    "education", "travel", "culture", "sports", "economy", "energy",
    "security", "software", "hardware", "history", "design", "opinion",
]

PHISH_BRANDS = [
    "paypal", "apple", "amazon", "netflix", "microsoft", "office365",
    "outlook", "google", "facebook", "instagram", "whatsapp", "chase",
    "wellsfargo", "hsbc", "lloyds", "barclays", "natwest", "halifax",
    "santander", "americanexpress", "mastercard", "visa", "coinbase",
    "binance", "blockchain", "metamask", "dhl", "fedex", "usps", "ups",
    "royalmail", "hermes", "dpd", "irs", "hmrc", "gov", "ebay", "alibaba",
    "steam", "roblox", "spotify", "dropbox", "docusign", "adobe", "zoom",
]

PHISH_WORDS = [
    "login", "signin", "verify", "verification", "secure", "security",
    "account", "update", "confirm", "billing", "payment", "wallet",
    "support", "service", "alert", "notice", "recovery", "unlock",
    "suspended", "limited", "webscr", "authenticate", "validation",
    "invoice", "refund", "bonus", "free", "gift", "prize", "claim",
]

PHISH_PATH_FILES = [
    "login.php", "signin.html", "verify.php", "index.php", "secure.html",
    "confirm.php", "update.html", "webscr.php", "auth.php", "session.php",
    "account.html", "billing.php", "wallet.html", "recovery.php", "id.html",
]

COMPROMISED_PATH_STEMS = [
    "wp-content/themes", "wp-content/plugins", "wp-admin/includes", "wp-includes/js",
    "images/banners", "assets/fonts", "media/uploads", "files/docs", "cgi-bin",
    "modules/mod_menu", "templates/beez3", "old/site", "backup/www", "tmp/session",
]

FREE_HOSTS = [
    "000webhostapp.com", "netlify.app", "weebly.com", "repl.co", "glitch.me",
    "firebaseapp.com", "web.app", "github.io", "herokuapp.com", "vercel.app",
    "blogspot.com", "wordpress.com", "duckdns.org", "ddns.net", "ngrok.io",
    "pages.dev", "workers.dev", "wixsite.com", "myshopify.com",
]

# Site builders that are not public-suffix entries: the whole platform
# shares one registered domain, victims sit at subdomain depth 1, and the
# fake page almost always lives at the root of the generated site.
SITE_BUILDER_HOSTS = [
    "weebly.com", "webs.com", "jimdo.com", "yola.com", "ucoz.com",
    "hpage.com", "site123.me", "square.site", "strikingly.com",
    "mystrikingly.com", "jimdofree.com", "yolasite.com", "webnode.page",
    "godaddysites.com",
]

CHEAP_TLDS = [
    "xyz", "top", "icu", "online", "live", "site", "club", "buzz", "cfd",
    "info", "sbs", "lol", "monster", "quest", "cc", "ws", "tk", "ml", "ga",
    "cf", "gq", "su", "pw",
]

MID_DOMAIN_WORDS = [
    "plumbing", "bakery", "garden", "travelblog", "fitness", "autoparts",
    "lawfirm", "dental", "roofing", "catering", "florist", "academy",
    "consulting", "realestate", "photography", "restaurant", "gallery",
    "church", "charity", "hotel",
]

SHORTENERS = ["bit.ly", "tinyurl.com", "goo.gl", "t.co", "ow.ly", "is.gd", "buff.ly", "rb.gy"]

_HEX = "0123456789abcdef"
_ALNUM = "abcdefghijklmnopqrstuvwxyz0123456789"
_CONSONANT_SOUP = "bcdfghjklmnpqrstvwxz"


WORDISH_FRAGMENTS = [
    "my", "web", "site", "online", "page", "user", "app", "net", "blog",
    "shop", "mail", "box", "edu", "uni", "campus", "info", "portal", "docu",
    "file", "cloud", "data", "team", "pro", "hub", "zone", "link", "go",
]
_VOWELS = "aeiou"


def pick(rng, seq):
    return seq[rng.randrange(len(seq))]


def token(rng, chars, lo, hi):
    n = lo + rng.randrange(hi - lo + 1)
    return "".join(chars[rng.randrange(len(chars))] for _ in range(n))


def wordish(rng) -> str:
    """Pure-alpha subdomain mashups ('mywkuedu' style): short fragments plus
    an occasional consonant-vowel syllable, no digits."""
    parts = [pick(rng, WORDISH_FRAGMENTS) for _ in range(2 if rng.randrange(10) < 7 else 3)]
    if rng.randrange(10) < 4:
        syllable = _CONSONANT_SOUP[rng.randrange(len(_CONSONANT_SOUP))] + \
            _VOWELS[rng.randrange(5)] + _CONSONANT_SOUP[rng.randrange(len(_CONSONANT_SOUP))]
        parts.insert(1 + rng.randrange(len(parts) - 1), syllable)
    return "".join(parts)[:16]


LEGIT_AUTH_SUBDOMAINS = ["accounts", "login", "signin", "id", "auth", "secure", "my"]
LEGIT_AUTH_PATHS = ["login", "signin", "account", "auth/authorize", "secure/session"]


def make_legitimate(rng) -> str:
    domain = pick(rng, LEGIT_DOMAINS)
    scheme = "https" if rng.randrange(10) < 9 else "http"
    host = domain if rng.randrange(3) else f"www.{domain}"
    url = f"{scheme}://{host}"
    shape = rng.randrange(20)
    if shape < 5:
        pass  # bare homepage
    elif shape < 10:
        for _ in range(1 + rng.randrange(2)):
            url += "/" + pick(rng, LEGIT_PATH_WORDS)
    elif shape < 14:
        url += f"/{pick(rng, LEGIT_PATH_WORDS)}/{pick(rng, LEGIT_ARTICLE_WORDS)}"
        if rng.randrange(2):
            url += f"-{token(rng, _ALNUM, 4, 8)}.html"
    elif shape == 14:
        url += f"/{pick(rng, LEGIT_PATH_WORDS)}?page={1 + rng.randrange(40)}"
    elif shape == 15:
        url += f"/search?q={pick(rng, LEGIT_ARTICLE_WORDS)}"
    elif shape < 19:
        # real sign-in surfaces: legitimate URLs carry 'login'/'secure' too
        url = f"https://{pick(rng, LEGIT_AUTH_SUBDOMAINS)}.{domain}/{pick(rng, LEGIT_AUTH_PATHS)}"
        if rng.randrange(2):
            url += f"?continue=https%3A%2F%2F{domain}%2F"
    else:
        url += f"/docs/{pick(rng, LEGIT_ARTICLE_WORDS)}/{pick(rng, LEGIT_PATH_WORDS)}/v{1 + rng.randrange(9)}"
    return url


def make_phishing(rng) -> str:
    shape = rng.randrange(100)
    if shape < 32:  # free-host subdomain; very often just a bare landing page
        roll_sub = rng.randrange(10)
        if roll_sub < 5:
            sub = wordish(rng)
        elif roll_sub < 8:
            sub = token(rng, _ALNUM, 8, 22)
        else:
            sub = f"{pick(rng, PHISH_BRANDS)}-{pick(rng, PHISH_WORDS)}-{token(rng, _ALNUM, 3, 6)}"
        on_builder = rng.randrange(10) < 5
        host = f"{sub}.{pick(rng, SITE_BUILDER_HOSTS if on_builder else FREE_HOSTS)}"
        if on_builder:
            scheme = "https" if rng.randrange(4) else "http"
            if rng.randrange(4):
                return f"{scheme}://{host}/"
            return f"{scheme}://{host}{pick(rng, ['/index.html', '/home', ''])}"
        scheme = "https" if rng.randrange(10) < 6 else "http"
        roll = rng.randrange(10)
        if roll < 4:
            return f"{scheme}://{host}/"
        if roll == 4:
            return f"{scheme}://{host}{pick(rng, ['/index.html', '/home', ''])}"
        url = f"{scheme}://{host}/{pick(rng, PHISH_PATH_FILES)}"
        if rng.randrange(3) == 0:
            url += f"?{pick(rng, ['id', 'session', 'token'])}={token(rng, _HEX, 16, 32)}"
        return url
    if shape < 55:  # brand-impersonation domain on a cheap TLD
        brand = pick(rng, PHISH_BRANDS)
        words = [brand] + [pick(rng, PHISH_WORDS) for _ in range(1 + rng.randrange(2))]
        domain = "-".join(dict.fromkeys(words))
        if rng.randrange(4) == 0:
            domain += str(rng.randrange(100))
        host = f"{domain}.{pick(rng, CHEAP_TLDS)}"
        if rng.randrange(4) == 0:
            host = f"{pick(rng, PHISH_WORDS)}.{host}"
        scheme = "https" if rng.randrange(3) else "http"
        url = f"{scheme}://{host}/{pick(rng, PHISH_PATH_FILES)}"
        if rng.randrange(3) == 0:
            url += f"?email={token(rng, _ALNUM, 5, 10)}%40{pick(rng, ['gmail', 'yahoo', 'outlook'])}.com"
        return url
    if shape < 65:  # bare IP host
        ip = ".".join(str(rng.randrange(256)) for _ in range(4))
        port = f":{8000 + rng.randrange(2000)}" if rng.randrange(4) == 0 else ""
        return f"http://{ip}{port}/{pick(rng, PHISH_WORDS)}/{pick(rng, PHISH_PATH_FILES)}"
    if shape < 83:  # compromised site with a planted credential path
        domain = f"{pick(rng, MID_DOMAIN_WORDS)}{pick(rng, ['', 'online', 'site', 'pro', '24'])}"
        tld = pick(rng, ["com", "net", "org", "co.uk", "com.br", "co.in", "ru", "pl"])
        host = f"{domain}.{tld}"
        stem = pick(rng, COMPROMISED_PATH_STEMS)
        brand = pick(rng, PHISH_BRANDS)
        url = f"http://{host}/{stem}/{brand}/{token(rng, _HEX, 8, 20)}/{pick(rng, PHISH_PATH_FILES)}"
        if rng.randrange(3) == 0:
            url += f"?cmd=_{pick(rng, PHISH_WORDS)}&dispatch={token(rng, _HEX, 20, 40)}"
        return url
    if shape < 88:  # shortener hop
        return f"https://{pick(rng, SHORTENERS)}/{token(rng, _ALNUM, 6, 9)}"
    if shape < 92:  # long random subdomain chain on appspot-style hosting
        labels = "-".join(token(rng, _CONSONANT_SOUP, 4, 8) for _ in range(3))
        region = pick(rng, ["uk", "ue", "uc", "ew"])
        return f"https://{labels}-dot-{token(rng, _ALNUM, 8, 14)}.{region}.r.appspot.com"
    if shape < 97:  # lexically quiet: plain-looking domain, shallow path
        domain = f"{pick(rng, MID_DOMAIN_WORDS)}-{pick(rng, ['portal', 'center', 'hub', 'web', 'online', 'group'])}"
        tld = pick(rng, ["com", "net", "org"])
        path = pick(rng, ["", "/home", "/portal", "/index.html", "/start"])
        return f"https://{domain}.{tld}{path}"
    # punycode or @-trick leftovers
    if rng.randrange(2):
        host = f"xn--{token(rng, _ALNUM, 5, 9)}-{token(rng, _ALNUM, 2, 4)}.{pick(rng, CHEAP_TLDS)}"
        return f"http://{host}/{pick(rng, PHISH_PATH_FILES)}"
    decoy = pick(rng, LEGIT_DOMAINS)
    host = f"{token(rng, _ALNUM, 6, 12)}.{pick(rng, CHEAP_TLDS)}"
    return f"http://{decoy}@{host}/{pick(rng, PHISH_PATH_FILES)}"


def build() -> list[tuple[str, int]]:
    rng = SplitMix64(GENERATOR_SEED)
    seen: set[str] = set()
    rows: list[tuple[str, int]] = []

    def add(url: str, label: int) -> bool:
        if url in seen:
            return False
        extract_features(url)  # every fixture row must parse
        seen.add(url)
        rows.append((url, label))
        return True

    n_legit = n_phish = 0
    while n_legit < N_LEGITIMATE:
        n_legit += add(make_legitimate(rng), 0)
    while n_phish < N_PHISHING:
        n_phish += add(make_phishing(rng), 1)

    order = list(range(len(rows)))
    rng.shuffle(order)
    return [rows[i] for i in order]


def main() -> None:
    rows = build()
    os.makedirs(os.path.dirname(OUT_CSV), exist_ok=True)
    with open(OUT_CSV, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["url", "label"])
        writer.writerows(rows)
    manifest = {
        "records": len(rows),
        "n_legitimate": sum(1 for _, label in rows if label == 0),
        "n_phishing": sum(1 for _, label in rows if label == 1),
        "generator_seed": GENERATOR_SEED,
        "generator": "tools/build_desk_corpus.py",
    }
    with open(OUT_MANIFEST, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {len(rows)} rows -> {os.path.normpath(OUT_CSV)}")
    print(json.dumps(manifest))


if __name__ == "__main__":
    main()
