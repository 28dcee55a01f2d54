"""Deterministic stand-in corpora for the published file-name datasets.

The real evaluation corpora are distributed separately (see README). This
module generates structurally matched substitutes so every evaluation runs
offline: a web-search-style set (15 categories x 100 indicative names) and
a crawl-style set (284 indicative, 264 ambiguous, 650 out-of-scope names)
with different junk vocabulary and heavier use of rare synonyms, so
transfer is genuinely harder than in-domain CV.

Name realism notes, mirrored from real PDF names:

- the category signal is the category word, a synonym, or an abbreviation
  ("cv", "pr", "jd"), occasionally glued to its neighbor
  ("coursesyllabus", "pricelist", "meetingminutes");
- everything else is organization/person junk, dates, and version tags in
  snake/kebab/dot/camel styles, sometimes percent-encoded;
- ambiguous names are hashes, ID codes, dates, or generic words; a few
  carry accidental signal fragments ("performance" contains "form");
- out-of-scope names indicate categories outside the label space
  (invoice, report, thesis, ...), again with occasional trap fragments
  ("platform", "letterhead", "roadmap").
"""

from __future__ import annotations

import argparse
import random
from dataclasses import dataclass
from pathlib import Path

from .dataset import Dataset, FileNameRecord, save_dataset

CATEGORIES = (
    "bill_act_law",
    "course_syllabus",
    "form",
    "guide",
    "job_posting",
    "letter",
    "map",
    "meeting_minutes",
    "newsletter",
    "policy",
    "press_release",
    "price_list",
    "restaurant_menu",
    "resume",
    "specification",
)


@dataclass(frozen=True)
class Phrase:
    words: tuple[str, ...]
    weight: float
    glueable: bool = False  # may be written with no separator at all
    tier: str = "dominant"  # dominant | medium | rare


# Signal inventory per category. Dominant words are frequent enough that
# their TF-IDF stays above the keyword threshold in every training fold;
# medium synonyms are learnable but never become trie keywords; rare ones
# are the genuinely hard cases.
SIGNALS: dict[str, list[Phrase]] = {
    "specification": [
        Phrase(("spec", "sheet"), 32),
        Phrase(("spec",), 24),
        Phrase(("specification",), 20),
        Phrase(("specs",), 10),
        Phrase(("datasheet",), 6, tier="medium"),
        Phrase(("data", "sheet"), 3, tier="medium"),
        Phrase(("technical", "specification"), 3, tier="medium"),
        Phrase(("techspec",), 2, tier="rare"),
    ],
    "resume": [
        Phrase(("resume",), 68, glueable=True),
        Phrase(("cv",), 16, tier="medium"),
        Phrase(("curriculum", "vitae"), 7, tier="medium"),
        Phrase(("resume", "cv"), 4, tier="medium"),
        Phrase(("vitae",), 5, tier="rare"),
    ],
    "restaurant_menu": [
        Phrase(("menu",), 46, glueable=True),
        Phrase(("dinner", "menu"), 12),
        Phrase(("lunch", "menu"), 10),
        Phrase(("restaurant", "menu"), 10),
        Phrase(("bar", "menu"), 6, tier="medium"),
        Phrase(("catering", "menu"), 5, tier="medium"),
        Phrase(("menu", "prices"), 4, tier="medium"),
        Phrase(("breakfast", "menu"), 3, tier="medium"),
        Phrase(("carte",), 4, tier="rare"),
    ],
    "price_list": [
        Phrase(("price", "list"), 38, glueable=True),
        Phrase(("prices",), 20),
        Phrase(("pricing",), 12),
        Phrase(("rate", "card"), 6, tier="medium"),
        Phrase(("rates",), 6, tier="medium"),
        Phrase(("fee", "schedule"), 8, tier="medium"),
        Phrase(("price", "sheet"), 4, tier="medium"),
        Phrase(("tariff",), 6, tier="rare"),
    ],
    "press_release": [
        Phrase(("press", "release"), 42, glueable=True),
        Phrase(("news", "release"), 22, glueable=True),
        Phrase(("media", "release"), 8, tier="medium"),
        Phrase(("release",), 8),
        Phrase(("press", "statement"), 6, tier="medium"),
        Phrase(("announcement",), 6, tier="medium"),
        Phrase(("pr",), 4, tier="rare"),
        Phrase(("media", "statement"), 4, tier="rare"),
    ],
    "newsletter": [
        Phrase(("newsletter",), 76, glueable=True),
        Phrase(("bulletin",), 10, tier="medium"),
        Phrase(("enews",), 6, tier="medium"),
        Phrase(("gazette",), 4, tier="rare"),
        Phrase(("e", "news"), 4, tier="rare"),
    ],
    "meeting_minutes": [
        Phrase(("meeting", "minutes"), 38, glueable=True),
        Phrase(("minutes",), 26),
        Phrase(("board", "meeting", "minutes"), 8),
        Phrase(("committee", "minutes"), 8),
        Phrase(("agenda",), 8, tier="medium"),
        Phrase(("mtg", "minutes"), 6, tier="medium"),
        Phrase(("proceedings",), 6, tier="rare"),
    ],
    "map": [
        Phrase(("map",), 50, glueable=True),
        Phrase(("trail", "map"), 12),
        Phrase(("campus", "map"), 9),
        Phrase(("site", "map"), 6, glueable=True),
        Phrase(("zoning", "map"), 6, tier="medium"),
        Phrase(("parking", "map"), 6, tier="medium"),
        Phrase(("street", "map"), 4, tier="medium"),
        Phrase(("floor", "plan"), 4, tier="rare"),
        Phrase(("atlas",), 3, tier="rare"),
    ],
    "letter": [
        Phrase(("letter",), 58, glueable=True),
        Phrase(("dear", "colleague", "letter"), 8),
        Phrase(("welcome", "letter"), 6),
        Phrase(("memo",), 10, tier="medium"),
        Phrase(("notice",), 6, tier="medium"),
        Phrase(("memorandum",), 4, tier="medium"),
        Phrase(("correspondence",), 4, tier="rare"),
        Phrase(("ltr",), 4, tier="rare"),
    ],
    "job_posting": [
        Phrase(("job", "posting"), 28, glueable=True),
        Phrase(("job", "description"), 14),
        Phrase(("job", "opening"), 10),
        Phrase(("job", "announcement"), 8),
        Phrase(("job", "application"), 4, tier="medium"),
        Phrase(("vacancy",), 7, tier="medium"),
        Phrase(("opportunity",), 8, tier="medium"),
        Phrase(("position", "description"), 6, tier="medium"),
        Phrase(("hiring",), 4, tier="medium"),
        Phrase(("recruitment",), 4, tier="rare"),
        Phrase(("jd",), 3, tier="rare"),
        Phrase(("career", "opportunity"), 4, tier="medium"),
    ],
    "guide": [
        Phrase(("guide",), 56, glueable=True),
        Phrase(("user", "guide"), 9),
        Phrase(("study", "guide"), 7),
        Phrase(("visitor", "guide"), 4),
        Phrase(("guidebook",), 8),
        Phrase(("handbook",), 8, tier="medium"),
        Phrase(("howto",), 4, tier="medium"),
        Phrase(("tutorial",), 2, tier="rare"),
        Phrase(("quickstart",), 2, tier="rare"),
    ],
    "form": [
        Phrase(("form",), 42, glueable=True),
        Phrase(("application", "form"), 12),
        Phrase(("request", "form"), 10),
        Phrase(("registration", "form"), 8),
        Phrase(("order", "form"), 6),
        Phrase(("consent", "form"), 6),
        Phrase(("application",), 8, tier="medium"),
        Phrase(("forms",), 4),
        Phrase(("intake", "form"), 2),
        Phrase(("waiver",), 2, tier="rare"),
    ],
    "policy": [
        Phrase(("policy",), 54, glueable=True),
        Phrase(("policies",), 10),
        Phrase(("privacy", "policy"), 6),
        Phrase(("guidelines",), 10, tier="medium"),
        Phrase(("procedure",), 8, tier="medium"),
        Phrase(("handbook",), 6, tier="medium"),
        Phrase(("rules",), 3, tier="rare"),
        Phrase(("code", "of", "conduct"), 3, tier="rare"),
    ],
    "course_syllabus": [
        Phrase(("course", "syllabus"), 30, glueable=True),
        Phrase(("syllabus",), 34),
        Phrase(("course", "outline"), 10),
        Phrase(("class", "syllabus"), 6),
        Phrase(("curriculum",), 8, tier="medium"),
        Phrase(("course", "schedule"), 5, tier="medium"),
        Phrase(("syllabi",), 3, tier="rare"),
        Phrase(("course", "description"), 4, tier="rare"),
    ],
    "bill_act_law": [
        Phrase(("act",), 20),
        Phrase(("bill",), 16),
        Phrase(("law",), 12),
        Phrase(("ordinance",), 10),
        Phrase(("house", "bill"), 6),
        Phrase(("senate", "bill"), 5),
        Phrase(("statute",), 8, tier="medium"),
        Phrase(("regulation",), 8, tier="medium"),
        Phrase(("amendment",), 6, tier="medium"),
        Phrase(("municipal", "code"), 5, tier="medium"),
        Phrase(("hb",), 2, tier="rare"),
        Phrase(("sb",), 2, tier="rare"),
    ],
}

# category-flavored junk: weak secondary signal, realistic noise
FLAVOR: dict[str, tuple[str, ...]] = {
    "specification": ("mx", "pro", "series", "ultra", "model", "product", "hd", "plus"),
    "resume": ("junior", "senior", "intern", "developer", "designer", "nurse"),
    "restaurant_menu": ("willow", "bistro", "cafe", "kitchen", "grill", "tavern",
                        "sushi", "pizza", "taco", "thai", "golden", "dragon"),
    "price_list": ("wholesale", "retail", "parts", "service", "salon", "rental"),
    "press_release": ("launch", "partnership", "quarterly", "results"),
    "newsletter": ("monthly", "quarterly", "issue", "vol", "edition", "member", "alumni"),
    "meeting_minutes": ("board", "council", "committee", "planning", "commission", "pta",
                        "township", "regular", "special"),
    "map": ("park", "trail", "river", "north", "south", "downtown", "district", "bike"),
    "letter": ("parent", "support", "recommendation", "family", "student", "resignation"),
    "job_posting": ("assistant", "manager", "coordinator", "director", "technician",
                    "engineer", "woodshop", "parttime", "fulltime", "clerk"),
    "guide": ("user", "install", "installation", "travel", "field", "beginner", "resource"),
    "form": ("tax", "intake", "enrollment", "membership", "volunteer", "reimbursement",
             "rental", "patient"),
    "policy": ("hr", "employee", "travel", "safety", "security", "privacy",
               "acceptable", "use", "refund"),
    "course_syllabus": ("math", "biology", "chemistry", "history", "english", "physics",
                        "econ", "cs", "101", "201", "spring", "fall"),
    "bill_act_law": ("state", "clean", "air", "water", "tax", "zoning", "session",
                     "county", "public", "safety"),
}

GENERIC_JUNK = (
    "official", "revised", "current", "final", "draft", "updated", "new", "copy",
    "public", "web", "online", "info", "update", "overview", "general", "main",
    "office", "dept", "team", "staff", "city", "county", "community", "center",
    "program", "project", "group", "club", "association", "district", "regional",
    "national", "spring", "fall", "winter", "summer", "annual",
)

WS_ORGS = (
    "acme", "horizon", "summit", "riverside", "lakeside", "northgate", "westfield",
    "oakwood", "cedarview", "stjude", "bacb", "cerno", "fairview", "brookside",
    "unity", "pinnacle", "sterling", "vanguard", "meridian", "evergreen", "cascade",
    "redwood", "sequoia", "aurora", "beacon", "harbor", "crestview", "hillcrest",
    "glendale", "arlington", "fairmont", "kingston", "preston", "milton", "weston",
    "clayton", "denton", "easton", "brighton", "ashford", "stonebridge", "ridgeway",
)

CC_ORGS = (
    "alpine", "tristate", "metro", "apex", "zenith", "quantum", "stellar", "fusion",
    "catalyst", "momentum", "synergy", "paradigm", "insight", "hamilton", "jefferson",
    "madison", "monroe", "lincoln", "garfield", "harrison", "cleveland", "wexford",
    "bristol", "dover", "camden", "trenton", "newark", "albany", "buffalo", "quincy",
    "salem", "provo", "boise", "reno", "fargo", "tulsa", "omaha", "wichita", "topeka",
    "lakeshore", "greenfield", "silverton",
)

FIRST_NAMES = (
    "john", "jane", "mary", "james", "robert", "michael", "sarah", "emily", "david",
    "daniel", "laura", "peter", "susan", "karen", "mark", "paul", "anna", "lisa",
    "kevin", "brian", "rachel", "thomas", "carlos", "maria", "wei", "priya", "ahmed",
    "elena", "marco", "sofia",
)

LAST_NAMES = (
    "smith", "johnson", "brown", "garcia", "miller", "davis", "rodriguez", "martinez",
    "hernandez", "lopez", "gonzalez", "wilson", "anderson", "taylor", "moore",
    "jackson", "martin", "lee", "perez", "thompson", "white", "harris", "sanchez",
    "clark", "ramirez", "lewis", "robinson", "walker", "young", "allen", "king",
    "wright", "scott", "torres", "nguyen", "hill", "flores", "green", "adams",
    "nelson", "baker", "hall", "rivera", "campbell", "mitchell", "carter", "roberts",
    "callsen", "chen", "patel", "kim", "singh", "kumar",
)

MONTHS = (
    "january", "february", "march", "april", "may", "june", "july", "august",
    "september", "october", "november", "december",
)
MONTHS_SHORT = ("jan", "feb", "mar", "apr", "jun", "jul", "aug", "sep", "oct", "nov", "dec")

AMBIGUOUS_GENERIC = (
    "document", "file", "scan", "scanned", "img", "image", "copy", "untitled",
    "download", "attachment", "print", "output", "view", "item", "page", "data",
    "notes", "temp", "misc", "doc", "upload", "full", "final", "draft", "web",
)

# fragments of in-scope keywords hiding inside unrelated words
AMBIGUOUS_TRAPS = (
    "information", "performance", "platform", "uniform", "transformation",
    "formal", "perform", "informal",
)

# out-of-scope signal words grouped by the label they imply
OOS_FAMILIES: tuple[tuple[str, tuple[tuple[str, ...], ...]], ...] = (
    ("invoice", (("invoice",), ("receipt",), ("estimate",), ("quotation",), ("payroll",))),
    ("report", (("report",), ("annual", "report"), ("lab", "report"),
                ("expense", "report"), ("progress", "report"))),
    ("financial_sheet", (("budget",), ("balance", "sheet"), ("ledger",),
                         ("billing", "statement"), ("financial", "statement"))),
    ("contract", (("contract",), ("agreement",), ("license", "agreement"),
                  ("terms", "and", "conditions"), ("lease",))),
    ("certificate", (("certificate",), ("certification",), ("diploma",), ("award",))),
    ("academic", (("thesis",), ("dissertation",), ("essay",), ("transcript",))),
    ("publication", (("whitepaper",), ("article",), ("journal",), ("magazine",),
                     ("working", "paper"))),
    ("marketing", (("brochure",), ("flyer",), ("poster",), ("pamphlet",), ("catalog",))),
    ("assessment", (("exam",), ("quiz",), ("worksheet",), ("survey",), ("checklist",))),
    ("manual", (("manual",), ("instructions",), ("warranty",), ("owners", "manual"))),
    ("presentation", (("presentation",), ("slides",), ("handout",), ("slide", "deck"))),
    ("event", (("calendar",), ("timetable",), ("invitation",), ("itinerary",))),
    ("planning", (("proposal",), ("roadmap",), ("blueprint",), ("bylaws",))),
    ("privacy_notice", (("privacy", "notice"), ("cookie", "notice"))),
)

# traps: out-of-scope names carrying in-scope fragments or whole words
OOS_TRAPS: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("marketing", ("job", "fair", "flyer")),
    ("template", ("letterhead", "template")),
    ("report", ("performance", "report")),
    ("publication", ("platform", "overview")),
    ("report", ("information", "security", "report")),
    ("planning", ("mapleton", "expansion", "proposal")),
    ("invoice", ("catering", "invoice")),
)

# last-resort synonyms and abbreviations; each shows up a handful of times
# at most, so models meet them nearly unseen
EXTRA_RARE: dict[str, tuple[tuple[str, ...], ...]] = {
    "specification": (("reference", "sheet"), ("tech", "sheet"), ("techdata",)),
    "resume": (("biodata",), ("curriculumvitae",), ("profile",)),
    "restaurant_menu": (("wine", "list"), ("takeout",), ("carte", "du", "jour")),
    "price_list": (("pricebook",), ("ratesheet",), ("msrp",)),
    "press_release": (("presser",), ("communique",), ("newsroom", "statement")),
    "newsletter": (("ebulletin",), ("digest",), ("roundup",)),
    "meeting_minutes": (("mins",), ("mtgnotes",), ("minutebook",)),
    "map": (("wayfinding",), ("locator",), ("basemap",)),
    "letter": (("covernote",), ("note",), ("missive",)),
    "job_posting": (("helpwanted",), ("wanted",), ("jobspec",)),
    "guide": (("primer",), ("walkthrough",), ("pocketguide",)),
    "form": (("affidavit",), ("rfp",), ("w9",)),
    "policy": (("sop",), ("directive",), ("protocol",)),
    "course_syllabus": (("courseinfo",), ("greensheet",), ("courseplan",)),
    "bill_act_law": (("legislation",), ("resolution",), ("charter",)),
}

# CC indicative counts per category (non-uniform, sums to 284)
CC_INDICATIVE_COUNTS = {
    "form": 38,
    "letter": 32,
    "newsletter": 28,
    "guide": 26,
    "resume": 24,
    "press_release": 22,
    "policy": 22,
    "restaurant_menu": 18,
    "map": 17,
    "job_posting": 16,
    "specification": 12,
    "price_list": 11,
    "meeting_minutes": 8,
    "course_syllabus": 6,
    "bill_act_law": 4,
}


@dataclass(frozen=True)
class StyleProfile:
    orgs: tuple[str, ...]
    glue_p: float
    head_weights: tuple[float, float, float]  # P(0), P(1), P(2) junk words in front
    tier_boost: dict
    extra_code_p: float  # chance of an opaque digit/letter blob
    hard_p: float  # chance of a typo / junk-glued synonym / obscure abbreviation


WS_PROFILE = StyleProfile(
    orgs=WS_ORGS,
    glue_p=0.12,
    head_weights=(0.35, 0.45, 0.20),
    tier_boost={"dominant": 1.0, "medium": 1.0, "rare": 1.0},
    extra_code_p=0.10,
    hard_p=0.07,
)

CC_PROFILE = StyleProfile(
    orgs=CC_ORGS,
    glue_p=0.18,
    head_weights=(0.25, 0.45, 0.30),
    tier_boost={"dominant": 1.0, "medium": 1.7, "rare": 2.6},
    extra_code_p=0.30,
    hard_p=0.13,
)


_ONSETS = ("b", "c", "d", "f", "g", "h", "k", "l", "m", "n", "p", "r", "s", "t", "v",
           "w", "br", "cr", "dr", "st", "tr", "ch", "sh", "gr", "bl", "cl", "pl")
_VOWELS = ("a", "e", "i", "o", "u", "ai", "ee", "oo", "ea")
_CODAS = ("", "", "n", "r", "t", "l", "m", "rd", "rk", "nd", "x")


def _pseudo_word(rng: random.Random) -> str:
    """One-off org or place name; mimics junk that never repeats."""
    n = rng.choice((2, 2, 3))
    word = "".join(
        rng.choice(_ONSETS) + rng.choice(_VOWELS) + (rng.choice(_CODAS) if i == n - 1 else "")
        for i in range(n)
    )
    return word


def _junk(rng: random.Random, pool) -> str:
    if rng.random() < 0.5:
        return _pseudo_word(rng)
    return rng.choice(pool)


def _typo(rng: random.Random, word: str) -> str:
    if len(word) < 4:
        return word
    i = rng.randrange(len(word) - 1)
    roll = rng.random()
    if roll < 0.5:  # transposition: "premilinary"
        return word[:i] + word[i + 1] + word[i] + word[i + 2 :]
    if roll < 0.8:  # dropped letter
        return word[:i] + word[i + 1 :]
    return word[:i] + word[i] + word[i:]  # doubled letter


def _pick_phrase(rng: random.Random, phrases: list[Phrase], boost: dict) -> Phrase:
    weights = [p.weight * boost[p.tier] for p in phrases]
    return rng.choices(phrases, weights=weights, k=1)[0]


def _code_blob(rng: random.Random) -> str:
    kind = rng.random()
    if kind < 0.4:
        return "".join(rng.choice("0123456789") for _ in range(rng.randint(2, 6)))
    if kind < 0.7:
        return "".join(rng.choice("abcdefghjkmnpqrstuvwxyz") for _ in range(2, 5))
    return (
        "".join(rng.choice("abcdefghjkmnpqrstuvwxyz") for _ in range(rng.randint(1, 3)))
        + "".join(rng.choice("0123456789") for _ in range(rng.randint(1, 4)))
    )


def _date_chunk(rng: random.Random) -> str:
    kind = rng.random()
    year = str(rng.randint(1999, 2024))
    if kind < 0.45:
        return year
    if kind < 0.65:
        return rng.choice(MONTHS) + year
    if kind < 0.8:
        return rng.choice(MONTHS_SHORT) + year[2:]
    return f"{rng.randint(1, 12):02d}{rng.randint(1, 28):02d}"


def _render(rng: random.Random, units: list[str]) -> str:
    """Join name units in one of the observed filename styles."""
    style = rng.choices(
        ("snake", "kebab", "dot", "space", "camel", "mixed"),
        weights=(0.30, 0.30, 0.06, 0.05, 0.19, 0.10),
        k=1,
    )[0]
    if style == "camel":
        return "".join(u.capitalize() for u in units)
    casing = rng.random()
    if casing < 0.30:
        units = [u.capitalize() for u in units]
    elif casing < 0.36:
        units = [u.upper() if len(u) <= 4 and not u.isdigit() else u.capitalize() for u in units]
    if style == "mixed":
        seps = ("_", "-", ".", "")
        out = units[0]
        for u in units[1:]:
            out += rng.choice(seps) + u
        return out
    sep = {"snake": "_", "kebab": "-", "dot": ".", "space": "%20"}[style]
    return sep.join(units)


def _hard_signal(rng: random.Random, category: str, profile: StyleProfile) -> list[str]:
    """Adversarial signal rendering: typo, junk-glued synonym, or obscure term."""
    roll = rng.random()
    if roll < 0.40:  # typo in the longest signal word
        phrase = _pick_phrase(rng, SIGNALS[category], profile.tier_boost)
        words = list(phrase.words)
        target = max(range(len(words)), key=lambda i: len(words[i]))
        words[target] = _typo(rng, words[target])
        return words
    if roll < 0.70:  # non-keyword synonym glued straight onto junk
        singles = [
            p for p in SIGNALS[category] if len(p.words) == 1 and p.tier != "dominant"
        ]
        if singles:
            word = rng.choice(singles).words[0]
            return [_junk(rng, GENERIC_JUNK + profile.orgs) + word]
    variants = EXTRA_RARE[category]
    return list(variants[rng.randrange(len(variants))])


def _indicative_name(rng: random.Random, category: str, profile: StyleProfile) -> str:
    hard = rng.random() < profile.hard_p
    if hard:
        signal_units = _hard_signal(rng, category, profile)
    else:
        phrase = _pick_phrase(rng, SIGNALS[category], profile.tier_boost)
        glue = phrase.glueable and len(phrase.words) > 1 and rng.random() < profile.glue_p
        signal_units = ["".join(phrase.words)] if glue else list(phrase.words)

    junk_pool = GENERIC_JUNK + profile.orgs if hard else FLAVOR[category] + GENERIC_JUNK + profile.orgs
    head: list[str] = []
    if category == "resume":
        style = rng.random()
        first = rng.choice(FIRST_NAMES)
        last = rng.choice(LAST_NAMES)
        if style < 0.4:
            head = [first, last]
        elif style < 0.7:
            head = [first[0] + last]  # "tcallsen" style
        else:
            head = [last]
    else:
        n_head = rng.choices((0, 1, 2), weights=profile.head_weights, k=1)[0]
        pool = profile.orgs if rng.random() < 0.5 else junk_pool
        head = [_junk(rng, pool) for _ in range(n_head)]
        if rng.random() < 0.12:
            head.insert(0, rng.choice(FIRST_NAMES if rng.random() < 0.3 else LAST_NAMES))

    tail: list[str] = []
    if rng.random() < 0.40:
        tail.append(_junk(rng, junk_pool))
    if rng.random() < 0.60:
        tail.append(_date_chunk(rng))
    if rng.random() < 0.20:
        tail.append(rng.choice(("v1", "v2", "v3", "rev2", "r1", "final", "draft", "web")))
    if rng.random() < profile.extra_code_p:
        tail.append(_code_blob(rng))

    if rng.random() < 0.15:
        units = signal_units + head + tail
    else:
        units = head + signal_units + tail
    # occasionally glue a date straight onto the previous unit ("Resume2020")
    if len(units) >= 2 and units[-1][0].isdigit() and rng.random() < 0.35:
        units = units[:-2] + [units[-2] + units[-1]]
    return _render(rng, [u for u in units if u]) + ".pdf"


def _ambiguous_name(rng: random.Random) -> str:
    kind = rng.random()
    if kind < 0.30:
        n = rng.choice((8, 12, 16, 24, 32))
        return "".join(rng.choice("0123456789abcdef") for _ in range(n)) + ".pdf"
    if kind < 0.52:
        groups = [
            "".join(rng.choice("0123456789") for _ in range(rng.randint(2, 6)))
            for _ in range(rng.randint(2, 4))
        ]
        if rng.random() < 0.4:
            groups.append("".join(rng.choice("ABCDEFGHJKLMNPRSTUVWXYZ") for _ in range(rng.randint(2, 4))))
        return rng.choice(("-", "_", "")).join(groups) + ".pdf"
    if kind < 0.70:
        blob = "".join(
            rng.choice("abcdefghjkmnpqrstuvwxyz0123456789")
            for _ in range(rng.randint(6, 14))
        )
        return blob + ".pdf"
    if kind < 0.90:
        units = [rng.choice(AMBIGUOUS_GENERIC) for _ in range(rng.randint(1, 3))]
        if rng.random() < 0.6:
            units.append("".join(rng.choice("0123456789") for _ in range(rng.randint(1, 4))))
        return _render(rng, units) + ".pdf"
    units = [rng.choice(AMBIGUOUS_TRAPS)]
    if rng.random() < 0.5:
        units.append(rng.choice(AMBIGUOUS_GENERIC))
    if rng.random() < 0.5:
        units.append(_date_chunk(rng))
    return _render(rng, units) + ".pdf"


def _oos_name(rng: random.Random) -> tuple[str, str]:
    if rng.random() < 0.10:
        label, words = OOS_TRAPS[rng.randrange(len(OOS_TRAPS))]
        units = list(words)
    else:
        label, phrases = OOS_FAMILIES[rng.randrange(len(OOS_FAMILIES))]
        units = list(phrases[rng.randrange(len(phrases))])
    head: list[str] = []
    n_head = rng.choices((0, 1, 2), weights=(0.3, 0.5, 0.2), k=1)[0]
    for _ in range(n_head):
        pool = CC_ORGS if rng.random() < 0.6 else GENERIC_JUNK
        head.append(_junk(rng, pool))
    tail: list[str] = []
    if rng.random() < 0.55:
        tail.append(_date_chunk(rng))
    if rng.random() < 0.25:
        tail.append(_code_blob(rng))
    return _render(rng, head + units + tail) + ".pdf", label


def _unique(generate, seen: set) -> str:
    for _ in range(1000):
        name = generate()
        if name not in seen:
            seen.add(name)
            return name
    raise RuntimeError("could not generate a unique name after 1000 attempts")


def web_search(seed: int = 2024) -> Dataset:
    """Web-search-style surrogate: 15 categories x 100 indicative names."""
    rng = random.Random(seed)
    seen: set[str] = set()
    records = []
    for category in CATEGORIES:
        for _ in range(100):
            name = _unique(lambda: _indicative_name(rng, category, WS_PROFILE), seen)
            records.append(FileNameRecord(name, category, "indicative"))
    return Dataset.from_records(records)


def common_crawl(seed: int = 2025) -> Dataset:
    """Crawl-style surrogate: 284 indicative, 264 ambiguous, 650 out-of-scope."""
    rng = random.Random(seed)
    seen: set[str] = set()
    records = []
    for category in CATEGORIES:
        for _ in range(CC_INDICATIVE_COUNTS[category]):
            name = _unique(lambda: _indicative_name(rng, category, CC_PROFILE), seen)
            records.append(FileNameRecord(name, category, "indicative"))
    cats = list(CC_INDICATIVE_COUNTS)
    weights = list(CC_INDICATIVE_COUNTS.values())
    for _ in range(264):
        name = _unique(lambda: _ambiguous_name(rng), seen)
        label = rng.choices(cats, weights=weights, k=1)[0]
        records.append(FileNameRecord(name, label, "ambiguous"))
    for _ in range(650):
        pair = []

        def gen() -> str:
            pair.clear()
            name, label = _oos_name(rng)
            pair.append(label)
            return name

        name = _unique(gen, seen)
        records.append(FileNameRecord(name, pair[0], "out_of_scope"))
    rng.shuffle(records)
    return Dataset.from_records(records)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="python -m nametriage.surrogate",
        description="Write the surrogate evaluation corpora to disk.",
    )
    parser.add_argument("--out", type=Path, default=Path("data"), help="output directory")
    parser.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    parser.add_argument("--seed-web", type=int, default=2024)
    parser.add_argument("--seed-crawl", type=int, default=2025)
    args = parser.parse_args(argv)

    args.out.mkdir(parents=True, exist_ok=True)
    ws = web_search(args.seed_web)
    cc = common_crawl(args.seed_crawl)
    ws_path = args.out / f"web_search.{args.format}"
    cc_path = args.out / f"common_crawl.{args.format}"
    save_dataset(ws, ws_path, args.format)
    save_dataset(cc, cc_path, args.format)
    print(f"wrote {ws_path} ({len(ws)} records) and {cc_path} ({len(cc)} records)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
