#!/usr/bin/env python3
"""Regenerate the bundled lexicon and gazetteer files under data/lexicon/.

Sources (installed with pip, not needed at runtime):
  wordfreq        common-word ranking for English
  lemminflect     lemma / inflection tables with coarse POS
  names           US census given-name lists (sdist, path via --names-dir)
  geonamescache   countries, US states, cities
  pytickersymbols listed company names

The rule lemmatizer is mirrored here so that only inflections the rules
cannot recover are written to lemma_exceptions.tsv. Keep `lemmatize_step`
in sync with src/lemmatizer.cpp.

Usage:
  python3 tools/build_lexicon.py --names-dir DIR --out data/lexicon
"""

import argparse
import gzip
import json
import os
import re
import sys
from collections import defaultdict

import wordfreq
import lemminflect
import geonamescache
import pytickersymbols

TOP_WORDS = 40000

DETERMINERS = """the a an this that these those my your his her its our their some any no
every each either neither all both few many much several such another other enough
half whose""".split()

PRONOUNS = """i me mine you yours he him she hers it itself we us ours they them theirs
myself yourself himself herself ourselves themselves yourselves who whom whoever
whatever whichever what which something anything nothing everything someone anyone
everyone nobody somebody anybody everybody i'm i've i'd i'll you're you've you'd
you'll he's he'd he'll she's she'd she'll it's it'd it'll we're we've we'd we'll
they're they've they'd they'll that's there's here's what's who's let's""".split()

CONJUNCTIONS = """and or but nor yet so because although though while whereas if unless
whether than whenever wherever""".split()

PREPOSITIONS = """of in on at by for with about against between into through during before
after above below to from up down out off over under near among around across along
behind beyond within without toward towards upon via per despite except inside
outside onto like unlike throughout amid beside besides regarding concerning versus
till until since""".split()

AUXILIARIES = """be am is are was were been being have has had having do does did doing done
will would shall should can could may might must ought don't doesn't didn't isn't
aren't wasn't weren't haven't hasn't hadn't won't wouldn't can't cannot couldn't
shouldn't mustn't ain't""".split()

ADVERBS = """not never very too also just only really quite rather even still already
always often sometimes usually maybe perhaps then now here there when where why how
however therefore thus almost ever else instead soon ago away back anyway again once
twice""".split()

NUMBERS = """zero one two three four five six seven eight nine ten eleven twelve thirteen
fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty fifty sixty
seventy eighty ninety hundred thousand million billion trillion""".split()

INTERJECTIONS = """yes oh ok okay hey wow please etc hello hi thanks""".split()

# Participial adjectives kept in the lexicon even though they look like
# verb inflections.
PARTICIPIAL_ADJECTIVES = """interesting exciting boring amazing confusing surprising
challenging rewarding frustrating overwhelming interested excited bored tired confused
surprised worried pleased advanced limited complicated sophisticated detailed related
experienced skilled talented qualified motivated dedicated""".split()

# Always recognised as organizations; never allowed into the lexicon with a
# non-noun tag.
CURATED_ORGANIZATIONS = """google microsoft github myspace facebook twitter youtube amazon
apple netflix linkedin instagram snapchat tiktok reddit wikipedia yahoo bing ibm intel
oracle adobe nvidia samsung sony nintendo tesla spacex uber lyft airbnb spotify paypal
ebay dropbox slack zoom skype whatsapp telegram pinterest tumblr quora stackoverflow
gitlab bitbucket atlassian salesforce shopify stripe mozilla firefox chrome safari
openai anthropic deepmind coursera udemy edx khan duolingo blackboard canvas moodle
piazza chegg quizlet grammarly notion trello asana figma canva wordpress medium
substack discord twitch hulu disney pixar marvel nasa fbi cia nsa unesco unicef nato
fifa nba nfl mlb nhl harvard stanford mit yale princeton caltech berkeley cambridge
oxford columbia cornell ucla nyu toyota honda ford bmw audi volkswagen nike adidas
starbucks mcdonalds walmart target costco ikea cisco dell hp lenovo asus acer huawei
xiaomi alibaba tencent baidu bytedance siemens bosch philips unilever pfizer moderna
novartis boeing airbus lockheed raytheon verizon comcast netscape aol altavista
friendster napster kazaa myspace xanga livejournal blogger flickr delicious digg
foursquare vine periscope""".split()

LEGAL_SUFFIXES = set("""ag se sa nv plc inc inc. corp corp. corporation co co. ltd ltd. llc
lp group holding holdings company limited kgaa vz st a/s asa ab oyj spa s.p.a. n.v.
s.a. the &""".split())

SUFFIX_RULES = [("ly", "Adverb"), ("ing", "Verb"), ("ed", "Verb"),
                ("ous", "Adjective"), ("ful", "Adjective"), ("ive", "Adjective"),
                ("able", "Adjective"), ("tion", "Noun"), ("ness", "Noun"),
                ("ment", "Noun"), ("ity", "Noun")]

VOWELS = set("aeiou")


def suffix_tag(word):
    for suffix, tag in SUFFIX_RULES:
        if word.endswith(suffix) and len(word) >= len(suffix) + 2:
            return tag
    return None


# ---------------------------------------------------------------------------
# mirror of the rule lemmatizer

def _is_double_consonant(stem):
    return (len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1].isalpha()
            and stem[-1] not in VOWELS)


def _resolve_verb_stem(stem, lex):
    if _is_double_consonant(stem):
        if stem in lex:
            return stem
        single = stem[:-1]
        if single in lex:
            return single
        return stem if stem[-1] in "lszf" else single
    if stem + "e" in lex:
        return stem + "e"
    return stem


def _plural(w):
    if len(w) > 4 and w.endswith("ies"):
        return w[:-3] + "y"
    if len(w) > 3 and w.endswith("es"):
        stem = w[:-2]
        if stem.endswith(("s", "x", "z", "ch", "sh")):
            return stem
    if len(w) > 3 and w.endswith("s") and not w.endswith(("ss", "us", "is")):
        return w[:-1]
    return w


def _verb(w, lex):
    if len(w) > 4 and w.endswith("ies"):
        return w[:-3] + "y"
    if len(w) > 4 and w.endswith("ied"):
        return w[:-3] + "y"
    if len(w) > 5 and w.endswith("ying"):
        return w[:-3]
    if len(w) > 4 and w.endswith("ing"):
        return _resolve_verb_stem(w[:-3], lex)
    if len(w) > 3 and w.endswith("ed"):
        return _resolve_verb_stem(w[:-2], lex)
    if len(w) > 3 and w.endswith("es"):
        stem = w[:-2]
        if stem.endswith(("s", "x", "z", "ch", "sh", "o")):
            return stem
    if len(w) > 3 and w.endswith("s") and not w.endswith(("ss", "us", "is")):
        return w[:-1]
    return w


def _adjective(w, lex):
    for suffix in ("est", "er"):
        if w.endswith(suffix) and len(w) > len(suffix) + 2:
            stem = w[:-len(suffix)]
            cands = []
            if stem.endswith("i"):
                cands.append(stem[:-1] + "y")
            if _is_double_consonant(stem):
                cands.append(stem[:-1])
            cands += [stem + "e", stem]
            for c in cands:
                if lex.get(c) == "Adjective":
                    return c
    return w


def lemmatize_step(w, pos, lex, exc):
    if w in exc:
        return exc[w]
    if pos not in ("Noun", "Verb", "Adjective"):
        return w
    if w in lex:
        return w
    if pos == "Noun":
        r = _plural(w)
        if r != w:
            return r
        if w.endswith(("ing", "ed")):
            v = _verb(w, lex)
            if v != w and lex.get(v) == "Verb":
                return v
        return w
    if pos == "Verb":
        return _verb(w, lex)
    return _adjective(w, lex)


def lemmatize(w, pos, lex, exc):
    for _ in range(8):
        nxt = lemmatize_step(w, pos, lex, exc)
        if nxt == w:
            break
        w = nxt
    return w


# ---------------------------------------------------------------------------

def load_inflections():
    path = os.path.join(os.path.dirname(lemminflect.__file__), "resources", "infl_lu.csv.gz")
    table = defaultdict(dict)  # lemma -> upos -> list of forms (ordered slots)
    with gzip.open(path, "rt", encoding="utf-8") as fh:
        for line in fh:
            parts = line.rstrip("\n").split(",")
            lemma, upos, slots = parts[0], parts[1], parts[2:]
            if lemma != lemma.lower() or not re.fullmatch(r"[a-z][a-z'-]*", lemma):
                continue
            table[lemma][upos] = [s.split("/") for s in slots]
    return table


def freq(w):
    return wordfreq.word_frequency(w, "en")


def choose_pos(word, entry):
    has = {u: True for u in entry}
    if word.endswith("ly") and "adv" in has:
        return "Adverb"
    verb_score = noun_score = adj_score = 0.0
    noun_forms = set()
    verb_forms = set()
    if "noun" in entry:
        for slot in entry["noun"]:
            noun_forms.update(f for f in slot if f and f != word)
    if "verb" in entry:
        for slot in entry["verb"]:
            verb_forms.update(f for f in slot if f and f != word)
    base = max(freq(word), 1e-9)
    if "verb" in entry:
        slots = entry["verb"]
        past = set(slots[0]) | (set(slots[1]) if len(slots) > 1 else set())
        gerund = set(slots[2]) if len(slots) > 2 else set()
        verb_score = sum(freq(f) for f in (past | gerund) if f and f not in noun_forms) / base
    if "noun" in entry:
        noun_score = sum(freq(f) for f in noun_forms if f not in verb_forms) / base
    if "adj" in entry:
        forms = set(f for slot in entry["adj"] for f in slot if f and f != word)
        adj_score = sum(freq(f) for f in forms) / base
    open_tags = [u for u in ("noun", "verb", "adj") if u in entry]
    if not open_tags:
        return "Adverb" if "adv" in has else None
    if len(open_tags) == 1:
        return {"noun": "Noun", "verb": "Verb", "adj": "Adjective"}[open_tags[0]]
    if "verb" in entry and verb_score > 0.25:
        return "Verb"
    if "adj" in entry and (adj_score > 0.02 or re.search(
            r"(al|ic|ous|ful|ive|able|ible|ant|ent|ary|less|ish)$", word)):
        return "Adjective"
    if "noun" in entry:
        return "Noun"
    return "Verb" if "verb" in entry else "Adjective"


def build_lexicon(top_n):
    infl = load_inflections()
    closed = {}
    for tag, words in (("Determiner", DETERMINERS), ("Pronoun", PRONOUNS),
                       ("Conjunction", CONJUNCTIONS), ("Preposition", PREPOSITIONS),
                       ("Verb", AUXILIARIES), ("Adverb", ADVERBS), ("Number", NUMBERS),
                       ("Other", INTERJECTIONS)):
        for w in words:
            closed.setdefault(w, tag)

    verb_inflections = set()
    for lemma, entry in infl.items():
        for slot in entry.get("verb", []):
            for f in slot:
                if f and f != lemma and f.endswith(("ing", "ed")):
                    verb_inflections.add(f)

    orgs = set(CURATED_ORGANIZATIONS)
    lex = {}
    for word in wordfreq.top_n_list("en", top_n):
        if word in closed or word in orgs:
            continue
        if not re.fullmatch(r"[a-z][a-z'-]*[a-z]", word):
            continue
        if word in verb_inflections and word not in PARTICIPIAL_ADJECTIVES:
            continue
        if word in PARTICIPIAL_ADJECTIVES:
            lex[word] = "Adjective"
            continue
        entry = infl.get(word)
        if not entry:
            continue
        tag = choose_pos(word, entry)
        if tag:
            lex[word] = tag
    return closed, lex, infl


def build_exceptions(lex, infl):
    exc = {}
    extra = {}
    upos_tag = {"noun": "Noun", "verb": "Verb", "adj": "Adjective"}
    for lemma, tag in sorted(lex.items(), key=lambda kv: -freq(kv[0])):
        upos = {v: k for k, v in upos_tag.items()}.get(tag)
        if upos is None or upos not in infl.get(lemma, {}):
            continue
        for slot in infl[lemma][upos]:
            for form in slot:
                if not form or form == lemma or form in lex or form in exc:
                    continue
                if not re.fullmatch(r"[a-z][a-z'-]*", form):
                    continue
                if lemmatize(form, tag, lex, {}) != lemma:
                    exc[form] = lemma
                    # irregular forms are listed so lookup tags them directly,
                    # except -ing/-ed which stay with the suffix rules
                    if not form.endswith(("ing", "ed")):
                        extra[form] = tag
    return exc, extra


def write_lines(path, header, lines):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(header)
        for line in lines:
            fh.write(line + "\n")


def clean_company(name):
    name = name.lower().replace("&", " & ")
    name = re.sub(r"[.,()]", " ", name)
    words = [w for w in name.split() if w not in LEGAL_SUFFIXES]
    while words and len(words[-1]) == 1:
        words.pop()
    name = " ".join(words)
    if not re.fullmatch(r"[a-z][a-z0-9' -]*[a-z0-9]", name or ""):
        return None
    return name


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--names-dir", required=True)
    ap.add_argument("--out", required=True)
    ap.add_argument("--fixtures", help="write regular inflection fixtures here")
    args = ap.parse_args()

    closed, lex, infl = build_lexicon(TOP_WORDS)
    common_lemmas = set(infl) | set(closed)

    # drop entries the suffix rules already predict
    predicted = {w for w, t in lex.items() if suffix_tag(w) == t}
    for w in predicted:
        del lex[w]
    base = dict(lex)
    base.update(closed)
    exc, extra = build_exceptions(base, infl)
    for form, tag in extra.items():
        lex.setdefault(form, tag)

    os.makedirs(args.out, exist_ok=True)
    lexicon_lines = [f"{w}\t{t}" for w, t in sorted(closed.items())]
    lexicon_lines += [f"{w}\t{t}" for w, t in sorted(lex.items()) if w not in closed]
    write_lines(os.path.join(args.out, "lexicon.tsv"),
                "# surface<TAB>tag; tags: Noun Verb Adjective Adverb Determiner Conjunction\n"
                "# Preposition Pronoun Number Other\n", lexicon_lines)
    write_lines(os.path.join(args.out, "lemma_exceptions.tsv"),
                "# surface<TAB>lemma for inflections the suffix rules do not recover\n",
                [f"{f}\t{l}" for f, l in sorted(exc.items())])
    write_lines(os.path.join(args.out, "stopwords.txt"),
                "# explicit stop-list: auxiliary and modal forms\n", sorted(AUXILIARIES))

    # persons
    persons = []
    for fname in ("dist.male.first", "dist.female.first"):
        with open(os.path.join(args.names_dir, fname)) as fh:
            for i, line in enumerate(fh):
                if i >= 700:
                    break
                n = line.split()[0].lower()
                if n not in common_lemmas and n not in CURATED_ORGANIZATIONS:
                    persons.append(n)
    persons = sorted(set(persons))

    # places
    gc = geonamescache.GeonamesCache()
    places = set()
    for c in gc.get_countries().values():
        places.add(c["name"].lower())
    for s in gc.get_us_states().values():
        places.add(s["name"].lower())
    for c in gc.get_continents().values():
        places.add(c["name"].lower())
    cities = sorted(gc.get_cities().values(), key=lambda c: -c["population"])
    for c in cities[:1500]:
        name = c["name"].lower()
        if re.fullmatch(r"[a-z][a-z' -]*[a-z]", name):
            places.add(name)
    places = sorted(p for p in places
                    if (" " in p or p not in common_lemmas) and p not in CURATED_ORGANIZATIONS
                    and p not in persons)

    # organizations
    orgs = set(CURATED_ORGANIZATIONS)
    stocks = pytickersymbols.PyTickerSymbols()
    for company in stocks.get_all_stocks():
        name = clean_company(company["name"])
        if not name:
            continue
        if " " not in name and (name in common_lemmas or name in persons):
            continue
        orgs.add(name)
    organizations = sorted(orgs)

    write_lines(os.path.join(args.out, "persons.txt"), "# given names, lowercase\n", persons)
    write_lines(os.path.join(args.out, "places.txt"),
                "# countries, US states, continents, large cities; lowercase\n", places)
    write_lines(os.path.join(args.out, "organizations.txt"),
                "# organizations, lowercase; multi-word entries match noun chunks\n",
                organizations)

    if args.fixtures:
        import random
        rng = random.Random(7)
        pairs = []
        upos_tag = {"noun": "Noun", "verb": "Verb"}
        for lemma, tag in sorted(lex.items()):
            if tag not in ("Noun", "Verb") or lemma in exc:
                continue
            upos = "noun" if tag == "Noun" else "verb"
            for slot in infl.get(lemma, {}).get(upos, []):
                for form in slot:
                    if form and form != lemma and re.fullmatch(r"[a-z]+", form):
                        pairs.append((form, tag, lemma))
        rng.shuffle(pairs)
        write_lines(args.fixtures, "# surface<TAB>pos<TAB>expected lemma\n",
                    [f"{f}\t{t}\t{l}" for f, t, l in sorted(pairs[:400])])

    print(f"lexicon {len(lexicon_lines)}  exceptions {len(exc)}  persons {len(persons)}  "
          f"places {len(places)}  organizations {len(organizations)}", file=sys.stderr)


if __name__ == "__main__":
    main()
