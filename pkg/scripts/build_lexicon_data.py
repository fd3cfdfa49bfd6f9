#!/usr/bin/env python3
"""Regenerate the curated lexicon data files.

Writes word lists, association norms, a frequency list, and a synthesized
embedding table to src/primingkit/data/ and a smaller fixture lexicon to
tests/fixtures/lexicon/.  Deterministic: reruns reproduce identical bytes.

The embedding table is a structural stand-in for distributional vectors:
category-anchored random unit vectors, with associated pairs pulled together
so that association and cosine similarity agree the way the generation
constraints expect.  Regenerate with:

    python scripts/build_lexicon_data.py
"""

from __future__ import annotations

import argparse
import hashlib
from pathlib import Path

import numpy as np

REPO = Path(__file__).resolve().parents[1]

PERS = "person"
GRP = "social_group"
CTRL = "social_control"
INST = "institution"
PHYS = "physical_entity"
OBJ = "object_nonedible"
EDB = "object_edible"
DRK = "object_drinkable"
CLO = "clothing"
DEV = "device"
CON = "container"
CTY = "country"


def cats(*names: str) -> str:
    return ";".join(names)


# --------------------------------------------------------------------------
# Main lexicon tables

PERSON_NOUNS = [
    "doctor", "nurse", "teacher", "student", "lawyer", "attorney", "pilot",
    "farmer", "soldier", "captain", "colonel", "guest", "lady", "king",
    "queen", "prince", "princess", "child", "boy", "girl", "woman", "man",
    "mother", "father", "uncle", "aunt", "sister", "brother", "son",
    "daughter", "cousin", "friend", "neighbor", "secretary", "manager",
    "author", "artist", "actor", "actress", "singer", "dancer", "driver",
    "worker", "waiter", "bishop", "mayor", "hero", "professor",
]

GROUP_NOUNS = ["band", "team", "family", "committee", "club", "crowd", "army", "crew"]
CONTROL_NOUNS = ["court", "jury", "senate", "council", "ministry"]
INSTITUTION_NOUNS = [
    "school", "college", "university", "hospital", "church", "museum",
    "library", "bank", "prison",
]
PHYSICAL_NOUNS = [
    "tree", "mountain", "river", "stone", "flower", "plant", "horse", "dog",
    "cat", "bird",
]
OBJECT_NOUNS = [
    "pot", "engine", "key", "book", "newspaper", "knife", "hammer", "chair",
    "table", "desk", "lamp", "mirror", "clock", "guitar", "piano", "rope",
    "wheel", "brick", "coin", "ring", "toy", "doll", "nail", "pen", "pencil",
    "iron",
]
EDIBLE_NOUNS = [
    "pie", "bread", "cake", "chicken", "cheese", "apple", "banana", "orange",
    "egg", "sandwich", "cookie", "pizza",
]
DRINKABLE_NOUNS = ["beer", "wine", "tea", "coffee", "juice", "soda"]

CLOTHING_NOUNS = ["hat", "coat", "scarf", "glove", "jacket", "dress", "shirt", "boot", "cap"]
DEVICE_NOUNS = ["phone", "camera", "radio", "laptop", "torch", "whistle", "compass", "fan", "bell"]
CONTAINER_NOUNS = ["bag", "box", "bottle", "jar", "basket", "bucket", "cup", "barrel", "purse"]

COUNTRY_NOUNS = [
    "cuba", "spain", "france", "italy", "japan", "china", "brazil", "mexico",
    "canada", "egypt", "greece", "india", "kenya", "norway", "peru", "poland",
    "russia", "sweden", "turkey", "vietnam", "chile", "ghana", "jordan",
]

UNCOUNTABLE_NOUNS = [("water", DRK), ("rice", EDB)]


def noun_rows() -> list[str]:
    rows = []
    for group, category in [
        (PERSON_NOUNS, PERS),
        (GROUP_NOUNS, GRP),
        (CONTROL_NOUNS, CTRL),
        (INSTITUTION_NOUNS, INST),
        (PHYSICAL_NOUNS, PHYS),
        (OBJECT_NOUNS, OBJ),
        (EDIBLE_NOUNS, EDB),
        (DRINKABLE_NOUNS, DRK),
        (CLOTHING_NOUNS, CLO),
        (DEVICE_NOUNS, DEV),
        (CONTAINER_NOUNS, CON),
        (COUNTRY_NOUNS, CTY),
    ]:
        for lemma in group:
            rows.append(f"{lemma}\tnoun\tcategories={category}\tcountable=yes")
    for lemma, category in UNCOUNTABLE_NOUNS:
        rows.append(f"{lemma}\tnoun\tcategories={category}\tcountable=no")
    return rows


# lemma, past, participle, third, agent categories, patient categories
TRANSITIVE_VERBS = [
    ("follow", "followed", "followed", "follows", cats(PERS, GRP), cats(PERS, GRP, PHYS)),
    ("help", "helped", "helped", "helps", cats(PERS, GRP), cats(PERS, GRP, INST)),
    ("judge", "judged", "judged", "judges", cats(PERS, CTRL), cats(PERS, GRP, INST)),
    ("carry", "carried", "carried", "carries", cats(PERS), cats(OBJ, EDB, DRK, CON, DEV, CLO)),
    ("wrap", "wrapped", "wrapped", "wraps", cats(PERS), cats(OBJ, EDB, DEV, CLO)),
    ("purchase", "purchased", "purchased", "purchases", cats(PERS, GRP, INST), cats(OBJ, EDB, DRK, CLO, DEV, CON)),
    ("wash", "washed", "washed", "washes", cats(PERS), cats(PERS, CLO, CON, OBJ, PHYS)),
    ("watch", "watched", "watched", "watches", cats(PERS, GRP), cats(PERS, GRP, PHYS)),
    ("chase", "chased", "chased", "chases", cats(PERS, PHYS), cats(PERS, PHYS)),
    ("push", "pushed", "pushed", "pushes", cats(PERS), cats(PERS, OBJ, CON, DEV)),
    ("pull", "pulled", "pulled", "pulls", cats(PERS), cats(PERS, OBJ, CON, DEV)),
    ("grab", "grabbed", "grabbed", "grabs", cats(PERS), cats(OBJ, EDB, CON, DEV, CLO)),
    ("hold", "held", "held", "holds", cats(PERS), cats(OBJ, EDB, DRK, CON, DEV, CLO)),
    ("lift", "lifted", "lifted", "lifts", cats(PERS), cats(PERS, OBJ, CON)),
    ("move", "moved", "moved", "moves", cats(PERS, GRP), cats(OBJ, CON, DEV)),
    ("open", "opened", "opened", "opens", cats(PERS), cats(CON, OBJ, DEV)),
    ("close", "closed", "closed", "closes", cats(PERS), cats(CON, OBJ, DEV)),
    ("break", "broke", "broken", "breaks", cats(PERS), cats(OBJ, DEV, CON)),
    ("fix", "fixed", "fixed", "fixes", cats(PERS), cats(OBJ, DEV)),
    ("paint", "painted", "painted", "paints", cats(PERS), cats(OBJ, CON, PHYS)),
    ("smell", "smelled", "smelled", "smells", cats(PERS, PHYS), cats(EDB, DRK, PHYS)),
    ("forget", "forgot", "forgotten", "forgets", cats(PERS), cats(PERS, OBJ, DEV, CLO)),
    ("remember", "remembered", "remembered", "remembers", cats(PERS), cats(PERS, GRP, INST)),
    ("visit", "visited", "visited", "visits", cats(PERS, GRP), cats(PERS, INST)),
    ("invite", "invited", "invited", "invites", cats(PERS, GRP, INST), cats(PERS, GRP)),
    ("call", "called", "called", "calls", cats(PERS, INST), cats(PERS, GRP, INST)),
    ("thank", "thanked", "thanked", "thanks", cats(PERS, GRP), cats(PERS, GRP, INST)),
    ("greet", "greeted", "greeted", "greets", cats(PERS), cats(PERS, GRP)),
    ("embrace", "embraced", "embraced", "embraces", cats(PERS), cats(PERS)),
    ("raise", "raised", "raised", "raises", cats(PERS), cats(OBJ, PHYS)),
    ("drop", "dropped", "dropped", "drops", cats(PERS), cats(OBJ, EDB, CON, DEV)),
    ("clean", "cleaned", "cleaned", "cleans", cats(PERS), cats(OBJ, CON, DEV, CLO, INST)),
    ("prepare", "prepared", "prepared", "prepares", cats(PERS, INST), cats(EDB, DRK)),
    ("use", "used", "used", "uses", cats(PERS, GRP, INST), cats(OBJ, DEV, CON)),
    ("want", "wanted", "wanted", "wants", cats(PERS, GRP), cats(OBJ, EDB, DRK, CLO, DEV, CON)),
    ("wear", "wore", "worn", "wears", cats(PERS), cats(CLO)),
    ("steal", "stole", "stolen", "steals", cats(PERS), cats(OBJ, EDB, CON, DEV, CLO)),
    ("hide", "hid", "hidden", "hides", cats(PERS), cats(OBJ, EDB, CON, DEV, CLO)),
    ("find", "found", "found", "finds", cats(PERS, GRP), cats(PERS, OBJ, EDB, CON, DEV, CLO)),
    ("lose", "lost", "lost", "loses", cats(PERS), cats(OBJ, DEV, CLO, CON)),
    ("keep", "kept", "kept", "keeps", cats(PERS), cats(OBJ, EDB, DEV, CLO, CON)),
    ("strike", "struck", "struck", "strikes", cats(PERS), cats(PERS, OBJ)),
    ("beat", "beat", "beaten", "beats", cats(PERS), cats(PERS, GRP)),
    ("burn", "burned", "burned", "burns", cats(PERS), cats(OBJ, PHYS, EDB)),
    ("cut", "cut", "cut", "cuts", cats(PERS), cats(EDB, OBJ, PHYS)),
    ("drag", "dragged", "dragged", "drags", cats(PERS), cats(PERS, OBJ, CON)),
    ("drink", "drank", "drunk", "drinks", cats(PERS), cats(DRK)),
    ("eat", "ate", "eaten", "eats", cats(PERS, PHYS), cats(EDB)),
]

# lemma, past, third, preposition, agent, patient, recipient
DITRANSITIVE_VERBS = [
    ("give", "gave", "gives", "to", cats(PERS), cats(OBJ, EDB, DRK, CLO, DEV, CON), cats(PERS, GRP, INST)),
    ("send", "sent", "sends", "to", cats(PERS, INST), cats(OBJ, EDB, DRK, CLO, DEV, CON), cats(PERS, GRP, INST)),
    ("throw", "threw", "throws", "to", cats(PERS), cats(OBJ, EDB, CON, CLO), cats(PERS)),
    ("hand", "handed", "hands", "to", cats(PERS), cats(OBJ, EDB, DRK, CON, DEV), cats(PERS)),
    ("pass", "passed", "passes", "to", cats(PERS), cats(OBJ, EDB, DRK, CON), cats(PERS)),
    ("lend", "lent", "lends", "to", cats(PERS, INST), cats(OBJ, DEV, CON, CLO), cats(PERS, GRP)),
    ("sell", "sold", "sells", "to", cats(PERS, INST), cats(OBJ, EDB, DRK, CLO, DEV, CON), cats(PERS, GRP, INST)),
    ("serve", "served", "serves", "to", cats(PERS, INST), cats(EDB, DRK), cats(PERS, GRP)),
    ("buy", "bought", "buys", "for", cats(PERS), cats(OBJ, EDB, DRK, CLO, DEV, CON), cats(PERS, GRP)),
    ("cook", "cooked", "cooks", "for", cats(PERS), cats(EDB), cats(PERS, GRP)),
    ("bake", "baked", "bakes", "for", cats(PERS), cats(EDB), cats(PERS, GRP)),
    ("pour", "poured", "pours", "for", cats(PERS), cats(DRK), cats(PERS)),
    ("build", "built", "builds", "for", cats(PERS, GRP), cats(OBJ, CON), cats(PERS, GRP, INST)),
    ("fetch", "fetched", "fetches", "for", cats(PERS), cats(OBJ, EDB, DRK, CON, DEV, CLO), cats(PERS)),
    ("order", "ordered", "orders", "for", cats(PERS), cats(EDB, DRK, OBJ, DEV, CLO), cats(PERS, GRP)),
    ("save", "saved", "saves", "for", cats(PERS), cats(OBJ, EDB, DRK, CLO, DEV), cats(PERS, GRP)),
]

PADDING_VERBS = ["come", "remain", "appear", "stay", "wait", "sleep", "smile", "sit", "stand", "travel"]


def verb_rows() -> list[str]:
    rows = []
    for lemma, past, part, third, agent, patient in TRANSITIVE_VERBS:
        rows.append(
            f"{lemma}\ttransitive\tpast={past}\tparticiple={part}\tthird={third}"
            f"\tagent={agent}\tpatient={patient}"
        )
    for lemma, past, third, prep, agent, patient, recipient in DITRANSITIVE_VERBS:
        rows.append(
            f"{lemma}\tditransitive\tpast={past}\tthird={third}\tprep={prep}"
            f"\tagent={agent}\tpatient={patient}\trecipient={recipient}"
        )
    for lemma in PADDING_VERBS:
        rows.append(f"{lemma}\tintransitive_padding")
    return rows


PERSONISH = cats(PERS, GRP)
THINGISH = cats(OBJ, DEV, CON, CLO)
ANY_OBJECT = cats(OBJ, EDB, DRK, CLO, DEV, CON)
PLACE = cats(INST, GRP, CTRL)

ADJECTIVES = [
    # people (and groups where sensible)
    ("old", cats(PERS, GRP, INST, OBJ, CON, CLO, DEV, PHYS)),
    ("young", cats(PERS, PHYS)),
    ("tall", cats(PERS, PHYS, INST)),
    ("kind", PERSONISH),
    ("brave", PERSONISH),
    ("rich", cats(PERS, GRP, INST)),
    ("poor", cats(PERS, GRP, INST)),
    ("smart", cats(PERS, DEV)),
    ("wise", cats(PERS,)),
    ("proud", PERSONISH),
    ("happy", PERSONISH),
    ("sad", cats(PERS,)),
    ("angry", cats(PERS, GRP)),
    ("calm", cats(PERS, PHYS)),
    ("gentle", cats(PERS, PHYS)),
    ("honest", cats(PERS, GRP, INST)),
    ("clever", cats(PERS,)),
    ("strong", cats(PERS, GRP, DRK, PHYS)),
    ("weak", cats(PERS, GRP, DRK)),
    ("tired", cats(PERS,)),
    ("busy", cats(PERS, INST, GRP)),
    ("famous", cats(PERS, GRP, INST)),
    ("quiet", cats(PERS, INST, PHYS, DEV)),
    ("polite", cats(PERS,)),
    ("rude", cats(PERS,)),
    ("friendly", PERSONISH),
    ("lazy", cats(PERS, PHYS)),
    ("bold", cats(PERS, GRP)),
    ("shy", cats(PERS,)),
    ("lucky", cats(PERS, GRP)),
    ("noble", cats(PERS, GRP)),
    ("humble", cats(PERS, INST)),
    ("cruel", cats(PERS, CTRL)),
    ("cheerful", cats(PERS, GRP)),
    ("serious", cats(PERS, GRP, CTRL)),
    ("strict", cats(PERS, CTRL, INST)),
    ("bad", cats(PERS, GRP, EDB, DRK, OBJ)),
    ("good", cats(PERS, GRP, EDB, DRK, OBJ, DEV)),
    ("great", cats(PERS, GRP, INST, OBJ)),
    ("awful", cats(PERS, EDB, DRK, OBJ, CLO)),
    ("strange", cats(PERS, OBJ, DEV, PHYS)),
    ("odd", cats(PERS, OBJ, DEV)),
    # colors and looks
    ("red", cats(OBJ, EDB, DRK, CLO, DEV, CON, PHYS)),
    ("blue", cats(OBJ, CLO, DEV, CON, PHYS)),
    ("green", cats(OBJ, EDB, CLO, DEV, CON, PHYS)),
    ("black", cats(OBJ, DRK, CLO, DEV, CON, PHYS)),
    ("white", cats(OBJ, DRK, CLO, DEV, CON, PHYS)),
    ("yellow", cats(OBJ, EDB, CLO, CON, PHYS)),
    ("brown", cats(OBJ, EDB, CLO, CON, PHYS)),
    ("grey", cats(OBJ, CLO, DEV, CON, PHYS)),
    ("pretty", cats(PERS, CLO, OBJ, PHYS)),
    ("lovely", cats(PERS, CLO, OBJ, PHYS, GRP)),
    ("ugly", cats(PERS, OBJ, CLO, PHYS)),
    ("shiny", cats(OBJ, DEV, CON, CLO)),
    ("elegant", cats(PERS, CLO, OBJ, INST)),
    ("stylish", cats(PERS, CLO, DEV)),
    # size and shape
    ("small", cats(PERS, GRP, INST, OBJ, EDB, DRK, CLO, DEV, CON, PHYS)),
    ("big", cats(PERS, GRP, INST, OBJ, EDB, CLO, DEV, CON, PHYS)),
    ("large", cats(GRP, INST, OBJ, EDB, DRK, CON, PHYS)),
    ("tiny", cats(OBJ, EDB, DEV, CON, PHYS)),
    ("huge", cats(GRP, INST, OBJ, CON, PHYS)),
    ("heavy", cats(OBJ, DEV, CON, CLO)),
    ("light", cats(OBJ, DEV, CON, CLO, EDB)),
    ("narrow", cats(OBJ, CON, PHYS)),
    ("wide", cats(OBJ, CON, PHYS)),
    ("long", cats(OBJ, CLO, PHYS)),
    ("short", cats(PERS, OBJ, CLO)),
    ("round", cats(OBJ, EDB, CON, DEV)),
    ("square", cats(OBJ, CON, DEV)),
    ("flat", cats(OBJ, DEV, PHYS)),
    ("sharp", cats(OBJ, DEV)),
    ("dull", cats(OBJ, DEV)),
    ("solid", cats(OBJ, CON, INST)),
    # condition and value
    ("new", cats(OBJ, CLO, DEV, CON, INST, GRP)),
    ("broken", cats(OBJ, DEV, CON)),
    ("dirty", cats(OBJ, CLO, CON, PHYS)),
    ("neat", cats(PERS, OBJ, CLO)),
    ("cheap", cats(OBJ, EDB, DRK, CLO, DEV, CON)),
    ("expensive", cats(OBJ, EDB, DRK, CLO, DEV, CON)),
    ("fancy", cats(OBJ, CLO, DEV, CON, INST)),
    ("plain", cats(OBJ, EDB, CLO, CON)),
    ("smooth", cats(OBJ, DRK, PHYS)),
    ("rough", cats(OBJ, PHYS)),
    ("wooden", cats(OBJ, CON)),
    ("golden", cats(OBJ, CLO, CON)),
    ("silver", cats(OBJ, DEV, CON)),
    ("useful", cats(OBJ, DEV, CON)),
    ("empty", cats(CON, INST)),
    ("full", cats(CON, INST)),
    ("leather", cats(CLO, CON)),
    ("plastic", cats(OBJ, DEV, CON)),
    ("metal", cats(OBJ, DEV, CON)),
    ("soft", cats(OBJ, EDB, CLO, PHYS)),
    ("hard", cats(OBJ, EDB, PHYS)),
    # food and drink
    ("fresh", cats(EDB, DRK, PHYS)),
    ("sweet", cats(EDB, DRK, PERS)),
    ("salty", cats(EDB,)),
    ("sour", cats(EDB, DRK)),
    ("bitter", cats(EDB, DRK)),
    ("tasty", cats(EDB, DRK)),
    ("delicious", cats(EDB, DRK)),
    ("spicy", cats(EDB,)),
    ("ripe", cats(EDB,)),
    ("stale", cats(EDB,)),
    ("warm", cats(EDB, DRK, CLO, PHYS)),
    ("hot", cats(EDB, DRK, PHYS)),
    ("cold", cats(EDB, DRK, PHYS)),
    ("crisp", cats(EDB, CLO)),
    ("creamy", cats(EDB, DRK)),
    ("fizzy", cats(DRK,)),
    ("iced", cats(DRK, EDB)),
    # institutions, groups, control
    ("local", cats(GRP, INST, CTRL)),
    ("modern", cats(INST, DEV, OBJ, GRP)),
    ("ancient", cats(INST, OBJ, CTRL, PHYS)),
    ("royal", cats(PERS, GRP, INST, CTRL)),
    ("national", cats(GRP, INST, CTRL)),
    ("powerful", cats(PERS, GRP, INST, CTRL, DEV)),
    ("wealthy", cats(PERS, GRP, INST)),
    ("respected", cats(PERS, GRP, INST, CTRL)),
    ("rival", cats(GRP, INST)),
    ("foreign", cats(PERS, GRP, INST, CTRL)),
    ("grand", cats(INST, OBJ, GRP)),
    ("historic", cats(INST, OBJ, CTRL)),
    ("private", cats(INST, GRP)),
    ("public", cats(INST, GRP, CTRL)),
    # devices
    ("electric", cats(DEV, OBJ)),
    ("digital", cats(DEV,)),
    ("portable", cats(DEV, CON, OBJ)),
    # physical world
    ("wild", cats(PHYS, GRP)),
    ("beautiful", cats(PERS, PHYS, CLO, OBJ, INST)),
    # more people
    ("eager", cats(PERS, GRP)),
    ("loyal", cats(PERS, GRP)),
    ("jealous", cats(PERS,)),
    ("curious", cats(PERS, PHYS)),
    ("grateful", cats(PERS, GRP)),
    ("nervous", cats(PERS,)),
    ("confident", cats(PERS, GRP)),
    ("careless", cats(PERS,)),
    ("careful", cats(PERS,)),
    ("stubborn", cats(PERS, PHYS)),
    ("witty", cats(PERS,)),
    ("fierce", cats(PERS, PHYS, GRP)),
    ("mighty", cats(PERS, GRP, CTRL, PHYS)),
    ("slim", cats(PERS, DEV)),
    ("plump", cats(PERS, EDB)),
    # more objects
    ("rusty", cats(OBJ, DEV, CON)),
    ("dusty", cats(OBJ, CON, INST)),
    ("glossy", cats(OBJ, CLO)),
    ("sturdy", cats(OBJ, CON, DEV)),
    ("fragile", cats(OBJ, CON, DEV)),
    ("curved", cats(OBJ, PHYS)),
    ("crooked", cats(OBJ, PHYS)),
    ("faded", cats(OBJ, CLO)),
    ("spotless", cats(OBJ, CLO, CON, INST)),
    ("antique", cats(OBJ, CON, DEV)),
    # more food and drink
    ("juicy", cats(EDB,)),
    ("tender", cats(EDB, PERS)),
    ("crunchy", cats(EDB,)),
    ("greasy", cats(EDB, OBJ)),
    ("mild", cats(EDB, DRK)),
    ("bubbly", cats(DRK, PERS)),
    ("frosty", cats(DRK, PHYS)),
    # more institutions and devices
    ("renowned", cats(PERS, INST, GRP)),
    ("modest", cats(PERS, INST)),
    ("wireless", cats(DEV,)),
    ("handy", cats(DEV, CON, OBJ)),
    ("sleek", cats(DEV, CLO, OBJ)),
    ("sealed", cats(CON, OBJ)),
    ("spacious", cats(CON, INST)),
    ("lush", cats(PHYS,)),
    ("rocky", cats(PHYS,)),
    ("muddy", cats(PHYS, CLO, OBJ)),
]


def adjective_rows() -> list[str]:
    return [f"{lemma}\tadjective\tcategories={cs}" for lemma, cs in ADJECTIVES]


# (cue, target, strength); curated same-class pairs carry the similarity
# material for the semantic-similarity conditions, cross-class pairs act as
# realistic blockers for the core constraints.
ASSOCIATIONS = [
    # people
    ("doctor", "nurse", 0.62),
    ("king", "queen", 0.65),
    ("prince", "princess", 0.54),
    ("mother", "father", 0.60),
    ("brother", "sister", 0.58),
    ("uncle", "aunt", 0.52),
    ("son", "daughter", 0.48),
    ("boy", "girl", 0.55),
    ("man", "woman", 0.61),
    ("teacher", "student", 0.50),
    ("professor", "student", 0.33),
    ("actor", "actress", 0.59),
    ("singer", "dancer", 0.30),
    ("lawyer", "attorney", 0.68),
    ("pilot", "captain", 0.35),
    ("soldier", "captain", 0.32),
    ("farmer", "worker", 0.22),
    ("guest", "waiter", 0.24),
    ("mayor", "council", 0.28),
    # objects
    ("hammer", "nail", 0.55),
    ("table", "chair", 0.57),
    ("pen", "pencil", 0.61),
    ("book", "newspaper", 0.32),
    ("guitar", "piano", 0.41),
    ("pot", "jar", 0.18),
    ("brick", "stone", 0.36),
    ("torch", "lamp", 0.25),
    ("mirror", "lamp", 0.12),
    # food and drink
    ("bread", "cheese", 0.38),
    ("cake", "cookie", 0.41),
    ("apple", "orange", 0.52),
    ("pie", "cake", 0.35),
    ("pizza", "sandwich", 0.25),
    ("egg", "chicken", 0.45),
    ("banana", "apple", 0.40),
    ("beer", "wine", 0.52),
    ("tea", "coffee", 0.64),
    ("juice", "soda", 0.38),
    # clothing, devices, containers
    ("hat", "cap", 0.49),
    ("coat", "jacket", 0.56),
    ("glove", "scarf", 0.30),
    ("shirt", "dress", 0.28),
    ("phone", "camera", 0.22),
    ("radio", "laptop", 0.12),
    ("bag", "purse", 0.47),
    ("box", "basket", 0.33),
    ("bottle", "jar", 0.29),
    ("bucket", "barrel", 0.31),
    # institutions and groups
    ("school", "college", 0.55),
    ("school", "university", 0.50),
    ("library", "museum", 0.35),
    ("church", "museum", 0.12),
    ("team", "club", 0.33),
    ("army", "crew", 0.25),
    ("band", "crew", 0.20),
    # transitive verbs
    ("strike", "beat", 0.45),
    ("wash", "clean", 0.57),
    ("grab", "hold", 0.40),
    ("push", "pull", 0.58),
    ("break", "fix", 0.42),
    ("chase", "follow", 0.44),
    ("carry", "lift", 0.39),
    ("forget", "remember", 0.66),
    ("open", "close", 0.71),
    ("find", "lose", 0.52),
    ("drink", "eat", 0.55),
    # ditransitive verbs (several pairs cross the to/for preposition classes)
    ("buy", "sell", 0.60),
    ("cook", "serve", 0.40),
    ("bake", "serve", 0.30),
    ("order", "sell", 0.22),
    ("pour", "serve", 0.35),
    ("save", "lend", 0.18),
    ("give", "hand", 0.41),
    ("give", "lend", 0.30),
    ("send", "pass", 0.20),
    # cross-class blockers
    ("drink", "beer", 0.47),
    ("drink", "wine", 0.40),
    ("eat", "bread", 0.35),
    ("eat", "cake", 0.30),
    ("wear", "hat", 0.30),
    ("wear", "coat", 0.28),
    ("wash", "shirt", 0.22),
    ("build", "brick", 0.33),
    ("paint", "brush", 0.0),  # zero strength: counts as not associated
    ("open", "key", 0.35),
    ("call", "phone", 0.38),
    ("doctor", "hospital", 0.45),
    ("nurse", "hospital", 0.40),
    ("student", "school", 0.47),
    ("professor", "university", 0.42),
    ("farmer", "horse", 0.25),
    ("child", "toy", 0.42),
    ("child", "doll", 0.35),
    ("mother", "child", 0.50),
    ("artist", "paint", 0.30),
    ("bottle", "beer", 0.45),
    ("cup", "tea", 0.42),
    ("stone", "flower", 0.0),  # zero strength: counts as not associated
]


# --------------------------------------------------------------------------
# Fixture lexicon (small, for the test suite)

FIXTURE_PERSONS = [
    "guest", "lady", "nurse", "colonel", "pilot", "attorney", "professor",
    "doctor", "king", "queen", "farmer", "soldier", "waiter", "singer",
    "mayor", "hero",
]
FIXTURE_OBJECTS = ["pot", "engine", "key", "book", "hammer", "nail", "lamp", "mirror", "drum", "rope"]
FIXTURE_EDIBLE = ["pie", "bread", "cake", "chicken"]
FIXTURE_DRINKABLE = ["beer", "tea", "wine", "juice"]
FIXTURE_GROUPS = ["band"]
FIXTURE_CLOTHING = ["hat"]
FIXTURE_CONTAINERS = ["bag", "box"]
FIXTURE_COUNTRIES = ["cuba", "spain", "france"]

FIXTURE_TRANSITIVE = [
    ("wrap", "wrapped", "wrapped", "wraps", cats(PERS), cats(OBJ, EDB, CLO)),
    ("purchase", "purchased", "purchased", "purchases", cats(PERS, GRP), cats(OBJ, EDB, DRK, CLO, CON)),
    ("follow", "followed", "followed", "follows", cats(PERS, GRP), cats(PERS, GRP)),
    ("wash", "washed", "washed", "washes", cats(PERS), cats(PERS, OBJ, CLO, CON)),
    ("carry", "carried", "carried", "carries", cats(PERS), cats(OBJ, EDB, DRK, CON, CLO)),
    ("strike", "struck", "struck", "strikes", cats(PERS), cats(PERS, OBJ)),
    ("beat", "beat", "beaten", "beats", cats(PERS), cats(PERS, GRP)),
    ("watch", "watched", "watched", "watches", cats(PERS, GRP), cats(PERS, GRP)),
]
FIXTURE_DITRANSITIVE = [
    ("give", "gave", "gives", "to", cats(PERS), cats(OBJ, EDB, DRK, CLO), cats(PERS, GRP)),
    ("send", "sent", "sends", "to", cats(PERS), cats(OBJ, EDB, DRK), cats(PERS, GRP)),
    ("throw", "threw", "throws", "to", cats(PERS), cats(OBJ, EDB), cats(PERS)),
    ("hand", "handed", "hands", "to", cats(PERS), cats(OBJ, EDB, DRK), cats(PERS)),
    ("buy", "bought", "buys", "for", cats(PERS), cats(OBJ, EDB, DRK, CLO), cats(PERS, GRP)),
    ("cook", "cooked", "cooks", "for", cats(PERS), cats(EDB,), cats(PERS, GRP)),
    ("bake", "baked", "bakes", "for", cats(PERS), cats(EDB,), cats(PERS, GRP)),
    ("fetch", "fetched", "fetches", "for", cats(PERS), cats(OBJ, EDB, DRK), cats(PERS)),
]
FIXTURE_PADDING = ["come", "remain", "appear", "stay"]

FIXTURE_ADJECTIVES = [
    ("red", cats(OBJ, CLO, CON, EDB)),
    ("old", cats(PERS, OBJ, CLO, CON, GRP)),
    ("small", cats(PERS, OBJ, CLO, CON, GRP, EDB, DRK)),
    ("kind", cats(PERS, GRP)),
    ("brave", cats(PERS,)),
    ("fresh", cats(EDB, DRK)),
    ("cold", cats(EDB, DRK)),
    ("awful", cats(PERS, EDB, DRK, OBJ)),
    ("rich", cats(PERS, GRP)),
    ("broken", cats(OBJ, CON)),
]

FIXTURE_ASSOCIATIONS = [
    ("doctor", "nurse", 0.60),
    ("king", "queen", 0.65),
    ("guest", "lady", 0.20),
    ("farmer", "soldier", 0.15),
    ("hammer", "nail", 0.55),
    ("pie", "cake", 0.35),
    ("bread", "cake", 0.40),
    ("beer", "wine", 0.50),
    ("tea", "juice", 0.25),
    ("strike", "beat", 0.45),
    ("follow", "watch", 0.30),
    ("cook", "bake", 0.58),
    ("give", "hand", 0.40),
    ("give", "send", 0.35),
    ("buy", "send", 0.22),
    ("fetch", "hand", 0.20),
    ("drum", "rope", 0.0),
]


def fixture_noun_rows() -> list[str]:
    rows = []
    for group, category in [
        (FIXTURE_PERSONS, PERS),
        (FIXTURE_OBJECTS, OBJ),
        (FIXTURE_EDIBLE, EDB),
        (FIXTURE_DRINKABLE, DRK),
        (FIXTURE_GROUPS, GRP),
        (FIXTURE_CLOTHING, CLO),
        (FIXTURE_CONTAINERS, CON),
        (FIXTURE_COUNTRIES, CTY),
    ]:
        for lemma in group:
            rows.append(f"{lemma}\tnoun\tcategories={category}\tcountable=yes")
    rows.append(f"water\tnoun\tcategories={DRK}\tcountable=no")
    return rows


def fixture_verb_rows() -> list[str]:
    rows = []
    for lemma, past, part, third, agent, patient in FIXTURE_TRANSITIVE:
        rows.append(
            f"{lemma}\ttransitive\tpast={past}\tparticiple={part}\tthird={third}"
            f"\tagent={agent}\tpatient={patient}"
        )
    for lemma, past, third, prep, agent, patient, recipient in FIXTURE_DITRANSITIVE:
        rows.append(
            f"{lemma}\tditransitive\tpast={past}\tthird={third}\tprep={prep}"
            f"\tagent={agent}\tpatient={patient}\trecipient={recipient}"
        )
    for lemma in FIXTURE_PADDING:
        rows.append(f"{lemma}\tintransitive_padding")
    return rows


# --------------------------------------------------------------------------
# Embedding synthesis


def _unit(vec: np.ndarray) -> np.ndarray:
    return vec / np.linalg.norm(vec)


def _stable_rng(token: str) -> np.random.Generator:
    digest = hashlib.sha256(token.encode()).digest()
    return np.random.default_rng(int.from_bytes(digest[:8], "big"))


def synthesize_embeddings(
    lemma_categories: dict[str, tuple[str, ...]],
    associations: list[tuple[str, str, float]],
    dim: int,
    seed_token: str,
    category_weight: float = 1.0,
    noise_weight: float = 1.6,
    pull: float = 0.45,
    rounds: int = 3,
) -> dict[str, np.ndarray]:
    categories = sorted({c for cs in lemma_categories.values() for c in cs})
    anchors = {
        c: _unit(_stable_rng(f"{seed_token}:anchor:{c}").normal(size=dim))
        for c in categories
    }
    vectors: dict[str, np.ndarray] = {}
    for lemma in sorted(lemma_categories):
        cs = lemma_categories[lemma]
        anchor = _unit(np.mean([anchors[c] for c in cs], axis=0))
        noise = _unit(_stable_rng(f"{seed_token}:noise:{lemma}").normal(size=dim))
        vectors[lemma] = _unit(category_weight * anchor + noise_weight * noise)
    linked = [
        (a, b) for a, b, strength in associations
        if strength > 0 and a in vectors and b in vectors
    ]
    for _ in range(rounds):
        for a, b in linked:
            va, vb = vectors[a], vectors[b]
            vectors[a] = _unit(va + pull * vb)
            vectors[b] = _unit(vb + pull * va)
    return vectors


def write_embeddings(path: Path, vectors: dict[str, np.ndarray]) -> None:
    dim = len(next(iter(vectors.values())))
    lines = [f"{len(vectors)} {dim}"]
    for lemma in sorted(vectors):
        components = " ".join(f"{x:.6f}" for x in vectors[lemma])
        lines.append(f"{lemma} {components}")
    path.write_text("\n".join(lines) + "\n")


# --------------------------------------------------------------------------
# Assembly


def _lemma_categories_from_rows(noun_lines, verb_lines, adjective_lines) -> dict[str, tuple[str, ...]]:
    table: dict[str, tuple[str, ...]] = {}

    def put(lemma: str, cs: tuple[str, ...]) -> None:
        table[lemma] = tuple(sorted(set(table.get(lemma, ())) | set(cs)))

    for line in noun_lines:
        parts = dict(p.split("=", 1) for p in line.split("\t")[2:])
        put(line.split("\t")[0], tuple(parts["categories"].split(";")))
    for line in verb_lines:
        fields = line.split("\t")
        lemma, kind = fields[0], fields[1]
        parts = dict(p.split("=", 1) for p in fields[2:])
        role_cats: set[str] = set()
        for key in ("agent", "patient", "recipient"):
            if key in parts:
                role_cats |= set(parts[key].split(";"))
        put(lemma, tuple(sorted(role_cats)) + (f"verbkind_{kind}",))
    for line in adjective_lines:
        parts = dict(p.split("=", 1) for p in line.split("\t")[2:])
        put(line.split("\t")[0], tuple(parts["categories"].split(";")) + ("adjective",))
    return table


def emit_lexicon(directory: Path, noun_lines, verb_lines, adjective_lines,
                 associations, dim: int, seed_token: str) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "nouns.tsv").write_text("\n".join(noun_lines) + "\n")
    (directory / "verbs.tsv").write_text("\n".join(verb_lines) + "\n")
    (directory / "adjectives.tsv").write_text("\n".join(adjective_lines) + "\n")
    (directory / "associations.tsv").write_text(
        "\n".join(f"{a}\t{b}\t{s}" for a, b, s in associations) + "\n"
    )
    lemmas = [line.split("\t")[0] for line in noun_lines + verb_lines + adjective_lines]
    if len(set(lemmas)) != len(lemmas):
        seen, dupes = set(), set()
        for lemma in lemmas:
            if lemma in seen:
                dupes.add(lemma)
            seen.add(lemma)
        raise SystemExit(f"duplicate lemmas across word classes: {sorted(dupes)}")
    (directory / "frequency.txt").write_text("\n".join(lemmas) + "\n")
    lemma_categories = _lemma_categories_from_rows(noun_lines, verb_lines, adjective_lines)
    vectors = synthesize_embeddings(lemma_categories, associations, dim, seed_token)
    write_embeddings(directory / "embeddings.txt", vectors)
    print(f"{directory}: {len(lemmas)} lemmas, {len(associations)} association rows, dim {dim}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--data-dir", default=str(REPO / "src" / "primingkit" / "data"))
    parser.add_argument("--fixture-dir", default=str(REPO / "tests" / "fixtures" / "lexicon"))
    args = parser.parse_args()

    emit_lexicon(
        Path(args.data_dir),
        noun_rows(), verb_rows(), adjective_rows(), ASSOCIATIONS,
        dim=32, seed_token="primingkit-data-v1",
    )
    emit_lexicon(
        Path(args.fixture_dir),
        fixture_noun_rows(), fixture_verb_rows(),
        [f"{lemma}\tadjective\tcategories={cs}" for lemma, cs in FIXTURE_ADJECTIVES],
        FIXTURE_ASSOCIATIONS,
        dim=16, seed_token="primingkit-fixture-v1",
    )


if __name__ == "__main__":
    main()
