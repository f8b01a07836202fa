"""Deterministic synthetic two-platform datasets with planted ground truth.

Every generated user owns one identity per platform. The target-platform
username is either identical to the source one or mutated by a few
character edits, controlled by ``username_mutation_rate``. Neighbor and
content overlap fractions shape how much of a user's ego network and
vocabulary carry over between platforms. A subset of source bios declares
the counterpart handle, so bio extraction can be validated against the
returned ledger.

Everything is driven by one seeded RNG: the same parameters always
reproduce byte-identical exports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..errors import InvalidParameter
from .dataset import Dataset
from .records import ContentPost, GroundTruthLink, IdentityRef, Platform, RelationshipEdge, UserIdentity

_FIRST = [
    "alex", "amara", "ben", "bella", "carl", "chloe", "dan", "dian", "ethan", "emily",
    "farid", "fiona", "gabe", "grace", "hank", "hana", "ivan", "iris", "jack", "jade",
    "kai", "kate", "liam", "lily", "marc", "mei", "nate", "nora", "omar", "olive",
    "pete", "priya", "quinn", "rosa", "sam", "sara", "theo", "tina", "umar", "uma",
    "vic", "vera", "wes", "wendy", "xan", "yara", "zack", "zoe",
]
_LAST = [
    "ang", "baker", "chen", "cole", "diaz", "evans", "fox", "goh", "hale", "ito",
    "jones", "khan", "lim", "lee", "moss", "nair", "ong", "park", "quek", "reyes",
    "sato", "tan", "ueda", "vega", "wong", "xu", "yap", "zhou", "adams", "bryant",
    "cruz", "dolan", "ellis", "flynn", "grant", "hayes", "irwin", "jain", "kemp", "lowe",
    "mason", "nunez", "owens", "patel", "quill", "ramos", "silva", "toh",
]
_ADJ = [
    "happy", "lazy", "brave", "calm", "eager", "fancy", "giant", "hungry", "icy", "jolly",
    "keen", "lucky", "merry", "noble", "odd", "proud", "quiet", "rapid", "sleepy", "tiny",
    "urban", "vivid", "wild", "young", "zesty", "bold", "clever", "dizzy", "early", "fuzzy",
    "grand", "humble",
]
_NOUN = [
    "otter", "panda", "tiger", "whale", "eagle", "fox", "koala", "lemur", "mango", "noodle",
    "orbit", "pixel", "quartz", "raven", "sushi", "tempo", "umbra", "violet", "walrus", "yeti",
    "zebra", "badger", "comet", "durian", "ember", "falcon", "gecko", "harbor", "island", "jaguar",
    "kayak", "lotus", "meteor", "nomad", "onyx", "pepper", "quokka", "ridge", "sprout", "tundra",
]
_VOCAB = [
    "food", "ramen", "laksa", "coffee", "brunch", "dessert", "noodles", "hotpot", "bakery", "satay",
    "travel", "flight", "island", "beach", "hiking", "sunset", "passport", "hostel", "temple", "market",
    "music", "concert", "guitar", "vinyl", "playlist", "festival", "drums", "piano", "band", "karaoke",
    "soccer", "gym", "running", "yoga", "cycling", "marathon", "swim", "climb", "match", "league",
    "code", "python", "laptop", "startup", "design", "pixel", "launch", "deploy", "keyboard", "debug",
    "family", "weekend", "birthday", "wedding", "holiday", "cousin", "dinner", "picnic", "garden", "puppy",
    "movie", "series", "anime", "novel", "comics", "cinema", "trailer", "drama", "sequel", "popcorn",
    "photo", "camera", "portrait", "street", "gallery", "print", "lens", "light", "frame", "studio",
]
_BIO_PHRASES = [
    "coffee then everything else",
    "weekend explorer",
    "amateur cook, professional eater",
    "running on playlists",
    "probably at the beach",
    "plant parent",
    "shutterbug",
    "part time gamer",
    "always hungry",
    "city walker",
    "bookworm",
    "matcha over mocha",
]
_MUT_ALPHABET = "abcdefghijklmnopqrstuvwxyz0123456789_"


@dataclass
class SyntheticDataset:
    """Generator output: the dataset plus the planted declared-bio ledger."""

    dataset: Dataset
    declared_links: list


def _base_username(rng: random.Random, used: set) -> str:
    while True:
        style = rng.randrange(7)
        if style == 0:
            name = rng.choice(_FIRST) + rng.choice(_LAST)
        elif style == 1:
            name = rng.choice(_FIRST) + "_" + rng.choice(_LAST)
        elif style == 2:
            name = rng.choice(_FIRST) + "." + rng.choice(_LAST)
        elif style == 3:
            name = f"{rng.choice(_FIRST)}{rng.choice(_LAST)}{rng.randrange(100):02d}"
        elif style == 4:
            name = rng.choice(_ADJ) + rng.choice(_NOUN)
        elif style == 5:
            name = f"{rng.choice(_ADJ)}_{rng.choice(_NOUN)}{rng.randrange(100):02d}"
        else:
            name = f"{rng.choice(_NOUN)}{rng.randrange(10000):04d}"
        while name in used:
            name += str(rng.randrange(10))
        used.add(name)
        return name


def _mutate_username(rng: random.Random, name: str, used: set) -> str:
    """Apply 1..3 character edits; result differs from the input and is unique."""
    while True:
        chars = list(name)
        for _ in range(rng.randint(1, 3)):
            op = rng.randrange(4)
            if op == 0 and len(chars) > 3:
                del chars[rng.randrange(len(chars))]
            elif op == 1:
                chars.insert(rng.randrange(len(chars) + 1), rng.choice(_MUT_ALPHABET))
            elif op == 2 and len(chars) > 1:
                i = rng.randrange(len(chars) - 1)
                chars[i], chars[i + 1] = chars[i + 1], chars[i]
            else:
                chars[rng.randrange(len(chars))] = rng.choice(_MUT_ALPHABET)
        mutated = "".join(chars)
        if mutated and mutated != name and mutated not in used:
            used.add(mutated)
            return mutated


def generate_usernames(seed: int, count: int) -> list:
    """Standalone unique username corpus, e.g. for index benchmarks."""
    rng = random.Random(seed)
    used: set = set()
    return [_base_username(rng, used) for _ in range(count)]


def _screen_name(username: str) -> str:
    return username.replace("_", " ").replace(".", " ").title()


def generate_synthetic_dataset(
    seed: int,
    n_users: int,
    username_mutation_rate: float,
    neighbor_overlap: float,
    content_overlap: float,
    *,
    source_platform: str = "twitter",
    target_platform: str = "foursquare",
    declared_bio_rate: float = 0.6,
    mean_degree: int = 5,
    posts_per_identity: int = 3,
    words_per_post: int = 8,
) -> SyntheticDataset:
    if n_users < 2:
        raise InvalidParameter(f"n_users must be >= 2, got {n_users}")
    for label, frac in (
        ("username_mutation_rate", username_mutation_rate),
        ("neighbor_overlap", neighbor_overlap),
        ("content_overlap", content_overlap),
        ("declared_bio_rate", declared_bio_rate),
    ):
        if not 0.0 <= frac <= 1.0:
            raise InvalidParameter(f"{label} must be in [0, 1], got {frac}")
    if source_platform == target_platform:
        raise InvalidParameter("source and target platforms must differ")

    rng = random.Random(seed)
    src_ids = [f"a{i:05d}" for i in range(n_users)]
    tgt_ids = [f"b{i:05d}" for i in range(n_users)]

    used_src: set = set()
    src_names = [_base_username(rng, used_src) for _ in range(n_users)]
    used_tgt = set(src_names)
    tgt_names = []
    for name in src_names:
        if rng.random() < username_mutation_rate:
            tgt_names.append(_mutate_username(rng, name, used_tgt))
        else:
            tgt_names.append(name)

    # Per-user base out-neighborhood, reused on the target platform with
    # probability neighbor_overlap per neighbor.
    def _draw_neighbors(i, exclude):
        picked = []
        taken = set(exclude)
        taken.add(i)
        deg = min(rng.randint(2, mean_degree + 3), n_users - 1 - len(exclude))
        while len(picked) < deg:
            j = rng.randrange(n_users)
            if j not in taken:
                taken.add(j)
                picked.append(j)
        return picked

    src_edges = []
    tgt_edges = []
    for i in range(n_users):
        base = _draw_neighbors(i, ())
        for j in base:
            src_edges.append(RelationshipEdge(source_platform, src_ids[i], src_ids[j]))
        kept = [j for j in base if rng.random() < neighbor_overlap]
        fresh = _draw_neighbors(i, kept) if len(kept) < len(base) else []
        for j in kept + fresh[: len(base) - len(kept)]:
            tgt_edges.append(RelationshipEdge(target_platform, tgt_ids[i], tgt_ids[j]))

    interests = [rng.sample(_VOCAB, 12) for _ in range(n_users)]
    tgt_interests = []
    for words in interests:
        tgt_interests.append([w if rng.random() < content_overlap else rng.choice(_VOCAB) for w in words])

    posts = []
    stamp = 1_600_000_000
    for platform, ids_, interest_sets in (
        (source_platform, src_ids, interests),
        (target_platform, tgt_ids, tgt_interests),
    ):
        for i in range(n_users):
            for _ in range(posts_per_identity):
                text = " ".join(rng.choice(interest_sets[i]) for _ in range(words_per_post))
                posts.append(ContentPost(platform, ids_[i], text, timestamp=stamp))
                stamp += 3600

    identities = []
    declared = []
    for i in range(n_users):
        phrase = rng.choice(_BIO_PHRASES)
        if rng.random() < declared_bio_rate:
            bio = f"{phrase} | {target_platform}: {tgt_names[i]}"
            declared.append(
                GroundTruthLink(
                    source=IdentityRef(source_platform, src_ids[i]),
                    target=IdentityRef(target_platform, tgt_ids[i]),
                    provenance="declared-bio",
                )
            )
        else:
            bio = phrase
        identities.append(
            UserIdentity(
                platform=source_platform,
                user_id=src_ids[i],
                username=src_names[i],
                screen_name=_screen_name(src_names[i]),
                bio=bio,
            )
        )
    for i in range(n_users):
        identities.append(
            UserIdentity(
                platform=target_platform,
                user_id=tgt_ids[i],
                username=tgt_names[i],
                screen_name=_screen_name(tgt_names[i]),
                bio=rng.choice(_BIO_PHRASES),
            )
        )

    ground_truth = [
        GroundTruthLink(
            source=IdentityRef(source_platform, src_ids[i]),
            target=IdentityRef(target_platform, tgt_ids[i]),
            provenance="synthetic",
        )
        for i in range(n_users)
    ]

    dataset = Dataset(
        name=f"synthetic-seed{seed}",
        platforms=[Platform(source_platform, directed=True), Platform(target_platform, directed=True)],
        identities=identities,
        edges=src_edges + tgt_edges,
        posts=posts,
        ground_truth=ground_truth,
    )
    return SyntheticDataset(dataset=dataset, declared_links=declared)
