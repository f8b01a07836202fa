"""Small demo workspace: two platforms, three linked users, two methods.

Gives the UI and the HTTP API something realistic to show without a real
crawl: a foursquare -> twitter dataset where method-a correctly links
bernard_soon (and method-b does not), a ground-truth-linked neighbor pair
(benedict_tan <-> btanzw) that surfaces as a green highlight in both ego
views, and content word clouds with overlapping food terms.

Usage: ``python -m linky.demo OUT_DIR`` then ``linky serve --data-dir OUT_DIR``.
"""

from __future__ import annotations

import sys

from .corpus import Dataset, export_dataset
from .corpus.records import ContentPost, GroundTruthLink, IdentityRef, Platform, RelationshipEdge, UserIdentity
from .linkage import Workspace

SOURCE = "foursquare"
TARGET = "twitter"


def build_demo_dataset() -> Dataset:
    fsq = [
        ("bernard_soon", "Bernard Soon", "food first | twitter: Bernnn"),
        ("benedict_tan", "Benedict Tan", "weekend cyclist | twitter: btanzw"),
        ("joelle_lee", "Joelle Lee", "matcha person | twitter: jolee_tw"),
        ("marcus.chia", "Marcus Chia", "runner"),
        ("sandra_koh", "Sandra Koh", "plant parent"),
    ]
    tw = [
        ("Bernnn", "Bernard Soon", "dad, eater, occasional runner"),
        ("bernda", "Brenda Ong", "sunsets and playlists"),
        ("bernice_w", "Bernice Wong", "coffee then everything"),
        ("btanzw", "Benedict Tan", "two wheels"),
        ("jolee_tw", "Joelle Lee", "green tea everything"),
        ("marcusc", "Marcus Chia", "chasing sunrises"),
    ]
    identities = [
        UserIdentity(SOURCE, f"f{i:02d}", username, screen_name=screen, bio=bio)
        for i, (username, screen, bio) in enumerate(fsq, start=1)
    ] + [
        UserIdentity(TARGET, f"t{i:02d}", username, screen_name=screen, bio=bio)
        for i, (username, screen, bio) in enumerate(tw, start=1)
    ]

    def fid(username):
        return f"f{[u for u, _, _ in fsq].index(username) + 1:02d}"

    def tid(username):
        return f"t{[u for u, _, _ in tw].index(username) + 1:02d}"

    edges = [
        RelationshipEdge(SOURCE, fid("bernard_soon"), fid("benedict_tan")),
        RelationshipEdge(SOURCE, fid("bernard_soon"), fid("joelle_lee")),
        RelationshipEdge(SOURCE, fid("bernard_soon"), fid("marcus.chia")),
        RelationshipEdge(SOURCE, fid("benedict_tan"), fid("joelle_lee")),
        RelationshipEdge(SOURCE, fid("joelle_lee"), fid("sandra_koh")),
        RelationshipEdge(TARGET, tid("Bernnn"), tid("btanzw")),
        RelationshipEdge(TARGET, tid("Bernnn"), tid("jolee_tw")),
        RelationshipEdge(TARGET, tid("btanzw"), tid("jolee_tw")),
        RelationshipEdge(TARGET, tid("bernda"), tid("bernice_w")),
        RelationshipEdge(TARGET, tid("marcusc"), tid("Bernnn")),
    ]

    posts = []
    food = "laksa again best laksa in town chicken rice queue worth it ramen night"
    family = "family picnic with the kids weekend market run morning laksa treat"
    misc = "new playlist on repeat sunset walk photos golden hour again"
    cycling = "morning ride century ride coffee stop mid ride flat tire drama"
    for uid, text in (
        (fid("bernard_soon"), food),
        (fid("bernard_soon"), "hawker centre crawl satay and more satay"),
        (fid("benedict_tan"), cycling),
        (fid("joelle_lee"), "matcha latte art attempt number nine"),
    ):
        posts.append(ContentPost(SOURCE, uid, text, timestamp=1_700_000_000 + len(posts) * 3600))
    for uid, text in (
        (tid("Bernnn"), family),
        (tid("Bernnn"), "laksa for lunch again no regrets"),
        (tid("bernda"), misc),
        (tid("btanzw"), cycling),
        (tid("jolee_tw"), "green tea ice cream ranking thread"),
    ):
        posts.append(ContentPost(TARGET, uid, text, timestamp=1_700_100_000 + len(posts) * 3600))

    ground_truth = [
        GroundTruthLink(IdentityRef(SOURCE, fid(a)), IdentityRef(TARGET, tid(b)), "declared-bio")
        for a, b in (
            ("bernard_soon", "Bernnn"),
            ("benedict_tan", "btanzw"),
            ("joelle_lee", "jolee_tw"),
        )
    ]

    return Dataset(
        name="demo",
        platforms=[Platform(SOURCE, directed=True), Platform(TARGET, directed=True)],
        identities=identities,
        edges=edges,
        posts=posts,
        ground_truth=ground_truth,
    )


METHOD_A = """\
{"method_id":"method-a","display_name":"Method A (network projection)","source_platform":"foursquare","target_platform":"twitter","parameters":{"variant":"demo"}}
{"source_id":"f01","candidates":[{"target_id":"t01","score":0.358},{"target_id":"t02","score":0.21},{"target_id":"t04","score":0.12}]}
{"source_id":"f02","candidates":[{"target_id":"t04","score":0.41},{"target_id":"t05","score":0.2}]}
{"source_id":"f03","candidates":[{"target_id":"t02","score":0.3},{"target_id":"t05","score":0.22}]}
"""

METHOD_B = """\
{"method_id":"method-b","display_name":"Method B (attribute matching)","source_platform":"foursquare","target_platform":"twitter","parameters":{"variant":"demo"}}
{"source_id":"f01","candidates":[{"target_id":"t02","score":0.274},{"target_id":"t01","score":0.19}]}
{"source_id":"f02","candidates":[{"target_id":"t04","score":0.36}]}
{"source_id":"f03","candidates":[{"target_id":"t05","score":0.44},{"target_id":"t03","score":0.1}]}
"""


def build_demo_workspace(root) -> Workspace:
    dataset = build_demo_dataset()
    export_dataset(dataset, root)
    ws = Workspace.open(root)
    ws.import_text(METHOD_A)
    ws.import_text(METHOD_B)
    return ws


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if len(argv) != 1:
        print("usage: python -m linky.demo OUT_DIR", file=sys.stderr)
        return 1
    ws = build_demo_workspace(argv[0])
    print(f"demo workspace written to {ws.root} (methods: {', '.join(ws.method_ids())})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
