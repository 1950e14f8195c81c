#!/usr/bin/env python3
"""Generates the cooking-instruction mini-corpus and checks the bigram
ranking it induces over the 33 template descriptors."""
import math
import re
from collections import defaultdict

TRAJ = [
    ("small circle", "small_circle"),
    ("large circle", "large_circle"),
    ("short forward and back motion", "forward_back_short"),
    ("long forward and back motion", "forward_back_long"),
    ("short side to side motion", "side_to_side_short"),
    ("long side to side motion", "side_to_side_long"),
    ("pushing motion away from you", "push_away"),
    ("pulling motion toward you", "pull_toward"),
    ("pushing motion to the left", "push_left"),
    ("pushing motion to the right", "push_right"),
    ("zigzag sweeping motion", "zigzag_sweep"),
]
FORCE = ["light", "medium", "firm"]

def tokenize(text):
    return re.findall(r"[a-z0-9]+", text.lower())

def lines():
    L = []
    def rep(n, s):
        L.extend([s] * n)

    # wiping and scrubbing
    rep(6, "wipe the plate with the cloth in a long side to side motion while applying medium pressure")
    rep(4, "move the cloth in a long side to side motion while applying medium pressure to the plate")
    rep(3, "wipe the cutting board with the cloth in a long side to side motion")
    rep(3, "move the sponge in a long side to side motion while applying medium pressure to the pan")
    rep(2, "scrub the plate with the sponge in a small circle while applying firm pressure")
    rep(2, "a steady side to side motion cleans the whole plate")
    rep(2, "wipe the counter with the towel in a long side to side motion")
    # scraping
    rep(5, "scrape the board with the scraper in a long side to side motion while applying firm pressure")
    rep(4, "move the scraper in a long side to side motion while applying firm pressure to the board")
    rep(3, "scrape the chopped pepper to the edge of the board with firm pressure")
    rep(2, "clear the cutting board with a long side to side motion of the knife")
    # stirring
    rep(5, "stir the pan with the spoon in a large circle while applying medium pressure")
    rep(4, "move the spoon in a large circle while applying medium pressure to the pan")
    rep(3, "stir the sauce in a large circle so nothing sticks to the pan")
    rep(5, "keep the spoon moving in a large circle around the pan")
    rep(1, "stir the soup in a small circle near the middle of the pot")
    # spreading
    rep(5, "spread the sauce on the bread with the knife in a zigzag sweeping motion")
    rep(4, "move the knife in a zigzag sweeping motion while applying medium pressure to the bread")
    rep(3, "a zigzag sweeping motion covers the bread evenly")
    rep(2, "spread the butter over the toast in a zigzag sweeping motion")
    # general pressure guidance
    rep(6, "while applying medium pressure keep the tool flat against the surface")
    rep(4, "while applying firm pressure move slowly and evenly")
    rep(2, "while applying light pressure avoid scratching the surface")
    rep(3, "applying medium pressure works for most kitchen tasks")
    rep(2, "applying firm pressure helps when food sticks to the board")
    # generic glue so every descriptor bigram is attested
    rep(3, "move the tool in a small circle when polishing")
    rep(2, "move the tool in a short side to side motion for small spots")
    rep(1, "move the tool in a short forward and back motion to loosen crumbs")
    rep(1, "move the tool in a long forward and back motion down the length of the tray")
    rep(1, "push the pile in a pushing motion away from you")
    rep(1, "pull the scraps in a pulling motion toward you")
    rep(1, "sweep the crumbs in a pushing motion to the left of the board")
    rep(1, "sweep the crumbs in a pushing motion to the right of the board")
    rep(1, "never stab downward with the knife when plating")
    rep(1, "a stab downward motion ruins the presentation")
    # filler cooking instructions for realism and vocabulary coverage
    filler = [
        "chop the onion before you heat the pan",
        "season the sauce with salt and pepper to taste",
        "let the bread rest before you slice it",
        "rinse the cloth after you wipe the plate",
        "dry the board before you scrape it again",
        "warm the pan before you stir the sauce",
        "taste the sauce after you stir it",
        "lay the bread flat before you spread the sauce",
        "wipe the plate until it looks clean",
        "scrape the board until the pepper reaches the edge",
        "stir the pan until the sauce thickens",
        "spread the sauce until the bread is covered",
        "hold the cloth flat so it touches the plate",
        "hold the scraper at a low angle to the board",
        "hold the spoon upright in the middle of the pan",
        "hold the knife almost flat against the bread",
        "put the tools away after you wash them",
        "a clean plate needs a damp cloth and medium pressure",
        "a clean board needs a firm scraper and steady hands",
        "good stirring keeps the sauce moving in the pan",
        "good spreading leaves an even layer on the bread",
        "work the cloth across the plate in even passes",
        "work the scraper across the board toward the edge",
        "circle the spoon through the sauce without lifting it",
        "sweep the knife across the bread without tearing it",
    ]
    more = [
        "preheat the pan before the oil goes in",
        "pat the board dry with a towel before you start",
        "gather the scraps at the edge and lift them with the scraper",
        "fold the sauce gently so the bread does not tear",
        "check the middle of the plate for missed spots",
        "a damp cloth picks up crumbs better than a dry one",
        "rest the knife on the edge of the board between passes",
        "scrape toward the edge not toward your hand",
        "stir from the middle outward so the sauce heats evenly",
        "finish the wipe with one long pass across the plate",
        "lift the spoon only after the sauce stops swirling",
        "keep crumbs off the counter while you spread",
        "wash the sponge after scrubbing the pan",
        "move in even passes and overlap each pass slightly",
        "slow even passes beat fast uneven ones",
        "cover the whole surface before you repeat a pass",
        "use the flat of the knife to spread and the edge to scrape",
        "a light touch is enough once the surface is clean",
        "press harder only where food has dried on",
        "turn the plate as you wipe to reach the far side",
        "turn the board so the edge faces the bowl before scraping",
        "tilt the pan slightly while you stir the sauce",
        "square the bread on the board before spreading",
        "let the pan cool before you wipe it out",
        "keep your wrist loose for a smooth circle",
        "short strokes work near the rim of the plate",
    ]
    for f in filler:
        rep(2, f)
    for f in more:
        rep(2, f)
    return L

def descriptor(phrase, force, tool="cloth", recipient="plate"):
    return f"move the {tool} in a {phrase} while applying {force} pressure to the {recipient}"

def score_all(L):
    vocab = {"<unk>"}
    toklines = [tokenize(l) for l in L]
    for t in toklines:
        vocab.update(t)
    vocab = sorted(vocab)
    vidx = {w: i for i, w in enumerate(vocab)}
    V = len(vocab)
    counts = defaultdict(lambda: defaultdict(int))
    totals = defaultdict(int)
    for t in toklines:
        ctx = -1
        for w in t:
            wi = vidx.get(w, vidx["<unk>"])
            counts[ctx][wi] += 1
            totals[ctx] += 1
            ctx = wi
    def logp(prev, w):
        wi = vidx.get(w, vidx["<unk>"])
        ci = vidx.get(prev, vidx["<unk>"]) if prev is not None else -1
        return math.log((counts[ci][wi] + 1) / (totals[ci] + V))
    prompt = tokenize("to successfully wipe the plate with the cloth you should")
    results = []
    tid = 0
    for phrase, name in TRAJ:
        for f in FORCE:
            toks = tokenize(descriptor(phrase, f))
            prev = prompt[-1]
            s = 0.0
            for w in toks:
                s += logp(prev, w)
                prev = w
            results.append((s / len(toks), tid, name, f))
            tid += 1
    results.sort(key=lambda r: (-r[0], r[1]))
    return results

if __name__ == "__main__":
    L = lines()
    print(f"{len(L)} lines")
    res = score_all(L)
    for r in res[:10]:
        print(f"{r[0]:.4f} id={r[1]:2d} {r[2]} {r[3]}")
    top5 = {(r[2], r[3]) for r in res[:5]}
    need = {("side_to_side_long", "medium"), ("side_to_side_long", "firm"),
            ("large_circle", "medium"), ("zigzag_sweep", "medium")}
    print("top5 ok:", need <= top5)
    with open("data/cooking_corpus.txt", "w") as f:
        f.write("\n".join(L) + "\n")
