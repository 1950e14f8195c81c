#include "tsel/lang.hpp"

namespace tsel {

// Cooking-instruction mini-corpus; also shipped as data/cooking_corpus.txt.
const std::vector<std::string>& builtin_corpus_lines() {
  static const std::vector<std::string> lines = {
      "wipe the plate with the cloth in a long side to side motion while applying medium pressure",
      "wipe the plate with the cloth in a long side to side motion while applying medium pressure",
      "wipe the plate with the cloth in a long side to side motion while applying medium pressure",
      "wipe the plate with the cloth in a long side to side motion while applying medium pressure",
      "wipe the plate with the cloth in a long side to side motion while applying medium pressure",
      "wipe the plate with the cloth in a long side to side motion while applying medium pressure",
      "move the cloth in a long side to side motion while applying medium pressure to the plate",
      "move the cloth in a long side to side motion while applying medium pressure to the plate",
      "move the cloth in a long side to side motion while applying medium pressure to the plate",
      "move the cloth in a long side to side motion while applying medium pressure to the plate",
      "wipe the cutting board with the cloth in a long side to side motion",
      "wipe the cutting board with the cloth in a long side to side motion",
      "wipe the cutting board with the cloth in a long side to side motion",
      "move the sponge in a long side to side motion while applying medium pressure to the pan",
      "move the sponge in a long side to side motion while applying medium pressure to the pan",
      "move the sponge in a long side to side motion while applying medium pressure to the pan",
      "scrub the plate with the sponge in a small circle while applying firm pressure",
      "scrub the plate with the sponge in a small circle while applying firm pressure",
      "a steady side to side motion cleans the whole plate",
      "a steady side to side motion cleans the whole plate",
      "wipe the counter with the towel in a long side to side motion",
      "wipe the counter with the towel in a long side to side motion",
      "scrape the board with the scraper in a long side to side motion while applying firm pressure",
      "scrape the board with the scraper in a long side to side motion while applying firm pressure",
      "scrape the board with the scraper in a long side to side motion while applying firm pressure",
      "scrape the board with the scraper in a long side to side motion while applying firm pressure",
      "scrape the board with the scraper in a long side to side motion while applying firm pressure",
      "move the scraper in a long side to side motion while applying firm pressure to the board",
      "move the scraper in a long side to side motion while applying firm pressure to the board",
      "move the scraper in a long side to side motion while applying firm pressure to the board",
      "move the scraper in a long side to side motion while applying firm pressure to the board",
      "scrape the chopped pepper to the edge of the board with firm pressure",
      "scrape the chopped pepper to the edge of the board with firm pressure",
      "scrape the chopped pepper to the edge of the board with firm pressure",
      "clear the cutting board with a long side to side motion of the knife",
      "clear the cutting board with a long side to side motion of the knife",
      "stir the pan with the spoon in a large circle while applying medium pressure",
      "stir the pan with the spoon in a large circle while applying medium pressure",
      "stir the pan with the spoon in a large circle while applying medium pressure",
      "stir the pan with the spoon in a large circle while applying medium pressure",
      "stir the pan with the spoon in a large circle while applying medium pressure",
      "move the spoon in a large circle while applying medium pressure to the pan",
      "move the spoon in a large circle while applying medium pressure to the pan",
      "move the spoon in a large circle while applying medium pressure to the pan",
      "move the spoon in a large circle while applying medium pressure to the pan",
      "stir the sauce in a large circle so nothing sticks to the pan",
      "stir the sauce in a large circle so nothing sticks to the pan",
      "stir the sauce in a large circle so nothing sticks to the pan",
      "keep the spoon moving in a large circle around the pan",
      "keep the spoon moving in a large circle around the pan",
      "keep the spoon moving in a large circle around the pan",
      "keep the spoon moving in a large circle around the pan",
      "keep the spoon moving in a large circle around the pan",
      "stir the soup in a small circle near the middle of the pot",
      "spread the sauce on the bread with the knife in a zigzag sweeping motion",
      "spread the sauce on the bread with the knife in a zigzag sweeping motion",
      "spread the sauce on the bread with the knife in a zigzag sweeping motion",
      "spread the sauce on the bread with the knife in a zigzag sweeping motion",
      "spread the sauce on the bread with the knife in a zigzag sweeping motion",
      "move the knife in a zigzag sweeping motion while applying medium pressure to the bread",
      "move the knife in a zigzag sweeping motion while applying medium pressure to the bread",
      "move the knife in a zigzag sweeping motion while applying medium pressure to the bread",
      "move the knife in a zigzag sweeping motion while applying medium pressure to the bread",
      "a zigzag sweeping motion covers the bread evenly",
      "a zigzag sweeping motion covers the bread evenly",
      "a zigzag sweeping motion covers the bread evenly",
      "spread the butter over the toast in a zigzag sweeping motion",
      "spread the butter over the toast in a zigzag sweeping motion",
      "while applying medium pressure keep the tool flat against the surface",
      "while applying medium pressure keep the tool flat against the surface",
      "while applying medium pressure keep the tool flat against the surface",
      "while applying medium pressure keep the tool flat against the surface",
      "while applying medium pressure keep the tool flat against the surface",
      "while applying medium pressure keep the tool flat against the surface",
      "while applying firm pressure move slowly and evenly",
      "while applying firm pressure move slowly and evenly",
      "while applying firm pressure move slowly and evenly",
      "while applying firm pressure move slowly and evenly",
      "while applying light pressure avoid scratching the surface",
      "while applying light pressure avoid scratching the surface",
      "applying medium pressure works for most kitchen tasks",
      "applying medium pressure works for most kitchen tasks",
      "applying medium pressure works for most kitchen tasks",
      "applying firm pressure helps when food sticks to the board",
      "applying firm pressure helps when food sticks to the board",
      "move the tool in a small circle when polishing",
      "move the tool in a small circle when polishing",
      "move the tool in a small circle when polishing",
      "move the tool in a short side to side motion for small spots",
      "move the tool in a short side to side motion for small spots",
      "move the tool in a short forward and back motion to loosen crumbs",
      "move the tool in a long forward and back motion down the length of the tray",
      "push the pile in a pushing motion away from you",
      "pull the scraps in a pulling motion toward you",
      "sweep the crumbs in a pushing motion to the left of the board",
      "sweep the crumbs in a pushing motion to the right of the board",
      "never stab downward with the knife when plating",
      "a stab downward motion ruins the presentation",
      "chop the onion before you heat the pan",
      "chop the onion before you heat the pan",
      "season the sauce with salt and pepper to taste",
      "season the sauce with salt and pepper to taste",
      "let the bread rest before you slice it",
      "let the bread rest before you slice it",
      "rinse the cloth after you wipe the plate",
      "rinse the cloth after you wipe the plate",
      "dry the board before you scrape it again",
      "dry the board before you scrape it again",
      "warm the pan before you stir the sauce",
      "warm the pan before you stir the sauce",
      "taste the sauce after you stir it",
      "taste the sauce after you stir it",
      "lay the bread flat before you spread the sauce",
      "lay the bread flat before you spread the sauce",
      "wipe the plate until it looks clean",
      "wipe the plate until it looks clean",
      "scrape the board until the pepper reaches the edge",
      "scrape the board until the pepper reaches the edge",
      "stir the pan until the sauce thickens",
      "stir the pan until the sauce thickens",
      "spread the sauce until the bread is covered",
      "spread the sauce until the bread is covered",
      "hold the cloth flat so it touches the plate",
      "hold the cloth flat so it touches the plate",
      "hold the scraper at a low angle to the board",
      "hold the scraper at a low angle to the board",
      "hold the spoon upright in the middle of the pan",
      "hold the spoon upright in the middle of the pan",
      "hold the knife almost flat against the bread",
      "hold the knife almost flat against the bread",
      "put the tools away after you wash them",
      "put the tools away after you wash them",
      "a clean plate needs a damp cloth and medium pressure",
      "a clean plate needs a damp cloth and medium pressure",
      "a clean board needs a firm scraper and steady hands",
      "a clean board needs a firm scraper and steady hands",
      "good stirring keeps the sauce moving in the pan",
      "good stirring keeps the sauce moving in the pan",
      "good spreading leaves an even layer on the bread",
      "good spreading leaves an even layer on the bread",
      "work the cloth across the plate in even passes",
      "work the cloth across the plate in even passes",
      "work the scraper across the board toward the edge",
      "work the scraper across the board toward the edge",
      "circle the spoon through the sauce without lifting it",
      "circle the spoon through the sauce without lifting it",
      "sweep the knife across the bread without tearing it",
      "sweep the knife across the bread without tearing it",
      "preheat the pan before the oil goes in",
      "preheat the pan before the oil goes in",
      "pat the board dry with a towel before you start",
      "pat the board dry with a towel before you start",
      "gather the scraps at the edge and lift them with the scraper",
      "gather the scraps at the edge and lift them with the scraper",
      "fold the sauce gently so the bread does not tear",
      "fold the sauce gently so the bread does not tear",
      "check the middle of the plate for missed spots",
      "check the middle of the plate for missed spots",
      "a damp cloth picks up crumbs better than a dry one",
      "a damp cloth picks up crumbs better than a dry one",
      "rest the knife on the edge of the board between passes",
      "rest the knife on the edge of the board between passes",
      "scrape toward the edge not toward your hand",
      "scrape toward the edge not toward your hand",
      "stir from the middle outward so the sauce heats evenly",
      "stir from the middle outward so the sauce heats evenly",
      "finish the wipe with one long pass across the plate",
      "finish the wipe with one long pass across the plate",
      "lift the spoon only after the sauce stops swirling",
      "lift the spoon only after the sauce stops swirling",
      "keep crumbs off the counter while you spread",
      "keep crumbs off the counter while you spread",
      "wash the sponge after scrubbing the pan",
      "wash the sponge after scrubbing the pan",
      "move in even passes and overlap each pass slightly",
      "move in even passes and overlap each pass slightly",
      "slow even passes beat fast uneven ones",
      "slow even passes beat fast uneven ones",
      "cover the whole surface before you repeat a pass",
      "cover the whole surface before you repeat a pass",
      "use the flat of the knife to spread and the edge to scrape",
      "use the flat of the knife to spread and the edge to scrape",
      "a light touch is enough once the surface is clean",
      "a light touch is enough once the surface is clean",
      "press harder only where food has dried on",
      "press harder only where food has dried on",
      "turn the plate as you wipe to reach the far side",
      "turn the plate as you wipe to reach the far side",
      "turn the board so the edge faces the bowl before scraping",
      "turn the board so the edge faces the bowl before scraping",
      "tilt the pan slightly while you stir the sauce",
      "tilt the pan slightly while you stir the sauce",
      "square the bread on the board before spreading",
      "square the bread on the board before spreading",
      "let the pan cool before you wipe it out",
      "let the pan cool before you wipe it out",
      "keep your wrist loose for a smooth circle",
      "keep your wrist loose for a smooth circle",
      "short strokes work near the rim of the plate",
      "short strokes work near the rim of the plate",
  };
  return lines;
}

}  // namespace tsel
