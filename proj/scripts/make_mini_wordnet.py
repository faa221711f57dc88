#!/usr/bin/env python3
"""Builds the compact WordNet-format lexicon shipped under data/wordnet/.

Emits index.{noun,verb,adj,adv} and data.{noun,verb,adj,adv} in the real
WordNet 3.x database layout: fixed-width byte offsets into the data files,
space-separated pointer records, hex word counts, and license-style header
lines that begin with two spaces. Regenerate with:

    python3 scripts/make_mini_wordnet.py data/wordnet
"""

import sys
from collections import OrderedDict

# (key, words, hypernym keys, part-meronym keys, gloss)
NOUNS = [
    ("entity", ["entity"], [], [], "that which is perceived to exist"),
    ("object", ["object", "physical_object"], ["entity"], [], "a tangible thing"),
    ("organism", ["organism", "being"], ["entity"], [], "a living thing"),
    ("plant", ["plant", "flora"], ["organism"], [], "a living organism lacking the power of locomotion"),
    ("woody_plant", ["woody_plant", "ligneous_plant"], ["plant"], [], "a plant having hard lignified tissues"),
    ("tree", ["tree"], ["woody_plant"], ["trunk", "branch"], "a tall perennial woody plant having a main trunk"),
    ("tree_diagram", ["tree", "tree_diagram"], ["figure"], [], "a figure that branches from a single root"),
    ("figure", ["figure"], ["object"], [], "a diagram or illustration"),
    ("trunk", ["trunk", "tree_trunk", "bole"], ["stalk"], [], "the main stem of a tree"),
    ("stalk", ["stalk", "stem"], ["plant_part"], [], "a slender structure that supports a plant"),
    ("plant_part", ["plant_part", "plant_structure"], ["object"], [], "any part of a plant"),
    ("branch", ["branch"], ["stalk"], [], "a division of a stem arising from the trunk"),
    ("root", ["root"], ["plant_part"], [], "the usually underground organ of a plant"),
    ("leaf", ["leaf", "leafage"], ["plant_part"], [], "the main organ of photosynthesis"),
    ("seed", ["seed"], ["plant_part"], [], "a small hard fruit of a plant"),
    ("flower", ["flower", "bloom", "blossom"], ["plant_part"], [], "the reproductive organ of a plant"),
    ("grass", ["grass"], ["plant"], [], "a narrow-leaved green herbage"),
    ("animal", ["animal", "animate_being", "beast"], ["organism"], [], "a living organism having voluntary movement"),
    ("feline", ["feline", "felid"], ["animal"], [], "any of various lithe-bodied carnivores"),
    ("cat", ["cat", "true_cat"], ["feline"], [], "a small domesticated feline"),
    ("kitten", ["kitten", "kitty"], ["cat"], [], "a young domestic cat"),
    ("tiger", ["tiger"], ["feline"], [], "a large striped feline of forests in most of Asia"),
    ("lion", ["lion"], ["feline"], [], "a large gregarious predatory feline"),
    ("canine", ["canine", "canid"], ["animal"], [], "any of various fissiped mammals with long muzzles"),
    ("dog", ["dog", "domestic_dog"], ["canine"], [], "a domesticated canid kept by humans"),
    ("wolf", ["wolf"], ["canine"], [], "a wild canine that hunts in packs"),
    ("horse", ["horse", "equus_caballus"], ["animal"], [], "a solid-hoofed herbivorous quadruped"),
    ("cow", ["cow", "moo-cow"], ["animal"], [], "a domesticated bovine animal"),
    ("sheep", ["sheep"], ["animal"], [], "a woolly ruminant mammal"),
    ("bear", ["bear"], ["animal"], [], "a massive plantigrade mammal"),
    ("elephant", ["elephant"], ["animal"], [], "a very large herbivore with a trunk"),
    ("monkey", ["monkey"], ["animal"], [], "a long-tailed primate"),
    ("mouse", ["mouse"], ["animal"], [], "a small gnawing rodent"),
    ("bird", ["bird"], ["animal"], [], "a warm-blooded egg-laying vertebrate with feathers"),
    ("fish", ["fish"], ["animal"], [], "an aquatic cold-blooded vertebrate"),
    ("whale", ["whale"], ["animal"], [], "a very large marine mammal"),
    ("shark", ["shark"], ["fish"], [], "a large predatory fish"),
    ("snake", ["snake", "serpent", "ophidian"], ["reptile"], [], "a limbless scaly elongate reptile"),
    ("reptile", ["reptile", "reptilian"], ["animal"], [], "a cold-blooded scaled vertebrate"),
    ("dinosaur", ["dinosaur"], ["reptile"], [], "any of numerous extinct terrestrial reptiles"),
    ("insect", ["insect"], ["animal"], ["leg"], "a small air-breathing arthropod"),
    ("bee", ["bee"], ["insect"], [], "an insect that collects nectar and pollen"),
    ("ant", ["ant", "emmet"], ["insect"], [], "a social insect living in organized colonies"),
    ("butterfly", ["butterfly"], ["insect"], [], "an insect with broad colorful wings"),
    ("spider", ["spider"], ["animal"], [], "a predatory arachnid that spins webs"),
    ("plankton", ["plankton"], ["organism"], [], "small organisms floating in water"),
    ("leg", ["leg"], ["limb"], [], "a structure used for locomotion"),
    ("limb", ["limb"], ["object"], [], "one of the jointed appendages of an animal"),
    ("person", ["person", "individual", "someone"], ["organism"], [], "a human being"),
    ("visitor", ["visitor", "visitant"], ["person"], [], "someone who visits"),
    ("citizen", ["citizen"], ["person"], [], "a native or naturalized member of a state"),
    ("student", ["student", "pupil", "educatee"], ["person"], [], "a learner who is enrolled in an educational institution"),
    ("author", ["author", "writer"], ["person"], [], "someone who originates or writes"),
    ("scientist", ["scientist"], ["person"], [], "a person with advanced knowledge of science"),
    ("gardener", ["gardener"], ["person"], [], "someone who works in a garden"),
    ("annotator", ["annotator"], ["person"], [], "someone who supplies critical commentary"),
    ("crowd", ["crowd"], ["group"], [], "a large number of things or people together"),
    ("group", ["group", "grouping"], ["entity"], [], "any number of entities considered as a unit"),
    ("company", ["company"], ["group"], [], "an institution created to conduct business"),
    ("water", ["water", "h2o"], ["liquid"], [], "a clear colorless odorless liquid"),
    ("liquid", ["liquid"], ["substance"], [], "a fluid matter state"),
    ("substance", ["substance", "matter"], ["entity"], [], "that which has mass and occupies space"),
    ("milk", ["milk"], ["liquid"], [], "a white nutritious liquid"),
    ("gas", ["gas"], ["substance"], [], "a fluid in the gaseous state"),
    ("oxygen", ["oxygen", "o"], ["gas"], [], "a colorless odorless gaseous element"),
    ("carbon_dioxide", ["carbon_dioxide", "co2"], ["gas"], [], "a heavy odorless colorless gas"),
    ("air", ["air"], ["gas"], [], "the mixture of gases surrounding the earth"),
    ("metal", ["metal", "metallic_element"], ["substance"], [], "a chemical element that conducts electricity"),
    ("electricity", ["electricity"], ["energy"], [], "a physical phenomenon of charges"),
    ("energy", ["energy"], ["entity"], [], "the capacity to do work"),
    ("heat", ["heat", "warmth"], ["energy"], [], "a form of thermal energy"),
    ("light", ["light", "visible_light"], ["energy"], [], "electromagnetic radiation that can be seen"),
    ("fire", ["fire", "flame"], ["process"], [], "the process of combustion producing light and heat"),
    ("process", ["process", "physical_process"], ["entity"], [], "a sustained phenomenon"),
    ("photosynthesis", ["photosynthesis"], ["process"], [], "the synthesis of compounds in plants aided by light"),
    ("growth", ["growth", "growing"], ["process"], [], "a process of becoming larger"),
    ("life", ["life"], ["process"], [], "the course of existence of an organism"),
    ("farming", ["farming", "agriculture", "husbandry"], ["process"], [], "the practice of cultivating land"),
    ("cooking", ["cooking", "cookery"], ["process"], [], "the act of preparing food by heating"),
    ("erosion", ["erosion", "eroding"], ["process"], [], "the gradual wearing away of land"),
    ("storm", ["storm", "violent_storm"], ["weather"], [], "a violent weather condition"),
    ("weather", ["weather", "weather_condition"], ["process"], [], "the atmospheric conditions at a place"),
    ("lightning", ["lightning"], ["weather"], [], "an abrupt natural electrical discharge in the sky"),
    ("rain", ["rain", "rainfall"], ["weather"], [], "water falling in drops from clouds"),
    ("snow", ["snow", "snowfall"], ["weather"], [], "frozen precipitation of ice crystals"),
    ("wind", ["wind", "air_current"], ["weather"], [], "air moving from high to low pressure"),
    ("cloud", ["cloud"], ["object"], [], "a visible mass of condensed water vapor"),
    ("sky", ["sky"], ["object"], [], "the apparent surface over the earth"),
    ("sun", ["sun"], ["star"], [], "the star that the earth orbits"),
    ("star", ["star"], ["object"], [], "a celestial body of hot gases"),
    ("moon", ["moon"], ["object"], [], "the natural satellite of the earth"),
    ("earth", ["earth", "world", "globe"], ["object"], [], "the third planet from the sun"),
    ("mountain", ["mountain", "mount"], ["object"], [], "a land mass rising high above the surroundings"),
    ("river", ["river"], ["object"], [], "a large natural stream of water"),
    ("sea", ["sea"], ["object"], [], "a division of an ocean"),
    ("ocean", ["ocean"], ["object"], [], "a large body of salt water"),
    ("forest", ["forest", "wood", "woods"], ["object"], [], "land densely covered with trees"),
    ("garden", ["garden"], ["object"], [], "a plot of ground where plants are cultivated"),
    ("park", ["park", "commons"], ["object"], [], "a large area of land preserved for recreation"),
    ("field", ["field"], ["object"], [], "a piece of open cleared land"),
    ("paddy", ["paddy", "paddy_field", "rice_paddy"], ["field"], [], "an irrigated field where rice is grown"),
    ("soil", ["soil", "dirt"], ["substance"], [], "the top layer of the land surface"),
    ("sand", ["sand"], ["substance"], [], "a loose material of granular rock fragments"),
    ("stone", ["stone", "rock"], ["substance"], [], "a lump of hard consolidated mineral matter"),
    ("winter", ["winter", "wintertime"], ["season"], [], "the coldest season of the year"),
    ("season", ["season", "time_of_year"], ["entity"], [], "one of the natural periods of the year"),
    ("year", ["year", "twelvemonth"], ["entity"], [], "a period of time lasting twelve months"),
    ("ring", ["ring", "annulus"], ["object"], [], "a circular band or growth layer"),
    ("cavity", ["cavity", "pit"], ["object"], [], "a sizeable hole"),
    ("hollow", ["hollow", "holler"], ["cavity"], [], "a small valley or depression"),
    ("level", ["level", "grade"], ["entity"], [], "a position on a scale"),
    ("floor", ["floor", "level", "storey"], ["object"], [], "a structure on which to walk or a storey of a building"),
    ("building", ["building", "edifice"], ["object"], ["floor"], "a structure with walls and a roof"),
    ("home", ["home", "dwelling"], ["building"], [], "housing that someone is living in"),
    ("museum", ["museum"], ["building"], [], "a building in which objects of interest are displayed"),
    ("site", ["site", "land_site"], ["object"], [], "the piece of land on which something is located"),
    ("page", ["page"], ["object"], [], "one side of a sheet of paper or a web document"),
    ("website", ["website", "web_site"], ["site"], [], "a computer connected to the internet serving pages"),
    ("web", ["web"], ["object"], [], "an intricate network of threads"),
    ("city", ["city", "metropolis"], ["object"], [], "a large and densely populated urban area"),
    ("paris", ["paris", "city_of_light"], ["city"], [], "the capital and largest city of France"),
    ("rome", ["rome", "eternal_city"], ["city"], [], "the capital and largest city of Italy"),
    ("english", ["english", "english_language"], ["language"], [], "the West Germanic language spoken in many countries"),
    ("language", ["language", "linguistic_communication"], ["entity"], [], "a systematic means of communicating"),
    ("vehicle", ["vehicle"], ["object"], [], "a conveyance that transports people or objects"),
    ("car", ["car", "auto", "automobile"], ["vehicle"], ["battery"], "a motor vehicle with four wheels"),
    ("battery", ["battery"], ["device"], [], "a device that produces electricity"),
    ("device", ["device"], ["object"], [], "an instrumentality invented for a purpose"),
    ("machine", ["machine"], ["device"], [], "a device with interrelated parts performing work"),
    ("robot", ["robot", "automaton"], ["machine"], [], "a mechanism that can move automatically"),
    ("computer", ["computer", "computing_machine"], ["machine"], [], "a machine for performing calculations"),
    ("camera", ["camera", "photographic_camera"], ["device"], [], "equipment for taking photographs"),
    ("map", ["map"], ["object"], [], "a diagrammatic representation of an area"),
    ("painting", ["painting", "picture"], ["object"], [], "graphic art consisting of an artistic composition"),
    ("story", ["story", "narrative", "tale"], ["entity"], [], "a message that tells the particulars of an act"),
    ("sound", ["sound"], ["entity"], [], "the particular auditory effect produced by a source"),
    ("effect", ["effect", "consequence"], ["entity"], [], "a phenomenon that follows from something"),
    ("fact", ["fact"], ["entity"], [], "a piece of information about circumstances"),
    ("result", ["result", "outcome"], ["effect"], [], "something that follows as a consequence"),
    ("goal", ["goal", "end"], ["entity"], [], "the state of affairs that a plan is intended to achieve"),
    ("attention", ["attention"], ["entity"], [], "the faculty of concentrating"),
    ("color", ["color", "colour"], ["entity"], [], "a visual attribute of things from reflected light"),
    ("red", ["red", "redness"], ["color"], [], "the color of blood"),
    ("crime", ["crime", "offense"], ["entity"], [], "an act punishable by law"),
    ("murder", ["murder", "slaying"], ["crime"], [], "the unlawful premeditated killing of a human being"),
    ("law", ["law"], ["entity"], [], "the collection of rules imposed by authority"),
    ("war", ["war", "warfare"], ["entity"], [], "the waging of armed conflict against an enemy"),
    ("complication", ["complication", "complicatedness"], ["entity"], [], "a development that complicates a situation"),
    ("meal", ["meal", "repast"], ["food"], [], "the food served and eaten at one time"),
    ("food", ["food", "nutrient"], ["substance"], [], "any substance that can be metabolized"),
    ("fruit", ["fruit"], ["food"], [], "the ripened reproductive body of a seed plant"),
    ("apple", ["apple"], ["fruit"], [], "a fruit with red or yellow or green skin"),
    ("grain", ["grain", "food_grain", "cereal"], ["food"], [], "dried seeds of a cereal grass"),
    ("rice", ["rice"], ["grain"], [], "grains used as food"),
    ("egg", ["egg", "eggs"], ["food"], [], "an oval reproductive body laid by female birds"),
    ("homework", ["homework", "prep", "preparation"], ["entity"], [], "school assignments done outside class"),
    ("parking", ["parking"], ["entity"], [], "space in which vehicles can be parked"),
    ("product", ["product", "merchandise", "ware"], ["entity"], [], "commodities offered for sale"),
]

VERBS = [
    ("be", ["be", "exist"], "have an existence"),
    ("have", ["have", "have_got", "hold"], "have or possess"),
    ("do", ["do", "execute", "perform"], "carry out an action"),
    ("add", ["add"], "bestow a quality on or make an addition"),
    ("produce", ["produce", "bring_forth"], "bring forth or yield"),
    ("grow", ["grow"], "increase in size by natural process"),
    ("live", ["live", "dwell", "inhabit"], "make one's home in a place"),
    ("use", ["use", "utilize", "employ"], "put into service"),
    ("sleep", ["sleep", "slumber"], "be asleep"),
    ("conduct", ["conduct", "transmit", "carry"], "serve as a conduit for"),
    ("boil", ["boil"], "come to the boiling point"),
    ("say", ["say", "state", "tell"], "express in words"),
    ("make", ["make", "create", "produce"], "create or manufacture"),
    ("take", ["take"], "get into one's hands or possession"),
    ("spin", ["spin"], "form filaments or twist into threads"),
    ("sell", ["sell"], "exchange for money"),
    ("entertain", ["entertain", "amuse"], "provide amusement for"),
    ("attract", ["attract", "pull", "draw"], "exert a force or appeal on"),
    ("roam", ["roam", "wander", "range"], "move about aimlessly"),
    ("vanish", ["vanish", "disappear"], "cease to exist or be visible"),
    ("clear", ["clear"], "remove obstructions or unwanted growth from"),
    ("destroy", ["destroy", "ruin"], "do away with or cause the destruction of"),
    ("describe", ["describe", "depict"], "give a statement representing something"),
    ("mean", ["mean", "signify", "denote"], "denote or connote"),
    ("recommend", ["recommend", "urge", "advocate"], "push for something"),
    ("eat", ["eat", "consume"], "take in solid food"),
    ("manufacture", ["manufacture", "fabricate"], "put together out of artificial or natural components"),
    ("start", ["start", "begin", "initiate"], "set in motion or cause to begin"),
    ("protect", ["protect", "guard"], "shield from danger or harm"),
    ("run", ["run"], "move fast on foot"),
    ("continue", ["continue", "go_on", "proceed"], "keep or maintain in a state or activity"),
    ("die", ["die", "perish", "decease"], "stop living"),
    ("absorb", ["absorb", "take_in"], "take something in through pores or openings"),
    ("release", ["release", "free", "liberate"], "grant freedom to or let out"),
    ("thrive", ["thrive", "prosper", "flourish"], "grow vigorously or make steady progress"),
    ("list", ["list", "enumerate"], "give or mention one after another"),
    ("chase", ["chase", "pursue"], "go after with the intent to catch"),
    ("sing", ["sing"], "produce musical tones with the voice"),
    ("fly", ["fly", "wing"], "travel through the air"),
    ("swim", ["swim"], "travel through water"),
    ("climb", ["climb", "mount"], "go upward with gradual or continuous progress"),
    ("hunt", ["hunt", "hunt_down"], "pursue for food or sport"),
    ("drink", ["drink", "imbibe"], "take in liquids"),
    ("see", ["see", "perceive"], "perceive by sight"),
    ("know", ["know", "cognize"], "be cognizant of some fact"),
    ("write", ["write", "compose"], "produce a literary work"),
    ("read", ["read"], "interpret something written or printed"),
    ("teach", ["teach", "instruct"], "impart skills or knowledge to"),
    ("learn", ["learn", "acquire"], "gain knowledge or skills"),
    ("build", ["build", "construct"], "make by combining materials and parts"),
    ("carry", ["carry", "transport"], "move while supporting"),
    ("hold", ["hold", "keep", "maintain"], "keep in a certain state or position"),
    ("move", ["move", "displace"], "cause to change position"),
    ("play", ["play"], "engage in recreational activities"),
    ("help", ["help", "assist", "aid"], "give assistance"),
    ("need", ["need", "require", "want"], "have a requirement for"),
    ("love", ["love"], "have a great affection for"),
    ("tree", ["tree"], "chase an animal up a tree"),
    ("park", ["park"], "maneuver a vehicle into a location"),
    ("rain", ["rain", "rain_down"], "precipitate as rain"),
    ("fish", ["fish"], "catch or try to catch fish"),
    ("water", ["water", "irrigate"], "supply with water"),
]

ADJS = [
    ("perennial", ["perennial"], "lasting three seasons or more"),
    ("woody", ["woody"], "made of or containing wood"),
    ("long", ["long"], "of relatively great extent"),
    ("large", ["large", "big"], "above average in size"),
    ("single", ["single", "individual"], "being or characteristic of one"),
    ("new", ["new"], "not of long existence"),
    ("electric", ["electric", "electrical"], "using or providing electricity"),
    ("loyal", ["loyal"], "steadfast in allegiance"),
    ("striped", ["striped", "stripy"], "marked or decorated with stripes"),
    ("illegal", ["illegal"], "prohibited by law"),
    ("confidential", ["confidential"], "entrusted with private information"),
    ("infrequent", ["infrequent"], "not frequent"),
    ("serious", ["serious"], "concerned with work rather than play"),
    ("essential", ["essential"], "absolutely necessary"),
    ("free", ["free", "gratis"], "costing nothing"),
    ("gentle", ["gentle"], "soft and mild"),
    ("soft", ["soft"], "yielding readily to pressure"),
    ("meticulous", ["meticulous", "punctilious"], "marked by extreme care in treatment of details"),
    ("careful", ["careful"], "exercising caution"),
    ("fast", ["fast"], "acting or moving quickly"),
    ("tall", ["tall"], "great in vertical dimension"),
    ("healthy", ["healthy"], "having or indicating good health"),
    ("important", ["important", "of_import"], "of great significance"),
    ("green", ["green", "greenish"], "of the color between blue and yellow"),
    ("blue", ["blue", "bluish"], "of the color of the clear sky"),
    ("small", ["small", "little"], "limited in size or scope"),
    ("old", ["old"], "having lived for a long time"),
    ("young", ["young", "immature"], "being in an early period of life"),
    ("hot", ["hot"], "having a high temperature"),
    ("cold", ["cold"], "having a low temperature"),
    ("wet", ["wet"], "covered with liquid"),
    ("dry", ["dry"], "free from moisture"),
    ("heavy", ["heavy"], "of comparatively great weight"),
    ("wild", ["wild", "untamed"], "in a natural state"),
    ("common", ["common"], "widespread or ordinary"),
    ("rare", ["rare"], "not widely distributed"),
    ("strong", ["strong"], "having strength"),
    ("weak", ["weak"], "lacking strength"),
    ("deep", ["deep"], "extending far downward"),
    ("bright", ["bright"], "emitting much light"),
    ("dark", ["dark"], "devoid of light"),
    ("clean", ["clean"], "free from dirt"),
    ("sweet", ["sweet"], "pleasing to the sense of taste"),
    ("loud", ["loud"], "characterized by strong sound"),
    ("quiet", ["quiet"], "free of noise"),
    ("red", ["red", "reddish"], "of the color of blood"),
]

ADVS = [
    ("essentially", ["essentially", "basically"], "at bottom or by one's nature"),
    ("usually", ["usually", "normally", "ordinarily"], "under normal conditions"),
    ("worldwide", ["worldwide", "world-wide"], "everywhere in the world"),
    ("quickly", ["quickly", "rapidly"], "with speed"),
    ("often", ["often", "frequently"], "many times at short intervals"),
    ("slowly", ["slowly", "easy"], "without speed"),
    ("sometimes", ["sometimes"], "on certain occasions"),
    ("generally", ["generally", "by_and_large"], "usually; as a rule"),
    ("rarely", ["rarely", "seldom"], "not often"),
    ("everywhere", ["everywhere", "everyplace"], "to or in any or all places"),
    ("early", ["early"], "at or near the beginning"),
    ("late", ["late"], "at or near the end"),
    ("soon", ["soon", "shortly"], "in the near future"),
    ("too", ["too", "excessively"], "to a degree exceeding normal limits"),
]

HEADER = [
    "  1 Compact lexicon in the WordNet 3.x database file format.  ",
    "  2 Generated by scripts/make_mini_wordnet.py; regenerate rather  ",
    "  3 than editing by hand, since synset offsets are byte positions.  ",
]


def build_pos(pos_char, lex_filenum, synsets):
    """synsets: list of (key, words, hypernym_keys, meronym_keys, gloss)."""
    header_text = "".join(line + "\n" for line in HEADER)

    def render(entry, offsets):
        key, words, hypers, meros, gloss = entry
        pointers = [("@", h) for h in hypers] + [("%p", m) for m in meros]
        parts = [
            offsets.get(key, "0" * 8),
            "%02d" % lex_filenum,
            pos_char,
            "%02x" % len(words),
        ]
        for w in words:
            parts += [w, "0"]
        parts.append("%03d" % len(pointers))
        for sym, target in pointers:
            parts += [sym, offsets.get(target, "0" * 8), pos_char, "0000"]
        return " ".join(parts) + " | " + gloss + "  "

    # First pass with dummy offsets fixes every line length (offsets are
    # always 8 digits), so real byte offsets can be assigned directly.
    offsets = {}
    pos = len(header_text.encode("utf-8"))
    for entry in synsets:
        line = render(entry, {})
        offsets[entry[0]] = "%08d" % pos
        pos += len(line.encode("utf-8")) + 1
    data_lines = [render(entry, offsets) for entry in synsets]

    # Index: lemma -> synsets in definition order (sense order).
    lemma_senses = OrderedDict()
    lemma_symbols = {}
    for entry in synsets:
        key, words, hypers, meros, gloss = entry
        for w in words:
            lemma_senses.setdefault(w, []).append(key)
            syms = lemma_symbols.setdefault(w, [])
            for s in ["@"] * bool(hypers) + ["%p"] * bool(meros):
                if s not in syms:
                    syms.append(s)

    index_lines = []
    for lemma in sorted(lemma_senses):
        keys = lemma_senses[lemma]
        syms = lemma_symbols[lemma]
        parts = [lemma, pos_char, str(len(keys)), str(len(syms))]
        parts += syms
        parts += [str(len(keys)), "1"]
        parts += [offsets[k] for k in keys]
        index_lines.append(" ".join(parts) + "  ")

    return header_text + "".join(l + "\n" for l in data_lines), \
        header_text + "".join(l + "\n" for l in index_lines)


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "data/wordnet"
    datasets = [
        ("noun", "n", 3, NOUNS),
        ("verb", "v", 30, [(k, w, [], [], g) for k, w, g in VERBS]),
        ("adj", "a", 0, [(k, w, [], [], g) for k, w, g in ADJS]),
        ("adv", "r", 2, [(k, w, [], [], g) for k, w, g in ADVS]),
    ]
    for suffix, pos_char, lexnum, synsets in datasets:
        data, index = build_pos(pos_char, lexnum, synsets)
        with open(f"{out_dir}/data.{suffix}", "w", encoding="utf-8") as f:
            f.write(data)
        with open(f"{out_dir}/index.{suffix}", "w", encoding="utf-8") as f:
            f.write(index)
        print(f"{suffix}: {len(synsets)} synsets, "
              f"{len(index.splitlines()) - len(HEADER)} lemmas")


if __name__ == "__main__":
    main()
