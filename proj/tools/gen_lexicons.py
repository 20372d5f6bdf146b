#!/usr/bin/env python3
# Copyright 2026 The Ofansiv Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the shipped lexicon tables under data/lexicons.

The output is deterministic; rerunning it on an unchanged script yields
byte-identical files. Hand-written entries come first, generated padding
follows a `# padding` marker.
"""

import argparse
import pathlib
import unicodedata

VERSION = "1.0"

# --- emoji -------------------------------------------------------------------

EMOJI_SEED = {
    "🤨": "وجه يعجز مع لسان",
    "😂": "وجه بدموع الفرح",
    "🤣": "يتدحرج على الأرض من الضحك",
    "❤️": "قلب أحمر",
    "❤": "قلب أحمر",
    "♥️": "بدلة القلب",
    "♥": "بدلة القلب",
    "💙": "قلب أزرق",
    "💛": "قلب أصفر",
    "💚": "قلب أخضر",
    "💜": "قلب أرجواني",
    "🖤": "قلب أسود",
    "💔": "قلب مكسور",
    "😄": "وجه مبتسم بعيون مبتسمة",
    "😁": "وجه مشرق بعيون مبتسمة",
    "😊": "وجه مبتسم بخدود متوردة",
    "🙂": "وجه مبتسم قليلا",
    "😅": "وجه مبتسم بعرق بارد",
    "😆": "وجه مبتسم بعيون مغمضة",
    "😉": "وجه يغمز",
    "😋": "وجه يتذوق طعاما لذيذا",
    "😍": "وجه مبتسم بعيون على شكل قلب",
    "🥰": "وجه مبتسم بقلوب",
    "😘": "وجه يرسل قبلة",
    "😎": "وجه مبتسم بنظارة شمسية",
    "😌": "وجه مرتاح",
    "😐": "وجه محايد",
    "😑": "وجه بلا تعبير",
    "😒": "وجه غير مستمتع",
    "🙄": "وجه بعيون متدحرجة",
    "🤔": "وجه مفكر",
    "😏": "وجه متكلف الابتسام",
    "😔": "وجه متأمل",
    "😞": "وجه محبط",
    "😢": "وجه باك",
    "😭": "وجه يبكي بصوت عال",
    "😳": "وجه متورد",
    "😱": "وجه يصرخ من الخوف",
    "😤": "وجه ينفث البخار",
    "🤐": "وجه بفم مغلق بسحاب",
    "🤫": "وجه يطلب الصمت",
    "🤭": "وجه بيد على الفم",
    "🤮": "وجه يتقيأ",
    "🤡": "وجه مهرج",
    "🌚": "وجه القمر الجديد",
    "💩": "كومة براز",
    "😡": "وجه غاضب جدا",
    "🤬": "وجه غاضب يشتم",
    "😠": "وجه غاضب",
    "👿": "وجه شيطان غاضب",
    "👍": "إبهام للأعلى",
    "👎": "إبهام للأسفل",
    "👏": "يدان تصفقان",
    "🙏": "يدان مضمومتان",
    "💪": "عضلة ذراع مثنية",
    "👊": "قبضة مضمومة",
    "✌️": "يد النصر",
    "✌": "يد النصر",
    "👋": "يد تلوح",
    "🖕": "الإصبع الأوسط",
    "🌹": "وردة",
    "🌷": "زهرة توليب",
    "💐": "باقة ورد",
    "🔥": "نار",
    "⚽": "كرة قدم",
    "🏆": "كأس",
    "🐶": "وجه كلب",
    "🐷": "وجه خنزير",
    "🐍": "ثعبان",
    "🐱": "وجه قطة",
    "🐒": "قرد",
    "🐴": "وجه حصان",
    "🐫": "جمل بسنامين",
}

TONED = ["👍", "👎", "👏", "🙏", "💪", "👊", "✌", "👋", "🖕"]
TONES = [
    ("🏻", "فاتح"),
    ("🏼", "فاتح متوسط"),
    ("🏽", "متوسط"),
    ("🏾", "داكن متوسط"),
    ("🏿", "داكن"),
]

ZWJ = {
    "👨‍👩‍👧": "عائلة أب وأم وبنت",
    "👨‍👩‍👦": "عائلة أب وأم وابن",
    "🏳️‍🌈": "علم قوس قزح",
    "👁️‍🗨️": "عين في فقاعة كلام",
    "❤️‍🔥": "قلب مشتعل",
    "🤦‍♂️": "رجل يضع يده على وجهه",
    "🤦‍♀️": "امرأة تضع يدها على وجهها",
    "🤷‍♂️": "رجل يهز كتفيه",
    "🤷‍♀️": "امرأة تهز كتفيها",
    "🙋‍♂️": "رجل يرفع يده",
    "🙋‍♀️": "امرأة ترفع يدها",
}

FLAGS = {
    "SA": "السعودية", "EG": "مصر", "AE": "الإمارات", "KW": "الكويت", "QA": "قطر",
    "BH": "البحرين", "OM": "عمان", "JO": "الأردن", "IQ": "العراق", "LB": "لبنان",
    "SY": "سوريا", "MA": "المغرب", "DZ": "الجزائر", "TN": "تونس", "LY": "ليبيا",
    "YE": "اليمن", "SD": "السودان", "PS": "فلسطين",
}

EMOJI_RANGES = [
    (0x2600, 0x27BF),
    (0x1F300, 0x1F5FF),
    (0x1F600, 0x1F64F),
    (0x1F680, 0x1F6FF),
    (0x1F900, 0x1F9FF),
    (0x1FA70, 0x1FAFF),
]

# Alternating letter alphabets so spelled indices never repeat a letter.
DIGITS_A = "ابتثجحخدذر"
DIGITS_B = "زسشصضطظعغف"


def spell_index(i):
    digits = str(i).zfill(4)
    return "".join((DIGITS_A if k % 2 == 0 else DIGITS_B)[int(d)] for k, d in enumerate(digits))


def flag(code):
    return "".join(chr(0x1F1E6 + ord(c) - ord("A")) for c in code)


def emoji_entries():
    seed = dict(EMOJI_SEED)
    for base in TONED:
        desc = EMOJI_SEED[base]
        for mod, tone in TONES:
            seed[base + mod] = desc + " بلون بشرة " + tone
    for mod, tone in TONES:
        seed[mod] = "لون بشرة " + tone
    seed.update(ZWJ)
    for code, name in FLAGS.items():
        seed[flag(code)] = "علم " + name

    padding = {}
    n = 0
    for lo, hi in EMOJI_RANGES:
        for cp in range(lo, hi + 1):
            ch = chr(cp)
            if unicodedata.category(ch) != "So" or ch in seed:
                continue
            n += 1
            padding[ch] = "رمز تعبيري " + spell_index(n)
    return seed, padding


# --- emoticons -----------------------------------------------------------------

MOUTHS = {
    ")": "وجه مبتسم",
    "]": "وجه مبتسم",
    "(": "وجه حزين",
    "[": "وجه حزين",
    "D": "ضحكة عريضة",
    "P": "وجه يخرج لسانه",
    "p": "وجه يخرج لسانه",
    "O": "وجه مندهش",
    "o": "وجه مندهش",
    "|": "وجه محايد",
    "/": "وجه متشكك",
    "\\": "وجه متشكك",
    "*": "قبلة",
    "X": "معقود اللسان",
    "x": "معقود اللسان",
    "S": "وجه مرتبك",
    "$": "وجه محرج",
    "@": "وجه يصرخ",
    "3": "وجه لطيف",
    "<": "وجه مستاء",
    "c": "وجه حزين جدا",
}
EYES = {":": "", "=": "", ";": "غمزة مع "}
NOSES = ["", "-", "^"]

EMOTICON_SPECIAL = {
    "<3": "قلب",
    "</3": "قلب مكسور",
    "XD": "ضحك شديد",
    "xD": "ضحك شديد",
    "^_^": "وجه سعيد",
    "^^": "وجه سعيد",
    "-_-": "وجه ممل",
    "T_T": "وجه يبكي",
    ":'(": "وجه يبكي",
    ":')": "دموع الفرح",
    "d:": "وجه يخرج لسانه",
    "D:": "وجه مرعوب",
    "(:": "وجه مبتسم",
    "):": "وجه حزين",
    "O_o": "وجه مستغرب",
    "o_O": "وجه مستغرب",
    ">:(": "وجه غاضب",
    ">:)": "وجه شرير",
    "B)": "وجه بنظارة",
    "8)": "وجه بنظارة",
}


def emoticon_entries():
    out = {}
    for eye, prefix in EYES.items():
        for nose in NOSES:
            for mouth, desc in MOUTHS.items():
                out[eye + nose + mouth] = prefix + desc
    out.update(EMOTICON_SPECIAL)
    return out


# --- dialect nouns -------------------------------------------------------------

DIALECT = {
    "ولد": ["رجل", "زلمة", "زول", "عيل", "واد"],
    "غبي": ["خبل", "دلخ", "عبيط", "مهبول", "أثول", "غشيم", "أهبل", "أهطل", "مخبول", "هبيل"],
    "ماذا": ["شنو", "ايش", "وش", "شو", "إيش"],
    "الآن": ["هسة", "هلأ", "دحين", "الحين", "دلوقتي", "توا"],
    "جيد": ["زين", "منيح", "كويس", "باهي", "مليح"],
    "كثير": ["وايد", "برشا", "هوايه", "بزاف"],
    "سيارة": ["موتر", "ترمبيل", "طونوبيل"],
    "امرأة": ["حرمة", "مرا"],
    "بيت": ["دار", "حوش"],
    "مال": ["فلوس", "مصاري", "بيزات"],
}

# --- animals -------------------------------------------------------------------

# singular -> plural (None when no plural is listed)
ANIMALS = [
    ("كلب", "كلاب"), ("قطة", "قطط"), ("قط", "قطط"), ("خنزير", "خنازير"), ("حمار", "حمير"),
    ("قرد", "قرود"), ("حية", "حيات"), ("ثعبان", "ثعابين"), ("أفعى", "أفاعي"),
    ("ثعلب", "ثعالب"), ("ذئب", "ذئاب"), ("أسد", None), ("نمر", "نمور"), ("فهد", "فهود"),
    ("دب", "دببة"), ("فيل", "فيلة"), ("جمل", None), ("ناقة", "نوق"), ("بقرة", "بقر"),
    ("ثور", "ثيران"), ("عجل", "عجول"), ("خروف", "خرفان"), ("نعجة", "نعاج"), ("تيس", "تيوس"),
    ("حصان", "أحصنة"), ("بغل", "بغال"), ("جحش", "جحوش"), ("أرنب", "أرانب"),
    ("فأر", "فئران"), ("جرذ", "جرذان"), ("سنجاب", "سناجب"), ("ضفدع", "ضفادع"),
    ("سلحفاة", "سلاحف"), ("تمساح", "تماسيح"), ("حوت", "حيتان"), ("دلفين", "دلافين"),
    ("عقرب", "عقارب"), ("عنكبوت", "عناكب"), ("نملة", "نمل"), ("نحلة", "نحل"),
    ("ذبابة", "ذباب"), ("بعوضة", "بعوض"), ("صرصور", "صراصير"), ("دودة", "ديدان"),
    ("حشرة", "حشرات"), ("غراب", "غربان"), ("بومة", "بوم"), ("نسر", "نسور"),
    ("صقر", "صقور"), ("دجاجة", "دجاج"), ("ديك", "ديوك"), ("بطة", "بط"), ("وزة", "وز"),
    ("ببغاء", "ببغاوات"), ("طاووس", "طواويس"), ("ضبع", "ضباع"), ("غزال", "غزلان"),
    ("زرافة", "زرافات"), ("خفاش", "خفافيش"), ("قنفذ", "قنافذ"), ("بعير", "بعران"),
    ("كلبة", "كلبات"), ("حمارة", "حمارات"), ("قردة", "قردات"),
]

# Dialect variants of animal names, listed as-is.
ANIMAL_DIALECT = ["أطة", "بسة", "قطوة", "بزونة", "دمة", "قطو", "بزون"]


def dual_forms(word):
    if word.endswith("ء") or word.endswith("ى"):
        return []
    stem = word[:-1] + "ت" if word.endswith("ة") else word
    return [stem + "ان", stem + "ين"]


def animal_entries():
    forms = []
    for sing, plural in ANIMALS:
        forms.append(sing)
        forms.append("ال" + sing)
        forms.extend(dual_forms(sing))
        if plural and plural != sing:
            forms.append(plural)
            forms.append("ال" + plural)
    for word in ANIMAL_DIALECT:
        forms.append(word)
        forms.append("ال" + word)
        forms.extend(dual_forms(word))
    seen = []
    for f in forms:
        f = unicodedata.normalize("NFC", f)
        if f not in seen:
            seen.append(f)
    return seen


# --- stopwords -----------------------------------------------------------------

STOPWORDS = """
يا في من على إلى الى عن مع هذا هذه ذلك تلك هؤلاء أولئك هنا هناك هو هي هم هما هن
أنا انا نحن أنت انت أنتم انتم أنتن انتي إنت الذي التي الذين اللذان اللتان اللاتي
ما ماذا متى أين اين كيف لماذا لم لن لا ليس ليست قد كان كانوا يكون تكون أن ان إن
لكن بل ثم أو او أم حتى إذا اذا لو كل بعض غير بين عند عندما منذ خلال بعد قبل تحت
فوق حول ضد نحو لدى لدي له لها لهم لنا لك لكم به بها بهم فيه فيها فيهم منه منها
منهم عليه عليها عليهم إليه اليه إليها عنه عنها كما مثل أي اي أيضا ايضا فقط جدا
هل قال قالت يقول أصبح اصبح صار كانت مازال ما زال لازال و ف ب ل ك وهو وهي وهم
وأنا وانا ولا ولم ولن وما ومن وفي وعلى فإن فان لأن لان كذلك هكذا إلا الا سوف
""".split()


def stopword_entries():
    out = []
    for w in STOPWORDS:
        w = unicodedata.normalize("NFC", w)
        if w not in out and any("؀" <= c <= "ۿ" for c in w):
            out.append(w)
    return out


# --- writers -------------------------------------------------------------------


def write(path, kind, source, seed, padding=None, single_column=False):
    lines = [f"# kind: {kind}", f"# version: {VERSION}", f"# source: {source}"]
    if single_column:
        lines += seed
    else:
        lines += [f"{k}\t{v}" for k, v in seed.items()]
    if padding:
        lines.append("# padding")
        lines += [f"{k}\t{v}" for k, v in padding.items()]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return len(seed) + len(padding or {})


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    default_out = pathlib.Path(__file__).resolve().parent.parent / "data" / "lexicons"
    ap.add_argument("--out", type=pathlib.Path, default=default_out)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    seed, padding = emoji_entries()
    counts = {
        "emoji": write(args.out / "emoji.tsv", "emoji",
                       "hand-written descriptions; padding from Unicode So codepoints", seed, padding),
        "emoticon": write(args.out / "emoticon.tsv", "emoticon",
                          "eyes x noses x mouths plus common specials", emoticon_entries()),
        "dialect": write(args.out / "dialect.tsv", "dialect", "hand-written dialect nouns",
                         {k: msa for msa, keys in DIALECT.items() for k in keys}),
        "animal": write(args.out / "animal.tsv", "animal",
                        "animal names with definite, dual and plural forms",
                        {k: "حيوان" for k in animal_entries()}),
        "stopword": write(args.out / "stopword.tsv", "stopword", "common Arabic function words",
                          stopword_entries(), single_column=True),
    }
    for kind, n in counts.items():
        print(f"{kind}: {n}")


if __name__ == "__main__":
    main()
