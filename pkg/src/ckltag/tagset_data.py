"""Embedded tag inventory for the Central Kurdish (Sorani) tagset.

The 97 numbered rows are transcribed verbatim from the published tag table:
(index, category as printed, English name, abbreviation as printed, Kurdish
name as printed). Kurdish name strings are kept exactly as they appear in the
source, including visibly OCR-damaged spellings; entries containing letters
outside the Kurdish alphabet are flagged for native-speaker review at load
time rather than silently "corrected" here.
"""

# fmt: off
TABLE_ROWS = (
    (1, 'Noun', 'Simple Noun', 'N-S', 'ناوی ساده'),
    (2, 'Noun', 'Compound Noun', 'N-COMP', 'ناوی لیکندراو'),
    (3, 'Noun', 'Extended Noun', 'N-EXT', 'ناوی داریزراو'),
    (4, 'Noun', 'Proper Noun', 'N-PROP', 'ناوی تایبتهی'),
    (5, 'Noun', 'Common Noun', 'N-COM', 'ناوی گشتهی'),
    (6, 'Noun', 'Collective Noun', 'N-COLL', 'ناوی کۆمهلهی'),
    (7, 'Noun', 'Singular Noun', 'N-SG', 'ناوی تاک'),
    (8, 'Noun', 'Plural Noun', 'N-PL', 'ناوی کۆ'),
    (9, 'Noun', 'Masculine Noun', 'N-M', 'ناوی نێر'),
    (10, 'Noun', 'Feminine Noun', 'N-F', 'ناوی مین'),
    (11, 'Noun', 'Dual-Gender Noun', 'N-DUAL', 'ناوی دولایین'),
    (12, 'Noun', 'Gender-Neutral Noun', 'N-GN', 'ناوی بیلاین'),
    (13, 'Noun', 'Concrete Noun', 'N-CN', 'ناوی مادی'),
    (14, 'Noun', 'Abstract Noun', 'N-AB', 'ناوی واتایی'),
    (15, 'Noun', 'Definite Noun Phrase', 'N-DNP', 'ناوی ناسراو'),
    (16, 'Noun', 'Indefinite Noun Phrase', 'N-INP', 'ناوی نه ناسراو'),
    (17, 'Noun', 'Subject Noun', 'N-SUB', 'ناوی بکەر'),
    (18, 'Pronoun', 'Independent Pronoun', 'PR-INDEP', 'جیناوی سهر بهخۆ'),
    (19, 'Pronoun', 'Clitic Pronoun', 'PR-CLIT', 'جیناوی لکاو'),
    (20, 'Pronoun', 'Demonstrative Pronoun', 'PR-DEM', 'جیناوی نیشانه'),
    (21, 'Pronoun', 'Reflexive Pronoun', 'PR-REF', 'جیناوی خۆیی'),
    (22, 'Pronoun', 'Possessive Pronoun', 'PR-POSS', 'جیناوی ههیی'),
    (23, 'Pronoun', 'Interrogative Pronoun', 'PR-INT', 'جیناوی پرسیار'),
    (24, 'Pronoun', 'Negative Pronoun', 'PR-NEG', 'جیناوی نهی'),
    (25, 'Pronoun', 'Quantifier Pronouns', 'PR-QUAN', 'جیناوی چهندیهی'),
    (26, 'Pronoun', 'Definite Pronoun', 'PR-DEF', 'جیناوی دیار'),
    (27, 'Pronoun', 'Indefinite Pronoun', 'PR-INDEF', 'جیناوی نادیار'),
    (28, 'Pronoun', 'Simple Pronoun', 'PR-S', 'جیناوی ساده'),
    (29, 'Pronoun', 'Compound Pronoun', 'PR-COMP', 'جیناوی لیکندراو'),
    (30, 'Pronoun', 'Extended Pronoun', 'PR-EXT', 'جیناوی داریزراو'),
    (31, 'Particles', 'Topical Particle', 'PART-TOP', 'نامراز مکانی خسته سهر'),
    (32, 'Particles', 'Adverbial Particle', 'PART-ADV', 'نامرزی ناو طئکاری'),
    (33, 'Particles', 'Locative Particle', 'PART-LOC', 'نامرزه ئیکتر از او مکلان'),
    (34, 'Particle', 'Conjunction Particle', 'PART-CONJ', 'نامر از مکلانی بهمستنمهوه'),
    (35, 'Particles', 'Interrogative Particle', 'PART-INT', 'نامرزی پرسپار'),
    (36, 'Particles', 'Conditional Particle', 'PART-COND', 'نامرزی معرج'),
    (37, 'Particles', 'Request Particle', 'PART-REQ', 'نامرزی داخوازی'),
    (38, 'Particles', 'Surprise Particle', 'PART-SURP', 'نامرزی سھر سورمان'),
    (39, 'Particles', 'Exclamation Particle', 'PART-EXCL', 'نامرزی بئانگکردن'),
    (40, 'Particles', 'Softeners & Politeness', 'PART-POL', 'نامرزی توانج و سوکاھیمئینیکردن'),
    (41, 'Particles', 'Emphatic Particle', 'PART-EMPH', 'نامرزی چھختکر دنھمه'),
    (42, 'Adjective', 'Simple Adjective', 'ADJ-SIMPLE', 'ناو طئاوی ساده'),
    (43, 'Adjective', 'Extended Adjective', 'ADJ-EXT', 'ناو طئاوی دارئیزراو'),
    (44, 'Adjective', 'Compound Adjective', 'ADJ-COMPOUND', 'ناو طئاوی لئیکندراو'),
    (45, 'Adjective', 'Dimensional Adjective', 'ADJ-DIM', 'ناو طئاوی بار ستایی (قھبار ه)'),
    (46, 'Adjective', 'Color Adjective', 'ADJ-CLR', 'ناو طئاوی رھنگ'),
    (47, 'Adjective', 'Relational Adjective', 'ADJ-REL2', 'ناو طئاوی روالئ'),
    (48, 'Adjective', 'Participle Adjective', 'ADJ-PPP', 'ناو طئاوی کراو'),
    (49, 'Adjective', 'Attributive Adjective', 'ADJ-ATT', 'ناو طئاوی بکھری'),
    (50, 'Adjective', 'Adjective of degree', 'ADJ-DEG', 'ناو ملناوی رادهی'),
    (51, 'Adjective', 'Relative Adjective', 'ADJ-REL', 'ناو ملناوی ریژهی'),
    (52, 'Adjective', 'Indefinite Adjective', 'ADJ-INDEF', 'ناو ملناوی نادیار'),
    (53, 'Adjective', 'Descriptive Adjective', 'ADJ-DESC', 'ناو ملناوی چۆنیتهی'),
    (54, 'Adjective', 'Quantitative Adjective', 'ADJ-QUANT', 'ناو ملناوی چهندیهی'),
    (55, 'Adjective', 'Fixed Level Adjective', 'ADJ-BASE', 'ناو ملناوی چهسپاوی'),
    (56, 'Adjective', 'Comparative', 'ADJ-COMP', 'ناو ملناوی پلهی بهراورد'),
    (57, 'Adjective', 'Superlative', 'ADJ-SUPL', 'ناو ملناوی پلهی بالا'),
    (58, 'Adverb', 'Simple Adverb', 'ADV-S', 'ناو ملکاری ساده'),
    (59, 'Adverb', 'Compound Adverb', 'ADV-COMP', 'ناو ملکاری لیکندراو'),
    (60, 'Adverb', 'Extended Adverb', 'ADV-EXT', 'ناو ملکاری داریزراو'),
    (61, 'Adverb', 'Conjunction Adverb', 'ADV-CONJ', 'ناو ملکاری لیکچواندن'),
    (62, 'Adverb', 'Manner Adverb', 'ADV-MAN', 'ناو ملکاری چۆنیتهی'),
    (63, 'Adverb', 'Quantitative Adverb', 'ADV-QUANT', 'ناو ملکاری چهندیهی'),
    (64, 'Adverb', 'Negation Adverb', 'ADV-NEG', 'ناو ملکاری نههی'),
    (65, 'Adverb', 'Emphatic Adverb', 'ADV-EMPH', 'ناو ملکاری چهختکردنه'),
    (66, 'Adverb', 'Adverb of Frequency', 'ADV-REP', 'ناو ملکاری دو بار مکر نهه'),
    (67, 'Adverb', 'Purposeful Adverb', 'ADV-CAUS', 'ناو ملکاری هه و مهیهست'),
    (68, 'Adverb', 'Adverb of Place', 'ADV-LOC', 'ناو ملکاری شوین'),
    (69, 'Adverb', 'Adverb of Time', 'ADV-TIME', 'ناو ملکاری کاتی'),
    (70, 'Numeral', 'Simple Number', 'NUM-S', 'ژماره ی ساده'),
    (71, 'Numeral', 'Compound Number', 'NUM-COMP', 'ژماره ی لیکندراو'),
    (72, 'Numeral', 'Extended Number', 'NUM-EXT', 'ژماره ی داریزراو'),
    (73, 'Numeral', 'Cardinal', 'NUM-CARD', 'ژماره ی بنجی'),
    (74, 'Numeral', 'Fractional', 'NUM-FRAC', 'ژماره ی کهرتی'),
    (75, 'Numeral', 'Ordinal', 'NUM-ORD', 'ژماره ی ریکهستن'),
    (76, 'Verb', 'Simple Verb', 'V-S', 'کاری ساده'),
    (77, 'Verb', 'Extended Verb', 'V-EXT', 'کاری داریزراو'),
    (78, 'Verb', 'Compound Verb', 'V-COMPOUND', 'کاری لیکندراو'),
    (79, 'Verb', 'Past Tense', 'V-PAST', 'رابرده'),
    (80, 'Verb', 'Non-Past Tense', 'V-NONPAST', 'رانه برده'),
    (81, 'Verb', 'Perfective', 'V-PERF', 'تئپهر'),
    (82, 'Verb', 'Imperfective', 'V-IMPERF', 'تئپهپهر'),
    (83, 'Verb', 'Complete', 'V-COMplete', 'تھاواو'),
    (84, 'Verb', 'Incomplete', 'V-INCOMplete', 'ناتھاواو'),
    (85, 'Verb', 'Affirmative', 'V-AFF', 'نھری'),
    (86, 'Verb', 'Negative', 'V-NEG2', 'نھری'),
    (87, 'Verb', 'Informative', 'V-INFORM', 'راگھیلندن'),
    (88, 'Verb', 'Declarative', 'V-DECL', 'دانانی'),
    (89, 'Verb', 'Imperative', 'V-IMPER', 'فھرماندان'),
    (90, 'Gerund', 'Gerund Dalî', 'GRD-D', 'چاوگی دالی'),
    (91, 'Gerund', 'Gerund Wawî', 'GRD-W', 'چاوگی واوی'),
    (92, 'Gerund', 'Gerund Yayî', 'GRD-Y', 'چاوگی یائی'),
    (93, 'Gerund', 'Gerund Tayî', 'GRD-T', 'چاوگی تائی'),
    (94, 'Gerund', 'Gerund Alfî', 'GRD-A', 'چاوگی ئلفی'),
    (95, 'Gerund', 'Gerund Simple', 'GRD-S', 'چاوگی سادھ'),
    (96, 'Gerund', 'Gerund Extended', 'GRD-EXT', 'چاوگی دارئیزراو'),
    (97, 'Gerund', 'Gerund Compound', 'GRD-COMP', 'چاوگی لئیکندراو'),
)
# fmt: on

# Category labels come from the Kurdish-label column of the UD mapping table.
# The Unknown row carries the literal label "UNKNOWN" in the source.
CATEGORY_KURDISH = {
    'Noun': 'ناو',
    'Pronoun': 'جیناو',
    'Particle': 'نامراز',
    'Adjective': 'ناو ملناو',
    'Adverb': 'ناو ملکار',
    'Numeral': 'ژماره',
    'Verb': 'کار',
    'Gerund': 'چاوگ',
    'Unknown': 'UNKNOWN',
}

# Abbreviation variants used by the UD mapping table where it disagrees with
# the main inventory; the main inventory's spelling is canonical.
ALIASES = {
    'ADJ-S': 'ADJ-SIMPLE',
    'V-COMP': 'V-COMPOUND',
    'V-PST': 'V-PAST',
    'V-NPST': 'V-NONPAST',
    'V-NEG': 'V-NEG2',
    'V-INCOMP': 'V-INCOMPLETE',
}

# Letters that do not belong to Kurdish orthography; a Kurdish name string
# containing any of them was almost certainly mangled in the source scan.
SUSPECT_LETTERS = frozenset('طھيكةـ')
