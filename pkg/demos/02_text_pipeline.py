"""From a raw tweet to the token stream the metrics see.

Cleaning strips emoji, #hashtags, @mentions and URLs; the pipeline then
tokenizes, drops punctuation and stopwords, and stems. Everything is
pinned (vendored stopword list, fixed stemmer), so the same input always
yields the same tokens.
"""

from lexnet import clean_tweet
from lexnet.stemmer import stem
from lexnet.textpipe import (
    default_stopwords,
    preprocess_user_text,
    stopword_list_checksum,
)

raw = "Breaking \U0001F6A8: negotiators agreed on funding https://t.co/x1 #cop26 @UNFCCC"
cleaned = clean_tweet(raw)
print("raw:    ", raw)
print("cleaned:", cleaned)

seq = preprocess_user_text(cleaned)
print("tokens: ", seq.tokens)
print(f"N={seq.n_tokens}, V={seq.n_types}")

# the stemmer conflates inflected forms onto a shared root
for word in ("negotiators", "negotiation", "negotiating", "funds", "funding"):
    print(f"  {word:13s} -> {stem(word)}")

print(f"\nstopword list: {len(default_stopwords())} words, "
      f"sha256 {stopword_list_checksum()[:16]}...")
