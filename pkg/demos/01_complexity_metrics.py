"""Three complexity measures on contrasting texts.

Yule's K looks at vocabulary concentration, the compression ratio at
byte-level redundancy, and the Flesch score at sentence/syllable load.
A repetitive writer and a varied writer come out clearly apart on all
three, which is the whole point of using them side by side.
"""

from lexnet import compression_ratio, flesch_index, yule_k
from lexnet.textpipe import frequency_spectrum, preprocess_user_text

repetitive = " ".join(["The same warning about the same storm again."] * 40)
varied = (
    "Glaciers retreat while coastal cities draft adaptation plans. "
    "Farmers rotate drought-resistant crops and insurers reprice risk. "
    "Meanwhile satellites quantify methane plumes above aging pipelines. "
    "Negotiators argue over finance, loss, and damage every autumn."
) * 10

for name, text in (("repetitive", repetitive), ("varied", varied)):
    tokens = preprocess_user_text(text)
    spectrum = frequency_spectrum(tokens)
    k = yule_k(spectrum)
    ratio, s_raw, s_comp = compression_ratio(text)
    flesch = flesch_index(text)
    print(f"{name:>10}: N={tokens.n_tokens:4d} V={tokens.n_types:3d}  "
          f"K={k:8.1f}  gzip={ratio:.3f} ({s_comp}/{s_raw} bytes)  flesch={flesch:6.1f}")

# the frequency spectrum behind Yule's K: how many types occur i times
spectrum = frequency_spectrum(preprocess_user_text(varied))
print("\nspectrum of the varied text (occurrences -> #types):")
for i, v in list(spectrum.counts.items())[:8]:
    print(f"  {i:3d} -> {v}")
