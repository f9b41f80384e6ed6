//! Letter rendering of SAX words (`0 -> 'a'`) and the symbolized dataset
//! text format written by `wsax symbolize`:
//!
//! ```text
//! # wsax-symbolic v1 alphabet=3 segments=4 length=8
//! 1 abca
//! 2 ccba
//! ```

use wsax_core::{build_lookup_table, compute_breakpoints, SaxWord, SymbolicDataset};

use crate::error::{Error, Result};

const HEADER: &str = "# wsax-symbolic v1";

pub fn render_word(w: &SaxWord) -> String {
    w.symbols().iter().map(|&s| (b'a' + s) as char).collect()
}

pub fn parse_word(letters: &str, alphabet: usize, original_length: usize) -> Result<SaxWord> {
    let symbols = letters
        .bytes()
        .map(|b| {
            if b.is_ascii_lowercase() {
                Ok(b - b'a')
            } else {
                Err(Error::Format {
                    what: "symbolic",
                    message: format!("{letters:?} contains a non-letter symbol"),
                })
            }
        })
        .collect::<Result<Vec<u8>>>()?;
    Ok(SaxWord::new(symbols, alphabet, original_length)?)
}

pub fn write_symbolized(sd: &SymbolicDataset) -> String {
    let mut out = format!(
        "{HEADER} alphabet={} segments={} length={}\n",
        sd.alphabet_size(),
        sd.segment_count(),
        sd.original_length()
    );
    for (label, word) in sd.items() {
        out.push_str(&format!("{label} {}\n", render_word(word)));
    }
    out
}

pub fn read_symbolized(text: &str) -> Result<SymbolicDataset> {
    let bad = |message: String| Error::Format {
        what: "symbolic",
        message,
    };
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| bad("empty file".into()))?;
    let params = header
        .strip_prefix(HEADER)
        .ok_or_else(|| bad(format!("missing header {HEADER:?}")))?;
    let mut alphabet = None;
    let mut segments = None;
    let mut length = None;
    for kv in params.split_whitespace() {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| bad(format!("bad header field {kv:?}")))?;
        let v: usize = v
            .parse()
            .map_err(|_| bad(format!("bad header value {kv:?}")))?;
        match k {
            "alphabet" => alphabet = Some(v),
            "segments" => segments = Some(v),
            "length" => length = Some(v),
            _ => return Err(bad(format!("unknown header field {k:?}"))),
        }
    }
    let (Some(alphabet), Some(segments), Some(length)) = (alphabet, segments, length) else {
        return Err(bad("header needs alphabet, segments and length".into()));
    };
    let mut items = Vec::new();
    for line in lines {
        let (label, letters) = line
            .trim()
            .split_once(' ')
            .ok_or_else(|| bad(format!("bad row {line:?}")))?;
        let label: i64 = label
            .parse()
            .map_err(|_| bad(format!("bad label {label:?}")))?;
        let word = parse_word(letters.trim(), alphabet, length)?;
        if word.segment_count() != segments {
            return Err(bad(format!(
                "word {letters:?} does not have {segments} symbols"
            )));
        }
        items.push((label, word));
    }
    let table = build_lookup_table(&compute_breakpoints(alphabet)?);
    Ok(SymbolicDataset::new(items, table)?)
}
